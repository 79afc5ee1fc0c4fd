#pragma once

#include <complex>

#include "zerocert/interval.hpp"
#include "zerocert/lfunction.hpp"
#include "zerocert/testfn.hpp"

namespace zerocert {

// Phragmen-Lindelof data bounding the oscillatory integral
//   int_0^inf e^{-(lambda sigma0/2+u)t}/(1-e^{-t}) * sin(Rt)/t * (sech(lambda h t/2)-1) dt
// by C_k (1/|R| + e^{-|R| B_k} / (lambda sigma0/2 + u)).
struct OscIntegralBound {
    double B_k = 0.0;
    double C_k = 0.0;
    double bound = 0.0;
};

// Legal range: 0 < B < min(2 pi, pi/(lambda h)); R must be nonzero (the
// R = 0 integral vanishes identically and is exempted by the caller).
OscIntegralBound osc_bound(double lambda, double u, double sigma0, double h, double R, double B);

// C_k evaluated in interval arithmetic (paper-constant reproduction).
Interval osc_Ck_enclosure(double lambda, double h, double B);

// Enclosure of the oscillatory integral by panelwise Gauss-Legendre with
// analytic head/tail bounds; throws when the requested budget is unreachable.
Interval osc_quadrature(double lambda, std::complex<double> mu, double sigma0, double h, double R,
                        double budget);

// Proof choices for the contour height B_k.
double default_Bk(Family family, double lambda, double h);

struct ArchOptions {
    double osc_budget = 0.05;  // per oscillatory term
    double B_override = 0.0;   // 0 = family default
    bool enclosure = true;
};

// w_inf(f_{a,b,h}): the Im l_{G,sigma0} difference assembled from
// (b-a) log Q plus per-factor log-gamma differences, minus enclosed
// oscillatory corrections.
Interval w_inf_eval(const LFunctionDescriptor& desc, const TestWindow& w,
                    const ArchOptions& opts = {});

// The (1/pi) Im[l_{G,sigma0} difference] alone (no oscillatory part).
Interval w_inf_main_term(const LFunctionDescriptor& desc, const TestWindow& w);

}  // namespace zerocert
