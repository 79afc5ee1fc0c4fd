#pragma once

#include <complex>

#include "zerocert/interval.hpp"

namespace zerocert {

// Window (a, b, h) of the localized test function
//   f(t) = (1/2pi) (e^{-iat} - e^{-ibt}) / (it cosh(ht/2)).
// h trades the prime-sum cutoff against the guard-zone width; certificate
// hypotheses (b-a > 5h/pi, Barner membership) are enforced by the certify
// layer, which knows the descriptor.
struct TestWindow {
    double a;
    double b;
    double h;

    TestWindow(double a_, double b_, double h_) : a(a_), b(b_), h(h_) {
        if (!(h > 0.0)) throw std::invalid_argument("TestWindow: h must be positive");
        if (!(a <= b)) throw std::invalid_argument("TestWindow: requires a <= b");
    }
    double length() const { return b - a; }
};

std::complex<double> f_eval(const TestWindow& w, double t);
ComplexInterval f_eval_enclosure(const TestWindow& w, const Interval& t);

// Fourier transform (2/pi)[arctan(e^{pi(z-a)/h}) - arctan(e^{pi(z-b)/h})] on
// the strip |Im z| < h/2.  Terms with positive exponent are rewritten with
// arctan(w) + arctan(1/w) = pi/2, so the exp argument never overflows.
std::complex<double> fhat_eval(const TestWindow& w, std::complex<double> z);
ComplexInterval fhat_eval_enclosure(const TestWindow& w, std::complex<double> z);

double fhat_real(const TestWindow& w, double x);
Interval fhat_real_enclosure(const TestWindow& w, const Interval& x);

// The applicable Lemma-2 envelope for Re fhat at z.
struct FhatBounds {
    double lower;
    double upper;
};
FhatBounds fhat_bounds(const TestWindow& w, std::complex<double> z);

// Certified bound on |d/dx Re fhat(x)| for real x; converts ordinate
// precision into certificate slack.
double fhat_derivative_bound(const TestWindow& w);

}  // namespace zerocert
