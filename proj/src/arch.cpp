#include "zerocert/arch.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "zerocert/special.hpp"

namespace zerocert {

namespace {

constexpr double kPi = 3.141592653589793;

// Gauss-Legendre nodes/weights on [-1,1], computed once by Newton iteration
// on P_n.
template <int N>
struct GaussRule {
    std::array<double, N> x{};
    std::array<double, N> w{};
    GaussRule() {
        for (int i = 0; i < N; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (N + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= N; ++k) {
                    const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = N * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::fabs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= N; ++k) {
                const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = N * (t * p1 - p0) / (t * t - 1.0);
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussRule<7>& rule7() {
    static const GaussRule<7> r;
    return r;
}
const GaussRule<15>& rule15() {
    static const GaussRule<15> r;
    return r;
}

double sech_minus_one(double x) {
    // stable for small x, overflow-free for large x
    if (x > 30.0) return -1.0 + 2.0 * std::exp(-x);
    const double s = std::sinh(0.5 * x);
    return -2.0 * s * s / std::cosh(x);
}

struct OscIntegrand {
    double A;  // lambda sigma0/2 + u
    double G;  // lambda h / 2
    double R;  // oscillation frequency, positive here

    double operator()(double t) const {
        const double k = (t < 1e-6) ? 1.0 / (t * (1.0 - 0.5 * t * (1.0 - t / 3.0)))
                                    : 1.0 / (1.0 - std::exp(-t));
        return std::exp(-A * t) * k * std::sin(R * t) / t * sech_minus_one(G * t);
    }
};

template <int N>
double gauss_panel(const GaussRule<N>& r, const OscIntegrand& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += r.w[i] * f(c + hw * r.x[i]);
    return s * hw;
}

}  // namespace

double default_Bk(Family family, double lambda, double h) {
    switch (family) {
        case Family::Zeta: return 4.9 / h;
        case Family::HeckeGaussian: return lambda == 0.5 ? 1.6 : 0.8;
        case Family::EllipticCurve: return 0.8;
        case Family::Generic: break;
    }
    return 0.78 * std::min(2.0 * kPi, kPi / (lambda * h));
}

OscIntegralBound osc_bound(double lambda, double u, double sigma0, double h, double R, double B) {
    if (R == 0.0)
        throw std::invalid_argument("osc_bound: R = 0 (use the vanishing-integral exemption)");
    const double b_max = std::min(2.0 * kPi, kPi / (lambda * h));
    if (!(B > 0.0 && B < b_max)) throw std::invalid_argument("osc_bound: B outside legal range");
    const double A = lambda * sigma0 / 2.0 + u;
    if (!(A > 0.0)) throw std::invalid_argument("osc_bound: requires lambda*sigma0/2 + u > 0");
    const double C = (1.0 + 1.0 / std::cos(0.5 * lambda * h * B)) / (B * (1.0 - std::cos(B)));
    const double aR = std::fabs(R);
    return {B, C, C * (1.0 / aR + std::exp(-aR * B) / A)};
}

Interval osc_Ck_enclosure(double lambda, double h, double B) {
    const Interval Bi(B);
    const Interval num = 1.0 + 1.0 / cos(Interval(0.5) * lambda * h * Bi);
    const Interval den = Bi * (1.0 - cos(Bi));
    return num / den;
}

Interval osc_quadrature(double lambda, std::complex<double> mu, double sigma0, double h, double R,
                        double budget) {
    if (!(budget > 0.0)) throw std::invalid_argument("osc_quadrature: budget must be positive");
    if (R == 0.0) return Interval(0.0);
    const double sign = R > 0 ? 1.0 : -1.0;
    const double aR = std::fabs(R);
    const double A = lambda * sigma0 / 2.0 + mu.real();
    if (!(A > 0.0)) throw std::invalid_argument("osc_quadrature: requires lambda*sigma0/2 + u > 0");
    const double G = 0.5 * lambda * h;

    const double eta = 1e-6;
    const double head = aR * G * G * eta * eta / 4.0 * 1.01;
    const double T = 60.0 / A;
    const double tail = std::exp(-A * T) / (A * T * (1.0 - std::exp(-T))) * 1.01;

    const OscIntegrand f{A, G, aR};
    double panel_w = std::min(2.0 * kPi / aR, (T - eta) / 8.0);
    for (int attempt = 0; attempt < 4; ++attempt) {
        double value = 0.0, err = 0.0;
        for (double lo = eta; lo < T; lo += panel_w) {
            const double hi = std::min(lo + panel_w, T);
            const double v15 = gauss_panel(rule15(), f, lo, hi);
            const double v7 = gauss_panel(rule7(), f, lo, hi);
            value += v15;
            err += std::fabs(v15 - v7);
            // everything beyond this point is below double noise
            if (std::exp(-A * hi) < 1e-22 && hi > 5.0 / aR) {
                const double rest = std::exp(-A * hi) / (A * hi * (1.0 - std::exp(-hi)));
                err += rest;
                break;
            }
        }
        const double radius = 10.0 * err + head + tail;
        if (radius <= budget) return inflate(Interval(sign * value), radius);
        panel_w *= 0.5;
    }
    throw std::runtime_error("osc_quadrature: budget unreachable");
}

Interval w_inf_main_term(const LFunctionDescriptor& desc, const TestWindow& w) {
    const Interval ba = Interval(w.b) - Interval(w.a);
    Interval acc = ba * log(Interval(desc.Q));
    for (const auto& g : desc.gamma_factors) {
        const Interval x = Interval(g.lambda) * desc.sigma0 * 0.5 + g.mu.real();
        const Interval yb = Interval(g.lambda) * w.b + g.mu.imag();
        const Interval ya = Interval(g.lambda) * w.a + g.mu.imag();
        const ComplexInterval lb = log_gamma_branch_enclosure(ComplexInterval{x, yb});
        const ComplexInterval la = log_gamma_branch_enclosure(ComplexInterval{x, ya});
        acc += lb.im - la.im;
    }
    return acc / pi_interval();
}

Interval w_inf_eval(const LFunctionDescriptor& desc, const TestWindow& w, const ArchOptions& opts) {
    if (!desc.gamma_factors.empty()) {
        // Barner membership of f_{a,b,h}
        if (!(w.h > desc.sigma1 - desc.sigma0 / 2.0))
            throw std::invalid_argument("w_inf_eval: requires h > sigma1 - sigma0/2");
    }
    if (!opts.enclosure) {
        // exploration path: midpoint of the enclosure machinery
        const Interval v = w_inf_eval(desc, w, {opts.osc_budget, opts.B_override, true});
        return Interval(v.mid());
    }
    Interval main = w_inf_main_term(desc, w);
    Interval osc_total(0.0);
    const std::array<std::pair<double, double>, 2> endpoints{{{w.b, 1.0}, {w.a, -1.0}}};
    for (const auto& g : desc.gamma_factors) {
        for (const auto& [z, s] : endpoints) {
            const double R = g.lambda * z + g.mu.imag();
            if (R == 0.0) continue;  // sin(0 t) == 0
            const double B = opts.B_override > 0.0 ? opts.B_override
                                                   : default_Bk(desc.family, g.lambda, w.h);
            Interval enc(0.0);
            bool done = false;
            try {
                const OscIntegralBound ob =
                    osc_bound(g.lambda, g.mu.real(), desc.sigma0, w.h, R, B);
                if (ob.bound <= opts.osc_budget) {
                    const Interval aR = abs(Interval(g.lambda) * z + g.mu.imag());
                    const Interval Ck = osc_Ck_enclosure(g.lambda, w.h, B);
                    const Interval bnd =
                        Ck * (1.0 / aR + exp(-aR * B) /
                                             (Interval(g.lambda) * desc.sigma0 * 0.5 + g.mu.real()));
                    enc = Interval(-bnd.hi, bnd.hi);
                    done = true;
                }
            } catch (const std::invalid_argument&) {
                // fall through to quadrature
            }
            if (!done)
                enc = osc_quadrature(g.lambda, g.mu, desc.sigma0, w.h, R, opts.osc_budget);
            osc_total += s * enc;
        }
    }
    return main - osc_total / pi_interval();
}

}  // namespace zerocert
