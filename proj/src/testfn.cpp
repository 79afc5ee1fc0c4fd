#include "zerocert/testfn.hpp"

#include <cmath>

#include "zerocert/special.hpp"

namespace zerocert {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kTaylorCut = 1e-4;

void require_strip(const TestWindow& w, double im_z) {
    if (!(std::fabs(im_z) < 0.5 * w.h))
        throw std::domain_error("fhat_eval: z outside the strip |Im z| < h/2");
}

}  // namespace

std::complex<double> f_eval(const TestWindow& w, double t) {
    const double a = w.a, b = w.b;
    if (t == 0.0) return {(b - a) / kTwoPi, 0.0};
    const double big = std::max(std::fabs(a), std::fabs(b));
    if (std::fabs(t) < kTaylorCut && big * std::fabs(t) < 0.5) {
        // (e^{-iat} - e^{-ibt})/(it) by series; the direct form cancels
        const double t2 = t * t;
        const double re = (b - a) - (b * b * b - a * a * a) * t2 / 6.0 +
                          (std::pow(b, 5) - std::pow(a, 5)) * t2 * t2 / 120.0;
        const double im = -(b * b - a * a) * t / 2.0 + (std::pow(b, 4) - std::pow(a, 4)) * t2 * t / 24.0 -
                          (std::pow(b, 6) - std::pow(a, 6)) * t2 * t2 * t / 720.0;
        const double s = 1.0 / (kTwoPi * std::cosh(0.5 * w.h * t));
        return {re * s, im * s};
    }
    const double re = std::sin(b * t) - std::sin(a * t);
    const double im = std::cos(b * t) - std::cos(a * t);
    const double s = 1.0 / (kTwoPi * t * std::cosh(0.5 * w.h * t));
    return {re * s, im * s};
}

ComplexInterval f_eval_enclosure(const TestWindow& w, const Interval& t) {
    const double a = w.a, b = w.b;
    const double big = std::max(std::fabs(a), std::fabs(b));
    if (t.lo == 0.0 && t.hi == 0.0)
        return {Interval(b - a) / (2.0 * pi_interval()), Interval(0.0)};
    if (t.mag() < kTaylorCut && big * t.mag() < 0.5) {
        const Interval ti = t;
        const Interval t2 = sqr(ti);
        const Interval A(a), B(b);
        Interval re = (B - A) - (pow_int(B, 3) - pow_int(A, 3)) * t2 / 6.0 +
                      (pow_int(B, 5) - pow_int(A, 5)) * sqr(t2) / 120.0;
        Interval im = -(sqr(B) - sqr(A)) * ti / 2.0 + (pow_int(B, 4) - pow_int(A, 4)) * t2 * ti / 24.0 -
                      (pow_int(B, 6) - pow_int(A, 6)) * sqr(t2) * ti / 720.0;
        // alternating-series style tails, valid since big*|t| < 0.5
        const double x = big * t.mag();
        const double rem_re = 2.0 * big * std::pow(x, 6) / 5040.0 * 1.02;
        const double rem_im = 2.0 * big * std::pow(x, 7) / 40320.0 * 1.02;
        re = inflate(re, rem_re);
        im = inflate(im, rem_im);
        const Interval s = 1.0 / (2.0 * pi_interval() * cosh(ti * (0.5 * w.h)));
        return {re * s, im * s};
    }
    if (t.contains_zero())
        throw std::domain_error("f_eval_enclosure: interval straddles 0 outside the Taylor regime");
    const Interval re = sin(t * b) - sin(t * a);
    const Interval im = cos(t * b) - cos(t * a);
    const Interval s = 1.0 / (2.0 * pi_interval() * t * cosh(t * (0.5 * w.h)));
    return {re * s, im * s};
}

namespace {

// arctan(e^xi) for real xi, reflected so exp never overflows
double arctan_exp(double xi) {
    if (xi <= 0.0) return std::atan(std::exp(xi));
    return 1.5707963267948966 - std::atan(std::exp(-xi));
}

Interval arctan_exp(const Interval& xi) {
    if (xi.mid() <= 0.0) return atan(exp(xi));
    return pi_interval() * 0.5 - atan(exp(-xi));
}

std::complex<double> arctan_exp(std::complex<double> xi) {
    if (xi.real() <= 0.0) return arctan_cut(std::exp(xi));
    return std::complex<double>(1.5707963267948966, 0.0) - arctan_cut(std::exp(-xi));
}

// Re(e^xi) > 0 holds throughout the strip, so the reflection identity
// applies for either sign choice; pick the non-overflowing one.
ComplexInterval arctan_exp(const ComplexInterval& xi) {
    if (xi.re.mid() <= 0.0) return arctan_cut_enclosure(exp(xi));
    const ComplexInterval r = arctan_cut_enclosure(exp(-xi));
    return {pi_interval() * 0.5 - r.re, -r.im};
}

}  // namespace

double fhat_real(const TestWindow& w, double x) {
    const double k = 3.141592653589793 / w.h;
    return (2.0 / 3.141592653589793) * (arctan_exp(k * (x - w.a)) - arctan_exp(k * (x - w.b)));
}

Interval fhat_real_enclosure(const TestWindow& w, const Interval& x) {
    const Interval k = pi_interval() / w.h;
    const Interval ta = arctan_exp(k * (x - w.a));
    const Interval tb = arctan_exp(k * (x - w.b));
    return 2.0 * (ta - tb) / pi_interval();
}

std::complex<double> fhat_eval(const TestWindow& w, std::complex<double> z) {
    require_strip(w, z.imag());
    if (z.imag() == 0.0) return {fhat_real(w, z.real()), 0.0};
    const double k = 3.141592653589793 / w.h;
    return (2.0 / 3.141592653589793) * (arctan_exp(k * (z - w.a)) - arctan_exp(k * (z - w.b)));
}

ComplexInterval fhat_eval_enclosure(const TestWindow& w, std::complex<double> z) {
    require_strip(w, z.imag());
    if (z.imag() == 0.0)
        return {fhat_real_enclosure(w, Interval(z.real())), Interval(0.0)};
    const Interval k = pi_interval() / w.h;
    const ComplexInterval zi(z);
    const ComplexInterval ta = arctan_exp(k * ComplexInterval{zi.re - w.a, zi.im});
    const ComplexInterval tb = arctan_exp(k * ComplexInterval{zi.re - w.b, zi.im});
    const ComplexInterval d = ta - tb;
    const Interval c = 2.0 / pi_interval();
    return {c * d.re, c * d.im};
}

FhatBounds fhat_bounds(const TestWindow& w, std::complex<double> z) {
    require_strip(w, z.imag());
    const double x = z.real();
    const double k = 3.141592653589793 / w.h;
    if (x >= w.a && x <= w.b) {
        const double d = std::min(x - w.a, w.b - x);
        double lower = 1.0 - (4.0 / 3.141592653589793) * std::exp(-k * d);
        if (w.length() > 5.0 * w.h / 3.141592653589793) lower = std::max(lower, 0.49);
        return {std::max(lower, 0.0), 1.0};
    }
    const double d = std::max(x - w.b, w.a - x);
    return {0.0, (2.0 / 3.141592653589793) * std::exp(-k * d)};
}

double fhat_derivative_bound(const TestWindow& w) { return 2.0 / w.h; }

}  // namespace zerocert
