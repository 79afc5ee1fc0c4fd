#include "zerocert/interval.hpp"

#include <algorithm>

namespace zerocert {

namespace {

double down_ulps(double x, int n) { return steps_down(x, n); }
double up_ulps(double x, int n) { return steps_up(x, n); }

}  // namespace

Interval sqrt(const Interval& a) {
    if (a.lo < 0.0) throw std::domain_error("sqrt: negative interval endpoint");
    // IEEE sqrt is correctly rounded; one ulp is enough
    return {std::max(0.0, step_down(std::sqrt(a.lo))), step_up(std::sqrt(a.hi))};
}

Interval exp(const Interval& a) {
    return {std::max(0.0, down_ulps(std::exp(a.lo), kLibmUlps)),
            up_ulps(std::exp(a.hi), kLibmUlps)};
}

Interval log(const Interval& a) {
    if (a.lo <= 0.0) throw std::domain_error("log: interval not strictly positive");
    return {down_ulps(std::log(a.lo), kLibmUlps), up_ulps(std::log(a.hi), kLibmUlps)};
}

Interval cosh(const Interval& a) {
    const Interval m = abs(a);
    return {std::max(1.0, down_ulps(std::cosh(m.lo), kLibmUlps)),
            up_ulps(std::cosh(m.hi), kLibmUlps)};
}

Interval atan(const Interval& a) {
    return {std::max(-1.5707963267948967, down_ulps(std::atan(a.lo), kLibmUlps)),
            std::min(1.5707963267948967, up_ulps(std::atan(a.hi), kLibmUlps))};
}

namespace {

// Does [lo, hi] (inflated by a conservative margin) contain ofs + 2*pi*k for
// some integer k?  Over-inclusion is sound: it only widens sin/cos output.
bool contains_periodic(double lo, double hi, double ofs) {
    const double two_pi = 6.283185307179586;
    const double margin = 1e-10 * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
    const double k_lo = std::ceil((lo - margin - ofs) / two_pi);
    const double k_hi = std::floor((hi + margin - ofs) / two_pi);
    return k_lo <= k_hi;
}

}  // namespace

Interval sin(const Interval& a) {
    if (a.width() >= 6.3) return {-1.0, 1.0};
    double lo = std::min(std::sin(a.lo), std::sin(a.hi));
    double hi = std::max(std::sin(a.lo), std::sin(a.hi));
    lo = std::max(-1.0, down_ulps(lo, kLibmUlps));
    hi = std::min(1.0, up_ulps(hi, kLibmUlps));
    const double half_pi = 1.5707963267948966;
    if (contains_periodic(a.lo, a.hi, half_pi)) hi = 1.0;
    if (contains_periodic(a.lo, a.hi, -half_pi)) lo = -1.0;
    return {lo, hi};
}

Interval cos(const Interval& a) {
    if (a.width() >= 6.3) return {-1.0, 1.0};
    double lo = std::min(std::cos(a.lo), std::cos(a.hi));
    double hi = std::max(std::cos(a.lo), std::cos(a.hi));
    lo = std::max(-1.0, down_ulps(lo, kLibmUlps));
    hi = std::min(1.0, up_ulps(hi, kLibmUlps));
    if (contains_periodic(a.lo, a.hi, 0.0)) hi = 1.0;
    if (contains_periodic(a.lo, a.hi, 3.141592653589793)) lo = -1.0;
    return {lo, hi};
}

Interval pow_int(const Interval& a, int n) {
    if (n == 0) return Interval(1.0);
    if (n < 0) return Interval(1.0) / pow_int(a, -n);
    Interval r(1.0);
    Interval base = a;
    int e = n;
    while (e > 0) {
        if (e & 1) r *= base;
        base = (e > 1) ? sqr(base) : base;
        e >>= 1;
    }
    // even powers are nonnegative regardless of wrapping in the square chain
    if (n % 2 == 0 && r.lo < 0.0) r.lo = 0.0;
    return r;
}

Interval pow(const Interval& a, const Interval& e) {
    return exp(e * log(a));
}

Interval pi_interval() {
    const double p = 3.141592653589793;  // nearest double to pi
    return {step_down(p), step_up(p)};
}

ComplexInterval exp(const ComplexInterval& z) {
    const Interval r = exp(z.re);
    return {r * cos(z.im), r * sin(z.im)};
}

ComplexInterval log(const ComplexInterval& z) {
    const Interval n = norm_sq(z);
    if (n.lo <= 0.0) throw std::domain_error("complex log: rectangle may contain 0");
    if (z.re.lo <= 0.0 && z.im.contains_zero())
        throw std::domain_error("complex log: rectangle meets the branch cut");
    // arg is monotone along any segment not crossing the cut, so its extrema
    // over the rectangle are attained at corners
    const double c1 = std::atan2(z.im.lo, z.re.lo);
    const double c2 = std::atan2(z.im.lo, z.re.hi);
    const double c3 = std::atan2(z.im.hi, z.re.lo);
    const double c4 = std::atan2(z.im.hi, z.re.hi);
    Interval arg{down_ulps(std::min(std::min(c1, c2), std::min(c3, c4)), kLibmUlps),
                 up_ulps(std::max(std::max(c1, c2), std::max(c3, c4)), kLibmUlps)};
    return {0.5 * log(n), arg};
}

}  // namespace zerocert
