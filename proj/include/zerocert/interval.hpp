#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace zerocert {

// Outward rounding. Hardware rounding-mode switches are not portable across
// the targets we care about, so every endpoint operation rounds to nearest
// and is then widened by one ulp (a few ulps for libm calls, whose results
// are not correctly rounded but stay within 2 ulps on glibc).
inline double step_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double step_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double steps_down(double x, int n) {
    for (int i = 0; i < n; ++i) x = step_down(x);
    return x;
}
inline double steps_up(double x, int n) {
    for (int i = 0; i < n; ++i) x = step_up(x);
    return x;
}

inline constexpr int kLibmUlps = 4;

// Closed real interval [lo, hi] with enclosure semantics: the result of any
// operation contains the exact result for all points of the operands.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    explicit Interval(double v) : lo(v), hi(v) { validate(); }
    Interval(double l, double h) : lo(l), hi(h) { validate(); }

    void validate() const {
        if (std::isnan(lo) || std::isnan(hi) || lo > hi)
            throw std::invalid_argument("Interval: invalid endpoints");
    }

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    double rad() const { return 0.5 * width(); }
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }

    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return contains(0.0); }
    bool strictly_positive() const { return lo > 0.0; }
    bool strictly_negative() const { return hi < 0.0; }
};

inline Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator+(const Interval& a, const Interval& b) {
    return {step_down(a.lo + b.lo), step_up(a.hi + b.hi)};
}
inline Interval operator-(const Interval& a, const Interval& b) {
    return {step_down(a.lo - b.hi), step_up(a.hi - b.lo)};
}
inline Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {step_down(std::min(std::min(p1, p2), std::min(p3, p4))),
            step_up(std::max(std::max(p1, p2), std::max(p3, p4)))};
}
inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero())
        throw std::domain_error("Interval: division by interval containing zero");
    const double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return {step_down(std::min(std::min(p1, p2), std::min(p3, p4))),
            step_up(std::max(std::max(p1, p2), std::max(p3, p4)))};
}

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }

inline Interval abs(const Interval& a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return -a;
    return {0.0, std::max(-a.lo, a.hi)};
}

inline Interval sqr(const Interval& a) {
    const Interval m = abs(a);
    return {step_down(m.lo * m.lo), step_up(m.hi * m.hi)};
}

// widen an interval symmetrically by a known error radius
inline Interval inflate(const Interval& a, double r) {
    if (r < 0.0) throw std::invalid_argument("inflate: negative radius");
    return {step_down(a.lo - r), step_up(a.hi + r)};
}

Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
Interval log(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval cosh(const Interval& a);
Interval atan(const Interval& a);
Interval pow_int(const Interval& a, int n);
// a^e for a > 0, via exp(e log a)
Interval pow(const Interval& a, const Interval& e);

Interval pi_interval();

inline std::ostream& operator<<(std::ostream& os, const Interval& a) {
    return os << "[" << a.lo << ", " << a.hi << "]";
}

// Axis-aligned rectangle {re} x {im} enclosing a set of complex numbers.
struct ComplexInterval {
    Interval re;
    Interval im;

    ComplexInterval() = default;
    ComplexInterval(Interval r, Interval i) : re(r), im(i) {}
    explicit ComplexInterval(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> mid() const { return {re.mid(), im.mid()}; }
    bool contains(std::complex<double> z) const {
        return re.contains(z.real()) && im.contains(z.imag());
    }
};

inline ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
}
inline ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
}
inline ComplexInterval operator-(const ComplexInterval& a) { return {-a.re, -a.im}; }
inline ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ComplexInterval operator*(const Interval& a, const ComplexInterval& b) {
    return {a * b.re, a * b.im};
}
inline ComplexInterval operator+(const ComplexInterval& a, double b) {
    return {a.re + b, a.im};
}
inline ComplexInterval operator-(double a, const ComplexInterval& b) {
    return {a - b.re, -b.im};
}
inline ComplexInterval conj(const ComplexInterval& a) { return {a.re, -a.im}; }
// multiplication by the imaginary unit rotates the rectangle exactly
inline ComplexInterval mul_i(const ComplexInterval& a) { return {-a.im, a.re}; }

inline Interval norm_sq(const ComplexInterval& a) { return sqr(a.re) + sqr(a.im); }

inline ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
    const Interval n = norm_sq(b);
    const ComplexInterval num = a * conj(b);
    return {num.re / n, num.im / n};
}

ComplexInterval exp(const ComplexInterval& z);
// principal logarithm; requires the rectangle to avoid (-inf, 0]
ComplexInterval log(const ComplexInterval& z);

inline std::ostream& operator<<(std::ostream& os, const ComplexInterval& z) {
    return os << z.re << " + i*" << z.im;
}

}  // namespace zerocert
