#include "zerocert/special.hpp"

#include <array>
#include <cmath>

namespace zerocert {

namespace {

// B_{2k} / ((2k-1)(2k)) for k = 1..12, as exact rationals
constexpr std::array<std::pair<double, double>, 12> kLogGammaCoef = {{
    {1.0, 12.0},
    {-1.0, 360.0},
    {1.0, 1260.0},
    {-1.0, 1680.0},
    {1.0, 1188.0},
    {-691.0, 360360.0},
    {1.0, 156.0},
    {-3617.0, 122400.0},
    {43867.0, 244188.0},
    {-174611.0, 125400.0},
    {854513.0, 63756.0},
    {-236364091.0, 1506960.0},
}};

// B_{2k} / (2k) for k = 1..12
constexpr std::array<std::pair<double, double>, 12> kDigammaCoef = {{
    {1.0, 12.0},
    {-1.0, 120.0},
    {1.0, 252.0},
    {-1.0, 240.0},
    {1.0, 132.0},
    {-691.0, 32760.0},
    {1.0, 12.0},
    {-3617.0, 8160.0},
    {43867.0, 14364.0},
    {-174611.0, 6600.0},
    {854513.0, 3036.0},
    {-236364091.0, 65520.0},
}};

constexpr double kB26Abs = 8553103.0 / 6.0;
constexpr double kShiftRe = 10.0;

// After n = 12 series terms the Binet-integral tail analysis gives
// |remainder| <= |first neglected Bernoulli term| / cos(arg z).
double log_gamma_remainder(const ComplexInterval& z) {
    const double r2 = norm_sq(z).lo;
    const double r = std::sqrt(r2);
    const double inv_cos = std::sqrt(norm_sq(z).hi) / z.re.lo;  // r/Re(z) >= 1/cos(phi)
    double p = kB26Abs / (25.0 * 26.0) * inv_cos;
    for (int i = 0; i < 12; ++i) p /= r2;  // r^(-24)
    return 1.0625 * p / r;                 // r^(-25), with rounding headroom
}

double digamma_remainder(const ComplexInterval& z) {
    const double r2 = norm_sq(z).lo;
    const double inv_cos = std::sqrt(norm_sq(z).hi) / z.re.lo;
    double p = kB26Abs / 26.0 * inv_cos;
    for (int i = 0; i < 13; ++i) p /= r2;  // r^(-26)
    return 1.0625 * p;
}

void require_right_half_plane(double re_lo, const char* who) {
    if (!(re_lo > 0.0)) throw std::domain_error(std::string(who) + ": requires Re(z) > 0");
}

}  // namespace

std::complex<double> log_gamma_branch(std::complex<double> z) {
    require_right_half_plane(z.real(), "log_gamma_branch");
    std::complex<double> shift(0.0, 0.0);
    while (z.real() < kShiftRe) {
        shift += std::log(z);
        z += 1.0;
    }
    const std::complex<double> logz = std::log(z);
    std::complex<double> res = (z - 0.5) * logz - z + 0.9189385332046727;  // log(2 pi)/2
    const std::complex<double> inv = 1.0 / z;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> p = inv;
    for (const auto& [num, den] : kLogGammaCoef) {
        res += (num / den) * p;
        p *= inv2;
    }
    return res - shift;
}

ComplexInterval log_gamma_branch_enclosure(const ComplexInterval& z0) {
    require_right_half_plane(z0.re.lo, "log_gamma_branch");
    ComplexInterval z = z0;
    ComplexInterval shift{Interval(0.0), Interval(0.0)};
    while (z.re.lo < kShiftRe) {
        shift = shift + log(z);
        z = z + 1.0;
    }
    const ComplexInterval logz = log(z);
    const Interval half_log_2pi = 0.5 * log(2.0 * pi_interval());
    ComplexInterval res = (z - ComplexInterval(std::complex<double>(0.5, 0.0))) * logz - z +
                          ComplexInterval{half_log_2pi, Interval(0.0)};
    const ComplexInterval one{Interval(1.0), Interval(0.0)};
    const ComplexInterval inv = one / z;
    const ComplexInterval inv2 = inv * inv;
    ComplexInterval p = inv;
    for (const auto& [num, den] : kLogGammaCoef) {
        res = res + (Interval(num) / Interval(den)) * p;
        p = p * inv2;
    }
    const double rem = log_gamma_remainder(z);
    res = {inflate(res.re, rem), inflate(res.im, rem)};
    return res - shift;
}

ComplexInterval log_gamma_branch_enclosure(std::complex<double> z) {
    return log_gamma_branch_enclosure(ComplexInterval(z));
}

std::complex<double> digamma(std::complex<double> z) {
    require_right_half_plane(z.real(), "digamma");
    std::complex<double> shift(0.0, 0.0);
    while (z.real() < kShiftRe) {
        shift += 1.0 / z;
        z += 1.0;
    }
    const std::complex<double> inv = 1.0 / z;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> res = std::log(z) - 0.5 * inv;
    std::complex<double> p = inv2;
    for (const auto& [num, den] : kDigammaCoef) {
        res -= (num / den) * p;
        p *= inv2;
    }
    return res - shift;
}

ComplexInterval digamma_enclosure(const ComplexInterval& z0) {
    require_right_half_plane(z0.re.lo, "digamma");
    ComplexInterval z = z0;
    ComplexInterval shift{Interval(0.0), Interval(0.0)};
    const ComplexInterval one{Interval(1.0), Interval(0.0)};
    while (z.re.lo < kShiftRe) {
        shift = shift + one / z;
        z = z + 1.0;
    }
    const ComplexInterval inv = one / z;
    const ComplexInterval inv2 = inv * inv;
    ComplexInterval res = log(z) - Interval(0.5) * inv;
    ComplexInterval p = inv2;
    for (const auto& [num, den] : kDigammaCoef) {
        res = res - (Interval(num) / Interval(den)) * p;
        p = p * inv2;
    }
    const double rem = digamma_remainder(z);
    res = {inflate(res.re, rem), inflate(res.im, rem)};
    return res - shift;
}

ComplexInterval digamma_enclosure(std::complex<double> z) {
    return digamma_enclosure(ComplexInterval(z));
}

std::complex<double> arctan_cut(std::complex<double> z) {
    if (z.real() == 0.0 && std::fabs(z.imag()) >= 1.0)
        throw std::domain_error("arctan_cut: argument on the branch cut");
    return std::atan(z);
}

ComplexInterval arctan_cut_enclosure(const ComplexInterval& z) {
    if (z.re.contains_zero() && (z.im.hi >= 1.0 || z.im.lo <= -1.0))
        throw std::domain_error("arctan_cut: rectangle may meet the branch cut");
    const ComplexInterval one{Interval(1.0), Interval(0.0)};
    const ComplexInterval iz = mul_i(z);
    const ComplexInterval q = (one - iz) / (one + iz);
    const ComplexInterval lq = log(q);
    // (i/2) * lq
    return {Interval(-0.5) * lq.im, Interval(0.5) * lq.re};
}

Interval arctan_cut_enclosure(const Interval& x) { return atan(x); }

}  // namespace zerocert
