#include "zerocert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "zerocert/special.hpp"
#include "zerocert/util.hpp"

namespace zerocert {

using nlohmann::json;

namespace {

constexpr double kPi = 3.141592653589793;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// z-plane coordinate of a pole rho of Lambda: rho/i - sigma0/(2i)
std::complex<double> pole_ordinate(const std::complex<double>& rho, double sigma0) {
    return {rho.imag(), sigma0 / 2.0 - rho.real()};
}

Interval pole_term_enclosure(const LFunctionDescriptor& desc, const TestWindow& w) {
    Interval total(0.0);
    for (const auto& p : desc.poles) {
        const std::complex<double> z = pole_ordinate(p.location, desc.sigma0);
        if (!(std::fabs(z.imag()) < 0.5 * w.h))
            throw std::invalid_argument(
                "strip violation: pole with |Im offset| >= h/2 (h too small for this descriptor)");
        const ComplexInterval f = fhat_eval_enclosure(w, z);
        total += (double)p.multiplicity * f.re;
    }
    return total;
}

long count_in(const std::vector<double>& xs, double lo, double hi) {
    return (long)std::count_if(xs.begin(), xs.end(),
                               [&](double x) { return x >= lo && x <= hi; });
}

void fill_guard(CertificateReport& r, const ZeroList& zeros) {
    r.guard.zeros_below = count_in(zeros.ordinates, r.a - r.guard.cutoff_a,
                                   std::nextafter(r.a, -1e300));
    r.guard.zeros_above = count_in(zeros.ordinates, std::nextafter(r.b, 1e300),
                                   r.b + r.guard.cutoff_b);
    if (r.guard.cutoff_a > 0.0 && r.guard.zeros_below == 0)
        r.warnings.push_back("guard-zone deficit: no listed zeros in [a-C(a), a)");
    if (r.guard.cutoff_b > 0.0 && r.guard.zeros_above == 0)
        r.warnings.push_back("guard-zone deficit: no listed zeros in (b, b+C(b)]");
}

void finish(CertificateReport& r) {
    r.verdict = r.gate() <= r.threshold ? Verdict::CertifiedComplete : Verdict::Inconclusive;
}

}  // namespace

std::string verdict_name(Verdict v) {
    return v == Verdict::CertifiedComplete ? "CERTIFIED_COMPLETE" : "INCONCLUSIVE";
}

std::string theorem_name(TheoremMode t) {
    switch (t) {
        case TheoremMode::General: return "general";
        case TheoremMode::ZetaR: return "zeta-r";
        case TheoremMode::ZetaAB: return "zeta-ab";
        case TheoremMode::Hecke: return "hecke";
        case TheoremMode::Elliptic: return "elliptic";
    }
    return "general";
}

TheoremMode theorem_from_name(const std::string& s) {
    if (s == "general") return TheoremMode::General;
    if (s == "zeta-r") return TheoremMode::ZetaR;
    if (s == "zeta-ab") return TheoremMode::ZetaAB;
    if (s == "hecke") return TheoremMode::Hecke;
    if (s == "elliptic") return TheoremMode::Elliptic;
    throw std::invalid_argument("unknown theorem mode: " + s);
}

ZeroSumResult zero_sum_fhat(const ZeroList& zeros, const TestWindow& w, bool shortcut,
                            bool strict) {
    zeros.validate();
    ZeroSumResult res;
    const auto& g = zeros.ordinates;
    res.used = (long)g.size();
    const double delta = zeros.precision_delta;

    long close_pairs = 0;
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (g[i] - g[i - 1] < delta) {
            if (strict)
                throw std::invalid_argument(
                    "strict mode: ordinates closer than precision_delta (assert multiplicity to "
                    "accept)");
            ++close_pairs;
        } else if (g[i] - g[i - 1] < 2.0 * delta) {
            ++close_pairs;
        }
    }
    if (close_pairs > 0)
        res.warnings.push_back("possible duplicate beyond multiplicity: " +
                               std::to_string(close_pairs) +
                               " ordinate pair(s) closer than 2*delta (treated as distinct)");

    double in_lo = w.b, in_hi = w.a;  // empty shortcut region by default
    double per_zero_err = 0.0;
    if (shortcut && !g.empty()) {
        const double rstar = w.h / kPi * (std::log((double)g.size()) + 5.0);
        in_lo = w.a + rstar;
        in_hi = w.b - rstar;
        per_zero_err = 4.0 / kPi * std::exp(-5.0) / (double)g.size() * 1.0001;
    }

    long interior = 0;
    res.sum = chunked_sum<Interval>(g.size(), Interval(0.0), [&](std::size_t lo, std::size_t hi) {
        Interval acc(0.0);
        for (std::size_t i = lo; i < hi; ++i) {
            if (shortcut && g[i] >= in_lo && g[i] <= in_hi) {
                acc += Interval(1.0);
            } else {
                acc += fhat_real_enclosure(w, Interval(g[i]));
            }
        }
        return acc;
    });
    if (shortcut)
        interior = count_in(g, in_lo, in_hi);
    res.shortcut_slack = interior * per_zero_err;
    return res;
}

CertificateReport certify_general(const LFunctionDescriptor& desc, const ZeroList& zeros,
                                  const TestWindow& w, const CertifyOptions& opts) {
    desc.validate();
    require(w.h > 2.0 * desc.sigma1 - desc.sigma0,
            "hypothesis violation: requires h > 2*sigma1 - sigma0");
    require(w.length() > 5.0 * w.h / kPi,
            "window too narrow: requires b - a > 5h/pi");
    require(zeros.precision_delta < w.h / 20.0,
            "precision too coarse: requires delta < h/20");

    CertificateReport r;
    r.theorem_used = TheoremMode::General;
    r.a = w.a;
    r.b = w.b;
    r.h = w.h;
    r.threshold = 0.49;

    const std::uint64_t M = choose_cutoff(desc, w.h, opts.wf_budget);
    const WfResult wf = w_f_eval(desc, w, M, true);
    r.terms.w_f = wf.value;
    r.terms.w_f_tail = wf.tail_bound;

    r.terms.w_inf = w_inf_eval(desc, w, {opts.osc_budget, opts.B_override, true});
    r.terms.pole_term = pole_term_enclosure(desc, w);

    const ZeroSumResult zs = zero_sum_fhat(zeros, w, opts.shortcut, opts.strict);
    r.terms.zero_sum = zs.sum;
    r.zeros_used = zs.used;
    r.warnings.insert(r.warnings.end(), zs.warnings.begin(), zs.warnings.end());

    r.terms.precision_slack =
        zs.used * fhat_derivative_bound(w) * zeros.precision_delta + zs.shortcut_slack;
    if (zs.shortcut_slack > 0.0)
        r.warnings.push_back("zero-sum shortcut enabled; its error bound is included in the slack");

    r.lhs = r.terms.w_f + r.terms.w_inf - r.terms.zero_sum + r.terms.pole_term;

    const double C = w.h / kPi * std::log(std::log(std::exp(1.0) * (desc.Q + 1.0) *
                                                   (std::max(std::fabs(w.a), std::fabs(w.b)) + 1.0)));
    r.guard.cutoff_a = C;
    r.guard.cutoff_b = C;
    r.warnings.push_back(
        "general-mode guard cutoff is advisory (the converse constant is not effective)");
    fill_guard(r, zeros);
    finish(r);
    return r;
}

namespace {

// prime sum of the zeta theorems: cutoff (30/alpha)^(1/alpha), alpha=(h-1)/2
std::uint64_t zeta_theorem_cutoff(double h) {
    const double alpha = 0.5 * (h - 1.0);
    return (std::uint64_t)std::pow(30.0 / alpha, 1.0 / alpha);
}

void zeta_common_pre(const ZeroList& zeros, double h) {
    require(h > 1.0 && h <= kPi, "hypothesis violation: requires h in (1, pi]");
    require(zeros.precision_delta < h / 20.0, "precision too coarse: requires delta < h/20");
}

}  // namespace

CertificateReport certify_zeta_R(const ZeroList& zeros, double R, double h,
                                 const CertifyOptions& opts) {
    require(R >= 15.0, "hypothesis violation: requires R >= 15");
    zeta_common_pre(zeros, h);
    for (double g : zeros.ordinates)
        require(g > 0.0, "hypothesis violation: zeta-r requires all ordinates > 0");

    CertificateReport r;
    r.theorem_used = TheoremMode::ZetaR;
    r.a = 0.0;
    r.b = R;
    r.h = h;
    r.threshold = -0.56;
    const TestWindow w(0.0, R, h);

    const std::uint64_t M = zeta_theorem_cutoff(h);
    const PrimePowerSieve sieve = PrimePowerSieve::up_to(M);
    Interval psum(0.0);
    for (const auto& [p, m, pm] : sieve.entries) {
        const Interval t = (double)m * log(Interval((double)p));
        psum += sin(t * R) / ((double)m * sqrt(Interval((double)pm)) * cosh(t * (0.5 * h)));
    }
    r.terms.w_f = -psum / pi_interval();
    r.terms.w_f_tail = 0.0;  // absorbed by the theorem threshold

    const ComplexInterval lg =
        log_gamma_branch_enclosure(std::complex<double>(0.25, 0.5 * R));
    r.terms.w_inf = lg.im / pi_interval() -
                    Interval(R) * log(pi_interval()) / (2.0 * pi_interval()) +
                    Interval(1.6) / R;

    const ZeroSumResult zs = zero_sum_fhat(zeros, w, opts.shortcut, opts.strict);
    r.terms.zero_sum = zs.sum;
    r.zeros_used = zs.used;
    r.warnings.insert(r.warnings.end(), zs.warnings.begin(), zs.warnings.end());
    r.terms.precision_slack =
        zs.used * fhat_derivative_bound(w) * zeros.precision_delta + zs.shortcut_slack;

    r.terms.pole_term = Interval(0.0);  // absorbed by the theorem threshold
    r.lhs = r.terms.w_f + r.terms.w_inf - r.terms.zero_sum;

    r.guard.cutoff_a = 0.0;
    r.guard.cutoff_b = recommend_cutoff(CutoffFamily::ZetaR, {.h = h}, R);
    if (R < 1e6)
        r.warnings.push_back("converse cutoff is proved for R >= 1e6; advisory at this height");
    fill_guard(r, zeros);
    finish(r);
    return r;
}

CertificateReport certify_zeta_window(const ZeroList& zeros, double a, double b, double h,
                                      const CertifyOptions& opts) {
    zeta_common_pre(zeros, h);
    require(a > 15.0, "hypothesis violation: requires a > 15");
    require(b - a > 5.0 * h / kPi, "hypothesis violation: requires a < b - 5h/pi");

    CertificateReport r;
    r.theorem_used = TheoremMode::ZetaAB;
    r.a = a;
    r.b = b;
    r.h = h;
    r.threshold = 0.44;
    const TestWindow w(a, b, h);

    const std::uint64_t M = zeta_theorem_cutoff(h);
    const PrimePowerSieve sieve = PrimePowerSieve::up_to(M);
    Interval psum(0.0);
    const double half_diff = 0.5 * (b - a), half_sum = 0.5 * (a + b);
    for (const auto& [p, m, pm] : sieve.entries) {
        const Interval t = (double)m * log(Interval((double)p));
        psum += sin(t * half_diff) * cos(t * half_sum) /
                ((double)m * sqrt(Interval((double)pm)) * cosh(t * (0.5 * h)));
    }
    r.terms.w_f = -2.0 * psum / pi_interval();
    r.terms.w_f_tail = 0.0;

    const ComplexInterval lgb = log_gamma_branch_enclosure(std::complex<double>(0.25, 0.5 * b));
    const ComplexInterval lga = log_gamma_branch_enclosure(std::complex<double>(0.25, 0.5 * a));
    r.terms.w_inf = (lgb.im - lga.im) / pi_interval() -
                    (Interval(b) - a) * log(pi_interval()) / (2.0 * pi_interval()) +
                    Interval(3.2) / a;

    const ZeroSumResult zs = zero_sum_fhat(zeros, w, opts.shortcut, opts.strict);
    r.terms.zero_sum = zs.sum;
    r.zeros_used = zs.used;
    r.warnings.insert(r.warnings.end(), zs.warnings.begin(), zs.warnings.end());
    r.terms.precision_slack =
        zs.used * fhat_derivative_bound(w) * zeros.precision_delta + zs.shortcut_slack;

    r.terms.pole_term = Interval(0.0);
    r.lhs = r.terms.w_f + r.terms.w_inf - r.terms.zero_sum;

    r.guard.cutoff_a = recommend_cutoff(CutoffFamily::ZetaAB, {.h = h}, a);
    r.guard.cutoff_b = recommend_cutoff(CutoffFamily::ZetaAB, {.h = h}, b);
    if (a < 1e6)
        r.warnings.push_back("converse cutoff is proved for a >= 1e6; advisory at this height");
    fill_guard(r, zeros);
    finish(r);
    return r;
}

namespace {

Interval penalty_e0(double t) {
    if (t == 0.0) return Interval(0.0);
    return 1.0 / abs(Interval(t));
}

}  // namespace

CertificateReport certify_hecke(const LFunctionDescriptor& desc, const ZeroList& zeros, double a,
                                double b, const CertifyOptions& opts) {
    desc.validate();
    require(desc.sigma0 == 1.0, "hecke mode expects a normalized descriptor (sigma0 = 1)");
    require(b - a > 5.0, "hypothesis violation: requires b - a > 5");
    int degree = 0;
    for (const auto& g : desc.gamma_factors) {
        require(g.lambda == 0.5 || g.lambda == 1.0,
                "hecke mode expects lambda_k in {1/2, 1} (real/complex places)");
        degree += g.lambda == 0.5 ? 1 : 2;
    }
    require(degree > 0, "hecke mode requires at least one gamma factor");
    const double h = kPi;
    require(zeros.precision_delta < h / 20.0, "precision too coarse: requires delta < h/20");
    const TestWindow w(a, b, h);

    // Oscillation hypothesis per place: z+phi_j = 0 or |lambda z + v| >= 10,
    // which is what the penalty constants need.  The theorem's literal
    // |z+phi_j| > 20N is enforced in strict mode only.
    CertificateReport r;
    for (const auto& g : desc.gamma_factors) {
        const double phi = g.mu.imag() / g.lambda;
        for (double z : {a, b}) {
            if (z + phi == 0.0) continue;
            const double R = g.lambda * z + g.mu.imag();
            require(std::fabs(R) >= 10.0,
                    "hypothesis violation: |lambda z + v| must be 0 or >= 10");
            if (std::fabs(z + phi) <= 20.0 * degree) {
                if (opts.strict)
                    throw std::invalid_argument(
                        "strict mode: theorem hypothesis |z+phi_j| > 20N violated");
                r.warnings.push_back(
                    "theorem-literal hypothesis |z+phi_j| > 20N not met; penalty bound still "
                    "valid since |lambda z + v| >= 10");
            }
        }
    }

    r.theorem_used = TheoremMode::Hecke;
    r.a = a;
    r.b = b;
    r.h = h;
    r.threshold = 0.44;

    const std::uint64_t M = (std::uint64_t)(20.0 * degree);
    const WfResult wf = w_f_eval(desc, w, M, true);
    r.terms.w_f = wf.value;
    r.terms.w_f_tail = 0.0;  // <= 0.05, absorbed by the theorem threshold

    Interval penalty(0.0);
    for (const auto& g : desc.gamma_factors) {
        const double phi = g.mu.imag() / g.lambda;
        const double weight = g.lambda == 0.5 ? 1.65 : 5.57;
        penalty += weight * (penalty_e0(a + phi) + penalty_e0(b + phi));
    }
    r.terms.w_inf = w_inf_main_term(desc, w) + penalty;

    r.terms.pole_term = pole_term_enclosure(desc, w);

    const ZeroSumResult zs = zero_sum_fhat(zeros, w, opts.shortcut, opts.strict);
    r.terms.zero_sum = zs.sum;
    r.zeros_used = zs.used;
    r.warnings.insert(r.warnings.end(), zs.warnings.begin(), zs.warnings.end());
    r.terms.precision_slack =
        zs.used * fhat_derivative_bound(w) * zeros.precision_delta + zs.shortcut_slack;

    r.lhs = r.terms.w_f + r.terms.w_inf - r.terms.zero_sum + r.terms.pole_term;

    const CutoffParams cp = cutoff_params_for(desc, h);
    r.guard.cutoff_a = recommend_cutoff(CutoffFamily::Hecke, cp, a);
    r.guard.cutoff_b = recommend_cutoff(CutoffFamily::Hecke, cp, b);
    fill_guard(r, zeros);
    finish(r);
    return r;
}

CertificateReport certify_elliptic(const LFunctionDescriptor& desc, const ZeroList& zeros,
                                   double a, double b, const CertifyOptions& opts) {
    desc.validate();
    require(desc.family == Family::EllipticCurve && desc.elliptic.has_value(),
            "elliptic mode requires an elliptic-curve descriptor");
    require(b - a > 5.0, "hypothesis violation: requires b - a > 5");
    for (double z : {a, b})
        require(z == 0.0 || std::fabs(z) > 15.0,
                "hypothesis violation: window endpoints must be 0 or exceed 15 in absolute value");
    const double h = kPi;
    require(zeros.precision_delta < h / 20.0, "precision too coarse: requires delta < h/20");
    const TestWindow w(a, b, h);
    const long long N = desc.elliptic->conductor;

    CertificateReport r;
    r.theorem_used = TheoremMode::Elliptic;
    r.a = a;
    r.b = b;
    r.h = h;
    r.threshold = 0.42;

    // coefficient sum over p^m < 30: -(1/pi) sum (m c(p^m)/p^m)
    //   [sin(b m log p) - sin(a m log p)] / (m cosh(pi/2 m log p))
    const PrimePowerSieve sieve = PrimePowerSieve::up_to(29);
    Interval psum(0.0);
    for (const auto& [p, m, pm] : sieve.entries) {
        const std::complex<double> c0 = desc.coeff(p, m);
        const Interval c{step_down(c0.real()), step_up(c0.real())};
        const Interval t = (double)m * log(Interval((double)p));
        psum += c * (sin(t * b) - sin(t * a)) / (Interval((double)pm) * cosh(t * (0.5 * kPi)));
    }
    r.terms.w_f = -psum / pi_interval();
    r.terms.w_f_tail = 0.0;  // < 0.07, absorbed by the theorem threshold

    Interval penalty(0.0);
    for (double z : {a, b})
        if (z != 0.0) penalty += 5.57 / abs(Interval(z));
    r.terms.w_inf = w_inf_main_term(desc, w) + penalty;

    r.terms.pole_term = pole_term_enclosure(desc, w);  // empty for entire Lambda(E,s)

    const ZeroSumResult zs = zero_sum_fhat(zeros, w, opts.shortcut, opts.strict);
    r.terms.zero_sum = zs.sum;
    r.zeros_used = zs.used;
    r.warnings.insert(r.warnings.end(), zs.warnings.begin(), zs.warnings.end());
    r.terms.precision_slack =
        zs.used * fhat_derivative_bound(w) * zeros.precision_delta + zs.shortcut_slack;

    r.lhs = r.terms.w_f + r.terms.w_inf - r.terms.zero_sum + r.terms.pole_term;

    const CutoffParams cp{.elliptic_N = N};
    r.guard.cutoff_a = a == 0.0 ? 0.0 : recommend_cutoff(CutoffFamily::Elliptic, cp, a);
    r.guard.cutoff_b = b == 0.0 ? 0.0 : recommend_cutoff(CutoffFamily::Elliptic, cp, b);
    fill_guard(r, zeros);
    finish(r);
    return r;
}

double recommend_cutoff(CutoffFamily family, const CutoffParams& params, double X) {
    switch (family) {
        case CutoffFamily::ZetaR:
            require(X > std::exp(1.0), "recommend_cutoff: X too small for log log");
            return params.h / kPi * (std::log(std::log(X)) + 0.4);
        case CutoffFamily::ZetaAB:
            require(X > std::exp(1.0), "recommend_cutoff: X too small for log log");
            return params.h / kPi * (std::log(std::log(X)) + 1.1);
        case CutoffFamily::Hecke: {
            require(params.hecke_Qprime > 1.0 && params.hecke_degree > 0,
                    "recommend_cutoff: hecke parameters missing");
            const double t = std::fabs(X) + params.hecke_A;
            require(t > 1.0, "recommend_cutoff: |X|+A too small for log log");
            return std::log(std::log(t)) + std::log(std::log(params.hecke_Qprime)) +
                   std::log((double)params.hecke_degree) + 3.0;
        }
        case CutoffFamily::Elliptic: {
            require(params.elliptic_N >= 1, "recommend_cutoff: conductor missing");
            const double t = (double)params.elliptic_N * X * X;
            require(t > 1.0, "recommend_cutoff: N X^2 too small for log log");
            return std::log(std::log(t)) + 3.0;
        }
    }
    throw std::invalid_argument("recommend_cutoff: unknown family");
}

CutoffParams cutoff_params_for(const LFunctionDescriptor& desc, double h) {
    CutoffParams cp;
    cp.h = h;
    cp.hecke_Qprime = desc.Q + std::exp(1.0);
    double max_phi = 0.0, max_n2 = 0.0;
    int degree = 0;
    for (const auto& g : desc.gamma_factors) {
        max_phi = std::max(max_phi, std::fabs(g.mu.imag() / g.lambda));
        max_n2 = std::max(max_n2, std::fabs(g.mu.real()));
        degree += g.lambda == 0.5 ? 1 : 2;
    }
    cp.hecke_A = max_phi + max_n2;
    cp.hecke_degree = degree;
    if (desc.elliptic) cp.elliptic_N = desc.elliptic->conductor;
    return cp;
}

ZetaCountingBounds zeta_counting_bounds(double T) {
    require(T >= std::exp(1.0), "zeta_counting_bounds: requires T >= e");
    const double g = T / (2.0 * kPi) * std::log(T / (2.0 * kPi * std::exp(1.0))) + 7.0 / 8.0;
    const double r1 = 0.112 * std::log(T) + 0.278 * std::log(std::log(T)) + 2.584;
    return {g, r1};
}

ZetaZeroSumTails zeta_zero_sum_tails(double a, double b, double h, double T_a, double T_b) {
    require(a == 0.0 || a > 14.0, "zeta_zero_sum_tails: requires a in {0} or (14, inf)");
    require(b > std::max(a, 14.0), "zeta_zero_sum_tails: requires b > max(a, 14)");
    require(h > 1.0 && h <= kPi, "zeta_zero_sum_tails: requires h in (1, pi]");
    require(T_b > b, "zeta_zero_sum_tails: requires T_b > b");

    ZetaZeroSumTails res{};
    const double c = 0.143 + 0.033 * h;
    res.upper = std::exp(kPi / h * (b - T_b)) *
                (c * std::log(T_b) + 0.354 * std::log(std::log(T_b)) + 3.3);
    res.lower_neg = std::exp(-kPi / h * a) / 10000.0;
    if (a == 0.0) {
        res.lower_pos = 0.0;  // no zeros in (0, T_a) with T_a < a
    } else {
        require(T_a > 14.0 && T_a < a, "zeta_zero_sum_tails: requires 14 < T_a < a");
        res.lower_pos = std::exp(kPi / h * (T_a - a)) *
                        (c * std::log(a) + 0.354 * std::log(std::log(a)) + 3.3);
    }
    return res;
}

Interval explicit_formula_check(const LFunctionDescriptor& desc, const ZeroList& zeros,
                                const TestWindow& w, const CertifyOptions& opts) {
    desc.validate();
    if (w.a == w.b) return Interval(0.0);  // f vanishes identically

    // w_s from the list plus poles (negative multiplicity)
    const ZeroSumResult zs = zero_sum_fhat(zeros, w, false, opts.strict);
    Interval ws = zs.sum;
    for (const auto& p : desc.poles) {
        const std::complex<double> z = pole_ordinate(p.location, desc.sigma0);
        const ComplexInterval f = fhat_eval_enclosure(w, z);
        ws -= (double)p.multiplicity * f.re;
    }
    ws = inflate(ws, zs.used * fhat_derivative_bound(w) * zeros.precision_delta);

    const double budget = std::min(opts.wf_budget, 2e-3);
    const std::uint64_t M = choose_cutoff(desc, w.h, budget);
    const WfResult wf = w_f_eval(desc, w, M, true);
    const Interval winf = w_inf_eval(desc, w, {std::min(opts.osc_budget, 2e-3), opts.B_override,
                                               true});
    Interval residual = ws - wf.value - winf;
    return inflate(residual, wf.tail_bound);
}

std::string report_to_json(const CertificateReport& r) {
    json j;
    j["verdict"] = verdict_name(r.verdict);
    j["theorem"] = theorem_name(r.theorem_used);
    j["window"] = {{"a", r.a}, {"b", r.b}, {"h", r.h}};
    j["lhs"] = {{"lo", r.lhs.lo}, {"hi", r.lhs.hi}};
    j["threshold"] = r.threshold;
    json t;
    t["w_f"] = {{"lo", r.terms.w_f.lo}, {"hi", r.terms.w_f.hi}};
    t["w_f_tail"] = r.terms.w_f_tail;
    t["w_inf"] = {{"lo", r.terms.w_inf.lo}, {"hi", r.terms.w_inf.hi}};
    t["zero_sum"] = {{"lo", r.terms.zero_sum.lo}, {"hi", r.terms.zero_sum.hi}};
    t["pole_term"] = {{"lo", r.terms.pole_term.lo}, {"hi", r.terms.pole_term.hi}};
    t["precision_slack"] = r.terms.precision_slack;
    j["terms"] = t;
    j["zeros_used"] = r.zeros_used;
    j["guard"] = {{"cutoff_a", r.guard.cutoff_a},
                  {"cutoff_b", r.guard.cutoff_b},
                  {"zeros_below", r.guard.zeros_below},
                  {"zeros_above", r.guard.zeros_above}};
    j["gate"] = r.gate();
    j["deficit"] = r.deficit();
    j["warnings"] = r.warnings;
    return j.dump(2);
}

CertificateReport report_from_json(const std::string& s) {
    const json j = json::parse(s);
    CertificateReport r;
    r.verdict = j.at("verdict").get<std::string>() == "CERTIFIED_COMPLETE"
                    ? Verdict::CertifiedComplete
                    : Verdict::Inconclusive;
    r.theorem_used = theorem_from_name(j.at("theorem").get<std::string>());
    r.a = j.at("window").at("a").get<double>();
    r.b = j.at("window").at("b").get<double>();
    r.h = j.at("window").at("h").get<double>();
    r.lhs = Interval(j.at("lhs").at("lo").get<double>(), j.at("lhs").at("hi").get<double>());
    r.threshold = j.at("threshold").get<double>();
    const auto& t = j.at("terms");
    auto iv = [](const json& x) {
        return Interval(x.at("lo").get<double>(), x.at("hi").get<double>());
    };
    r.terms.w_f = iv(t.at("w_f"));
    r.terms.w_f_tail = t.at("w_f_tail").get<double>();
    r.terms.w_inf = iv(t.at("w_inf"));
    r.terms.zero_sum = iv(t.at("zero_sum"));
    r.terms.pole_term = iv(t.at("pole_term"));
    r.terms.precision_slack = t.at("precision_slack").get<double>();
    r.zeros_used = j.at("zeros_used").get<long>();
    r.guard.cutoff_a = j.at("guard").at("cutoff_a").get<double>();
    r.guard.cutoff_b = j.at("guard").at("cutoff_b").get<double>();
    r.guard.zeros_below = j.at("guard").at("zeros_below").get<long>();
    r.guard.zeros_above = j.at("guard").at("zeros_above").get<long>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

std::string report_to_text(const CertificateReport& r) {
    std::ostringstream os;
    os.precision(15);
    os << "theorem:     " << theorem_name(r.theorem_used) << "\n";
    os << "window:      a=" << r.a << " b=" << r.b << " h=" << r.h << "\n";
    os << "prime sum:   " << r.terms.w_f << "  (+tail <= " << r.terms.w_f_tail << ")\n";
    os << "archimedean: " << r.terms.w_inf << "\n";
    os << "zero sum:    " << r.terms.zero_sum << "  (" << r.zeros_used << " zeros)\n";
    os << "pole term:   " << r.terms.pole_term << "\n";
    os << "slack:       " << r.terms.precision_slack << "\n";
    os << "lhs:         " << r.lhs << "\n";
    os << "gate:        " << r.gate() << "  vs threshold " << r.threshold
       << "  (deficit " << r.deficit() << ")\n";
    os << "guard:       C(a)=" << r.guard.cutoff_a << " zeros_below=" << r.guard.zeros_below
       << "  C(b)=" << r.guard.cutoff_b << " zeros_above=" << r.guard.zeros_above << "\n";
    for (const auto& wmsg : r.warnings) os << "warning:     " << wmsg << "\n";
    os << "verdict:     " << verdict_name(r.verdict) << "\n";
    return os.str();
}

}  // namespace zerocert
