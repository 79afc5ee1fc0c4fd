#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerocert/certify.hpp"
#include "zerocert/primesum.hpp"

using namespace zerocert;

namespace {

constexpr int kExitCertified = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitInputError = 2;

struct CommonArgs {
    std::string descriptor_path;
    std::string zeros_path;
    std::string theorem = "auto";
    std::string output = "text";
    double a = 0.0, b = 0.0, h = 2.5;
    std::optional<double> R;
    double budget = 0.05;
    bool shortcut = false;
    bool strict = false;
};

CertifyOptions options_from(const CommonArgs& args) {
    CertifyOptions o;
    o.shortcut = args.shortcut;
    o.strict = args.strict;
    o.wf_budget = args.budget;
    o.osc_budget = args.budget;
    return o;
}

TheoremMode dispatch_auto(const LFunctionDescriptor& desc, const CommonArgs& args) {
    switch (desc.family) {
        case Family::Zeta:
            if (args.R.has_value() || args.a == 0.0) return TheoremMode::ZetaR;
            if (args.a > 15.0) return TheoremMode::ZetaAB;
            return TheoremMode::General;
        case Family::HeckeGaussian: return TheoremMode::Hecke;
        case Family::EllipticCurve: return TheoremMode::Elliptic;
        case Family::Generic: return TheoremMode::General;
    }
    return TheoremMode::General;
}

void print_report(const CertificateReport& r, const std::string& output) {
    if (output == "json")
        std::cout << report_to_json(r) << "\n";
    else
        std::cout << report_to_text(r);
}

int cmd_certify(const CommonArgs& args) {
    const LFunctionDescriptor desc = descriptor_from_file(args.descriptor_path);
    const ZeroList zeros = zero_list_from_file(args.zeros_path);
    TheoremMode mode = args.theorem == "auto" ? dispatch_auto(desc, args)
                                              : theorem_from_name(args.theorem);
    const CertifyOptions opts = options_from(args);

    CertificateReport r;
    switch (mode) {
        case TheoremMode::ZetaR: {
            if (desc.family != Family::Zeta)
                throw std::invalid_argument("theorem zeta-r requires a zeta descriptor");
            const double R = args.R.value_or(args.b);
            r = certify_zeta_R(zeros, R, args.h, opts);
            break;
        }
        case TheoremMode::ZetaAB:
            if (desc.family != Family::Zeta)
                throw std::invalid_argument("theorem zeta-ab requires a zeta descriptor");
            r = certify_zeta_window(zeros, args.a, args.b, args.h, opts);
            break;
        case TheoremMode::Hecke:
            r = certify_hecke(desc, zeros, args.a, args.b, opts);
            break;
        case TheoremMode::Elliptic:
            r = certify_elliptic(desc, zeros, args.a, args.b, opts);
            break;
        case TheoremMode::General: {
            const double b = args.R.value_or(args.b);
            const double a = args.R.has_value() ? 0.0 : args.a;
            r = certify_general(desc, zeros, TestWindow(a, b, args.h), opts);
            break;
        }
    }
    print_report(r, args.output);
    return r.verdict == Verdict::CertifiedComplete ? kExitCertified : kExitInconclusive;
}

int cmd_window(const CommonArgs& args) {
    nlohmann::json out;
    double ca = 0.0, cb = 0.0;
    LFunctionDescriptor desc;
    bool have_desc = false;
    if (!args.descriptor_path.empty()) {
        desc = descriptor_from_file(args.descriptor_path);
        have_desc = true;
    }
    const TheoremMode mode = args.theorem == "auto" && have_desc
                                 ? dispatch_auto(desc, args)
                                 : theorem_from_name(args.theorem == "auto" ? "zeta-ab"
                                                                            : args.theorem);
    switch (mode) {
        case TheoremMode::ZetaR: {
            const double R = args.R.value_or(args.b);
            cb = recommend_cutoff(CutoffFamily::ZetaR, {.h = args.h}, R);
            out["range"] = {0.0, R + cb};
            break;
        }
        case TheoremMode::ZetaAB:
            ca = recommend_cutoff(CutoffFamily::ZetaAB, {.h = args.h}, args.a);
            cb = recommend_cutoff(CutoffFamily::ZetaAB, {.h = args.h}, args.b);
            out["range"] = {args.a - ca, args.b + cb};
            break;
        case TheoremMode::Hecke: {
            if (!have_desc) throw std::invalid_argument("hecke window needs --descriptor");
            const CutoffParams cp = cutoff_params_for(desc, 3.141592653589793);
            ca = recommend_cutoff(CutoffFamily::Hecke, cp, args.a);
            cb = recommend_cutoff(CutoffFamily::Hecke, cp, args.b);
            out["range"] = {args.a - ca, args.b + cb};
            break;
        }
        case TheoremMode::Elliptic: {
            if (!have_desc || !desc.elliptic)
                throw std::invalid_argument("elliptic window needs an elliptic --descriptor");
            const CutoffParams cp{.elliptic_N = desc.elliptic->conductor};
            ca = args.a == 0.0 ? 0.0 : recommend_cutoff(CutoffFamily::Elliptic, cp, args.a);
            cb = args.b == 0.0 ? 0.0 : recommend_cutoff(CutoffFamily::Elliptic, cp, args.b);
            out["range"] = {args.a - ca, args.b + cb};
            break;
        }
        case TheoremMode::General: {
            if (!have_desc) throw std::invalid_argument("general window needs --descriptor");
            const double X = std::max(std::fabs(args.a), std::fabs(args.b));
            ca = cb = args.h / 3.141592653589793 *
                      std::log(std::log(std::exp(1.0) * (desc.Q + 1.0) * (X + 1.0)));
            out["range"] = {args.a - ca, args.b + cb};
            break;
        }
    }
    out["cutoff_a"] = ca;
    out["cutoff_b"] = cb;
    // minimum ordinate precision from m*(2/h)*delta <= 0.01
    double m_est = 1000.0;
    if (mode == TheoremMode::ZetaR || mode == TheoremMode::ZetaAB) {
        const double lo = mode == TheoremMode::ZetaR ? 0.0 : args.a;
        const double hi = args.R.value_or(args.b);
        const double glo = lo < 15.0 ? 0.0 : zeta_counting_bounds(lo).g;
        m_est = std::max(1.0, zeta_counting_bounds(std::max(hi, 15.0)).g - glo);
    }
    out["min_precision_delta"] = 0.01 * args.h / (2.0 * m_est) ;
    out["zero_count_estimate"] = m_est;
    if (args.output == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "recommended zero-list range: [" << out["range"][0].get<double>() << ", "
                  << out["range"][1].get<double>() << "]\n"
                  << "cutoff C(a) = " << ca << ", C(b) = " << cb << "\n"
                  << "minimum ordinate precision delta <= "
                  << out["min_precision_delta"].get<double>() << " (for ~" << m_est
                  << " zeros)\n";
    }
    return kExitCertified;
}

int cmd_check(const CommonArgs& args) {
    const LFunctionDescriptor desc = descriptor_from_file(args.descriptor_path);
    const ZeroList zeros = zero_list_from_file(args.zeros_path);
    CertifyOptions opts = options_from(args);
    opts.wf_budget = std::min(opts.wf_budget, 2e-3);
    opts.osc_budget = std::min(opts.osc_budget, 2e-3);
    const Interval residual =
        explicit_formula_check(desc, zeros, TestWindow(args.a, args.b, args.h), opts);
    const bool ok = std::fabs(residual.mid()) + residual.rad() <= args.budget;
    if (args.output == "json") {
        nlohmann::json out;
        out["residual"] = {{"lo", residual.lo}, {"hi", residual.hi}};
        out["budget"] = args.budget;
        out["within_budget"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "explicit-formula residual: " << residual << "\n"
                  << "budget: " << args.budget << " -> " << (ok ? "OK" : "EXCEEDED") << "\n";
    }
    return ok ? kExitCertified : kExitInconclusive;
}

int cmd_primes(const CommonArgs& args) {
    const LFunctionDescriptor desc = descriptor_from_file(args.descriptor_path);
    const TestWindow w(args.a, args.b > args.a ? args.b : args.a + 100.0, args.h);
    const std::uint64_t M = choose_cutoff(desc, w.h, args.budget);
    const PrimePowerSieve sieve = PrimePowerSieve::up_to(M);
    nlohmann::json rows = nlohmann::json::array();
    std::printf("%8s %4s %10s %24s %24s\n", "p", "m", "p^m", "c(p^m)", "term");
    for (const auto& [p, m, pm] : sieve.entries) {
        const std::complex<double> c = desc.coeff(p, m);
        const double logp = std::log((double)p);
        const double t = m * logp;
        const std::complex<double> f = f_eval(w, t);
        const double term = -2.0 * m * logp / std::pow((double)p, 0.5 * m * desc.sigma0) *
                            (c.real() * f.real() - c.imag() * f.imag());
        if (args.output == "json") {
            rows.push_back({{"p", p}, {"m", m}, {"pm", pm}, {"c_re", c.real()},
                            {"c_im", c.imag()}, {"term", term}});
        } else {
            std::printf("%8llu %4d %10llu %24.16g %24.16g\n", (unsigned long long)p, m,
                        (unsigned long long)pm, c.real(), term);
        }
    }
    const double tail = wf_tail_bound(desc, w.h, (double)M);
    if (args.output == "json") {
        nlohmann::json out;
        out["cutoff"] = M;
        out["tail_bound"] = tail;
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("cutoff M = %llu, tail bound = %.6g\n", (unsigned long long)M, tail);
    }
    return kExitCertified;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool need_desc, bool need_zeros) {
    auto* d = cmd->add_option("--descriptor,-d", args.descriptor_path, "L-function descriptor (JSON)");
    if (need_desc) d->required();
    auto* z = cmd->add_option("--zeros,-z", args.zeros_path, "zero list file");
    if (need_zeros) z->required();
    cmd->add_option("--a", args.a, "window lower ordinate");
    cmd->add_option("--b", args.b, "window upper ordinate");
    cmd->add_option("--h", args.h, "test-function decay parameter");
    cmd->add_option("--R", args.R, "zeta-r window height (window is (0, R])");
    cmd->add_option("--theorem,-t", args.theorem,
                    "auto|general|zeta-r|zeta-ab|hecke|elliptic")
        ->check(CLI::IsMember({"auto", "general", "zeta-r", "zeta-ab", "hecke", "elliptic"}));
    cmd->add_option("--budget", args.budget, "accuracy budget for tails/quadrature");
    cmd->add_flag("--shortcut", args.shortcut, "use the interior zero-sum shortcut");
    cmd->add_flag("--strict", args.strict, "theorem-literal hypotheses, duplicate rejection");
    cmd->add_option("--output,-o", args.output, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zerocert: completeness certificates for L-function zero lists"};
    app.require_subcommand(1);

    CommonArgs cert_args, window_args, check_args, primes_args;
    auto* certify = app.add_subcommand("certify", "run a completeness certificate");
    add_common(certify, cert_args, true, true);
    auto* window = app.add_subcommand("window", "recommend zero-list range and precision");
    add_common(window, window_args, false, false);
    auto* check = app.add_subcommand("check", "explicit-formula consistency residual");
    add_common(check, check_args, true, true);
    auto* primes = app.add_subcommand("primes", "dump prime-power terms and tail bound");
    add_common(primes, primes_args, true, false);

    try {
        app.parse(argc, argv);
        if (certify->parsed()) return cmd_certify(cert_args);
        if (window->parsed()) return cmd_window(window_args);
        if (check->parsed()) return cmd_check(check_args);
        if (primes->parsed()) return cmd_primes(primes_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
