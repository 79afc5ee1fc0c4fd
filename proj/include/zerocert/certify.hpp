#pragma once

#include <string>
#include <vector>

#include "zerocert/arch.hpp"
#include "zerocert/interval.hpp"
#include "zerocert/lfunction.hpp"
#include "zerocert/primesum.hpp"
#include "zerocert/testfn.hpp"

namespace zerocert {

// INCONCLUSIVE means the inequality did not close: it proves nothing about
// the list (the converse direction needs RH and wider windows).
enum class Verdict { CertifiedComplete, Inconclusive };

enum class TheoremMode { General, ZetaR, ZetaAB, Hecke, Elliptic };

std::string verdict_name(Verdict v);
std::string theorem_name(TheoremMode t);
TheoremMode theorem_from_name(const std::string& s);

struct CertifyOptions {
    bool shortcut = false;   // approximate fhat by 1 deep inside the window
    bool strict = false;     // reject near-duplicate ordinates, theorem-literal hypotheses
    double wf_budget = 0.05;
    double osc_budget = 0.05;
    double B_override = 0.0;
};

struct TermBreakdown {
    Interval w_f{0.0};
    double w_f_tail = 0.0;
    Interval w_inf{0.0};
    Interval zero_sum{0.0};
    Interval pole_term{0.0};
    double precision_slack = 0.0;
};

struct GuardInfo {
    double cutoff_a = 0.0;  // recommended extra length below a
    double cutoff_b = 0.0;  // and above b
    long zeros_below = 0;   // listed zeros in [a - cutoff_a, a)
    long zeros_above = 0;   // listed zeros in (b, b + cutoff_b]
};

struct CertificateReport {
    Verdict verdict = Verdict::Inconclusive;
    TheoremMode theorem_used = TheoremMode::General;
    double a = 0.0, b = 0.0, h = 0.0;
    Interval lhs{0.0};
    double threshold = 0.49;
    TermBreakdown terms;
    long zeros_used = 0;
    GuardInfo guard;
    std::vector<std::string> warnings;

    // the quantity compared against the threshold
    double gate() const { return lhs.hi + terms.w_f_tail + terms.precision_slack; }
    double deficit() const { return gate() - threshold; }
};

std::string report_to_json(const CertificateReport& r);
CertificateReport report_from_json(const std::string& s);
std::string report_to_text(const CertificateReport& r);

// Theorem-1 certificate for any (L1)-(L4) descriptor; threshold 0.49.
CertificateReport certify_general(const LFunctionDescriptor& desc, const ZeroList& zeros,
                                  const TestWindow& w, const CertifyOptions& opts = {});

// Zeta specializations (thresholds -0.56 and 0.44).
CertificateReport certify_zeta_R(const ZeroList& zeros, double R, double h,
                                 const CertifyOptions& opts = {});
CertificateReport certify_zeta_window(const ZeroList& zeros, double a, double b, double h,
                                      const CertifyOptions& opts = {});

// Hecke L-series over Q(i) shape (h fixed at pi, threshold 0.44).
CertificateReport certify_hecke(const LFunctionDescriptor& desc, const ZeroList& zeros, double a,
                                double b, const CertifyOptions& opts = {});

// Elliptic curves over Q (h fixed at pi, threshold 0.42).
CertificateReport certify_elliptic(const LFunctionDescriptor& desc, const ZeroList& zeros,
                                   double a, double b, const CertifyOptions& opts = {});

enum class CutoffFamily { ZetaR, ZetaAB, Hecke, Elliptic };

struct CutoffParams {
    double h = 2.5;          // zeta forms
    double hecke_A = 0.0;    // max|phi_j| + max|n_j|/2
    double hecke_Qprime = 0.0;
    int hecke_degree = 0;
    long long elliptic_N = 0;
};

// Extra interval length beyond [a,b] within which the list should be
// complete for the certificate to be expected to succeed.
double recommend_cutoff(CutoffFamily family, const CutoffParams& params, double X);
CutoffParams cutoff_params_for(const LFunctionDescriptor& desc, double h);

struct ZetaCountingBounds {
    double g;   // main term (T/2pi) log(T/2pi e) + 7/8
    double r1;  // |N(T) - g(T)| <= r1(T)
};
ZetaCountingBounds zeta_counting_bounds(double T);

struct ZetaZeroSumTails {
    double upper;      // fhat mass of zeros above T_b
    double lower_neg;  // mass of zeros below 0
    double lower_pos;  // mass of zeros in (0, T_a)
};
ZetaZeroSumTails zeta_zero_sum_tails(double a, double b, double h, double T_a, double T_b);

// Consistency diagnostic: w_s(list + poles) - w_f - w_inf as an enclosure.
// Near-zero residual is evidence, not a certificate.
Interval explicit_formula_check(const LFunctionDescriptor& desc, const ZeroList& zeros,
                                const TestWindow& w, const CertifyOptions& opts = {});

// Shared zero-sum machinery (exposed for tests).
struct ZeroSumResult {
    Interval sum{0.0};
    double shortcut_slack = 0.0;
    long used = 0;
    std::vector<std::string> warnings;
};
ZeroSumResult zero_sum_fhat(const ZeroList& zeros, const TestWindow& w, bool shortcut,
                            bool strict);

}  // namespace zerocert
