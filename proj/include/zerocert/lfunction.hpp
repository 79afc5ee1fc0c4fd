#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace zerocert {

enum class Family { Zeta, HeckeGaussian, EllipticCurve, Generic };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// One Gamma(lambda s + mu) factor of the completed L-function.
struct GammaFactor {
    double lambda = 1.0;
    std::complex<double> mu{0.0, 0.0};
};

struct Pole {
    std::complex<double> location{1.0, 0.0};
    int multiplicity = 1;
};

// Euler coefficients c(p^m) with |c(p^m)| <= C p^{(sigma1-1)m},
// L(s) = exp(sum c(p^m) p^{-ms}).  Providers must be safe for concurrent
// read-only queries.
class CoefficientProvider {
public:
    virtual ~CoefficientProvider() = default;
    virtual std::complex<double> coeff(std::uint64_t p, int m) const = 0;
};

struct EllipticCurveData {
    std::array<long long, 5> a_invariants{};  // a1, a2, a3, a4, a6
    long long conductor = 0;
    std::vector<std::pair<long long, int>> bad_primes;  // (p, eps)
    long long pointcount_budget = 2'000'000;
};

// The (L1)-(L4) data of an L-function.  The functional-equation axis is
// sigma0 (critical line Re s = sigma0/2), sigma1 the Euler abscissa.
struct LFunctionDescriptor {
    double sigma0 = 1.0;
    double sigma1 = 1.0;
    double Q = 1.0;
    std::vector<GammaFactor> gamma_factors;
    std::complex<double> root_number{1.0, 0.0};
    std::vector<Pole> poles;
    double coeff_bound_C = 1.0;
    Family family = Family::Generic;
    std::shared_ptr<const CoefficientProvider> provider;
    std::optional<EllipticCurveData> elliptic;

    std::complex<double> coeff(std::uint64_t p, int m) const;
    void validate() const;  // throws naming the violated axiom
};

// c(p^m) = 1/m (Riemann zeta)
std::complex<double> zeta_coeff(std::uint64_t p, int m);

// Dedekind zeta of Q(i): sum of 1/k over prime ideals of Z[i] with
// N(P)^k = p^m, from the splitting of p mod 4.
std::complex<double> gaussian_dedekind_coeff(std::uint64_t p, int m);

// Trace of Frobenius by naive point counting over F_p (general Weierstrass
// equation); throws if p exceeds budget.
long long elliptic_ap(const std::array<long long, 5>& a_inv, long long p, long long budget);

class EllipticProvider : public CoefficientProvider {
public:
    explicit EllipticProvider(EllipticCurveData data);
    std::complex<double> coeff(std::uint64_t p, int m) const override;
    long long ap(long long p) const;  // good p only

private:
    EllipticCurveData data_;
    mutable std::mutex mu_;
    mutable std::map<long long, long long> ap_cache_;
};

class TableProvider : public CoefficientProvider {
public:
    TableProvider() = default;
    explicit TableProvider(std::map<std::pair<std::uint64_t, int>, std::complex<double>> t)
        : table_(std::move(t)) {}
    std::complex<double> coeff(std::uint64_t p, int m) const override;

private:
    std::map<std::pair<std::uint64_t, int>, std::complex<double>> table_;
};

LFunctionDescriptor zeta_descriptor();
LFunctionDescriptor qi_dedekind_descriptor();  // principal Hecke character over Q(i)
LFunctionDescriptor elliptic_descriptor(const EllipticCurveData& data);

LFunctionDescriptor descriptor_from_file(const std::string& path);
std::string descriptor_to_json(const LFunctionDescriptor& d);

// Ordered ordinates gamma_j of listed zeros sigma0/2 + i gamma_j, with a
// guaranteed bound on the ordinate error.
struct ZeroList {
    std::vector<double> ordinates;
    double precision_delta = 1e-9;
    std::string source_label;

    void validate() const;
};

ZeroList zero_list_from_file(const std::string& path);

}  // namespace zerocert
