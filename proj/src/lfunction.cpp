#include "zerocert/lfunction.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zerocert {

using nlohmann::json;

std::string family_name(Family f) {
    switch (f) {
        case Family::Zeta: return "zeta";
        case Family::HeckeGaussian: return "hecke_gaussian";
        case Family::EllipticCurve: return "elliptic";
        case Family::Generic: return "generic";
    }
    return "generic";
}

Family family_from_name(const std::string& name) {
    if (name == "zeta") return Family::Zeta;
    if (name == "hecke_gaussian") return Family::HeckeGaussian;
    if (name == "elliptic") return Family::EllipticCurve;
    if (name == "generic") return Family::Generic;
    throw std::invalid_argument("unknown family: " + name);
}

std::complex<double> LFunctionDescriptor::coeff(std::uint64_t p, int m) const {
    if (!provider) throw std::invalid_argument("descriptor has no coefficient provider");
    return provider->coeff(p, m);
}

void LFunctionDescriptor::validate() const {
    if (!(sigma0 < 2.0 * sigma1))
        throw std::invalid_argument("(L4): requires sigma0 < 2*sigma1");
    if (!(Q > 0.0)) throw std::invalid_argument("(L4): Q must be positive");
    if (!(coeff_bound_C > 0.0)) throw std::invalid_argument("(L3): C must be positive");
    if (std::fabs(std::abs(root_number) - 1.0) > 1e-9)
        throw std::invalid_argument("(L4): root number must have modulus 1");
    for (const auto& g : gamma_factors) {
        if (!(g.lambda > 0.0)) throw std::invalid_argument("(L4): lambda_k must be positive");
        if (!(g.mu.real() > -g.lambda * sigma0 / 2.0))
            throw std::invalid_argument("(L4): requires Re(mu_k) > -lambda_k*sigma0/2");
    }
    for (const auto& p : poles) {
        if (p.multiplicity < 1)
            throw std::invalid_argument("(L2): pole multiplicity must be >= 1");
    }
}

std::complex<double> zeta_coeff(std::uint64_t, int m) {
    return {1.0 / m, 0.0};
}

std::complex<double> gaussian_dedekind_coeff(std::uint64_t p, int m) {
    if (p == 2) return {1.0 / m, 0.0};                     // ramified: (1+i)^2
    if (p % 4 == 1) return {2.0 / m, 0.0};                 // split: two degree-1 primes
    return (m % 2 == 0) ? std::complex<double>(2.0 / m, 0.0)  // inert: norm p^2
                        : std::complex<double>(0.0, 0.0);
}

namespace {

long long mod_pow(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % p;
        b = (__int128)b * b % p;
        e >>= 1;
    }
    return r;
}

// Legendre symbol via Euler's criterion
int legendre(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

bool is_prime_small(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

long long elliptic_ap(const std::array<long long, 5>& a_inv, long long p, long long budget) {
    if (p > budget)
        throw std::runtime_error("elliptic_ap: prime exceeds point-counting budget");
    const auto [a1, a2, a3, a4, a6] = a_inv;
    if (p == 2) {
        long long count = 1;
        for (long long x = 0; x < 2; ++x)
            for (long long y = 0; y < 2; ++y) {
                long long lhs = (y * y + a1 * x * y + a3 * y) % 2;
                long long rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
                if (((lhs - rhs) % 2 + 2) % 2 == 0) ++count;
            }
        return 2 + 1 - count;
    }
    // complete the square: solutions of y^2+a1xy+a3y = g(x) pair with the
    // Legendre symbol of D(x) = (a1 x + a3)^2 + 4 g(x)
    const long long A1 = ((a1 % p) + p) % p, A2 = ((a2 % p) + p) % p, A3 = ((a3 % p) + p) % p,
                    A4 = ((a4 % p) + p) % p, A6 = ((a6 % p) + p) % p;
    long long sum = 0;
    for (long long x = 0; x < p; ++x) {
        const long long xx = x * x % p;
        const long long g = (xx * x + A2 * xx + A4 * x + A6) % p;
        const long long l = (A1 * x + A3) % p;
        const long long d = (l * l + 4 * g) % p;
        sum += legendre(d, p);
    }
    return -sum;
}

EllipticProvider::EllipticProvider(EllipticCurveData data) : data_(std::move(data)) {}

long long EllipticProvider::ap(long long p) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ap_cache_.find(p);
    if (it != ap_cache_.end()) return it->second;
    const long long a = elliptic_ap(data_.a_invariants, p, data_.pointcount_budget);
    ap_cache_[p] = a;
    return a;
}

std::complex<double> EllipticProvider::coeff(std::uint64_t p, int m) const {
    for (const auto& [bp, eps] : data_.bad_primes) {
        if ((long long)p == bp) {
            double e = 1.0;
            for (int i = 0; i < m; ++i) e *= eps;
            return {e / m, 0.0};
        }
    }
    // c(p^m) = (alpha^m + conj(alpha)^m)/m via t_m = a_p t_{m-1} - p t_{m-2}
    const long long a = ap((long long)p);
    long long t_prev = 2, t_cur = a;
    for (int i = 1; i < m; ++i) {
        const long long t_next = a * t_cur - (long long)p * t_prev;
        t_prev = t_cur;
        t_cur = t_next;
    }
    return {double(t_cur) / m, 0.0};
}

std::complex<double> TableProvider::coeff(std::uint64_t p, int m) const {
    auto it = table_.find({p, m});
    return it == table_.end() ? std::complex<double>(0.0, 0.0) : it->second;
}

LFunctionDescriptor zeta_descriptor() {
    LFunctionDescriptor d;
    d.sigma0 = 1.0;
    d.sigma1 = 1.0;
    d.Q = 1.0 / std::sqrt(3.141592653589793);
    d.gamma_factors = {{0.5, {0.0, 0.0}}};
    d.root_number = {1.0, 0.0};
    d.poles = {{{0.0, 0.0}, 1}, {{1.0, 0.0}, 1}};
    d.coeff_bound_C = 1.0;
    d.family = Family::Zeta;
    struct ZetaProvider : CoefficientProvider {
        std::complex<double> coeff(std::uint64_t p, int m) const override {
            return zeta_coeff(p, m);
        }
    };
    d.provider = std::make_shared<ZetaProvider>();
    d.validate();
    return d;
}

LFunctionDescriptor qi_dedekind_descriptor() {
    LFunctionDescriptor d;
    d.sigma0 = 1.0;
    d.sigma1 = 1.0;
    d.Q = 1.0 / 3.141592653589793;  // sqrt(|d_K| / (4^{r2} pi^N)) for K = Q(i)
    d.gamma_factors = {{1.0, {0.0, 0.0}}};  // one complex place
    d.root_number = {1.0, 0.0};
    d.poles = {{{0.0, 0.0}, 1}, {{1.0, 0.0}, 1}};
    d.coeff_bound_C = 2.0;  // field degree
    d.family = Family::HeckeGaussian;
    struct GaussianProvider : CoefficientProvider {
        std::complex<double> coeff(std::uint64_t p, int m) const override {
            return gaussian_dedekind_coeff(p, m);
        }
    };
    d.provider = std::make_shared<GaussianProvider>();
    d.validate();
    return d;
}

namespace {

void validate_elliptic_data(const EllipticCurveData& e) {
    if (e.conductor < 1) throw std::invalid_argument("elliptic: conductor must be positive");
    long long n = e.conductor;
    std::map<long long, int> ord;
    for (long long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++ord[p];
            n /= p;
        }
    if (n > 1) ++ord[n];
    if (ord.size() != e.bad_primes.size())
        throw std::invalid_argument("elliptic: bad primes must be exactly the primes dividing N");
    for (const auto& [p, eps] : e.bad_primes) {
        auto it = ord.find(p);
        if (it == ord.end())
            throw std::invalid_argument("elliptic: listed bad prime does not divide N");
        if (eps != 0 && eps != 1 && eps != -1)
            throw std::invalid_argument("elliptic: reduction type eps must be -1, 0 or 1");
        // conductor exponent 1 iff multiplicative reduction
        if (eps != 0 && it->second != 1)
            throw std::invalid_argument("elliptic: multiplicative reduction requires ord_p(N) = 1");
        if (eps == 0 && it->second < 2)
            throw std::invalid_argument("elliptic: additive reduction requires ord_p(N) >= 2");
    }
}

}  // namespace

LFunctionDescriptor elliptic_descriptor(const EllipticCurveData& data) {
    validate_elliptic_data(data);
    LFunctionDescriptor d;
    d.sigma0 = 2.0;
    d.sigma1 = 1.5;
    d.Q = std::sqrt((double)data.conductor) / (2.0 * 3.141592653589793);
    d.gamma_factors = {{1.0, {0.0, 0.0}}};
    d.root_number = {1.0, 0.0};
    d.poles = {};
    d.coeff_bound_C = 2.0;
    d.family = Family::EllipticCurve;
    d.elliptic = data;
    d.provider = std::make_shared<EllipticProvider>(data);
    d.validate();
    return d;
}

namespace {

std::map<std::pair<std::uint64_t, int>, std::complex<double>> read_coeff_table(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open coefficient table: " + path);
    std::map<std::pair<std::uint64_t, int>, std::complex<double>> table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::uint64_t p;
        int m;
        double re, im;
        if (!(ss >> p >> m >> re >> im))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected 'p m re im'");
        if (!is_prime_small(p) || m < 1)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": p must be prime and m >= 1");
        table[{p, m}] = {re, im};
    }
    return table;
}

}  // namespace

LFunctionDescriptor descriptor_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open descriptor: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("descriptor parse error in " + path + ": " + e.what());
    }

    const Family family = family_from_name(j.at("family").get<std::string>());
    if (family == Family::Zeta) {
        // fixed data; file fields, when present, must agree
        LFunctionDescriptor d = zeta_descriptor();
        if (j.contains("sigma0") && j["sigma0"].get<double>() != d.sigma0)
            throw std::invalid_argument("zeta descriptor: sigma0 must be 1");
        return d;
    }
    if (family == Family::HeckeGaussian) return qi_dedekind_descriptor();

    LFunctionDescriptor d;
    d.family = family;
    d.sigma0 = j.at("sigma0").get<double>();
    d.sigma1 = j.at("sigma1").get<double>();
    d.Q = j.at("Q").get<double>();
    for (const auto& g : j.at("gamma_factors")) {
        if (!g.is_array() || g.size() != 3)
            throw std::invalid_argument("gamma_factors entries must be [lambda, mu_re, mu_im]");
        d.gamma_factors.push_back({g[0].get<double>(), {g[1].get<double>(), g[2].get<double>()}});
    }
    const auto& w = j.at("root_number");
    d.root_number = {w.at(0).get<double>(), w.at(1).get<double>()};
    if (j.contains("poles"))
        for (const auto& p : j["poles"])
            d.poles.push_back({{p.at(0).get<double>(), p.at(1).get<double>()}, p.at(2).get<int>()});
    d.coeff_bound_C = j.at("coeff_bound_C").get<double>();

    if (family == Family::EllipticCurve) {
        const auto& e = j.at("elliptic");
        EllipticCurveData data;
        const auto& ai = e.at("a_invariants");
        if (ai.size() != 5)
            throw std::invalid_argument("elliptic: a_invariants must be [a1,a2,a3,a4,a6]");
        for (int i = 0; i < 5; ++i) data.a_invariants[i] = ai[i].get<long long>();
        data.conductor = e.at("conductor").get<long long>();
        for (const auto& bp : e.at("bad_primes"))
            data.bad_primes.push_back({bp.at(0).get<long long>(), bp.at(1).get<int>()});
        if (e.contains("pointcount_budget"))
            data.pointcount_budget = e["pointcount_budget"].get<long long>();
        validate_elliptic_data(data);
        d.elliptic = data;
        d.provider = std::make_shared<EllipticProvider>(data);
    } else {
        const auto& g = j.at("generic");
        if (g.contains("coeff_table")) {
            auto table_path = std::filesystem::path(path).parent_path() /
                              g["coeff_table"].get<std::string>();
            d.provider = std::make_shared<TableProvider>(read_coeff_table(table_path.string()));
        } else {
            d.provider = std::make_shared<TableProvider>();
        }
    }
    d.validate();
    return d;
}

std::string descriptor_to_json(const LFunctionDescriptor& d) {
    json j;
    j["family"] = family_name(d.family);
    j["sigma0"] = d.sigma0;
    j["sigma1"] = d.sigma1;
    j["Q"] = d.Q;
    j["gamma_factors"] = json::array();
    for (const auto& g : d.gamma_factors)
        j["gamma_factors"].push_back({g.lambda, g.mu.real(), g.mu.imag()});
    j["root_number"] = {d.root_number.real(), d.root_number.imag()};
    j["poles"] = json::array();
    for (const auto& p : d.poles)
        j["poles"].push_back({p.location.real(), p.location.imag(), p.multiplicity});
    j["coeff_bound_C"] = d.coeff_bound_C;
    if (d.elliptic) {
        json e;
        e["a_invariants"] = d.elliptic->a_invariants;
        e["conductor"] = d.elliptic->conductor;
        e["bad_primes"] = json::array();
        for (const auto& [p, eps] : d.elliptic->bad_primes) e["bad_primes"].push_back({p, eps});
        j["elliptic"] = e;
    }
    return j.dump(2);
}

void ZeroList::validate() const {
    if (!(precision_delta > 0.0))
        throw std::invalid_argument("ZeroList: precision_delta must be positive");
    for (std::size_t i = 1; i < ordinates.size(); ++i)
        if (ordinates[i] < ordinates[i - 1])
            throw std::invalid_argument("ZeroList: ordinates must be non-decreasing");
}

ZeroList zero_list_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open zero list: " + path);
    ZeroList zl;
    zl.precision_delta = 0.0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (line.find("delta") != std::string::npos && eq != std::string::npos)
                zl.precision_delta = std::stod(line.substr(eq + 1));
            else if (line.find("source") != std::string::npos && eq != std::string::npos)
                zl.source_label = line.substr(eq + 1);
            continue;
        }
        std::istringstream ss(line);
        double g;
        if (!(ss >> g) || std::isnan(g))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": malformed ordinate");
        std::string rest;
        if (ss >> rest)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": trailing content after ordinate");
        zl.ordinates.push_back(g);
    }
    if (zl.precision_delta == 0.0)
        throw std::invalid_argument(path + ": missing '# delta=' header");
    zl.validate();
    return zl;
}

}  // namespace zerocert
