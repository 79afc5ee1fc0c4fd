#include "zerocert/primesum.hpp"

#include <algorithm>
#include <cmath>

#include "zerocert/util.hpp"

namespace zerocert {

PrimePowerSieve PrimePowerSieve::up_to(std::uint64_t limit) {
    PrimePowerSieve s;
    s.limit = limit;
    if (limit < 2) return s;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p * p <= limit; ++p)
        if (!composite[p])
            for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        std::uint64_t pm = p;
        int m = 1;
        while (pm <= limit) {
            s.entries.push_back({p, m, pm});
            if (pm > limit / p) break;
            pm *= p;
            ++m;
        }
    }
    std::sort(s.entries.begin(), s.entries.end(),
              [](const PrimePowerEntry& a, const PrimePowerEntry& b) { return a.pm < b.pm; });
    return s;
}

double wf_tail_bound(const LFunctionDescriptor& desc, double h, double M) {
    const double denom = desc.sigma0 + h - 2.0 * desc.sigma1;
    if (!(denom > 0.0))
        throw std::invalid_argument("wf_tail_bound: requires h > 2*sigma1 - sigma0");
    const double expo = desc.sigma1 - 0.5 * (h + desc.sigma0);
    return 8.0 * desc.coeff_bound_C / 3.141592653589793 * std::pow(M, expo) / denom;
}

std::uint64_t choose_cutoff(const LFunctionDescriptor& desc, double h, double budget) {
    if (!(budget > 0.0)) throw std::invalid_argument("choose_cutoff: budget must be positive");
    const double denom = desc.sigma0 + h - 2.0 * desc.sigma1;
    if (!(denom > 0.0))
        throw std::invalid_argument("choose_cutoff: requires h > 2*sigma1 - sigma0");
    const double expo = desc.sigma1 - 0.5 * (h + desc.sigma0);  // < 0
    const double est =
        std::pow(budget * 3.141592653589793 * denom / (8.0 * desc.coeff_bound_C), 1.0 / expo);
    std::uint64_t M = est < 2.0 ? 2 : (std::uint64_t)est;
    if (M > 20'000'000) throw std::invalid_argument("choose_cutoff: budget needs M > 2e7");
    while (M > 2 && wf_tail_bound(desc, h, (double)(M - 1)) <= budget) --M;
    while (wf_tail_bound(desc, h, (double)M) > budget) ++M;
    return M;
}

WfResult w_f_eval(const LFunctionDescriptor& desc, const TestWindow& w, std::uint64_t M,
                  bool enclosure) {
    if (M < 2) throw std::invalid_argument("w_f_eval: cutoff must be >= 2");
    const double tail = wf_tail_bound(desc, w.h, (double)M);
    const PrimePowerSieve sieve = PrimePowerSieve::up_to(M);
    const auto& e = sieve.entries;

    if (!enclosure) {
        double sum = 0.0, comp = 0.0;  // Kahan, ascending p^m
        for (const auto& [p, m, pm] : e) {
            const double logp = std::log((double)p);
            const double t = m * logp;
            const std::complex<double> c = desc.coeff(p, m);
            const std::complex<double> f = f_eval(w, t);
            const double term = -2.0 * m * logp / std::pow((double)p, 0.5 * m * desc.sigma0) *
                                (c.real() * f.real() - c.imag() * f.imag());
            const double y = term - comp;
            const double s = sum + y;
            comp = (s - sum) - y;
            sum = s;
        }
        return {Interval(sum), tail, M};
    }

    const Interval total = chunked_sum<Interval>(
        e.size(), Interval(0.0), [&](std::size_t lo, std::size_t hi) {
            Interval acc(0.0);
            for (std::size_t i = lo; i < hi; ++i) {
                const auto& [p, m, pm] = e[i];
                const Interval logp = log(Interval((double)p));
                const Interval t = (double)m * logp;
                const std::complex<double> c0 = desc.coeff(p, m);
                const Interval cre{step_down(c0.real()), step_up(c0.real())};
                const Interval cim{step_down(c0.imag()), step_up(c0.imag())};
                const ComplexInterval f = f_eval_enclosure(w, t);
                const Interval weight =
                    (double)m * logp / exp((0.5 * (double)m * desc.sigma0) * logp);
                acc += -2.0 * weight * (cre * f.re - cim * f.im);
            }
            return acc;
        });
    return {total, tail, M};
}

}  // namespace zerocert
