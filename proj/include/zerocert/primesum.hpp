#pragma once

#include <cstdint>
#include <vector>

#include "zerocert/interval.hpp"
#include "zerocert/lfunction.hpp"
#include "zerocert/testfn.hpp"

namespace zerocert {

struct PrimePowerEntry {
    std::uint64_t p;
    int m;
    std::uint64_t pm;
};

// All prime powers p^m <= limit, sorted by p^m.
struct PrimePowerSieve {
    std::uint64_t limit = 0;
    std::vector<PrimePowerEntry> entries;

    static PrimePowerSieve up_to(std::uint64_t limit);
};

// Tail of the prime-power sum beyond M: (8C/pi) M^{sigma1-(h+sigma0)/2} / (sigma0+h-2*sigma1).
// Requires h > 2*sigma1 - sigma0.
double wf_tail_bound(const LFunctionDescriptor& desc, double h, double M);

// Smallest integer M whose tail bound is <= budget.
std::uint64_t choose_cutoff(const LFunctionDescriptor& desc, double h, double budget);

struct WfResult {
    Interval value;      // encloses the partial sum (degenerate point in fast mode)
    double tail_bound;   // Lemma-style remainder beyond the cutoff
    std::uint64_t cutoff;
};

// Partial prime-power functional
//   -sum_{p^m <= M} (m log p / p^{m sigma0/2}) * 2 Re(c(p^m) f(m log p)),
// the von Mangoldt-weighted sum whose tail wf_tail_bound controls.
WfResult w_f_eval(const LFunctionDescriptor& desc, const TestWindow& w, std::uint64_t M,
                  bool enclosure = true);

}  // namespace zerocert
