#pragma once

#include <complex>

#include "zerocert/interval.hpp"

namespace zerocert {

// Branch of log Gamma(z) on Re(z) > 0 that is real on the positive axis and
// vanishes at z = 1 (the branch the Stirling formula expands).  Evaluated by
// shifting the argument up until Re >= 10, then a 12-term Stirling series;
// the enclosure version carries the exact-rational Bernoulli coefficients
// through interval arithmetic and adds a proven remainder radius.
std::complex<double> log_gamma_branch(std::complex<double> z);
ComplexInterval log_gamma_branch_enclosure(const ComplexInterval& z);
ComplexInterval log_gamma_branch_enclosure(std::complex<double> z);

// Gamma'/Gamma on Re(z) > 0, same shift-then-Stirling scheme.
std::complex<double> digamma(std::complex<double> z);
ComplexInterval digamma_enclosure(const ComplexInterval& z);
ComplexInterval digamma_enclosure(std::complex<double> z);

// Holomorphic arctan on C \ {iy : |y| >= 1} with arctan(0) = 0, via the
// principal-logarithm formula arctan(z) = (i/2) Log((1-iz)/(1+iz)).
std::complex<double> arctan_cut(std::complex<double> z);
ComplexInterval arctan_cut_enclosure(const ComplexInterval& z);
Interval arctan_cut_enclosure(const Interval& x);  // real axis, monotone

}  // namespace zerocert
