#pragma once

#include "qcontig/factored.hpp"
#include "qcontig/report.hpp"
#include "qcontig/workspace.hpp"

namespace qcontig {

/// k-th term of a well-poised series: F_k(a_1..a_{r+1}; q, z) =
/// (a_1,...,a_{r+1};q)_k z^k / ((q, a_1 q/a_2, ..., a_1 q/a_{r+1};q)_k),
/// with F_{-1} identically 0.
FactoredRF well_poised_term(const std::vector<RationalFunction>& a, const RationalFunction& q,
                            const RationalFunction& z, long k);

/// Coefficient alpha of the first contiguous relation (shift-last-two).
RationalFunction contiguous_alpha(const std::vector<RationalFunction>& a,
                                  const RationalFunction& q, const RationalFunction& z);
/// Coefficient beta of the second contiguous relation (shift-argument).
RationalFunction contiguous_beta(const std::vector<RationalFunction>& a,
                                 const RationalFunction& q, const RationalFunction& z);

/// Verifies the contiguous relation (variant 1: shift last two parameters,
/// variant 2: shift the argument) as a rational-function identity in
/// a_1..a_{r+1}, z, q at concrete k.
VerificationReport verify_contiguous(int variant, int r, long k);

} // namespace qcontig
