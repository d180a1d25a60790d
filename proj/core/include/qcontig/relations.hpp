#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcontig/identities.hpp"
#include "qcontig/rational_function.hpp"
#include "qcontig/report.hpp"

// The paper's proof machinery as checkable displays: per-identity term
// recurrences, the matching closed-form recurrences, and telescoping
// certificates H_{n,k}. Each display is a list of relation terms summing to
// zero at concrete (n, k), symbolic in the parameters; certificates place
// the H-difference on the right. Out-of-range summands (k < 0, k > n,
// negative order) are zero by convention.

namespace qcontig {

struct RecurrenceSpec {
    std::string id;
    std::string anchor;
    int v = 1;      // order drop of the relation
    long min_n = 1; // smallest n the relation is stated for
    std::vector<std::string> symbols;
    /// Relation terms at (n,k) summing to zero; factored symbolic form.
    std::function<std::vector<FactoredRF>(const identities::Env<SymbolicCtx>&, long, long)>
        terms_sym;
    /// The same terms evaluated at a rational point.
    std::function<std::vector<Rational>(const identities::Env<PlainCtx<Rational>>&, long, long)>
        terms_q;
};

struct CertificateSpec {
    std::string id;
    std::string anchor;
    int v = 1;
    long min_n = 1;
    std::vector<std::string> symbols;
    /// Left side of the certificate equation at (n,k) (the G-relation).
    std::function<std::vector<FactoredRF>(const identities::Env<SymbolicCtx>&, long, long)>
        lhs_sym;
    std::function<std::vector<Rational>(const identities::Env<PlainCtx<Rational>>&, long, long)>
        lhs_q;
    /// Closed form H(n,k); k = n and k = -1 must vanish identically.
    std::function<FactoredRF(const identities::Env<SymbolicCtx>&, long, long)> h_sym;
    std::function<Rational(const identities::Env<PlainCtx<Rational>>&, long, long)> h_q;
};

const std::vector<RecurrenceSpec>& recurrence_catalog();
const std::vector<CertificateSpec>& certificate_catalog();
const RecurrenceSpec& recurrence(const std::string& id);
const CertificateSpec& certificate(const std::string& id);

struct CheckOptions {
    bool probabilistic = false;
    int trials = 20;
    std::uint64_t seed = 42;
    std::uint64_t pool_size = (std::uint64_t(1) << 31) - 1;
};

/// Relation at concrete (n, k), symbolic in the parameters (or sampled at
/// `trials` random rational points in probabilistic mode).
VerificationReport verify_recurrence(const RecurrenceSpec& spec, long n, long k,
                                     const CheckOptions& opts = {});

/// Certificate at order n: the certificate equation for every k = 0..n plus
/// the boundary annihilation H(n,n) = H(n,-1) = 0.
VerificationReport verify_certificate(const CertificateSpec& spec, long n,
                                      const CheckOptions& opts = {});

/// The c = 1 base-case telescoping of the split-poised sums: the displayed
/// summand equals u_k - u_{k-1} symbolically in A, B, C, q.
VerificationReport verify_split_poised_base_telescoping(long k);

} // namespace qcontig
