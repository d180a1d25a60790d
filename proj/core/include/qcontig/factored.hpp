#pragma once

#include <vector>

#include "qcontig/rational_function.hpp"

namespace qcontig {

/// Product-form rational function: coeff * prod factor_i^exp_i with each
/// factor a primitive polynomial (positive leading coefficient), kept
/// sorted. Two-term factors are split into irreducible pieces on entry
/// (difference of squares, cyclotomic factors of q^m -+ 1), so syntactic
/// factor cancellation is complete cancellation for everything the q-series
/// builders produce. Summation assembles terms over the factor-multiset lcm
/// and reduces by trial division against the known factors, which avoids
/// general multivariate gcd on large expanded sums.
class FactoredRF {
public:
    FactoredRF() : coeff_(1) {}
    static FactoredRF zero() {
        FactoredRF f;
        f.coeff_ = 0;
        return f;
    }
    static FactoredRF from_rational(Rational c) {
        FactoredRF f;
        f.coeff_ = std::move(c);
        return f;
    }

    bool is_zero() const { return coeff_ == 0; }
    const Rational& coeff() const { return coeff_; }
    const std::vector<std::pair<Polynomial, int>>& factors() const { return factors_; }

    void mul_rational(const Rational& c);
    /// Multiply by p^exp; p is content-normalized and split before merging.
    void mul_poly(const Polynomial& p, int exp);
    void mul_rf(const RationalFunction& f, int exp);
    void mul(const FactoredRF& o, int exp = 1);

    /// Expand into the canonical quotient.
    RationalFunction to_rf() const;

    FactoredRF operator*(const FactoredRF& o) const {
        FactoredRF r = *this;
        r.mul(o);
        return r;
    }

private:
    friend RationalFunction sum_factored(const std::vector<FactoredRF>& terms);
    void merge_factor(Polynomial p, int exp); // p primitive, lead > 0, irreducible-ish

    Rational coeff_;
    std::vector<std::pair<Polynomial, int>> factors_;
};

/// Exact sum of factored terms as a canonical rational function.
RationalFunction sum_factored(const std::vector<FactoredRF>& terms);

/// Split a primitive polynomial into irreducible-ish pieces: monomial part
/// as variable powers, recursive difference-of-squares, cyclotomic
/// factorization of v^m - 1 and v^m + 1. Polynomials with three or more
/// terms are returned unsplit.
void split_factor(const Polynomial& p, std::vector<std::pair<Polynomial, int>>& out, int exp);

} // namespace qcontig
