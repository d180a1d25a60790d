#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcontig/rational.hpp"
#include "qcontig/workspace.hpp"

namespace qcontig {

/// Construction of a field value from an exact rational; specialized per
/// field in field.hpp (Rational itself, RationalFunction, binary floats).
template <class F>
F make_field_value(const Rational& r);

template <>
inline Rational make_field_value<Rational>(const Rational& r) { return r; }

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in strictly descending lexicographic order of the exponent
/// vector (symbol id 0 compared first), with no zero coefficients and no
/// duplicate exponent vectors, so equal polynomials are structurally
/// identical. Exponents are nonnegative; negative powers belong to the
/// denominator of a RationalFunction.
class Polynomial {
public:
    using Exp = std::uint16_t;

    Polynomial() = default; // zero

    static Polynomial constant(Rational c);
    static Polynomial variable(Symbol s, unsigned exp = 1);
    static Polynomial monomial(Rational c, std::span<const Exp> exps);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return term_count() <= 1 && (is_zero() || mono_is_trivial(0)); }
    bool is_monomial() const { return term_count() == 1; }
    bool is_one() const { return is_constant() && !is_zero() && coeffs_[0] == 1; }

    std::size_t term_count() const { return coeffs_.size(); }
    std::uint32_t nvars() const { return nvars_; }

    const Rational& coeff(std::size_t t) const { return coeffs_[t]; }
    std::span<const Exp> exps(std::size_t t) const {
        return {exps_.data() + t * nvars_, nvars_};
    }
    const Rational& leading_coeff() const { return coeffs_.front(); }

    /// Degree in one variable; -1 for the zero polynomial.
    int degree(std::uint32_t var) const;
    int total_degree() const;
    /// Variables with positive degree.
    std::vector<std::uint32_t> support() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rational& c) const;
    /// Multiply by the single term c * X^exps.
    Polynomial shifted(const Rational& c, std::span<const Exp> exps) const;

    bool operator==(const Polynomial& o) const;
    /// Total order usable for canonical factor sorting.
    std::strong_ordering compare(const Polynomial& o) const;

    /// Exact quotient, or nullopt if `d` does not divide exactly.
    std::optional<Polynomial> try_divide(const Polynomial& d) const;
    Polynomial divexact(const Polynomial& d) const;

    /// Rational content (sign chosen so the primitive part has positive
    /// leading coefficient). Zero polynomial has content 0.
    Rational content() const;
    /// *this == content() * primitive_part(); primitive part has coprime
    /// integer coefficients and positive leading coefficient.
    Polynomial primitive_part() const;

    /// GCD of the primitive parts (primitive, positive leading coefficient;
    /// 1 if coprime). Contents are ignored.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// Evaluate at a full point (values indexed by symbol id). F needs
    /// ring operations and construction from Rational.
    template <class F>
    F eval(std::span<const F> values, const F& zero, const F& one) const {
        if (is_zero()) return zero;
        // power tables per variable
        std::vector<std::vector<F>> pows(nvars_);
        for (std::uint32_t v = 0; v < nvars_; ++v) {
            int d = degree(v);
            if (d <= 0) continue;
            if (v >= values.size()) throw unassigned_symbol_error("missing value for variable id " + std::to_string(v));
            pows[v].reserve(static_cast<std::size_t>(d) + 1);
            pows[v].push_back(one);
            for (int e = 1; e <= d; ++e) pows[v].push_back(pows[v].back() * values[v]);
        }
        F acc = zero;
        for (std::size_t t = 0; t < term_count(); ++t) {
            F term = make_field_value<F>(coeffs_[t]);
            for (std::uint32_t v = 0; v < nvars_; ++v) {
                Exp e = exps_[t * nvars_ + v];
                if (e) term = term * pows[v][e];
            }
            acc = acc + term;
        }
        return acc;
    }

    std::string to_string(const Workspace& ws) const;

    /// Pads exponent rows to at least `n` variables.
    Polynomial aligned(std::uint32_t n) const;

private:
    friend class PolyBuilder;
    bool mono_is_trivial(std::size_t t) const;
    static void align_pair(const Polynomial& a, const Polynomial& b,
                           Polynomial& a2, Polynomial& b2,
                           const Polynomial*& pa, const Polynomial*& pb);

    std::uint32_t nvars_ = 0;
    std::vector<Exp> exps_;      // term_count * nvars_
    std::vector<Rational> coeffs_;
};

/// Incremental term sink; call add() in any order, then take().
class PolyBuilder {
public:
    explicit PolyBuilder(std::uint32_t nvars) : nvars_(nvars) {}
    void add(std::span<const Polynomial::Exp> exps, Rational c);
    Polynomial take();

private:
    std::uint32_t nvars_;
    std::vector<Polynomial::Exp> exps_;
    std::vector<Rational> coeffs_;
};

namespace detail {

/// Probe whether gcd(a, b) is constant by computing univariate gcd images
/// modulo a word-size prime at random evaluation points. Returns:
///   0  — certified: gcd has degree 0 in every common variable
///   1  — some variable has a (likely) positive gcd degree
///  -1  — degenerate evaluations exhausted the retry budget
int coprimality_probe(const Polynomial& a, const Polynomial& b, std::uint64_t seed);

} // namespace detail

} // namespace qcontig
