#pragma once

#include <map>
#include <optional>
#include <string>

#include "qcontig/polynomial.hpp"

namespace qcontig {

/// Canonical quotient of two polynomials: gcd(num, den) is a unit, den has
/// integer coefficients with content 1 and positive leading coefficient
/// under the fixed lex order. Equal values are bit-identical.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(Rational(1))) {} // zero

    /// Canonicalizing constructor.
    static RationalFunction make(Polynomial num, Polynomial den);
    static RationalFunction from_rational(Rational c);
    static RationalFunction from_poly(Polynomial p);
    static RationalFunction var(Symbol s);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value as a rational; requires is_constant().
    Rational to_rational() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(long e) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    /// Exact substitution; throws pole_error / unassigned_symbol_error.
    Rational eval(std::span<const Rational> point) const;
    Rational eval(const Workspace& ws, const std::map<std::string, Rational>& point) const;

    template <class F>
    F eval_field(std::span<const F> point, const F& zero, const F& one) const {
        F d = den_.eval(point, zero, one);
        if (d == zero) throw pole_error("denominator vanishes at evaluation point");
        return num_.eval(point, zero, one) / d;
    }

    int total_degree() const {
        return std::max(num_.total_degree(), den_.total_degree());
    }

    std::string to_string(const Workspace& ws) const;

private:
    Polynomial num_;
    Polynomial den_;
};

struct EqualityWitness {
    std::map<std::uint32_t, Rational> point; // symbol id -> value
    Rational lhs, rhs;
};

struct ProbabilisticOptions {
    int trials = 3;
    std::uint64_t seed = 1;
    std::uint64_t pool_size = (std::uint64_t(1) << 31) - 1;
    int resample_budget = 100;
};

struct EqualityResult {
    bool equal = false;
    std::optional<EqualityWitness> witness; // present when unequal in probabilistic mode
    double error_bound = 0.0;               // (d/S)^trials, probabilistic mode only
};

/// Exact mode: canonical-form comparison. Probabilistic mode: Schwartz-Zippel
/// evaluation of a-b at uniform points of {1..S}^symbols, resampling poles.
EqualityResult rf_equal(const RationalFunction& a, const RationalFunction& b);
EqualityResult rf_equal(const RationalFunction& a, const RationalFunction& b,
                        const ProbabilisticOptions& opts);

} // namespace qcontig
