#pragma once

#include <functional>
#include <vector>

#include "qcontig/factored.hpp"
#include "qcontig/field.hpp"

namespace qcontig {

// Evaluation contexts. Identity generators are written once against a Ctx;
// the symbolic context accumulates terms in factored form (products of
// irreducible-ish polynomials) so that series summation can assemble the
// common denominator from known factors instead of running multivariate gcd
// on expanded sums. Plain contexts evaluate in the field directly.

template <class F>
struct PlainCtx {
    using Field = F;
    using Scalar = F;
    using Value = F;

    static Value one() { return FieldOps<F>::one(); }
    static Value zero_value() { return FieldOps<F>::zero(); }
    static Value from_scalar(const Scalar& s) { return s; }
    static Value mul(Value a, const Value& b) { return a * b; }
    static Value pow(const Scalar& a, long e) { return FieldOps<F>::pow(a, e); }

    static Value poch(const Scalar& arg, const Scalar& base, long n) {
        Value r = one();
        if (n >= 0) {
            for (long j = 0; j < n; ++j)
                r = r * (one() - arg * FieldOps<F>::pow(base, j));
            return r;
        }
        for (long j = 1; j <= -n; ++j) {
            Value f = one() - arg * FieldOps<F>::pow(base, -j);
            if (FieldOps<F>::is_zero(f))
                throw zero_divisor_error("negative-index Pochhammer hit a zero factor");
            r = r * f;
        }
        return FieldOps<F>::div(one(), r);
    }

    /// 1/(arg;base)_n with the convention 1/(a;q)_{-m} = (a q^{-m};q)_m.
    static Value rpoch(const Scalar& arg, const Scalar& base, long n) {
        if (n >= 0) {
            Value r = one();
            for (long j = 0; j < n; ++j) {
                Value f = one() - arg * FieldOps<F>::pow(base, j);
                if (FieldOps<F>::is_zero(f))
                    throw zero_divisor_error("denominator Pochhammer is identically zero");
                r = r * f;
            }
            return FieldOps<F>::div(one(), r);
        }
        return poch(arg * FieldOps<F>::pow(base, n), base, -n);
    }

    static Field finish(Value v) { return v; }
    static Field sum(std::vector<Value> terms) {
        Field acc = FieldOps<F>::zero();
        for (auto& t : terms) acc = acc + t;
        return acc;
    }
};

struct SymbolicCtx {
    using Field = RationalFunction;
    using Scalar = RationalFunction;
    using Value = FactoredRF;

    static Value one() { return FactoredRF(); }
    static Value zero_value() { return FactoredRF::zero(); }
    static Value from_scalar(const Scalar& s) {
        FactoredRF f;
        f.mul_rf(s, 1);
        return f;
    }
    static Value mul(Value a, const Value& b) {
        a.mul(b);
        return a;
    }
    static Value pow(const Scalar& a, long e) {
        FactoredRF f;
        f.mul_rf(a, static_cast<int>(e));
        return f;
    }

    static Value poch(const Scalar& arg, const Scalar& base, long n) {
        FactoredRF acc;
        const RationalFunction one_rf = RationalFunction::from_rational(Rational(1));
        if (n >= 0) {
            for (long j = 0; j < n; ++j)
                acc.mul_rf(one_rf - arg * base.pow(j), 1);
            return acc;
        }
        for (long j = 1; j <= -n; ++j) {
            RationalFunction f = one_rf - arg * base.pow(-j);
            if (f.is_zero())
                throw zero_divisor_error("negative-index Pochhammer hit a zero factor");
            acc.mul_rf(f, -1);
        }
        return acc;
    }

    static Value rpoch(const Scalar& arg, const Scalar& base, long n) {
        if (n >= 0) {
            FactoredRF acc;
            const RationalFunction one_rf = RationalFunction::from_rational(Rational(1));
            for (long j = 0; j < n; ++j) {
                RationalFunction f = one_rf - arg * base.pow(j);
                if (f.is_zero())
                    throw zero_divisor_error("denominator Pochhammer is identically zero");
                acc.mul_rf(f, -1);
            }
            return acc;
        }
        return poch(arg * base.pow(n), base, -n);
    }

    static Field finish(const Value& v) { return v.to_rf(); }
    static Field sum(const std::vector<Value>& terms) { return sum_factored(terms); }
};

template <class F>
struct CtxFor {
    using type = PlainCtx<F>;
};
template <>
struct CtxFor<RationalFunction> {
    using type = SymbolicCtx;
};

// ---------------------------------------------------------------------------
// q-Pochhammer operations (field-level API)

/// (a; base)_n for n in Z; n<0 via (a;q)_{-n} = 1/((a base^{-n}; base)_n).
template <class F>
F poch(const F& a, const F& base, long n) {
    using Ctx = typename CtxFor<F>::type;
    return Ctx::finish(Ctx::poch(a, base, n));
}

/// (a_1,...,a_m; base)_n.
template <class F>
F poch_multi(const std::vector<F>& args, const F& base, long n) {
    using Ctx = typename CtxFor<F>::type;
    auto acc = Ctx::one();
    for (const auto& a : args) acc = Ctx::mul(std::move(acc), Ctx::poch(a, base, n));
    return Ctx::finish(acc);
}

/// Gaussian binomial [n; k]_base: (q;q)_n/((q;q)_k (q;q)_{n-k}) for
/// 0<=k<=n, else 0.
template <class F>
F qbinom(long n, long k, const F& base) {
    using Ctx = typename CtxFor<F>::type;
    if (k < 0 || k > n) return FieldOps<F>::zero();
    auto v = Ctx::poch(base, base, n);
    v = Ctx::mul(std::move(v), Ctx::rpoch(base, base, k));
    v = Ctx::mul(std::move(v), Ctx::rpoch(base, base, n - k));
    return Ctx::finish(v);
}

/// Very-well-poised weight (1 - a base^{2k})/(1 - a), the square-root-free
/// form of the (q a^{1/2}, -q a^{1/2})/(a^{1/2}, -a^{1/2}) column pair.
template <class F>
F vwp_weight(const F& a, const F& base, long k) {
    using Ctx = typename CtxFor<F>::type;
    const F one = FieldOps<F>::one();
    F d = one - a;
    if (FieldOps<F>::is_zero(d)) throw zero_divisor_error("vwp weight requires a != 1");
    auto v = Ctx::from_scalar(one - a * FieldOps<F>::pow(base, 2 * k));
    v = Ctx::mul(std::move(v), Ctx::pow(d, -1));
    return Ctx::finish(v);
}

// ---------------------------------------------------------------------------
// Series summand specification

template <class Ctx>
struct PochFactor {
    typename Ctx::Scalar arg;
    typename Ctx::Scalar base;
    bool denominator = false;
    /// Pochhammer length as a function of (n, k); nullptr means k.
    std::function<long(long, long)> length;
};

/// The k-th summand of a (bi)basic series: Pochhammer factors, the argument
/// z contributing z^k, and an extra weight for non-Pochhammer pieces like
/// (-1)^k q^{k(3k+1)/2}, very-well-poised weights, or q-binomials.
template <class Ctx>
struct SeriesTermSpec {
    std::vector<PochFactor<Ctx>> factors;
    typename Ctx::Scalar argument;
    std::function<typename Ctx::Value(long n, long k)> extra_weight; // optional
};

template <class Ctx>
typename Ctx::Value term_value(const SeriesTermSpec<Ctx>& s, long n, long k) {
    auto acc = Ctx::one();
    for (const auto& f : s.factors) {
        long len = f.length ? f.length(n, k) : k;
        acc = Ctx::mul(std::move(acc),
                       f.denominator ? Ctx::rpoch(f.arg, f.base, len)
                                     : Ctx::poch(f.arg, f.base, len));
    }
    acc = Ctx::mul(std::move(acc), Ctx::pow(s.argument, k));
    if (s.extra_weight) acc = Ctx::mul(std::move(acc), s.extra_weight(n, k));
    return acc;
}

template <class Ctx>
typename Ctx::Field term(const SeriesTermSpec<Ctx>& s, long n, long k) {
    return Ctx::finish(term_value(s, n, k));
}

/// Exact sum over k = 0..n.
template <class Ctx>
typename Ctx::Field sum_terms(const SeriesTermSpec<Ctx>& s, long n) {
    std::vector<typename Ctx::Value> ts;
    ts.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) ts.push_back(term_value(s, n, k));
    return Ctx::sum(std::move(ts));
}

/// Sum over an explicit k range (bilateral finite sums).
template <class Ctx>
typename Ctx::Field sum_terms_range(const SeriesTermSpec<Ctx>& s, long n, long klo, long khi) {
    std::vector<typename Ctx::Value> ts;
    for (long k = klo; k <= khi; ++k) ts.push_back(term_value(s, n, k));
    return Ctx::sum(std::move(ts));
}

} // namespace qcontig
