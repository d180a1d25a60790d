#pragma once

#include <vector>

#include "qcontig/field.hpp"
#include "qcontig/rng.hpp"

// The general-sequence identities of the paper's bibasic section: Chu's
// two-sided summation over arbitrary sequences a_j, b_j and the Chen
// summation / inversion pair obtained from it. All products over empty or
// inverted ranges follow the Pochhammer convention: prod_{j=u}^{u-1} = 1 and
// prod_{j=u}^{v} = 1 / prod_{j=v+1}^{u-1} for v < u-1.

namespace qcontig {

template <class F>
struct SequenceInput {
    std::vector<F> a_seq; // indexed lo..lo+size-1
    std::vector<F> b_seq;
    long lo = 0; // lowest index (use -m for the two-sided sum)
    F alpha{};
    F c{};
    F d{};

    const F& a(long j) const { return a_seq.at(static_cast<std::size_t>(j - lo)); }
    const F& b(long j) const { return b_seq.at(static_cast<std::size_t>(j - lo)); }
};

namespace detail {

template <class F, class Fn>
F prod_range(long lo, long hi, Fn f) {
    if (hi >= lo - 1) {
        F r = FieldOps<F>::one();
        for (long j = lo; j <= hi; ++j) r = r * f(j);
        return r;
    }
    F r = FieldOps<F>::one();
    for (long j = hi + 1; j <= lo - 1; ++j) r = r * f(j);
    return FieldOps<F>::div(FieldOps<F>::one(), r);
}

} // namespace detail

// ------------------------------------------------------------------- (6.1)

template <class F>
F chu_general_lhs(const SequenceInput<F>& in, long m, long n) {
    const F one = FieldOps<F>::one();
    const F &al = in.alpha, &c = in.c, &d = in.d;
    auto num4 = [&](long j) {
        return (one - in.a(j)) * (one - FieldOps<F>::div(in.a(j), d)) * (one - c * in.b(j)) *
               (one - FieldOps<F>::div(al * al * d * in.b(j), c));
    };
    auto den4 = [&](long j) {
        return (one - al * in.b(j)) * (one - FieldOps<F>::div(al * in.a(j), c)) *
               (one - al * d * in.b(j)) * (one - FieldOps<F>::div(c * in.a(j), al * d));
    };
    F acc = FieldOps<F>::zero();
    const F head_den = (one - al * in.a(0) * in.b(0)) *
                       (in.b(0) - FieldOps<F>::div(in.a(0), al * d));
    for (long k = -m; k <= n; ++k) {
        F head = FieldOps<F>::div(
            (one - al * in.a(k) * in.b(k)) * (in.b(k) - FieldOps<F>::div(in.a(k), al * d)),
            head_den);
        F t = head * detail::prod_range<F>(0, k - 1, num4);
        t = FieldOps<F>::div(t, detail::prod_range<F>(1, k, den4));
        acc = acc + t;
    }
    return acc;
}

template <class F>
F chu_general_rhs(const SequenceInput<F>& in, long m, long n) {
    const F one = FieldOps<F>::one();
    const F &al = in.alpha, &c = in.c, &d = in.d;
    auto num4 = [&](long j) {
        return (one - in.a(j)) * (one - FieldOps<F>::div(in.a(j), d)) * (one - c * in.b(j)) *
               (one - FieldOps<F>::div(al * al * d * in.b(j), c));
    };
    auto den4 = [&](long j) {
        return (one - al * in.b(j)) * (one - FieldOps<F>::div(al * in.a(j), c)) *
               (one - al * d * in.b(j)) * (one - FieldOps<F>::div(c * in.a(j), al * d));
    };
    F pref = FieldOps<F>::div(
        num4(0), al * (one - al * in.a(0) * in.b(0)) * (one - FieldOps<F>::div(c, al)) *
                     (in.b(0) - FieldOps<F>::div(in.a(0), al * d)) *
                     (one - FieldOps<F>::div(al * d, c)));
    F p1 = detail::prod_range<F>(1, n, [&](long j) { return FieldOps<F>::div(num4(j), den4(j)); });
    F p2 = detail::prod_range<F>(-m, 0, [&](long j) { return FieldOps<F>::div(den4(j), num4(j)); });
    return pref * (p1 - p2);
}

// ------------------------------------------------------- (6.2)/(6.4) pair

template <class F>
F chen_F(const SequenceInput<F>& in, long n) {
    const F one = FieldOps<F>::one();
    return FieldOps<F>::div((one - in.b(0)) * (one - in.d * in.b(0)),
                            (one - in.b(n)) * (one - in.d * in.b(n)));
}

template <class F>
F chen_G(const SequenceInput<F>& in, long n) {
    const F one = FieldOps<F>::one();
    F num = detail::prod_range<F>(0, n - 1,
                                  [&](long j) { return (one - in.a(j)) * (in.d - in.a(j)); });
    F den = detail::prod_range<F>(
        1, n, [&](long j) { return (one - in.b(j)) * (one - in.d * in.b(j)); });
    return FieldOps<F>::div(num, den);
}

/// Right side of (6.2) with the product reading of the displayed numerator.
template <class F>
F chen_sum_rhs(const SequenceInput<F>& in, long n) {
    const F one = FieldOps<F>::one();
    const F& d = in.d;
    F acc = FieldOps<F>::zero();
    const F head_den = (one - in.a(0) * in.b(n)) * (d * in.b(n) - in.a(0));
    for (long k = 0; k <= n; ++k) {
        F t = FieldOps<F>::div(
            (one - in.a(k) * in.b(k)) * (d * in.b(k) - in.a(k)), head_den);
        t = t * detail::prod_range<F>(0, k - 1, [&](long j) {
            return (in.b(n) - in.b(j)) * (one - d * in.b(n) * in.b(j));
        });
        t = FieldOps<F>::div(t, detail::prod_range<F>(1, k, [&](long j) {
                                 return (one - in.b(n) * in.a(j)) * (d * in.b(n) - in.a(j));
                             }));
        acc = acc + t * chen_G(in, k);
    }
    return acc;
}

/// Right side of (6.4); the excluded-index product runs over j = 0..n, j != k.
template <class F>
F chen_inverse_rhs(const SequenceInput<F>& in, long n) {
    const F one = FieldOps<F>::one();
    const F& d = in.d;
    F acc = FieldOps<F>::zero();
    for (long k = 0; k <= n; ++k) {
        F num = detail::prod_range<F>(0, n - 1, [&](long j) {
            return (one - in.b(k) * in.a(j)) * (d * in.b(k) - in.a(j));
        });
        F den = one;
        for (long j = 0; j <= n; ++j) {
            if (j == k) continue;
            den = den * (one - d * in.b(k) * in.b(j)) * (in.b(k) - in.b(j));
        }
        acc = acc + FieldOps<F>::div(num, den) * chen_F(in, k);
    }
    return acc;
}

/// Seeded random sequence input over small rationals; the caller retries on
/// pole errors with a bumped salt.
SequenceInput<Rational> random_sequence_input(std::uint64_t seed, long lo, long hi);

} // namespace qcontig
