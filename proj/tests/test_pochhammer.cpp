#include <doctest.h>

#include "qcontig/qseries.hpp"

using namespace qcontig;

namespace {

Workspace& wsp() {
    static Workspace ws{"q", "a", "x", "t"};
    return ws;
}
RationalFunction Q() { return RationalFunction::var(wsp().lookup("q")); }
RationalFunction A() { return RationalFunction::var(wsp().lookup("a")); }
RationalFunction X() { return RationalFunction::var(wsp().lookup("x")); }
RationalFunction one() { return RationalFunction::from_rational(Rational(1)); }

} // namespace

TEST_CASE("poch base cases") {
    auto q = Q(), a = A();
    CHECK(poch(a, q, 0L) == one());
    CHECK(poch(q, q, 2L) == (one() - q) * (one() - q * q));
    // (a;q)_{-1} = 1/(1 - a/q)
    CHECK(poch(a, q, -1L) == one() / (one() - a / q));
}

TEST_CASE("negative index inversion law") {
    auto q = Q(), a = A();
    for (long n = 1; n <= 5; ++n) {
        auto lhs = poch(a, q, -n) * poch(a * q.pow(-n), q, n);
        CHECK(lhs == one());
    }
    // derived check from the spec: poch(a,q,-1) * poch(a q^{-1}, q, 1) = 1
    CHECK(poch(a, q, -1L) * poch(a * q.pow(-1), q, 1L) == one());
}

TEST_CASE("shift law over -5 <= n <= 10") {
    auto q = Q(), a = A();
    for (long n = -5; n <= 10; ++n) {
        auto lhs = poch(a, q, n + 1);
        auto rhs = poch(a, q, n) * (one() - a * q.pow(n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("poch_multi") {
    auto q = Q(), a = A(), x = X();
    CHECK(poch_multi<RationalFunction>({a, x}, q, 1) == (one() - a) * (one() - x));
    CHECK(poch_multi<RationalFunction>({}, q, 5) == one());
    // (x;q)_k (-x;q)_k = (x^2;q^2)_k at k = 2
    auto minus_x = -x;
    CHECK(poch_multi<RationalFunction>({x, minus_x}, q, 2) == poch(x * x, q * q, 2L));
}

TEST_CASE("square-root elimination: (a;q^2)_k (aq;q^2)_k = (a;q)_{2k}") {
    auto q = Q(), a = A();
    for (long k = 0; k <= 6; ++k) {
        auto lhs = poch(a, q * q, k) * poch(a * q, q * q, k);
        CHECK(lhs == poch(a, q, 2 * k));
    }
}

TEST_CASE("qbinom values and out-of-range zeros") {
    auto q = Q();
    CHECK(qbinom(2, 1, q) == one() + q);
    CHECK(qbinom(5, 0, q) == one());
    CHECK(qbinom(3, 5, q).is_zero());
    CHECK(qbinom(3, -1, q).is_zero());
}

TEST_CASE("qbinom symmetry") {
    auto q = Q();
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) CHECK(qbinom(n, k, q) == qbinom(n, n - k, q));
}

TEST_CASE("q-binomial recurrence (the section 8 relation), symbolic x") {
    auto q = Q(), x = X();
    for (long n = 1; n <= 8; ++n) {
        for (long k = 0; k <= n; ++k) {
            auto lhs = qbinom(n, k, q) * (one() - x * q.pow(n + 1));
            auto rhs = qbinom(n - 1, k, q) * (one() - x * q.pow(n + k + 1)) +
                       qbinom(n - 1, k - 1, q) * (one() - x * q.pow(k + 1)) * q.pow(n - k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("vwp weight") {
    auto q = Q(), a = A();
    CHECK(vwp_weight(a, q, 0L) == one());
    CHECK(vwp_weight(a, q, 1L) == (one() - a * q * q) / (one() - a));
    CHECK_THROWS_AS(vwp_weight(one(), q, 1L), zero_divisor_error);
}

TEST_CASE("paired-column product equals the vwp weight at k = 2") {
    // (q s, -q s; q)_k / (s, -s; q)_k = (1 - s^2 q^{2k})/(1 - s^2)
    auto q = Q(), s = A();
    long k = 2;
    auto lhs = poch(q * s, q, k) * poch(-(q * s), q, k) /
               (poch(s, q, k) * poch(-s, q, k));
    CHECK(lhs == vwp_weight(s * s, q, k));
}
