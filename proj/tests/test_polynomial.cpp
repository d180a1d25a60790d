#include <doctest.h>

#include "qcontig/polynomial.hpp"
#include "qcontig/rng.hpp"

using namespace qcontig;

namespace {

Workspace& ws3() {
    static Workspace ws{"x", "y", "z"};
    return ws;
}

Polynomial X() { return Polynomial::variable(ws3().lookup("x")); }
Polynomial Y() { return Polynomial::variable(ws3().lookup("y")); }
Polynomial Z() { return Polynomial::variable(ws3().lookup("z")); }
Polynomial C(long v) { return Polynomial::constant(Rational(v)); }

Polynomial random_poly(SplitMix64& rng, int terms, int maxdeg) {
    PolyBuilder b(3);
    for (int t = 0; t < terms; ++t) {
        std::vector<Polynomial::Exp> e(3);
        for (auto& x : e) x = static_cast<Polynomial::Exp>(rng.next() % (maxdeg + 1));
        long c = static_cast<long>(rng.next() % 11) - 5;
        if (c != 0) b.add(e, Rational(c));
    }
    return b.take();
}

} // namespace

TEST_CASE("zero polynomial is the empty map") {
    Polynomial p;
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK((X() - X()).is_zero());
}

TEST_CASE("terms are combined and kept in descending lex order") {
    Polynomial p = X() * Y() + C(2) * X() + X() * Y();
    CHECK(p.term_count() == 2);
    // leading term is x*y (lex: x first, then y)
    CHECK(p.coeff(0) == 2); // 2xy
    CHECK(p.coeff(1) == 2); // 2x
    CHECK(p.degree(0) == 1);
    CHECK(p.degree(1) == 1);
    CHECK(p.total_degree() == 2);
}

TEST_CASE("multiplication distributes and matches shifted copies") {
    Polynomial a = X() + Y() + C(1);
    Polynomial b = X() - Y();
    Polynomial c = Z() + C(3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("exact division round-trips products") {
    Polynomial a = X() * X() * Y() + X() * Z() + C(7);
    Polynomial b = Y() * Z() - X() + C(2);
    Polynomial p = a * b;
    CHECK(p.divexact(b) == a);
    CHECK(p.divexact(a) == b);
    CHECK_FALSE((p + C(1)).try_divide(b).has_value());
}

TEST_CASE("content and primitive part") {
    Polynomial p = C(4) * X() + C(6) * Y();
    CHECK(p.content() == 2);
    Polynomial pp = p.primitive_part();
    CHECK(pp.content() == 1);
    CHECK(pp.leading_coeff() > 0);
    // negative leading coefficient flips the sign of the content
    Polynomial n = C(-4) * X() + C(6) * Y();
    CHECK(n.content() == -2);
    CHECK(n.primitive_part().leading_coeff() > 0);
    Polynomial r = X().scaled(Rational(2) / Rational(3));
    CHECK(r.content() == Rational(2) / Rational(3));
}

TEST_CASE("gcd of structured products") {
    Polynomial g = X() * Y() - C(1);
    Polynomial a = g * (X() + C(1)) * (X() + C(1));
    Polynomial b = g * (Y() + C(2));
    CHECK(Polynomial::gcd(a, b) == g.primitive_part());

    // coprime inputs certified by the probe
    CHECK(Polynomial::gcd(X() + C(1), Y() + C(2)).is_one());
    CHECK(Polynomial::gcd(X() * X() + C(1), X() + C(3)).is_one());
}

TEST_CASE("gcd handles monomial content and contents in other variables") {
    Polynomial a = X() * X() * Y() * (Z() + C(1));
    Polynomial b = X() * Y() * Y() * (Z() + C(1));
    Polynomial g = Polynomial::gcd(a, b);
    CHECK(g == (X() * Y() * (Z() + C(1))).primitive_part());
}

TEST_CASE("gcd: randomized products agree with construction") {
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 25; ++iter) {
        Polynomial g = random_poly(rng, 3, 2);
        Polynomial a = random_poly(rng, 3, 2);
        Polynomial b = random_poly(rng, 3, 2);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        Polynomial ga = g * a, gb = g * b;
        Polynomial d = Polynomial::gcd(ga, gb);
        // gcd must divide both and be divisible by g
        CHECK(ga.try_divide(d).has_value());
        CHECK(gb.try_divide(d).has_value());
        CHECK(d.try_divide(Polynomial::gcd(d, g.primitive_part())).has_value());
        Polynomial expected_divisor = g.primitive_part();
        CHECK(d.try_divide(Polynomial::gcd(expected_divisor, d)).has_value());
        CHECK((ga.divexact(d) * gb).try_divide(gb.divexact(d)).has_value());
    }
}

TEST_CASE("eval is a ring homomorphism") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 10; ++iter) {
        Polynomial a = random_poly(rng, 4, 3);
        Polynomial b = random_poly(rng, 4, 3);
        std::vector<Rational> pt = {Rational(2) / 3, Rational(-5) / 7, Rational(11) / 2};
        Rational zero(0), one(1);
        std::span<const Rational> sp(pt);
        CHECK((a + b).eval(sp, zero, one) == a.eval(sp, zero, one) + b.eval(sp, zero, one));
        CHECK((a * b).eval(sp, zero, one) == a.eval(sp, zero, one) * b.eval(sp, zero, one));
    }
}

TEST_CASE("structural equality is a total order") {
    Polynomial a = X() + C(1);
    Polynomial b = X() + C(2);
    CHECK(a.compare(a) == std::strong_ordering::equal);
    CHECK(a.compare(b) != std::strong_ordering::equal);
    CHECK((a.compare(b) == std::strong_ordering::less) !=
          (b.compare(a) == std::strong_ordering::less));
}
