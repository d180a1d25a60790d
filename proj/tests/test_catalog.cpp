#include <doctest.h>

#include "qcontig/catalog.hpp"

using namespace qcontig;

namespace {

const Catalog& cat() { return Catalog::get(); }

VerificationReport verify_exact(const std::string& id, long n, std::optional<long> m = {}) {
    Instance inst;
    inst.n = n;
    inst.m = m;
    return cat().verify(id, inst, Mode::Exact, {});
}

} // namespace

TEST_CASE("catalog counts: 16 symbolic + 4 numeric entries, ordered by id") {
    int series = 0, seq = 0, numeric = 0;
    std::string prev;
    for (const auto& e : cat().entries()) {
        CHECK(prev < e.id);
        prev = e.id;
        switch (e.kind) {
            case IdentityKind::Series: ++series; break;
            case IdentityKind::Sequence: ++seq; break;
            case IdentityKind::NumericLimit: ++numeric; break;
        }
    }
    CHECK(series + seq == 16);
    CHECK(numeric == 4);
    CHECK(cat().entries().size() == 20);
}

TEST_CASE("lookup") {
    CHECK(cat().find("bailey_4phi3") != nullptr);
    CHECK(cat().find("nonexistent") == nullptr);
}

TEST_CASE("instantiate: kang n=0 gives 1/((1-cx)(1-dx)) on both sides") {
    Workspace ws;
    Instance inst;
    inst.n = 0;
    auto [lhs, rhs] = cat().instantiate("kang_finite", inst, ws);
    CHECK(lhs == rhs);
    auto c = RationalFunction::var(ws.lookup("c"));
    auto d = RationalFunction::var(ws.lookup("d"));
    auto x = RationalFunction::var(ws.lookup("x"));
    auto one = RationalFunction::from_rational(Rational(1));
    CHECK(lhs == one / ((one - c * x) * (one - d * x)));
}

TEST_CASE("instantiate: sylvester n=1 gives 1 = 1") {
    Workspace ws;
    Instance inst;
    inst.n = 1;
    auto [lhs, rhs] = cat().instantiate("sylvester_finite", inst, ws);
    CHECK(lhs == rhs);
    CHECK(lhs.is_one());
}

TEST_CASE("instantiate: bailey n=3 vanishes on both sides") {
    Workspace ws;
    Instance inst;
    inst.n = 3;
    auto [lhs, rhs] = cat().instantiate("bailey_4phi3", inst, ws);
    CHECK(lhs.is_zero());
    CHECK(rhs.is_zero());
}

TEST_CASE("every catalog identity reduces to a single term at n = 0") {
    for (const auto& e : cat().entries()) {
        if (e.kind != IdentityKind::Series) continue;
        Workspace ws;
        Instance inst;
        inst.n = 0;
        if (e.has_m) inst.m = 0;
        auto [lhs, rhs] = cat().instantiate(e.id, inst, ws);
        CHECK_MESSAGE(lhs == rhs, e.id);
    }
}

TEST_CASE("exact verification spot checks at small n") {
    CHECK(verify_exact("bailey_4phi3", 4).passed());
    CHECK(verify_exact("lemma_2_2", 5).passed());
    CHECK(verify_exact("carlitz_5phi4", 3).passed());
    CHECK(verify_exact("sears_32_54", 3).passed());
    CHECK(verify_exact("sears_4phi3_a", 2).passed());
    CHECK(verify_exact("sears_4phi3_b", 2).passed());
    CHECK(verify_exact("chen_bibasic", 3).passed());
    CHECK(verify_exact("jackson_8phi7", 3).passed());
    CHECK(verify_exact("gasper_10phi9", 1).passed());
    CHECK(verify_exact("chu_symmetric", 1).passed());
    CHECK(verify_exact("sylvester_finite", 6).passed());
    CHECK(verify_exact("sylvester_shifted", 2, 2).passed());
    CHECK(verify_exact("kang_finite", 4).passed());
}

TEST_CASE("probabilistic verification is deterministic per seed") {
    Instance inst;
    inst.n = 3;
    ProbabilisticOptions opts;
    opts.trials = 20;
    opts.seed = 42;
    auto r1 = cat().verify("gasper_10phi9", inst, Mode::Probabilistic, opts);
    auto r2 = cat().verify("gasper_10phi9", inst, Mode::Probabilistic, opts);
    CHECK(r1.passed());
    CHECK(r2.passed());
    CHECK(r1.instance.seed == r2.instance.seed);
    CHECK(r1.error_bound == r2.error_bound);
    CHECK(r1.error_bound < 1e-6);
}

TEST_CASE("auto mode picks probabilistic only where permitted") {
    Instance inst;
    inst.n = 2;
    CHECK(cat().verify("bailey_4phi3", inst, Mode::Auto, {}).mode == "exact");
    ProbabilisticOptions opts;
    opts.trials = 5;
    CHECK(cat().verify("gasper_10phi9", inst, Mode::Auto, opts).mode == "probabilistic");
    CHECK(cat().verify("chu_symmetric", inst, Mode::Auto, opts).mode == "probabilistic");
}

TEST_CASE("numeric-only entries refuse symbolic verification") {
    Instance inst;
    auto rep = cat().verify("jacobi_triple", inst, Mode::Exact, {});
    CHECK(rep.status == Status::Error);
}

TEST_CASE("reflection symmetry of Lemma 2.2 summands: factor (-1)^n") {
    Workspace ws{"q", "b"};
    auto env = identities::Env<SymbolicCtx>{
        {"q", RationalFunction::var(ws.lookup("q"))},
        {"b", RationalFunction::var(ws.lookup("b"))}};
    for (long n = 0; n <= 6; ++n) {
        auto spec = identities::Lemma22<SymbolicCtx>::lhs_spec(env, n);
        for (long k = 0; k <= n; ++k) {
            auto tk = term(spec, n, k);
            auto tnk = term(spec, n, n - k);
            auto sign = RationalFunction::from_rational(Rational(n % 2 == 0 ? 1 : -1));
            CHECK(tnk == sign * tk);
        }
    }
}

TEST_CASE("reflection zero sums (2.4) and (2.5)") {
    CHECK(check_reflection_zero("2.4", 0).passed());
    CHECK(check_reflection_zero("2.4", 4).passed());
    CHECK(check_reflection_zero("2.5", 2).passed());
    CHECK(check_reflection_zero("2.5", 6).passed());
    CHECK_THROWS_AS(check_reflection_zero("2.4", 3), error);
}

TEST_CASE("power relation (8.4) holds for 0 <= m, k <= 4") {
    for (long m = 0; m <= 4; ++m)
        for (long n = 0; n <= 4; ++n) CHECK(verify_power_relation(n, m).passed());
}

TEST_CASE("shifted Sylvester follows termwise from (8.1) under x -> x q^{-2m}") {
    Workspace ws{"q", "x"};
    auto q = RationalFunction::var(ws.lookup("q"));
    auto x = RationalFunction::var(ws.lookup("x"));
    identities::Env<SymbolicCtx> env{{"q", q}, {"x", x}};
    for (long m = 0; m <= 3; ++m) {
        for (long n = 0; n <= 3; ++n) {
            identities::Env<SymbolicCtx> sub{{"q", q}, {"x", x * q.pow(-2 * m)}};
            auto spec81 = identities::SylvesterFinite<SymbolicCtx>::lhs_spec(sub, m + n);
            for (long k = -m; k <= n; ++k) {
                auto shifted = SymbolicCtx::finish(
                    identities::SylvesterShifted<SymbolicCtx>::term_at(env, m, n, k));
                auto original = term(spec81, m + n, m + k);
                CHECK(shifted == original);
            }
        }
    }
}

TEST_CASE("degree bounds are positive and modest") {
    Instance inst;
    inst.n = 4;
    CHECK(cat().degree_bound("bailey_4phi3", inst) > 0);
    CHECK(cat().degree_bound("gasper_10phi9", inst) < 100000);
}

TEST_CASE("exact/numeric consistency on random real parameters") {
    // float evaluation of the instantiated identity: both sides summed
    // directly in 50-digit floating arithmetic agree
    for (const auto* id : {"bailey_4phi3", "kang_finite", "sylvester_finite"}) {
        const IdentityInfo* info = cat().find(id);
        Instance inst;
        inst.n = 5;
        std::map<std::string, Float50> pt;
        double v = 0.31;
        for (const auto& s : info->symbols) {
            pt[s] = Float50(v);
            v = 0.83 * v + 0.07;
        }
        auto [lhs, rhs] = cat().instantiate_float(id, inst, pt);
        CHECK(abs(lhs - rhs) < Float50(1e-12));
    }
}
