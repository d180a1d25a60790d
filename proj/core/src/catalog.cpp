#include "qcontig/catalog.hpp"

#include <algorithm>
#include <chrono>

namespace qcontig {

namespace {

using identities::Env;

template <class Ctx>
Env<Ctx> symbolic_env(const IdentityInfo& info, Workspace& ws);

template <>
Env<SymbolicCtx> symbolic_env<SymbolicCtx>(const IdentityInfo& info, Workspace& ws) {
    Env<SymbolicCtx> env;
    for (const auto& name : info.symbols) env.emplace(name, RationalFunction::var(ws.symbol(name)));
    return env;
}

template <class Ctx, class F>
Env<Ctx> value_env(const IdentityInfo& info, const std::map<std::string, F>& point) {
    Env<Ctx> env;
    for (const auto& name : info.symbols) {
        auto it = point.find(name);
        if (it == point.end()) throw unassigned_symbol_error("missing assignment for " + name);
        env.emplace(name, it->second);
    }
    return env;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace

Catalog::Catalog() {
    using namespace identities;

    auto add = [this](IdentityInfo info) { infos_.push_back(std::move(info)); };

    auto add_series = [this, &add]<template <class> class G>(IdentityInfo info) {
        SeriesGens g;
        g.lhs_sym = [](const Env<SymbolicCtx>& e, long n, long m) {
            return G<SymbolicCtx>::lhs(e, n, m);
        };
        g.rhs_sym = [](const Env<SymbolicCtx>& e, long n, long m) {
            return G<SymbolicCtx>::rhs(e, n, m);
        };
        g.lhs_q = [](const Env<PlainCtx<Rational>>& e, long n, long m) {
            return G<PlainCtx<Rational>>::lhs(e, n, m);
        };
        g.rhs_q = [](const Env<PlainCtx<Rational>>& e, long n, long m) {
            return G<PlainCtx<Rational>>::rhs(e, n, m);
        };
        g.lhs_f = [](const Env<PlainCtx<Float50>>& e, long n, long m) {
            return G<PlainCtx<Float50>>::lhs(e, n, m);
        };
        g.rhs_f = [](const Env<PlainCtx<Float50>>& e, long n, long m) {
            return G<PlainCtx<Float50>>::rhs(e, n, m);
        };
        g.lhs_d = [](const Env<PlainCtx<DegBound>>& e, long n, long m) {
            return G<PlainCtx<DegBound>>::lhs(e, n, m);
        };
        g.rhs_d = [](const Env<PlainCtx<DegBound>>& e, long n, long m) {
            return G<PlainCtx<DegBound>>::rhs(e, n, m);
        };
        gens_.emplace(info.id, std::move(g));
        add(std::move(info));
    };

    add_series.operator()<Bailey4Phi3>(
        {"bailey_4phi3", "Bailey's 4phi3 summation", "(2.1)", IdentityKind::Series,
         {"q", "b", "c"}, false, false, true, 8});
    add_series.operator()<Carlitz5Phi4>(
        {"carlitz_5phi4", "Carlitz's 5phi4 summation", "(3.1)", IdentityKind::Series,
         {"q", "b", "c", "d"}, false, false, true, 6});
    add_series.operator()<ChenBibasic>(
        {"chen_bibasic", "Chen's bibasic summation", "(6.5)", IdentityKind::Series,
         {"p", "q", "a", "b", "d"}, false, false, true, 6});
    add({"chen_inverse", "Chen's inverse relation", "(6.4)", IdentityKind::Sequence,
         {}, false, false, false, 5});
    add({"chen_sum", "Chen's sequence summation", "(6.2)", IdentityKind::Sequence,
         {}, false, false, false, 5});
    add({"chu_general", "Chu's general bibasic summation", "(6.1)", IdentityKind::Sequence,
         {}, false, false, false, 5});
    add_series.operator()<ChuSymmetric>(
        {"chu_symmetric", "Chu's bibasic symmetric transformation", "(7.6)",
         IdentityKind::Series, {"p", "q", "a", "b", "c", "A", "B", "C"}, false, true, true, 4});
    add_series.operator()<Gasper10Phi9>(
        {"gasper_10phi9", "Gasper's split poised 10phi9 transformation", "(7.1)",
         IdentityKind::Series, {"q", "a", "b", "c", "A", "B", "C"}, false, true, true, 4});
    add_series.operator()<Jackson8Phi7>(
        {"jackson_8phi7", "Jackson 8phi7 special case", "section 6, unnumbered",
         IdentityKind::Series, {"q", "a", "b", "d"}, false, false, false, 5});
    add({"jacobi_triple", "Jacobi's triple product identity", "(8.6)",
         IdentityKind::NumericLimit, {}, false, false, false, 0});
    add_series.operator()<KangFinite>(
        {"kang_finite", "Finite form of Kang's identity", "(9.1)", IdentityKind::Series,
         {"q", "c", "d", "x"}, false, false, true, 10});
    add({"kang_inf", "Kang's identity", "section 9, closing display",
         IdentityKind::NumericLimit, {}, false, false, false, 0});
    add_series.operator()<Lemma22>(
        {"lemma_2_2", "c = q case of Bailey's summation", "(2.2)", IdentityKind::Series,
         {"q", "b"}, false, false, false, 8});
    add({"quintuple", "Quintuple product identity", "section 8, related display",
         IdentityKind::NumericLimit, {}, false, false, false, 0});
    add_series.operator()<Sears3254>(
        {"sears_32_54", "Sears' 3phi2 to 5phi4 transformation", "(4.1)", IdentityKind::Series,
         {"q", "x", "b", "c"}, false, false, true, 6});
    add_series.operator()<Sears4Phi3A>(
        {"sears_4phi3_a", "Sears' 4phi3 transformation (Whipple analogue)", "(5.1)",
         IdentityKind::Series, {"q", "a", "b", "c", "e", "f"}, false, false, true, 6});
    add_series.operator()<Sears4Phi3B>(
        {"sears_4phi3_b", "Sears' second 4phi3 transformation", "(5.2)", IdentityKind::Series,
         {"q", "a", "b", "c", "e", "f"}, false, false, true, 6});
    add_series.operator()<SylvesterFinite>(
        {"sylvester_finite", "Finite form of Sylvester's identity", "(8.1)",
         IdentityKind::Series, {"q", "x"}, false, false, true, 12});
    add({"sylvester_inf", "Sylvester's identity", "(8.3)", IdentityKind::NumericLimit,
         {}, false, false, false, 0});
    add_series.operator()<SylvesterShifted>(
        {"sylvester_shifted", "Shifted finite Sylvester form", "(8.5)", IdentityKind::Series,
         {"q", "x"}, true, false, false, 4});

    std::sort(infos_.begin(), infos_.end(),
              [](const IdentityInfo& a, const IdentityInfo& b) { return a.id < b.id; });
}

const Catalog& Catalog::get() {
    static Catalog c;
    return c;
}

const IdentityInfo* Catalog::find(const std::string& id) const {
    for (const auto& e : infos_)
        if (e.id == id) return &e;
    return nullptr;
}

const Catalog::SeriesGens& Catalog::gens(const std::string& id) const {
    auto it = gens_.find(id);
    if (it == gens_.end()) throw error("not a series identity: " + id);
    return it->second;
}

std::pair<RationalFunction, RationalFunction>
Catalog::instantiate(const std::string& id, const Instance& inst, Workspace& ws) const {
    const IdentityInfo* info = find(id);
    if (!info) throw error("unknown identity: " + id);
    if (info->kind != IdentityKind::Series)
        throw error("identity has no symbolic instantiation: " + id);
    auto env = symbolic_env<SymbolicCtx>(*info, ws);
    const auto& g = gens(id);
    long m = inst.m.value_or(0);
    return {g.lhs_sym(env, inst.n, m), g.rhs_sym(env, inst.n, m)};
}

std::pair<Rational, Rational>
Catalog::instantiate_rational(const std::string& id, const Instance& inst,
                              const std::map<std::string, Rational>& point) const {
    const IdentityInfo* info = find(id);
    if (!info) throw error("unknown identity: " + id);
    auto env = value_env<PlainCtx<Rational>>(*info, point);
    const auto& g = gens(id);
    long m = inst.m.value_or(0);
    return {g.lhs_q(env, inst.n, m), g.rhs_q(env, inst.n, m)};
}

std::pair<Float50, Float50>
Catalog::instantiate_float(const std::string& id, const Instance& inst,
                           const std::map<std::string, Float50>& point) const {
    const IdentityInfo* info = find(id);
    if (!info) throw error("unknown identity: " + id);
    auto env = value_env<PlainCtx<Float50>>(*info, point);
    const auto& g = gens(id);
    long m = inst.m.value_or(0);
    return {g.lhs_f(env, inst.n, m), g.rhs_f(env, inst.n, m)};
}

RationalFunction Catalog::lhs_symbolic(const std::string& id,
                                       const identities::Env<SymbolicCtx>& env, long n,
                                       long m) const {
    return gens(id).lhs_sym(env, n, m);
}
RationalFunction Catalog::rhs_symbolic(const std::string& id,
                                       const identities::Env<SymbolicCtx>& env, long n,
                                       long m) const {
    return gens(id).rhs_sym(env, n, m);
}
Rational Catalog::lhs_rational(const std::string& id,
                               const identities::Env<PlainCtx<Rational>>& env, long n,
                               long m) const {
    return gens(id).lhs_q(env, n, m);
}
Rational Catalog::rhs_rational(const std::string& id,
                               const identities::Env<PlainCtx<Rational>>& env, long n,
                               long m) const {
    return gens(id).rhs_q(env, n, m);
}

long Catalog::degree_bound(const std::string& id, const Instance& inst) const {
    const IdentityInfo* info = find(id);
    if (!info) throw error("unknown identity: " + id);
    Env<PlainCtx<DegBound>> env;
    for (const auto& name : info->symbols) env.emplace(name, DegBound{1});
    const auto& g = gens(id);
    long m = inst.m.value_or(0);
    return g.lhs_d(env, inst.n, m).d + g.rhs_d(env, inst.n, m).d;
}

VerificationReport Catalog::verify(const std::string& id, Instance inst, Mode mode,
                                   const ProbabilisticOptions& popts) const {
    VerificationReport rep;
    rep.identity = id;
    rep.instance = inst;
    Timer timer;

    const IdentityInfo* info = find(id);
    if (!info) {
        rep.detail = "unknown identity";
        rep.elapsed_ms = timer.ms();
        return rep;
    }
    if (info->kind == IdentityKind::NumericLimit) {
        rep.detail = "numeric-only identity; use the limits command";
        rep.elapsed_ms = timer.ms();
        return rep;
    }

    if (info->kind == IdentityKind::Sequence) {
        // exact rational arithmetic over seeded random inputs
        rep.mode = "exact";
        rep.instance.kind = Instance::Kind::Seeded;
        const long m = inst.m.value_or(0);
        rep.instance.seed = fnv1a(popts.seed, id + "#input", inst.n, m);
        try {
            for (int i = 0; i < 10; ++i) {
                std::uint64_t s = fnv1a(popts.seed, id + "#input", inst.n, m) + i;
                VerificationReport one;
                for (int salt = 0;; ++salt) {
                    auto input = random_sequence_input(s + 7919u * salt, -m, inst.n);
                    try {
                        one = verify_sequence_identity(id, m, inst.n, input);
                        break;
                    } catch (const pole_error&) {
                        if (salt > 50) throw;
                    } catch (const zero_divisor_error&) {
                        if (salt > 50) throw;
                    }
                }
                if (!one.passed()) {
                    rep.status = Status::Fail;
                    rep.witness = one.witness;
                    rep.detail = one.detail;
                    rep.elapsed_ms = timer.ms();
                    return rep;
                }
            }
            rep.status = Status::Pass;
        } catch (const error& e) {
            rep.status = Status::Error;
            rep.detail = e.what();
        }
        rep.elapsed_ms = timer.ms();
        return rep;
    }

    const bool probabilistic =
        mode == Mode::Probabilistic || (mode == Mode::Auto && info->probabilistic_permitted);
    try {
        if (!probabilistic) {
            rep.mode = "exact";
            Workspace ws;
            auto [lhs, rhs] = instantiate(id, inst, ws);
            rep.status = (lhs == rhs) ? Status::Pass : Status::Fail;
            if (rep.status == Status::Fail)
                rep.detail = "canonical forms differ";
        } else {
            rep.mode = "probabilistic";
            rep.instance.kind = Instance::Kind::Seeded;
            std::uint64_t task_seed = fnv1a(popts.seed, id, inst.n, inst.m.value_or(0));
            rep.instance.seed = task_seed;
            SplitMix64 rng(task_seed);
            const long dbound = degree_bound(id, inst);
            int budget = popts.resample_budget;
            for (int t = 0; t < popts.trials; ++t) {
                while (true) {
                    if (budget-- <= 0)
                        throw resample_budget_error("resample budget exhausted avoiding poles");
                    std::map<std::string, Rational> point;
                    for (const auto& s : info->symbols)
                        point[s] = Rational(rng.next_in(popts.pool_size));
                    try {
                        auto [lv, rv] = instantiate_rational(id, inst, point);
                        if (lv != rv) {
                            rep.status = Status::Fail;
                            std::map<std::string, std::string> w;
                            for (const auto& [k, v] : point) w[k] = v.str();
                            w["lhs"] = lv.str();
                            w["rhs"] = rv.str();
                            rep.witness = std::move(w);
                            rep.elapsed_ms = timer.ms();
                            return rep;
                        }
                        break;
                    } catch (const pole_error&) {
                        continue;
                    } catch (const zero_divisor_error&) {
                        continue;
                    }
                }
            }
            rep.status = Status::Pass;
            double ratio = static_cast<double>(dbound) / static_cast<double>(popts.pool_size);
            rep.error_bound = 1.0;
            for (int t = 0; t < popts.trials; ++t) rep.error_bound *= ratio;
        }
    } catch (const error& e) {
        rep.status = Status::Error;
        rep.detail = e.what();
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerificationReport Catalog::verify_sequence_identity(const std::string& id, long m, long n,
                                                     const SequenceInput<Rational>& input) const {
    VerificationReport rep;
    rep.identity = id;
    rep.instance.n = n;
    if (m != 0 || id == "chu_general") rep.instance.m = m;
    rep.mode = "exact";
    Timer timer;
    try {
        if (id == "chu_general") {
            Rational lhs = chu_general_lhs(input, m, n);
            Rational rhs = chu_general_rhs(input, m, n);
            rep.status = lhs == rhs ? Status::Pass : Status::Fail;
            if (rep.status == Status::Fail)
                rep.witness = {{{"lhs", lhs.str()}, {"rhs", rhs.str()}}};
        } else if (id == "chen_sum") {
            // (6.2) with the product reading, checked against the direct
            // definition of F for every prefix
            rep.status = Status::Pass;
            for (long j = 0; j <= n; ++j) {
                Rational got = chen_sum_rhs(input, j);
                Rational want = chen_F(input, j);
                if (got != want) {
                    rep.status = Status::Fail;
                    rep.witness = {{{"n", std::to_string(j)},
                                    {"lhs", want.str()},
                                    {"rhs", got.str()}}};
                    rep.detail = "product reading of (6.2) failed against direct evaluation";
                    break;
                }
            }
        } else if (id == "chen_inverse") {
            rep.status = Status::Pass;
            for (long j = 0; j <= n; ++j) {
                Rational got = chen_inverse_rhs(input, j);
                Rational want = chen_G(input, j);
                if (got != want) {
                    rep.status = Status::Fail;
                    rep.witness = {{{"n", std::to_string(j)},
                                    {"lhs", want.str()},
                                    {"rhs", got.str()}}};
                    break;
                }
            }
        } else {
            throw error("not a sequence identity: " + id);
        }
    } catch (const error& e) {
        rep.status = Status::Error;
        rep.detail = e.what();
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerificationReport check_reflection_zero(const std::string& which, long n) {
    VerificationReport rep;
    rep.identity = which == "2.4" ? "reflection_2_4" : "reflection_2_5";
    rep.instance.n = n;
    rep.mode = "exact";
    Timer timer;
    if (n < 0 || n % 2 != 0) throw error("reflection zero sums require even n >= 0");
    Workspace ws{"q", "b"};
    auto q = RationalFunction::var(ws.lookup("q"));
    auto b = RationalFunction::var(ws.lookup("b"));
    const auto minus_one = RationalFunction::from_rational(Rational(-1));

    std::vector<FactoredRF> terms;
    if (which == "2.4") {
        for (long k = 0; k <= n; ++k) {
            // (-1)^k [(b;q)_k (b;q)_{n+1-k} - (b;q)_{k+1}(b;q)_{n-k}] /
            //        ((-b;q)_{n-k+1} (-bq;q)_k)
            auto shared = SymbolicCtx::rpoch(minus_one * b, q, n - k + 1);
            shared = SymbolicCtx::mul(std::move(shared),
                                      SymbolicCtx::rpoch(minus_one * b * q, q, k));
            shared = SymbolicCtx::mul(std::move(shared),
                                      SymbolicCtx::pow(minus_one, k));
            auto t1 = SymbolicCtx::mul(SymbolicCtx::poch(b, q, k), SymbolicCtx::poch(b, q, n + 1 - k));
            auto t2 = SymbolicCtx::mul(SymbolicCtx::poch(b, q, k + 1), SymbolicCtx::poch(b, q, n - k));
            terms.push_back(SymbolicCtx::mul(std::move(t1), shared));
            auto neg = SymbolicCtx::mul(std::move(t2), std::move(shared));
            neg.mul_rational(Rational(-1));
            terms.push_back(std::move(neg));
        }
    } else if (which == "2.5") {
        for (long k = 0; k <= n - 1; ++k) {
            auto t = SymbolicCtx::pow(minus_one, k);
            t = SymbolicCtx::mul(std::move(t), SymbolicCtx::poch(b, q, k + 1));
            t = SymbolicCtx::mul(std::move(t), SymbolicCtx::poch(b, q, n - k));
            t = SymbolicCtx::mul(std::move(t), SymbolicCtx::rpoch(minus_one * b, q, n - k));
            t = SymbolicCtx::mul(std::move(t), SymbolicCtx::rpoch(minus_one * b, q, k + 1));
            terms.push_back(std::move(t));
        }
    } else {
        throw error("unknown reflection display: " + which);
    }
    RationalFunction sum = sum_factored(terms);
    rep.status = sum.is_zero() ? Status::Pass : Status::Fail;
    if (rep.status == Status::Fail) rep.detail = "literal sum is nonzero: " + sum.to_string(ws);
    rep.elapsed_ms = timer.ms();
    return rep;
}

bool power_relation_holds(long m, long k, long n) {
    Workspace ws{"q", "x"};
    auto q = RationalFunction::var(ws.lookup("q"));
    auto x = RationalFunction::var(ws.lookup("x"));
    const auto one = RationalFunction::from_rational(Rational(1));

    auto lhs = SymbolicCtx::pow(RationalFunction::from_rational(Rational(-1)) * x * q.pow(-2 * m),
                                m + k);
    lhs = SymbolicCtx::mul(std::move(lhs),
                           SymbolicCtx::pow(q, (3 * (m + k) * (m + k) + (m + k)) / 2));
    lhs = SymbolicCtx::mul(std::move(lhs),
                           SymbolicCtx::rpoch(x * q.pow(k - m + 1), q, m + n + 1));

    auto rhs = SymbolicCtx::pow(x, 2 * k);
    rhs = SymbolicCtx::mul(std::move(rhs), SymbolicCtx::pow(q, 2 * k * k + k));
    rhs = SymbolicCtx::mul(std::move(rhs), SymbolicCtx::rpoch(one / x, q, m - k));
    rhs = SymbolicCtx::mul(std::move(rhs), SymbolicCtx::rpoch(x * q, q, n + k + 1));

    return SymbolicCtx::finish(lhs) == SymbolicCtx::finish(rhs);
}

VerificationReport verify_power_relation(long n, long m) {
    VerificationReport rep;
    rep.identity = "relation_8_4";
    rep.instance.n = n;
    rep.instance.m = m;
    rep.mode = "exact";
    Timer timer;
    rep.status = Status::Pass;
    for (long k = 0; k <= 4; ++k) {
        if (!power_relation_holds(m, k, n)) {
            rep.status = Status::Fail;
            rep.detail = "display fails at k=" + std::to_string(k);
            break;
        }
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

} // namespace qcontig
