#include "qcontig/prover.hpp"

#include <nlohmann/json.hpp>

#include "qcontig/catalog.hpp"
#include "qcontig/rng.hpp"

namespace qcontig {

namespace {

using identities::Env;

struct Plan {
    std::string id;
    std::string axis; // "n" or "M"
    int v = 1;
    std::string base_desc;
    std::string conclusion_fmt; // %N placeholder
    // pin: builds the specialization substitution for the base case, given
    // the instance order n (empty for plain n-axis base at n = 0)
    std::function<void(Workspace&, Env<SymbolicCtx>&, long)> pin_sym;
    std::function<void(SplitMix64&, Env<PlainCtx<Rational>>&, long)> pin_q;
    std::vector<std::string> rec_ids;  // term recurrences checked per step
    std::string cert_id;               // certificate checked per step ("" if none)
    bool probabilistic = false;        // sampled checks ((7.1)/(7.6))
    bool base_telescoping = false;     // extra section-7 base decomposition
};

CheckRecord record_of(const VerificationReport& r, std::string desc) {
    CheckRecord c;
    c.desc = std::move(desc);
    c.pass = r.passed();
    c.detail = r.detail;
    return c;
}

const std::vector<Plan>& plans() {
    static const std::vector<Plan> v = [] {
        std::vector<Plan> p;

        Plan sylv;
        sylv.id = "sylvester_finite";
        sylv.axis = "n";
        sylv.v = 1;
        sylv.base_desc = "n = 0 instance (both sides 1)";
        sylv.rec_ids = {"rec_8_sylvester", "closed_8_sylvester"};
        sylv.conclusion_fmt = "identity holds for 0 <= n <= %N, symbolic x, q";
        p.push_back(sylv);

        Plan kang = sylv;
        kang.id = "kang_finite";
        kang.rec_ids = {"rec_9_kang", "closed_9_kang"};
        kang.conclusion_fmt = "identity holds for 0 <= n <= %N, symbolic c, d, x, q";
        p.push_back(kang);

        Plan chen = sylv;
        chen.id = "chen_bibasic";
        chen.rec_ids = {"rec_6_6", "closed_6_6"};
        chen.conclusion_fmt = "identity holds for 0 <= n <= %N, symbolic a, b, d, p, q";
        p.push_back(chen);

        Plan bailey;
        bailey.id = "bailey_4phi3";
        bailey.axis = "M";
        bailey.v = 2;
        bailey.base_desc = "c = q specialization ((2.2)) for each n <= N";
        bailey.pin_sym = [](Workspace& ws, Env<SymbolicCtx>& env, long) {
            env["c"] = RationalFunction::var(ws.symbol("q"));
        };
        bailey.rec_ids = {"rec_2_6", "closed_2_6"};
        bailey.conclusion_fmt =
            "for every M >= 1 the identity holds at c = q^M for n <= %N - 2(M-1)";
        p.push_back(bailey);

        Plan carlitz;
        carlitz.id = "carlitz_5phi4";
        carlitz.axis = "M";
        carlitz.v = 2;
        carlitz.base_desc = "d = -q^{-floor(n/2)} specialization for each n <= N";
        carlitz.pin_sym = [](Workspace& ws, Env<SymbolicCtx>& env, long n) {
            auto q = RationalFunction::var(ws.symbol("q"));
            env["d"] = RationalFunction::from_rational(Rational(-1)) *
                       q.pow(-identities::half_floor(n));
        };
        carlitz.rec_ids = {"rec_3_2", "closed_3_2"};
        carlitz.conclusion_fmt =
            "for every M >= floor(n/2) the identity holds at d = -q^{-M} within n <= %N";
        p.push_back(carlitz);

        Plan sears32;
        sears32.id = "sears_32_54";
        sears32.axis = "M";
        sears32.v = 2;
        sears32.base_desc =
            "c = q^{1-n}/b specialization (terminating q-binomial theorem) for each n <= N";
        sears32.pin_sym = [](Workspace& ws, Env<SymbolicCtx>& env, long n) {
            auto q = RationalFunction::var(ws.symbol("q"));
            auto b = RationalFunction::var(ws.symbol("b"));
            env["c"] = q.pow(1 - n) / b;
        };
        sears32.rec_ids = {"rec_4_beta"};
        sears32.cert_id = "cert_4_zero";
        sears32.conclusion_fmt =
            "both sides agree under every c -> cq slide from the base within n <= %N";
        p.push_back(sears32);

        Plan searsA;
        searsA.id = "sears_4phi3_a";
        searsA.axis = "M";
        searsA.v = 1;
        searsA.base_desc = "a = 1 specialization (both sides collapse to 1) for each n <= N";
        searsA.pin_sym = [](Workspace&, Env<SymbolicCtx>& env, long) {
            env["a"] = RationalFunction::from_rational(Rational(1));
        };
        searsA.rec_ids = {"rec_5_3"};
        searsA.cert_id = "cert_5_4";
        searsA.conclusion_fmt = "identity holds for all a = q^{-M}, M >= 0, within n <= %N";
        p.push_back(searsA);

        Plan searsB = searsA;
        searsB.id = "sears_4phi3_b";
        searsB.cert_id = "cert_5_5";
        p.push_back(searsB);

        Plan gasper;
        gasper.id = "gasper_10phi9";
        gasper.axis = "M";
        gasper.v = 1;
        gasper.base_desc = "c = 1 base case plus the displayed summand telescoping";
        gasper.pin_q = [](SplitMix64&, Env<PlainCtx<Rational>>& env, long) {
            env["c"] = Rational(1);
        };
        gasper.rec_ids = {"rec_7_2"};
        gasper.cert_id = "cert_7_3";
        gasper.probabilistic = true;
        gasper.base_telescoping = true;
        gasper.conclusion_fmt = "identity holds for all c = q^{-M}, M >= 0, within n <= %N";
        p.push_back(gasper);

        Plan chu = gasper;
        chu.id = "chu_symmetric";
        chu.pin_q = [](SplitMix64&, Env<PlainCtx<Rational>>& env, long) {
            env["c"] = Rational(1);
        };
        chu.rec_ids = {"rec_7_6_alpha"};
        chu.cert_id = "cert_7_6";
        chu.conclusion_fmt = "identity holds for all c = p^{-M}, M >= 0, within n <= %N";
        p.push_back(chu);

        return p;
    }();
    return v;
}

const Plan* find_plan(const std::string& id) {
    for (const auto& p : plans())
        if (p.id == id) return &p;
    return nullptr;
}

} // namespace

bool has_induction_plan(const std::string& id) { return find_plan(id) != nullptr; }

int proof_step_order(const std::string& id) {
    const Plan* p = find_plan(id);
    if (!p) throw error("identity has no induction plan: " + id);
    return p->v;
}

ProofLog assemble_proof(const std::string& id, long N, std::uint64_t seed) {
    const Plan* plan = find_plan(id);
    if (!plan) throw error("identity has no induction plan: " + id);
    const Catalog& cat = Catalog::get();
    const IdentityInfo* info = cat.find(id);

    ProofLog log;
    log.identity = id;
    log.axis = plan->axis;
    log.base_desc = plan->base_desc;

    // ---- base case --------------------------------------------------
    // n-axis plans verify the n = 0 instance; M-axis plans verify the
    // specialization identity for every n <= N (plus the trivial fully
    // symbolic instances below the recurrence order).
    auto base_instance = [&](long n) -> CheckRecord {
        CheckRecord c;
        c.desc = "base identity at n = " + std::to_string(n);
        try {
            if (!plan->probabilistic || !plan->pin_q) {
                Workspace ws;
                Env<SymbolicCtx> env;
                for (const auto& s : info->symbols)
                    env.emplace(s, RationalFunction::var(ws.symbol(s)));
                if (plan->pin_sym) {
                    plan->pin_sym(ws, env, n);
                    c.desc += " (specialized)";
                }
                c.pass = cat.lhs_symbolic(id, env, n, 0) == cat.rhs_symbolic(id, env, n, 0);
            } else {
                SplitMix64 rng(fnv1a(seed, id + "#base", n, 0));
                const std::uint64_t pool = (std::uint64_t(1) << 31) - 1;
                c.desc += " (specialized, sampled)";
                int done = 0, budget = 400;
                while (done < 20) {
                    if (budget-- <= 0) throw resample_budget_error("base sampling budget");
                    Env<PlainCtx<Rational>> env;
                    for (const auto& s : info->symbols)
                        env.emplace(s, Rational(rng.next_in(pool)));
                    plan->pin_q(rng, env, n);
                    try {
                        if (cat.lhs_rational(id, env, n, 0) != cat.rhs_rational(id, env, n, 0)) {
                            c.pass = false;
                            c.detail = "specialized instance failed at a sample point";
                            return c;
                        }
                        ++done;
                    } catch (const pole_error&) {
                    } catch (const zero_divisor_error&) {
                    }
                }
                c.pass = true;
            }
        } catch (const error& e) {
            c.pass = false;
            c.detail = e.what();
        }
        return c;
    };

    if (plan->axis == "n") {
        log.base_checks.push_back(base_instance(0));
    } else {
        // fully symbolic trivial instances below the recurrence order
        for (long n = 0; n < plan->v && n <= N; ++n) {
            CheckRecord c;
            c.desc = "trivial instance n = " + std::to_string(n) + " (symbolic)";
            try {
                Workspace ws;
                Env<SymbolicCtx> env;
                for (const auto& s : info->symbols)
                    env.emplace(s, RationalFunction::var(ws.symbol(s)));
                c.pass = cat.lhs_symbolic(id, env, n, 0) == cat.rhs_symbolic(id, env, n, 0);
            } catch (const error& e) {
                c.pass = false;
                c.detail = e.what();
            }
            log.base_checks.push_back(std::move(c));
        }
        for (long n = 0; n <= N; ++n) log.base_checks.push_back(base_instance(n));
        if (plan->base_telescoping) {
            for (long k = 0; k <= std::min<long>(N + 1, 5); ++k) {
                auto r = verify_split_poised_base_telescoping(k);
                log.base_checks.push_back(
                    record_of(r, "base summand telescoping at k = " + std::to_string(k)));
            }
        }
    }
    log.base_pass = true;
    for (const auto& c : log.base_checks)
        if (!c.pass) log.base_pass = false;
    if (!log.base_pass) {
        log.conclusion = "base case failed; nothing concluded";
        return log;
    }

    // ---- steps -------------------------------------------------------
    CheckOptions opts;
    opts.probabilistic = plan->probabilistic;
    opts.seed = seed;
    for (long n = plan->v; n <= N; ++n) {
        ProofLog::Step step;
        step.index = n;
        step.pass = true;
        for (const auto& rid : plan->rec_ids) {
            const RecurrenceSpec& spec = recurrence(rid);
            if (rid.rfind("closed_", 0) == 0) {
                auto r = verify_recurrence(spec, n, 0, opts);
                step.checks.push_back(record_of(r, rid + " at n = " + std::to_string(n)));
            } else {
                for (long k = 0; k <= n; ++k) {
                    auto r = verify_recurrence(spec, n, k, opts);
                    step.checks.push_back(record_of(r, rid + " at (n, k) = (" +
                                                           std::to_string(n) + ", " +
                                                           std::to_string(k) + ")"));
                    if (!step.checks.back().pass) break;
                }
            }
            if (!step.checks.back().pass) break;
        }
        bool recs_ok = true;
        for (const auto& c : step.checks)
            if (!c.pass) recs_ok = false;
        if (recs_ok && !plan->cert_id.empty()) {
            auto r = verify_certificate(certificate(plan->cert_id), n, opts);
            step.checks.push_back(
                record_of(r, plan->cert_id + " at n = " + std::to_string(n)));
        }
        step.pass = true;
        for (const auto& c : step.checks)
            if (!c.pass) step.pass = false;
        log.steps.push_back(std::move(step));
        if (!log.steps.back().pass) {
            log.conclusion = "step n = " + std::to_string(n) + " failed; proof aborted";
            return log;
        }
    }

    log.complete = true;
    std::string c = plan->conclusion_fmt;
    auto pos = c.find("%N");
    if (pos != std::string::npos) c.replace(pos, 2, std::to_string(N));
    log.conclusion = c;
    return log;
}

std::string to_json(const ProofLog& log) {
    nlohmann::ordered_json j;
    j["identity"] = log.identity;
    j["axis"] = log.axis;
    j["base"] = nlohmann::ordered_json::object();
    j["base"]["description"] = log.base_desc;
    j["base"]["pass"] = log.base_pass;
    auto checks_json = [](const std::vector<CheckRecord>& cs) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : cs) {
            nlohmann::ordered_json e;
            e["check"] = c.desc;
            e["pass"] = c.pass;
            if (!c.detail.empty()) e["detail"] = c.detail;
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["base"]["checks"] = checks_json(log.base_checks);
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : log.steps) {
        nlohmann::ordered_json e;
        e["index"] = s.index;
        e["pass"] = s.pass;
        e["checks"] = checks_json(s.checks);
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    j["complete"] = log.complete;
    j["conclusion"] = log.conclusion;
    return j.dump(2) + "\n";
}

} // namespace qcontig
