#include "cli_app.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qcontig/catalog.hpp"
#include "qcontig/numerics.hpp"
#include "qcontig/prover.hpp"

namespace qcontig::cli {

namespace {

int thread_count(int jobs_flag) {
    if (const char* env = std::getenv("QCONTIG_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    if (jobs_flag >= 1) return jobs_flag;
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min<unsigned>(hw ? hw : 1, 8));
}

/// Runs the tasks on a pool; results land in enumeration order so the
/// emitted stream is independent of scheduling.
std::vector<VerificationReport>
run_pool(const std::vector<std::function<VerificationReport()>>& tasks, int jobs) {
    std::vector<VerificationReport> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            results[i] = tasks[i]();
        }
    };
    if (jobs <= 1 || tasks.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return results;
}

int emit(const std::vector<VerificationReport>& reports, std::ostream& out,
         const std::string& format, bool timings) {
    bool any_bad = false;
    for (const auto& r : reports) {
        out << (format == "tsv" ? to_tsv_line(r, timings) : to_json_line(r, timings));
        if (r.status == Status::Fail || r.status == Status::Error) any_bad = true;
    }
    return any_bad ? 1 : 0;
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = nullptr;
    bool open(const std::string& path, std::ostream& fallback, std::ostream& err) {
        if (path.empty()) {
            stream = &fallback;
            return true;
        }
        file.open(path);
        if (!file) {
            err << "cannot open output file: " << path << "\n";
            return false;
        }
        stream = &file;
        return true;
    }
};

int cmd_list(bool long_form, const std::string& only, std::ostream& out, std::ostream& err) {
    const Catalog& cat = Catalog::get();
    if (!only.empty() && !cat.find(only)) {
        err << "unknown identity: " << only << "\n";
        return 2;
    }
    for (const auto& e : cat.entries()) {
        if (!only.empty() && e.id != only) continue;
        if (!long_form) {
            std::string kind = e.kind == IdentityKind::NumericLimit ? "numeric"
                               : e.kind == IdentityKind::Sequence   ? "sequence"
                                                                    : "series";
            out << e.id << "\t" << kind << "\t" << e.name;
            if (e.kind != IdentityKind::NumericLimit) {
                out << "\tn<=" << e.default_nmax;
                if (e.has_m) out << ", m<=" << e.default_nmax;
            }
            out << "\n";
        } else {
            out << "## " << e.id << "\n";
            out << "name:   " << e.name << "\n";
            out << "anchor: " << e.anchor << "\n";
            if (!e.symbols.empty()) {
                out << "symbols:";
                for (const auto& s : e.symbols) out << " " << s;
                out << "\n";
            }
            if (e.kind != IdentityKind::NumericLimit) {
                out << "indices: n = 0.." << e.default_nmax;
                if (e.has_m) out << ", m = 0.." << e.default_nmax;
                out << "\n";
            } else {
                out << "indices: numeric limit (see the limits command)\n";
            }
            out << "verification: "
                << (e.kind == IdentityKind::NumericLimit ? "numeric truncation"
                    : e.probabilistic_permitted
                        ? "probabilistic permitted (exact for small n)"
                        : "exact")
                << "\n";
            if (has_induction_plan(e.id)) out << "induction plan: yes\n";
            out << "\n";
        }
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qcontig: exact verification of terminating basic-hypergeometric identities"};
    app.require_subcommand(1);

    // ---- list -----------------------------------------------------------
    auto* list = app.add_subcommand("list", "Catalog listing");
    bool long_form = false;
    std::string list_id;
    list->add_flag("--long", long_form, "One section per identity with its paper anchor");
    list->add_option("--id", list_id, "Only this identity");

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Symbolic verification sweep");
    std::vector<std::string> ids;
    long n_max = 6;
    std::string mode_str = "auto";
    int trials = 20;
    std::uint64_t seed = 42;
    int jobs = 0;
    std::string out_path, format = "json-lines";
    bool timings = false;
    verify->add_option("--id", ids, "Identity ids (default: all symbolic entries)");
    verify->add_option("--n-max", n_max, "Max index n (capped per identity)");
    verify->add_option("--mode", mode_str, "exact | probabilistic | auto")
        ->check(CLI::IsMember({"exact", "probabilistic", "auto"}));
    verify->add_option("--trials", trials, "Probabilistic trials per instance");
    verify->add_option("--seed", seed, "Master seed");
    verify->add_option("--jobs", jobs, "Worker threads (QCONTIG_THREADS overrides)");
    verify->add_option("--out", out_path, "Write the report stream to this path");
    verify->add_option("--format", format, "json-lines | tsv")
        ->check(CLI::IsMember({"json-lines", "tsv"}));
    verify->add_flag("--timings", timings, "Emit real elapsed_ms (non-deterministic)");

    // ---- prove ----------------------------------------------------------
    auto* prove = app.add_subcommand("prove", "Assemble one induction proof");
    std::string prove_id;
    long prove_n = 4;
    std::uint64_t prove_seed = 42;
    std::string prove_out;
    prove->add_option("--id", prove_id, "Identity id")->required();
    prove->add_option("--n", prove_n, "Max index along the induction axis");
    prove->add_option("--seed", prove_seed, "Seed for sampled checks");
    prove->add_option("--out", prove_out, "Write the proof log to this path");

    // ---- limits ---------------------------------------------------------
    auto* limits = app.add_subcommand("limits", "Numeric validation of the |q|<1 limits");
    std::vector<std::string> limit_ids;
    double q_opt = -2.0, x_opt = -2.0, tol_opt = -1.0;
    long trunc_opt = 60;
    std::string limits_out, limits_format = "json-lines";
    bool limits_timings = false;
    limits->add_option("--id", limit_ids, "Limit ids (default: full grid)");
    limits->add_option("--q", q_opt, "Override q");
    limits->add_option("--x", x_opt, "Override x (or z for the quintuple product)");
    limits->add_option("--tolerance", tol_opt, "Override tolerance");
    limits->add_option("--n", trunc_opt, "Truncation order");
    limits->add_option("--out", limits_out, "Write the report stream to this path");
    limits->add_option("--format", limits_format, "json-lines | tsv")
        ->check(CLI::IsMember({"json-lines", "tsv"}));
    limits->add_flag("--timings", limits_timings, "Emit real elapsed_ms");

    std::vector<std::string> argv_copy = args;
    std::vector<const char*> argv;
    argv.push_back("qcontig");
    for (const auto& a : argv_copy) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    const Catalog& cat = Catalog::get();

    if (list->parsed()) return cmd_list(long_form, list_id, out, err);

    if (verify->parsed()) {
        Mode mode = mode_str == "exact"          ? Mode::Exact
                    : mode_str == "probabilistic" ? Mode::Probabilistic
                                                  : Mode::Auto;
        std::vector<const IdentityInfo*> selected;
        if (ids.empty()) {
            for (const auto& e : cat.entries())
                if (e.kind != IdentityKind::NumericLimit) selected.push_back(&e);
        } else {
            for (const auto& id : ids) {
                const IdentityInfo* e = cat.find(id);
                if (!e) {
                    err << "unknown identity: " << id << "\n";
                    return 2;
                }
                if (e->kind == IdentityKind::NumericLimit) {
                    err << id << " is a numeric-limit identity; use the limits command\n";
                    return 2;
                }
                selected.push_back(e);
            }
        }

        ProbabilisticOptions popts;
        popts.trials = trials;
        popts.seed = seed;

        std::vector<std::function<VerificationReport()>> tasks;
        for (const IdentityInfo* e : selected) {
            const long cap = std::min<long>(n_max, e->default_nmax);
            if (e->kind == IdentityKind::Sequence) {
                if (e->id == "chu_general") {
                    for (long m = 0; m <= cap; ++m)
                        for (long n = 0; m + n <= cap; ++n)
                            tasks.push_back([&cat, e, m, n, popts] {
                                Instance inst;
                                inst.n = n;
                                inst.m = m;
                                return cat.verify(e->id, inst, Mode::Exact, popts);
                            });
                } else {
                    for (long n = 0; n <= cap; ++n)
                        tasks.push_back([&cat, e, n, popts] {
                            Instance inst;
                            inst.n = n;
                            return cat.verify(e->id, inst, Mode::Exact, popts);
                        });
                }
            } else if (e->has_m) {
                for (long n = 0; n <= cap; ++n)
                    for (long m = 0; m <= cap; ++m)
                        tasks.push_back([&cat, e, n, m, mode, popts] {
                            Instance inst;
                            inst.n = n;
                            inst.m = m;
                            return cat.verify(e->id, inst, mode, popts);
                        });
            } else {
                for (long n = 0; n <= cap; ++n)
                    tasks.push_back([&cat, e, n, mode, popts] {
                        Instance inst;
                        inst.n = n;
                        return cat.verify(e->id, inst, mode, popts);
                    });
            }
        }

        auto reports = run_pool(tasks, thread_count(jobs));
        OutputTarget target;
        if (!target.open(out_path, out, err)) return 2;
        return emit(reports, *target.stream, format, timings);
    }

    if (prove->parsed()) {
        if (!cat.find(prove_id)) {
            err << "unknown identity: " << prove_id << "\n";
            return 2;
        }
        if (!has_induction_plan(prove_id)) {
            err << prove_id << " has no induction plan\n";
            return 2;
        }
        ProofLog log = assemble_proof(prove_id, prove_n, prove_seed);
        OutputTarget target;
        if (!target.open(prove_out, out, err)) return 2;
        *target.stream << to_json(log);
        return log.complete ? 0 : 1;
    }

    if (limits->parsed()) {
        struct GridEntry {
            std::string id;
            double q;
            std::map<std::string, double> params;
            double tol;
            long trunc;
            bool finite = false;
            long n = 0, m = 0;
        };
        std::vector<GridEntry> grid;
        auto want = [&limit_ids](const std::string& id) {
            if (limit_ids.empty()) return true;
            for (const auto& s : limit_ids)
                if (s == id) return true;
            return false;
        };
        const bool q_over = q_opt > -1.5, x_over = x_opt > -1.5;
        auto qs = [&](std::initializer_list<double> dflt) {
            return q_over ? std::vector<double>{q_opt} : std::vector<double>(dflt);
        };
        auto xs = [&](std::initializer_list<double> dflt) {
            return x_over ? std::vector<double>{x_opt} : std::vector<double>(dflt);
        };
        if (want("jacobi_triple"))
            for (double q : qs({0.2, 0.3, 0.5}))
                for (double x : xs({0.7, 1.3}))
                    grid.push_back({"jacobi_triple", q, {{"x", x}},
                                    tol_opt > 0 ? tol_opt : 1e-10, trunc_opt});
        if (want("sylvester_inf"))
            for (double q : qs({0.3, 0.5}))
                for (double x : xs({0.5, 0.9}))
                    grid.push_back({"sylvester_inf", q, {{"x", x}},
                                    tol_opt > 0 ? tol_opt : 1e-10, trunc_opt});
        if (want("kang_inf"))
            for (double q : qs({0.5}))
                grid.push_back({"kang_inf", q,
                                {{"c", 0.3}, {"d", 0.2}, {"x", x_over ? x_opt : 0.6}},
                                tol_opt > 0 ? tol_opt : 1e-10, trunc_opt});
        if (want("quintuple"))
            for (double q : qs({0.3}))
                grid.push_back({"quintuple", q, {{"z", x_over ? x_opt : 1.7}},
                                tol_opt > 0 ? tol_opt : 1e-8, trunc_opt});
        // finite-to-limit rows (skipped when ids were given explicitly,
        // unless named)
        if (want("sylvester_finite"))
            grid.push_back({"sylvester_finite", q_over ? q_opt : 0.5,
                            {{"x", x_over ? x_opt : 0.8}}, tol_opt > 0 ? tol_opt : 1e-12,
                            trunc_opt, true, 50, 0});
        if (want("sylvester_shifted"))
            grid.push_back({"sylvester_shifted", q_over ? q_opt : 0.4,
                            {{"x", x_over ? x_opt : 1.3}}, tol_opt > 0 ? tol_opt : 1e-10,
                            trunc_opt, true, 30, 30});
        if (want("kang_finite"))
            grid.push_back({"kang_finite", q_over ? q_opt : 0.5,
                            {{"c", 0.3}, {"d", 0.2}, {"x", x_over ? x_opt : 0.6}},
                            tol_opt > 0 ? tol_opt : 1e-10, trunc_opt, true, 40, 0});

        if (grid.empty()) {
            err << "no matching limit checks\n";
            return 2;
        }

        std::vector<VerificationReport> reports;
        for (const auto& g : grid) {
            NumericConfig cfg;
            cfg.tolerance = g.tol;
            cfg.truncation = g.trunc;
            if (!g.finite) {
                VerificationReport rep = limit_report(g.id, g.q, g.params, cfg);
                reports.push_back(std::move(rep));
            } else {
                VerificationReport rep;
                rep.identity = g.id;
                rep.instance.n = g.n;
                if (g.m) rep.instance.m = g.m;
                rep.mode = "numeric";
                try {
                    std::string which = g.id == "sylvester_finite"  ? "sylvester"
                                        : g.id == "sylvester_shifted" ? "jacobi-via-8.5"
                                                                      : "kang";
                    LimitOutcome o = check_finite_to_limit(which, g.n, g.m, g.q, g.params, cfg);
                    rep.status = o.status;
                    rep.detail = o.detail;
                } catch (const error& e) {
                    rep.status = Status::Error;
                    rep.detail = e.what();
                }
                reports.push_back(std::move(rep));
            }
        }

        OutputTarget target;
        if (!target.open(limits_out, out, err)) return 2;
        bool any_bad = false;
        for (const auto& r : reports) {
            *target.stream << (limits_format == "tsv" ? to_tsv_line(r, limits_timings)
                                                      : to_json_line(r, limits_timings));
            if (r.status == Status::Fail || r.status == Status::Error) any_bad = true;
        }
        return any_bad ? 1 : 0;
    }

    return 2;
}

} // namespace qcontig::cli
