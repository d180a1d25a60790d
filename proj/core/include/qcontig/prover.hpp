#pragma once

#include <string>
#include <vector>

#include "qcontig/relations.hpp"

namespace qcontig {

/// One elementary check inside a proof (a base-case identity instance, a
/// term recurrence at (n,k), a certificate at n, ...).
struct CheckRecord {
    std::string desc;
    bool pass = false;
    std::string detail;
};

/// Machine-checked assembly of one induction proof: the base case plus one
/// step record per index along the axis. The conclusion is only asserted
/// when everything passed.
struct ProofLog {
    std::string identity;
    std::string axis;      // "n" or "M"
    std::string base_desc; // what the base case verifies
    std::vector<CheckRecord> base_checks;
    bool base_pass = false;

    struct Step {
        long index = 0;
        std::vector<CheckRecord> checks;
        bool pass = false;
    };
    std::vector<Step> steps;

    bool complete = false;
    std::string conclusion;

    std::size_t check_count() const {
        std::size_t c = base_checks.size();
        for (const auto& s : steps) c += s.checks.size();
        return c;
    }
};

/// Index drop v of the identity's recurrence (1 or 2); proofs step over
/// n = v .. N, so the expected step count is N - v + 1.
int proof_step_order(const std::string& id);

bool has_induction_plan(const std::string& id);

/// Verifies the plan's base case and every recurrence/certificate step up
/// to N. Stops at the first failing record. `seed` drives the sampled
/// checks of the probabilistic-permitted identities ((7.1), (7.6)).
ProofLog assemble_proof(const std::string& id, long N, std::uint64_t seed = 42);

std::string to_json(const ProofLog& log);

} // namespace qcontig
