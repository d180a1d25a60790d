#pragma once

#include <map>
#include <optional>
#include <string>

namespace qcontig {

/// Index values plus the parameter regime of one verification instance.
struct Instance {
    long n = 0;
    std::optional<long> m;
    /// Symbolic: identity checked in its free symbols. Seeded: random
    /// rational parameters / sequence inputs derived from this seed.
    enum class Kind { Symbolic, Seeded } kind = Kind::Symbolic;
    std::uint64_t seed = 0;
};

enum class Status { Pass, Fail, Error, SkippedRegion };

const char* status_name(Status s);

struct VerificationReport {
    std::string identity;
    Instance instance;
    std::string mode; // "exact", "probabilistic", "numeric"
    Status status = Status::Error;
    /// Witness point (symbol -> value) certifying inequality, when present.
    std::optional<std::map<std::string, std::string>> witness;
    double elapsed_ms = 0.0;
    double error_bound = 0.0; // Schwartz-Zippel bound, probabilistic mode
    std::string detail;       // error text or context

    bool passed() const { return status == Status::Pass; }
};

/// One LF-terminated JSON record per the CLI schema. Timing is zeroed
/// unless with_timing (report streams must be byte-identical across runs).
std::string to_json_line(const VerificationReport& r, bool with_timing);
std::string to_tsv_line(const VerificationReport& r, bool with_timing);

} // namespace qcontig
