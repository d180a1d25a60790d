#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcontig/identities.hpp"
#include "qcontig/rational_function.hpp"
#include "qcontig/report.hpp"
#include "qcontig/sequences.hpp"

namespace qcontig {

enum class Mode { Exact, Probabilistic, Auto };

enum class IdentityKind { Series, Sequence, NumericLimit };

struct IdentityInfo {
    std::string id;
    std::string name;
    std::string anchor; // paper display anchor, e.g. "(2.1)"
    IdentityKind kind = IdentityKind::Series;
    std::vector<std::string> symbols; // base(s) first, then free parameters
    bool has_m = false;               // doubly indexed ((8.5))
    bool probabilistic_permitted = false;
    bool has_plan = false;
    int default_nmax = 6;
};

/// Declarative catalog of the paper's identities: 16 symbolic entries and 4
/// numeric-limit entries, ordered by id.
class Catalog {
public:
    static const Catalog& get();

    const std::vector<IdentityInfo>& entries() const { return infos_; }
    const IdentityInfo* find(const std::string& id) const;

    /// Both sides at concrete indices, symbolic in the free symbols. The
    /// workspace receives the identity's symbols (registration order fixes
    /// the term order).
    std::pair<RationalFunction, RationalFunction>
    instantiate(const std::string& id, const Instance& inst, Workspace& ws) const;

    /// Both sides at a full rational assignment.
    std::pair<Rational, Rational>
    instantiate_rational(const std::string& id, const Instance& inst,
                         const std::map<std::string, Rational>& point) const;

    /// Both sides at a full floating assignment (numeric cross-checks).
    std::pair<Float50, Float50>
    instantiate_float(const std::string& id, const Instance& inst,
                      const std::map<std::string, Float50>& point) const;

    /// Upper bound on the total degree of the cleared difference, for
    /// Schwartz-Zippel accounting.
    long degree_bound(const std::string& id, const Instance& inst) const;

    /// Generator access against caller-built environments; the prover uses
    /// these for specialization base cases (c = q, d = -q^{-m}, a = 1, ...).
    RationalFunction lhs_symbolic(const std::string& id,
                                  const identities::Env<SymbolicCtx>& env, long n, long m) const;
    RationalFunction rhs_symbolic(const std::string& id,
                                  const identities::Env<SymbolicCtx>& env, long n, long m) const;
    Rational lhs_rational(const std::string& id,
                          const identities::Env<PlainCtx<Rational>>& env, long n, long m) const;
    Rational rhs_rational(const std::string& id,
                          const identities::Env<PlainCtx<Rational>>& env, long n, long m) const;

    /// Full verification of one instance. Auto mode runs exact unless the
    /// identity is marked probabilistic-permitted. Sequence identities run
    /// exact over seeded random inputs (10 per instance).
    VerificationReport verify(const std::string& id, Instance inst, Mode mode,
                              const ProbabilisticOptions& popts) const;

    /// Exercises (6.1) / (6.2) / (6.4) on one explicit input.
    VerificationReport verify_sequence_identity(const std::string& id, long m, long n,
                                                const SequenceInput<Rational>& input) const;

private:
    Catalog();

    struct SeriesGens {
        std::function<RationalFunction(const identities::Env<SymbolicCtx>&, long, long)> lhs_sym,
            rhs_sym;
        std::function<Rational(const identities::Env<PlainCtx<Rational>>&, long, long)> lhs_q,
            rhs_q;
        std::function<Float50(const identities::Env<PlainCtx<Float50>>&, long, long)> lhs_f,
            rhs_f;
        std::function<DegBound(const identities::Env<PlainCtx<DegBound>>&, long, long)> lhs_d,
            rhs_d;
    };

    const SeriesGens& gens(const std::string& id) const;

    std::vector<IdentityInfo> infos_;
    std::map<std::string, SeriesGens> gens_;
};

/// Zero-sum displays inside the Lemma 2.2 proof. `which` is "2.4" or "2.5"
/// (the literally printed sums); n must be even.
VerificationReport check_reflection_zero(const std::string& which, long n);

/// The power relation (8.4) at concrete (m, k, n), symbolic in x, q.
bool power_relation_holds(long m, long k, long n);
/// Report-level wrapper sweeping the display's k over 0..4 at instance (n, m).
VerificationReport verify_power_relation(long n, long m);

} // namespace qcontig
