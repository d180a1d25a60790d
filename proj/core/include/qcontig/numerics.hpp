#pragma once

#include <map>
#include <string>

#include "qcontig/field.hpp"
#include "qcontig/report.hpp"

namespace qcontig {

/// Floating validation of the |q| < 1 limit identities. Everything runs at
/// 50 decimal digits; `precision` records the digits the tolerance is
/// trusted to (q^{2k^2+k} underflows double precision long before the
/// bilateral sums settle).
struct NumericConfig {
    int precision = 30;
    long truncation = 60; // series / product truncation order
    double tolerance = 1e-10;
    double q_region = 0.9; // |q| must stay at or below this
};

/// (a;q)_infty as a partial product of N factors, N chosen so the dropped
/// tail satisfies |a| |q|^N / (1-|q|) < eps/4 (then |prod_tail - 1| is below
/// roughly half eps since log(1-t) ~ -t for small t).
Float50 poch_inf(const Float50& a, const Float50& q, const NumericConfig& cfg);

/// (a;q)_n for n >= 0 in floating arithmetic.
Float50 poch_n(const Float50& a, const Float50& q, long n);

struct LimitOutcome {
    Status status = Status::Error;
    double difference = 0.0; // |LHS - RHS| (as double, after 50-digit math)
    double tail_bound = 0.0;
    std::string detail;
};

/// Numeric check of one infinite identity:
///   sylvester_inf (8.3): params x
///   jacobi_triple (8.6): params x
///   kang_inf: params c, d, x (region |cx| < 1, |dx| < 1)
///   quintuple: params z
LimitOutcome check_limit(const std::string& id, double q,
                         const std::map<std::string, double>& params,
                         const NumericConfig& cfg);

/// Finite identity evaluated numerically at large index against the limit
/// form: sylvester (n, vs 1), jacobi-via-8.5 (m and n, vs 1), kang (n, LHS
/// vs RHS of (9.1)).
LimitOutcome check_finite_to_limit(const std::string& id, long n, long m, double q,
                                   const std::map<std::string, double>& params,
                                   const NumericConfig& cfg);

VerificationReport limit_report(const std::string& id, double q,
                                const std::map<std::string, double>& params,
                                const NumericConfig& cfg);

} // namespace qcontig
