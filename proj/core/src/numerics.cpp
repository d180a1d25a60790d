#include "qcontig/numerics.hpp"

#include <chrono>
#include <cmath>

#include "qcontig/catalog.hpp"

namespace qcontig {

namespace {

Float50 f50(double v) { return Float50(v); }

Float50 pow_int(const Float50& b, long e) { return FieldOps<Float50>::pow(b, e); }

double to_double(const Float50& v) { return v.convert_to<double>(); }

} // namespace

Float50 poch_n(const Float50& a, const Float50& q, long n) {
    Float50 r(1);
    for (long j = 0; j < n; ++j) r *= (Float50(1) - a * pow_int(q, j));
    return r;
}

Float50 poch_inf(const Float50& a, const Float50& q, const NumericConfig& cfg) {
    Float50 absq = abs(q);
    if (absq >= 1) throw error("poch_inf requires |q| < 1");
    if (a == 0) return Float50(1);
    // choose N with |a| |q|^N / (1-|q|) < eps/4
    Float50 eps(cfg.tolerance);
    Float50 bound = abs(a) / (Float50(1) - absq);
    long N = cfg.truncation;
    while (bound * pow_int(absq, N) >= eps / 4 && N < 100000) N += 32;
    Float50 r(1);
    for (long j = 0; j < N; ++j) r *= (Float50(1) - a * pow_int(q, j));
    return r;
}

namespace {

struct Tail {
    Float50 sum{0};
    Float50 bound{0};
};

// Sum f(k) for k >= 0 until the geometric tail estimate drops below
// eps/4: once |f(k+1)/f(k)| <= 1/2 holds and |f(k)| < eps/8, the dropped
// tail is below 2|f(k)| < eps/4.
template <class Fn>
Tail sum_one_sided(Fn f, long min_terms, double tolerance) {
    Tail t;
    Float50 eps(tolerance);
    Float50 prev(0);
    for (long k = 0;; ++k) {
        Float50 v = f(k);
        t.sum += v;
        if (k >= min_terms && abs(v) < eps / 8 &&
            (prev == 0 || abs(v) <= abs(prev) / 2)) {
            t.bound = 2 * abs(v);
            break;
        }
        prev = v;
        if (k > 200000) throw error("series truncation failed to converge");
    }
    return t;
}

// Bilateral sum over |k| <= N plus the same geometric tail check beyond N.
template <class Fn>
Tail sum_bilateral(Fn f, long N, double tolerance) {
    Tail t;
    Float50 eps(tolerance);
    t.sum = f(0);
    for (long k = 1; k <= N; ++k) t.sum += f(k) + f(-k);
    Float50 last = abs(f(N)) + abs(f(-N));
    long k = N;
    while (!(last < eps / 8) && k < 200000) {
        ++k;
        Float50 v = f(k) + f(-k);
        t.sum += v;
        last = abs(f(k)) + abs(f(-k));
    }
    t.bound = 2 * last;
    return t;
}

} // namespace

LimitOutcome check_limit(const std::string& id, double q,
                         const std::map<std::string, double>& params,
                         const NumericConfig& cfg) {
    LimitOutcome out;
    if (std::abs(q) > cfg.q_region || std::abs(q) >= 1.0) {
        out.status = Status::SkippedRegion;
        out.detail = "q outside the validated region |q| <= " + std::to_string(cfg.q_region);
        return out;
    }
    const Float50 Q = f50(q);
    auto param = [&params](const std::string& k) {
        auto it = params.find(k);
        if (it == params.end()) throw error("missing numeric parameter: " + k);
        return f50(it->second);
    };

    Float50 lhs(0), rhs(0), tail(0);
    if (id == "sylvester_inf") {
        const Float50 x = param("x");
        auto term = [&](long k) {
            Float50 v = pow_int(f50(-1), k) * pow_int(x, k) * pow_int(Q, k * (3 * k + 1) / 2);
            v *= (Float50(1) - x * pow_int(Q, 2 * k + 1));
            v /= poch_n(Q, Q, k);
            v /= poch_inf(x * pow_int(Q, k + 1), Q, cfg);
            return v;
        };
        Tail t = sum_one_sided(term, cfg.truncation / 4, cfg.tolerance);
        lhs = t.sum;
        tail = t.bound;
        rhs = Float50(1);
    } else if (id == "jacobi_triple") {
        const Float50 x = param("x");
        if (x == 0) throw error("jacobi_triple requires x != 0");
        auto term = [&](long k) {
            return (Float50(1) - x * pow_int(Q, 2 * k + 1)) * pow_int(x, 2 * k) *
                   pow_int(Q, 2 * k * k + k);
        };
        Tail t = sum_bilateral(term, cfg.truncation, cfg.tolerance);
        lhs = t.sum;
        tail = t.bound;
        rhs = poch_inf(Float50(1) / x, Q, cfg) * poch_inf(x * Q, Q, cfg) *
              poch_inf(Q, Q, cfg);
    } else if (id == "kang_inf") {
        const Float50 c = param("c"), d = param("d"), x = param("x");
        if (abs(c * x) >= 1 || abs(d * x) >= 1) {
            out.status = Status::SkippedRegion;
            out.detail = "kang_inf requires |cx| < 1 and |dx| < 1";
            return out;
        }
        auto term = [&](long k) {
            Float50 v = pow_int(f50(-1), k) * pow_int(x, k) * pow_int(Q, k * (3 * k + 1) / 2);
            v *= poch_n(c * pow_int(Q, -k), Q, k);
            v *= poch_n(d * pow_int(Q, -k), Q, k);
            v *= poch_n(x * Q, Q, k);
            v *= (Float50(1) - x * pow_int(Q, 2 * k + 1));
            v /= poch_n(Q, Q, k);
            v /= poch_n(c * x, Q, k + 1);
            v /= poch_n(d * x, Q, k + 1);
            return v;
        };
        Tail t = sum_one_sided(term, cfg.truncation / 4, cfg.tolerance);
        lhs = t.sum;
        tail = t.bound;
        rhs = poch_inf(c * d * x, Q, cfg) * poch_inf(x * Q, Q, cfg) /
              (poch_inf(c * x, Q, cfg) * poch_inf(d * x, Q, cfg));
    } else if (id == "quintuple") {
        const Float50 z = param("z");
        if (z == 0) throw error("quintuple requires z != 0");
        auto term = [&](long k) {
            return (z * z * pow_int(Q, 2 * k + 1) - Float50(1)) * pow_int(z, 3 * k + 1) *
                   pow_int(Q, k * (3 * k + 1) / 2);
        };
        Tail t = sum_bilateral(term, cfg.truncation, cfg.tolerance);
        lhs = t.sum;
        tail = t.bound;
        rhs = poch_inf(Q, Q, cfg) * poch_inf(z, Q, cfg) * poch_inf(Q / z, Q, cfg) *
              poch_inf(Q * z * z, Q * Q, cfg) * poch_inf(Q / (z * z), Q * Q, cfg);
    } else {
        throw error("unknown numeric limit identity: " + id);
    }

    Float50 diff = abs(lhs - rhs);
    out.difference = to_double(diff);
    out.tail_bound = to_double(tail);
    bool tails_ok = tail < Float50(cfg.tolerance) / 4;
    out.status = (diff < Float50(cfg.tolerance) && tails_ok) ? Status::Pass : Status::Fail;
    if (!tails_ok) out.detail = "truncation tail bound exceeds tolerance/4";
    return out;
}

LimitOutcome check_finite_to_limit(const std::string& id, long n, long m, double q,
                                   const std::map<std::string, double>& params,
                                   const NumericConfig& cfg) {
    LimitOutcome out;
    if (std::abs(q) > cfg.q_region || std::abs(q) >= 1.0) {
        out.status = Status::SkippedRegion;
        out.detail = "q outside the validated region";
        return out;
    }
    const Catalog& cat = Catalog::get();
    std::map<std::string, Float50> point;
    point["q"] = f50(q);
    for (const auto& [k, v] : params) point[k] = f50(v);

    Instance inst;
    inst.n = n;
    Float50 lhs, rhs;
    if (id == "sylvester") {
        auto [l, r] = cat.instantiate_float("sylvester_finite", inst, point);
        lhs = l;
        rhs = r; // 1, the limit (8.3) right side as well
    } else if (id == "jacobi-via-8.5") {
        inst.m = m;
        auto [l, r] = cat.instantiate_float("sylvester_shifted", inst, point);
        lhs = l;
        rhs = r;
    } else if (id == "kang") {
        auto [l, r] = cat.instantiate_float("kang_finite", inst, point);
        lhs = l;
        rhs = r;
    } else {
        throw error("unknown finite-to-limit check: " + id);
    }
    Float50 diff = abs(lhs - rhs);
    out.difference = to_double(diff);
    out.tail_bound = 0.0;
    out.status = diff < Float50(cfg.tolerance) ? Status::Pass : Status::Fail;
    return out;
}

VerificationReport limit_report(const std::string& id, double q,
                                const std::map<std::string, double>& params,
                                const NumericConfig& cfg) {
    VerificationReport rep;
    rep.identity = id;
    rep.instance.n = cfg.truncation;
    rep.mode = "numeric";
    auto t0 = std::chrono::steady_clock::now();
    try {
        LimitOutcome out = check_limit(id, q, params, cfg);
        rep.status = out.status;
        rep.detail = out.detail;
        if (out.status == Status::Fail) {
            std::map<std::string, std::string> w;
            w["difference"] = std::to_string(out.difference);
            w["q"] = std::to_string(q);
            for (const auto& [k, v] : params) w[k] = std::to_string(v);
            rep.witness = std::move(w);
        }
    } catch (const error& e) {
        rep.status = Status::Error;
        rep.detail = e.what();
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace qcontig
