#include "qcontig/relations.hpp"

#include <chrono>

#include "qcontig/rng.hpp"

namespace qcontig {

namespace {

using identities::at;
using identities::Env;
using identities::half_floor;
using identities::sint;
using identities::spow;

template <class Ctx>
Env<Ctx> with(Env<Ctx> e, const std::string& k, typename Ctx::Scalar v) {
    e[k] = std::move(v);
    return e;
}

// ------------------------------------------------------------- displays

// Bailey summand F_{n,k}(b,c,q) and the (2.6) relation.
template <class Ctx>
struct Rec26 {
    using S = typename Ctx::Scalar;
    using V = typename Ctx::Value;

    static V F(const S& q, const S& b, const S& c, long n, long k) {
        if (k < 0 || k > n || n < 0) return Ctx::zero_value();
        const S one = sint<S>(1);
        auto v = Ctx::poch(spow(q, -n), q, k);
        v = Ctx::mul(std::move(v), Ctx::poch(b, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(c, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(sint<S>(-1) * spow(q, 1 - n) / (b * c), q, k));
        v = Ctx::mul(std::move(v), Ctx::pow(q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / b, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / c, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(sint<S>(-1) * b * c, q, k));
        (void)one;
        return v;
    }

    static S alpha(const S& q, const S& b, const S& c, long n) {
        const S one = sint<S>(1);
        S num = (b + spow(q, -n) / (b * c)) * (one - c * c) * (one - spow(q, -n)) *
                (one - spow(q, 1 - n)) * q;
        S den = (one - spow(q, -n) / b) * (one - spow(q, 1 - n) / b) *
                (one - spow(q, 1 - n) / c) * (one + b * c) * (one + b * c * q);
        return FieldOps<S>::div(num, den);
    }

    static std::vector<V> terms(const Env<Ctx>& e, long n, long k) {
        const S &q = at<Ctx>(e, "q"), &b = at<Ctx>(e, "b"), &c = at<Ctx>(e, "c");
        auto t3 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * alpha(q, b, c, n)),
                           F(q, b * q, c * q, n - 2, k - 1));
        return {F(q, b * q, c, n, k),
                Ctx::mul(Ctx::from_scalar(sint<S>(-1)), F(q, b, c, n, k)), std::move(t3)};
    }
};

// Carlitz summand with e = q^{1 - floor((3n+1)/2)}/(bcd) and the (3.2)
// relation.
template <class Ctx>
struct Rec32 {
    using S = typename Ctx::Scalar;
    using V = typename Ctx::Value;

    static V F(const S& q, const S& b, const S& c, const S& d, long n, long k) {
        if (k < 0 || k > n || n < 0) return Ctx::zero_value();
        const S e = spow(q, 1 - (3 * n + 1) / 2) / (b * c * d);
        auto v = Ctx::poch(spow(q, -n), q, k);
        v = Ctx::mul(std::move(v), Ctx::poch(b, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(c, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(d, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(e, q, k));
        v = Ctx::mul(std::move(v), Ctx::pow(q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / b, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / c, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / d, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, (n + 1) / 2) * b * c * d, q, k));
        return v;
    }

    static S alpha(const S& q, const S& b, const S& c, const S& d, long n) {
        const S one = sint<S>(1);
        S num = sint<S>(-1) * d * (one - b) * (one - c) *
                (one - spow(q, (3 * n + 1) / 2) * b * c * d * d) *
                (one - spow(q, (n + 1) / 2) * b * c) * (one - spow(q, n)) *
                (one - spow(q, n - 1)) * spow(q, n / 2 - 1);
        S den = (one - spow(q, (n + 1) / 2) * b * c * d) *
                (one - spow(q, (n + 3) / 2) * b * c * d) * (one - spow(q, n - 1) * b) *
                (one - spow(q, n - 1) * c) * (one - spow(q, n - 1) * d) *
                (one - spow(q, n) * d);
        return FieldOps<S>::div(num, den);
    }

    static std::vector<V> terms(const Env<Ctx>& e, long n, long k) {
        const S &q = at<Ctx>(e, "q"), &b = at<Ctx>(e, "b"), &c = at<Ctx>(e, "c"),
                &d = at<Ctx>(e, "d");
        auto t3 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * alpha(q, b, c, d, n)),
                           F(q, b * q, c * q, d * q, n - 2, k - 1));
        return {F(q, b, c, d * q, n, k),
                Ctx::mul(Ctx::from_scalar(sint<S>(-1)), F(q, b, c, d, n, k)), std::move(t3)};
    }
};

// Sears 3phi2 summand, its (1.2)-instance relation, and the zero
// certificate for G_{n,k}.
template <class Ctx>
struct Sec4 {
    using S = typename Ctx::Scalar;
    using V = typename Ctx::Value;

    static V F(const S& q, const S& x, const S& b, const S& c, long n, long k) {
        if (k < 0 || k > n || n < 0) return Ctx::zero_value();
        auto v = Ctx::poch(spow(q, -n), q, k);
        v = Ctx::mul(std::move(v), Ctx::poch(b, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(c, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / b, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / c, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::pow(spow(q, 1 - n) * x / (b * c), k));
        return v;
    }

    static V G(const S& q, const S& x, const S& b, const S& c, long n, long k) {
        if (k < 0 || k > n || n < 0) return Ctx::zero_value();
        auto v = Ctx::poch(spow(q, -n) * x, q, n);
        v = Ctx::mul(std::move(v), Ctx::poch(spow(q, -n), q, 2 * k));
        v = Ctx::mul(std::move(v), Ctx::poch(spow(q, 1 - n) / (b * c), q, k));
        v = Ctx::mul(std::move(v), Ctx::pow(q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / b, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / c, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, -n) * x, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q / x, q, k));
        return v;
    }

    static S beta(const S& q, const S& x, const S& b, const S& c, long n) {
        const S one = sint<S>(1);
        S num = sint<S>(-1) * (one - spow(q, -n)) * (one - spow(q, 1 - n)) * (one - b) * x *
                spow(q, -n) / (b * c);
        S den = (one - spow(q, -n) / c) * (one - spow(q, 1 - n) / b) *
                (one - spow(q, 1 - n) / c);
        return FieldOps<S>::div(num, den);
    }

    static std::vector<V> rec_terms(const Env<Ctx>& e, long n, long k) {
        const S &q = at<Ctx>(e, "q"), &x = at<Ctx>(e, "x"), &b = at<Ctx>(e, "b"),
                &c = at<Ctx>(e, "c");
        auto t3 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * beta(q, x, b, c, n)),
                           F(q, x / q, b * q, c * q, n - 2, k - 1));
        return {F(q, x, b, c, n, k),
                Ctx::mul(Ctx::from_scalar(sint<S>(-1)), F(q, x, b, c * q, n, k)),
                std::move(t3)};
    }

    static std::vector<V> cert_terms(const Env<Ctx>& e, long n, long k) {
        const S &q = at<Ctx>(e, "q"), &x = at<Ctx>(e, "x"), &b = at<Ctx>(e, "b"),
                &c = at<Ctx>(e, "c");
        auto t3 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * beta(q, x, b, c, n)),
                           G(q, x / q, b * q, c * q, n - 2, k - 1));
        return {G(q, x, b, c, n, k),
                Ctx::mul(Ctx::from_scalar(sint<S>(-1)), G(q, x, b, c * q, n, k)),
                std::move(t3)};
    }
};

// Sears 4phi3 machinery in the paper's (a,b,d,e,f) variables, c eliminated.
template <class Ctx>
struct Sec5 {
    using S = typename Ctx::Scalar;
    using V = typename Ctx::Value;

    static V F(const S& q, const S& a, const S& b, const S& d, const S& e, const S& f, long n,
               long k) {
        if (k < 0 || k > n || n < 0) return Ctx::zero_value();
        const S cc = d * e * f / (a * b * spow(q, 1 - n));
        auto v = Ctx::poch(spow(q, -n), q, k);
        v = Ctx::mul(std::move(v), Ctx::poch(a, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(b, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(cc, q, k));
        v = Ctx::mul(std::move(v), Ctx::pow(q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(d, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(e, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(f, q, k));
        return v;
    }

    static S alpha(const S& q, const S& a, const S& b, const S& d, const S& e, const S& f,
                   long n) {
        const S one = sint<S>(1);
        S num = (one - spow(q, -n)) * (one - b) *
                (a - d * e * f * spow(q, n - 2) / (a * b)) * q;
        S den = (one - d) * (one - e) * (one - f);
        return FieldOps<S>::div(num, den);
    }

    static std::vector<V> rec_terms(const Env<Ctx>& env, long n, long k) {
        const S &q = at<Ctx>(env, "q"), &a = at<Ctx>(env, "a"), &b = at<Ctx>(env, "b"),
                &d = at<Ctx>(env, "d"), &e = at<Ctx>(env, "e"), &f = at<Ctx>(env, "f");
        auto t3 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * alpha(q, a, b, d, e, f, n)),
                           F(q, a * q, b * q, d * q, e * q, f * q, n - 1, k - 1));
        return {F(q, a * q, b, d, e, f, n, k),
                Ctx::mul(Ctx::from_scalar(sint<S>(-1)), F(q, a, b, d, e, f, n, k)),
                std::move(t3)};
    }

    // (5.1) right-hand summand G_{n,k} in the eliminated variables.
    static V G(const S& q, const S& a, const S& b, const S& d, const S& e, const S& f, long n,
               long k) {
        if (k < 0 || k > n || n < 0) return Ctx::zero_value();
        auto v = Ctx::poch(e / a, q, n);
        v = Ctx::mul(std::move(v), Ctx::poch(f / a, q, n));
        v = Ctx::mul(std::move(v), Ctx::pow(a, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(e, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(f, q, n));
        v = Ctx::mul(std::move(v), Ctx::poch(spow(q, -n), q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(a, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(d / b, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(a * b * spow(q, 1 - n) / (e * f), q, k));
        v = Ctx::mul(std::move(v), Ctx::pow(q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(d, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(a * spow(q, 1 - n) / e, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(a * spow(q, 1 - n) / f, q, k));
        return v;
    }

    static V H(const S& q, const S& a, const S& b, const S& d, const S& e, const S& f, long n,
               long k) {
        const S one = sint<S>(1);
        auto v = Ctx::pow(a, n);
        v = Ctx::mul(std::move(v),
                     Ctx::from_scalar(a * a * spow(q, k - n + 2) / (e * f) - one));
        v = Ctx::mul(std::move(v), Ctx::poch(e / a, q, n));
        v = Ctx::mul(std::move(v), Ctx::poch(f / a, q, n));
        v = Ctx::mul(std::move(v), Ctx::poch(spow(q, -n), q, k + 1));
        v = Ctx::mul(std::move(v), Ctx::poch(a * q, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(d / b, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(a * b * spow(q, 2 - n) / (e * f), q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(e, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(f, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(d, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(a * spow(q, 1 - n) / e, q, k + 1));
        v = Ctx::mul(std::move(v), Ctx::rpoch(a * spow(q, 1 - n) / f, q, k + 1));
        return v;
    }

    static std::vector<V> cert54_terms(const Env<Ctx>& env, long n, long k) {
        const S &q = at<Ctx>(env, "q"), &a = at<Ctx>(env, "a"), &b = at<Ctx>(env, "b"),
                &d = at<Ctx>(env, "d"), &e = at<Ctx>(env, "e"), &f = at<Ctx>(env, "f");
        auto t3 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * alpha(q, a, b, d, e, f, n)),
                           G(q, a * q, b * q, d * q, e * q, f * q, n - 1, k - 1));
        return {G(q, a * q, b, d, e, f, n, k),
                Ctx::mul(Ctx::from_scalar(sint<S>(-1)), G(q, a, b, d, e, f, n, k)),
                std::move(t3)};
    }

    // (5.2) right-hand summand P_{n,k}; the displayed form lacks the q^k the
    // 4phi3 argument supplies, which the certificate requires (see notes).
    static V P(const S& q, const S& a, const S& b, const S& d, const S& e, const S& f, long n,
               long k) {
        if (k < 0 || k > n || n < 0) return Ctx::zero_value();
        const S efab = e * f / (a * b);
        const S bq1nd = b * spow(q, 1 - n) / d;
        auto v = Ctx::poch(a, q, n);
        v = Ctx::mul(std::move(v), Ctx::poch(efab, q, n));
        v = Ctx::mul(std::move(v), Ctx::poch(bq1nd, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(e, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(f, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / d, q, n));
        v = Ctx::mul(std::move(v), Ctx::poch(spow(q, -n), q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(e / a, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(f / a, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(spow(q, 1 - n) / d, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(efab, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(bq1nd, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / a, q, k));
        v = Ctx::mul(std::move(v), Ctx::pow(q, k));
        return v;
    }

    static V Q(const S& q, const S& a, const S& b, const S& d, const S& e, const S& f, long n,
               long k) {
        const S efab = e * f / (a * b);
        const S bq1nd = b * spow(q, 1 - n) / d;
        auto v = Ctx::pow(q, n);
        v = Ctx::mul(std::move(v), Ctx::from_scalar(e * f * spow(q, k - 1) - a * a * b));
        v = Ctx::mul(std::move(v), Ctx::poch(a * q, q, n - 1));
        v = Ctx::mul(std::move(v), Ctx::poch(efab, q, n - 1));
        v = Ctx::mul(std::move(v), Ctx::poch(bq1nd, q, n));
        v = Ctx::mul(std::move(v), Ctx::poch(spow(q, -n), q, k + 1));
        v = Ctx::mul(std::move(v), Ctx::poch(e / a, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(f / a, q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(spow(q, 1 - n) / d, q, k));
        v = Ctx::mul(std::move(v), Ctx::pow(a * b, -1));
        v = Ctx::mul(std::move(v), Ctx::rpoch(e, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(f, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / d, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(efab, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(bq1nd, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(spow(q, 1 - n) / a, q, k));
        return v;
    }

    static std::vector<V> cert55_terms(const Env<Ctx>& env, long n, long k) {
        const S &q = at<Ctx>(env, "q"), &a = at<Ctx>(env, "a"), &b = at<Ctx>(env, "b"),
                &d = at<Ctx>(env, "d"), &e = at<Ctx>(env, "e"), &f = at<Ctx>(env, "f");
        auto t3 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * alpha(q, a, b, d, e, f, n)),
                           P(q, a * q, b * q, d * q, e * q, f * q, n - 1, k - 1));
        return {P(q, a * q, b, d, e, f, n, k),
                Ctx::mul(Ctx::from_scalar(sint<S>(-1)), P(q, a, b, d, e, f, n, k)),
                std::move(t3)};
    }
};

// Chen bibasic summand and the (6.6) three-term relation.
template <class Ctx>
struct Rec66 {
    using S = typename Ctx::Scalar;
    using V = typename Ctx::Value;

    static V F(const S& p, const S& q, const S& a, const S& b, const S& d, long n, long k) {
        if (k < 0 || k > n || n < 0) return Ctx::zero_value();
        const S one = sint<S>(1);
        auto v = Ctx::from_scalar((one - b) * (one - d * b));
        v = Ctx::mul(std::move(v), Ctx::poch(a * b * spow(q, k), p, n));
        v = Ctx::mul(std::move(v), Ctx::poch(a / (d * b * spow(q, k)), p, n));
        v = Ctx::mul(std::move(v), Ctx::pow(sint<S>(-1), k));
        v = Ctx::mul(std::move(v), Ctx::pow(q, k * (k + 1) / 2));
        v = Ctx::mul(std::move(v),
                     Ctx::pow((one - b * spow(q, k)) * (one - d * b * spow(q, k)), -1));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(d * b * b * spow(q, k), q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, n - k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(d * b * b * spow(q, 2 * k + 1), q, n - k));
        return v;
    }

    static S alpha(const S& p, const S& q, const S& a, const S& b, const S& d, long n) {
        const S one = sint<S>(1);
        return FieldOps<S>::div(
            (one - a * b * spow(p, n - 1)) * (one - a * spow(p, n - 1) / (b * d)),
            (one - spow(q, n)) * (one - d * b * b * spow(q, n)));
    }

    static S beta(const S& p, const S& q, const S& a, const S& b, const S& d, long n) {
        const S one = sint<S>(1);
        S num = (a * b * spow(q, n) * spow(p, n - 1) - one) *
                (b * d * spow(q, n) - a * spow(p, n - 1)) * (one - b * d) * (one - b);
        S den = d * b * (one - b * d * q) * (one - b * q) * (one - d * b * b * spow(q, n)) *
                (one - spow(q, n));
        return FieldOps<S>::div(num, den);
    }

    static std::vector<V> terms(const Env<Ctx>& e, long n, long k) {
        const S &p = at<Ctx>(e, "p"), &q = at<Ctx>(e, "q"), &a = at<Ctx>(e, "a"),
                &b = at<Ctx>(e, "b"), &d = at<Ctx>(e, "d");
        auto t2 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * alpha(p, q, a, b, d, n)),
                           F(p, q, a, b, d, n - 1, k));
        auto t3 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * beta(p, q, a, b, d, n)),
                           F(p, q, a, b * q, d, n - 1, k - 1));
        return {F(p, q, a, b, d, n, k), std::move(t2), std::move(t3)};
    }
};

// Split-poised machinery shared by (7.1)/(7.6): the alpha_n relation for the
// F-side and the H certificate for the G-side. For (7.1) set p = q.
template <class Ctx>
struct Sec7 {
    using S = typename Ctx::Scalar;
    using V = typename Ctx::Value;
    using SP = identities::SplitPoised<Ctx>;

    static V F(const S& p, const S& q, const S& a, const S& b, const S& c, const S& A,
               const S& B, const S& C, long n, long k) {
        if (k < 0 || n < 0) return Ctx::zero_value();
        return SP::f_term(p, q, a, b, c, A, B, C, n, k);
    }

    static V G(const S& p, const S& q, const S& a, const S& b, const S& c, const S& A,
               const S& B, const S& C, long n, long k) {
        if (k < 0 || n < 0) return Ctx::zero_value();
        return SP::g_term(p, q, a, b, c, A, B, C, n, k);
    }

    static S alpha(const S& p, const S& q, const S& a, const S& b, const S& c, const S& A,
                   const S& B, const S& C, long n) {
        const S one = sint<S>(1);
        S t1num = (c - a / (b * c * p)) * (one - b * p) * (one - a * p) * (one - a * p * p) *
                  (one - b);
        S t1den = (one - a / c) * (one - b * c * p) * (one - a * p / b) * (one - a * p / c) *
                  (one - b * c * p * p);
        const S qn = spow(q, n);
        S t2num = (one - C / (A * qn)) * (one - one / (B * C * qn)) * (one - B / (A * qn)) *
                  (one - spow(q, -n)) * p;
        S t2den = (one - one / (C * qn)) * (one - B * C / (A * qn)) * (one - one / (B * qn)) *
                  (one - one / (A * qn));
        return FieldOps<S>::div(t1num * t2num, t1den * t2den);
    }

    static std::vector<V> rec_terms_pq(const Env<Ctx>& e, long n, long k, bool bibasic) {
        const S& q = at<Ctx>(e, "q");
        const S p = bibasic ? at<Ctx>(e, "p") : q;
        const S &a = at<Ctx>(e, "a"), &b = at<Ctx>(e, "b"), &c = at<Ctx>(e, "c"),
                &A = at<Ctx>(e, "A"), &B = at<Ctx>(e, "B"), &C = at<Ctx>(e, "C");
        auto t3 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * alpha(p, q, a, b, c, A, B, C, n)),
                           F(p, q, a * p * p, b * p, c * p, A, B, C, n - 1, k - 1));
        return {F(p, q, a, b, c * p, A, B, C, n, k),
                Ctx::mul(Ctx::from_scalar(sint<S>(-1)), F(p, q, a, b, c, A, B, C, n, k)),
                std::move(t3)};
    }

    /// The H multiplier of (7.3), with the (a,b,c)-group base substituted
    /// (q for (7.1), p for the constructed (7.6) relation).
    static S h_factor(const S& p, const S& a, const S& b, const S& c, long n, long k) {
        const S one = sint<S>(1);
        S num = a * (one - b) * (one - spow(p, n - k)) * (one - a * spow(p, n - k + 1)) *
                (one - b * c * c * p / a);
        S den = b * (a - c) * (one - a * spow(p, n - k) / (b * c)) *
                (one - b * c * spow(p, n - k + 1)) * (one - c * p);
        return FieldOps<S>::div(num, den);
    }

    static V H(const S& p, const S& q, const S& a, const S& b, const S& c, const S& A,
               const S& B, const S& C, long n, long k) {
        // k = -1 evaluates through the reciprocal-Pochhammer conventions and
        // vanishes via 1/(q;q)_{-1} = 0
        auto g = (k >= -1 && n >= 0) ? SP::g_term(p, q, a, b, c, A, B, C, n, k)
                                     : Ctx::zero_value();
        return Ctx::mul(Ctx::from_scalar(h_factor(p, a, b, c, n, k)), std::move(g));
    }

    static std::vector<V> cert_terms_pq(const Env<Ctx>& e, long n, long k, bool bibasic) {
        const S& q = at<Ctx>(e, "q");
        const S p = bibasic ? at<Ctx>(e, "p") : q;
        const S &a = at<Ctx>(e, "a"), &b = at<Ctx>(e, "b"), &c = at<Ctx>(e, "c"),
                &A = at<Ctx>(e, "A"), &B = at<Ctx>(e, "B"), &C = at<Ctx>(e, "C");
        auto t3 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) * alpha(p, q, a, b, c, A, B, C, n)),
                           G(p, q, a * p * p, b * p, c * p, A, B, C, n - 1, k - 1));
        return {G(p, q, a, b, c * p, A, B, C, n, k),
                Ctx::mul(Ctx::from_scalar(sint<S>(-1)), G(p, q, a, b, c, A, B, C, n, k)),
                std::move(t3)};
    }

    static V h_at(const Env<Ctx>& e, long n, long k, bool bibasic) {
        const S& q = at<Ctx>(e, "q");
        const S p = bibasic ? at<Ctx>(e, "p") : q;
        const S &a = at<Ctx>(e, "a"), &b = at<Ctx>(e, "b"), &c = at<Ctx>(e, "c"),
                &A = at<Ctx>(e, "A"), &B = at<Ctx>(e, "B"), &C = at<Ctx>(e, "C");
        return H(p, q, a, b, c, A, B, C, n, k);
    }
};

// Sylvester and Kang three-term relations.
template <class Ctx>
struct Rec8 {
    using S = typename Ctx::Scalar;
    using V = typename Ctx::Value;

    static V F(const S& q, const S& x, long n, long k) {
        if (k < 0 || k > n || n < 0) return Ctx::zero_value();
        const S one = sint<S>(1);
        auto v = Ctx::pow(sint<S>(-1), k);
        v = Ctx::mul(std::move(v), Ctx::pow(x, k));
        v = Ctx::mul(std::move(v), Ctx::pow(q, k * (3 * k + 1) / 2));
        v = Ctx::mul(std::move(v), Ctx::poch(q, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, n - k));
        v = Ctx::mul(std::move(v), Ctx::from_scalar(one - x * spow(q, 2 * k + 1)));
        v = Ctx::mul(std::move(v), Ctx::rpoch(x * spow(q, k + 1), q, n + 1));
        return v;
    }

    static std::vector<V> terms(const Env<Ctx>& e, long n, long k) {
        const S &q = at<Ctx>(e, "q"), &x = at<Ctx>(e, "x");
        const S one = sint<S>(1);
        const S denom = one - x * spow(q, n + 1);
        auto t2 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) / denom), F(q, x, n - 1, k));
        auto t3 = Ctx::mul(Ctx::from_scalar(x * spow(q, n + 1) / denom),
                           F(q, x * q * q, n - 1, k - 1));
        return {F(q, x, n, k), std::move(t2), std::move(t3)};
    }
};

template <class Ctx>
struct Rec9 {
    using S = typename Ctx::Scalar;
    using V = typename Ctx::Value;

    static V F(const S& q, const S& c, const S& d, const S& x, long n, long k) {
        if (k < 0 || k > n || n < 0) return Ctx::zero_value();
        const S one = sint<S>(1);
        auto v = Ctx::pow(sint<S>(-1), k);
        v = Ctx::mul(std::move(v), Ctx::pow(x, k));
        v = Ctx::mul(std::move(v), Ctx::pow(q, k * (3 * k + 1) / 2));
        v = Ctx::mul(std::move(v), Ctx::poch(q, q, n));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, k));
        v = Ctx::mul(std::move(v), Ctx::rpoch(q, q, n - k));
        v = Ctx::mul(std::move(v), Ctx::poch(c * spow(q, -k), q, k));
        v = Ctx::mul(std::move(v), Ctx::poch(d * spow(q, -k), q, k));
        v = Ctx::mul(std::move(v), Ctx::from_scalar(one - x * spow(q, 2 * k + 1)));
        v = Ctx::mul(std::move(v), Ctx::rpoch(c * x, q, k + 1));
        v = Ctx::mul(std::move(v), Ctx::rpoch(d * x, q, k + 1));
        v = Ctx::mul(std::move(v), Ctx::rpoch(x * spow(q, k + 1), q, n + 1));
        return v;
    }

    static std::vector<V> terms(const Env<Ctx>& e, long n, long k) {
        const S &q = at<Ctx>(e, "q"), &c = at<Ctx>(e, "c"), &d = at<Ctx>(e, "d"),
                &x = at<Ctx>(e, "x");
        const S one = sint<S>(1);
        const S denom = one - x * spow(q, n + 1);
        auto t2 = Ctx::mul(Ctx::from_scalar(sint<S>(-1) / denom), F(q, c, d, x, n - 1, k));
        const S cc = (one - c / q) * (one - d / q) * x * spow(q, n + 1) /
                     ((one - c * x) * (one - d * x) * denom);
        auto t3 = Ctx::mul(Ctx::from_scalar(cc), F(q, c / q, d / q, x * q * q, n - 1, k - 1));
        return {F(q, c, d, x, n, k), std::move(t2), std::move(t3)};
    }
};

// Closed-form recurrences: the right sides satisfy the same relations.
template <class Ctx>
std::vector<typename Ctx::Value> closed26_terms(const Env<Ctx>& e, long n, long) {
    using S = typename Ctx::Scalar;
    using B = identities::Bailey4Phi3<Ctx>;
    const S &q = at<Ctx>(e, "q"), &b = at<Ctx>(e, "b"), &c = at<Ctx>(e, "c");
    auto shifted = with<Ctx>(with<Ctx>(e, "b", b * q), "c", c * q);
    return {Ctx::from_scalar(B::rhs(with<Ctx>(e, "b", b * q), n, 0)),
            Ctx::mul(Ctx::from_scalar(identities::sint<S>(-1)), Ctx::from_scalar(B::rhs(e, n, 0))),
            Ctx::mul(Ctx::from_scalar(identities::sint<S>(-1) * Rec26<Ctx>::alpha(q, b, c, n)),
                     Ctx::from_scalar(B::rhs(shifted, n - 2, 0)))};
}

template <class Ctx>
std::vector<typename Ctx::Value> closed32_terms(const Env<Ctx>& e, long n, long) {
    using S = typename Ctx::Scalar;
    using C5 = identities::Carlitz5Phi4<Ctx>;
    const S &q = at<Ctx>(e, "q"), &b = at<Ctx>(e, "b"), &c = at<Ctx>(e, "c"),
            &d = at<Ctx>(e, "d");
    auto all = with<Ctx>(with<Ctx>(with<Ctx>(e, "b", b * q), "c", c * q), "d", d * q);
    return {Ctx::from_scalar(C5::rhs(with<Ctx>(e, "d", d * q), n, 0)),
            Ctx::mul(Ctx::from_scalar(identities::sint<S>(-1)), Ctx::from_scalar(C5::rhs(e, n, 0))),
            Ctx::mul(
                Ctx::from_scalar(identities::sint<S>(-1) * Rec32<Ctx>::alpha(q, b, c, d, n)),
                Ctx::from_scalar(C5::rhs(all, n - 2, 0)))};
}

template <class Ctx>
std::vector<typename Ctx::Value> closed66_terms(const Env<Ctx>& e, long n, long) {
    using S = typename Ctx::Scalar;
    using CB = identities::ChenBibasic<Ctx>;
    const S &p = at<Ctx>(e, "p"), &q = at<Ctx>(e, "q"), &a = at<Ctx>(e, "a"),
            &b = at<Ctx>(e, "b"), &d = at<Ctx>(e, "d");
    return {Ctx::from_scalar(CB::rhs(e, n, 0)),
            Ctx::mul(Ctx::from_scalar(identities::sint<S>(-1) * Rec66<Ctx>::alpha(p, q, a, b, d, n)),
                     Ctx::from_scalar(CB::rhs(e, n - 1, 0))),
            Ctx::mul(Ctx::from_scalar(identities::sint<S>(-1) * Rec66<Ctx>::beta(p, q, a, b, d, n)),
                     Ctx::from_scalar(CB::rhs(with<Ctx>(e, "b", b * q), n - 1, 0)))};
}

template <class Ctx>
std::vector<typename Ctx::Value> closed8_terms(const Env<Ctx>& e, long n, long) {
    using S = typename Ctx::Scalar;
    const S &q = at<Ctx>(e, "q"), &x = at<Ctx>(e, "x");
    const S one = identities::sint<S>(1);
    const S denom = one - x * spow(q, n + 1);
    return {Ctx::one(),
            Ctx::from_scalar(identities::sint<S>(-1) / denom),
            Ctx::from_scalar(x * spow(q, n + 1) / denom)};
}

template <class Ctx>
std::vector<typename Ctx::Value> closed9_terms(const Env<Ctx>& e, long n, long) {
    using S = typename Ctx::Scalar;
    using K = identities::KangFinite<Ctx>;
    const S &q = at<Ctx>(e, "q"), &c = at<Ctx>(e, "c"), &d = at<Ctx>(e, "d"),
            &x = at<Ctx>(e, "x");
    const S one = identities::sint<S>(1);
    const S denom = one - x * spow(q, n + 1);
    auto shifted =
        with<Ctx>(with<Ctx>(with<Ctx>(e, "c", c / q), "d", d / q), "x", x * q * q);
    const S cc = (one - c / q) * (one - d / q) * x * spow(q, n + 1) /
                 ((one - c * x) * (one - d * x) * denom);
    return {Ctx::from_scalar(K::rhs(e, n, 0)),
            Ctx::mul(Ctx::from_scalar(identities::sint<S>(-1) / denom),
                     Ctx::from_scalar(K::rhs(e, n - 1, 0))),
            Ctx::mul(Ctx::from_scalar(cc), Ctx::from_scalar(K::rhs(shifted, n - 1, 0)))};
}

// --------------------------------------------------------------- registry

template <class TermsFn>
RecurrenceSpec make_rec(std::string id, std::string anchor, int v, long min_n,
                        std::vector<std::string> symbols, TermsFn) {
    RecurrenceSpec s;
    s.id = std::move(id);
    s.anchor = std::move(anchor);
    s.v = v;
    s.min_n = min_n;
    s.symbols = std::move(symbols);
    s.terms_sym = [](const Env<SymbolicCtx>& e, long n, long k) {
        return TermsFn::template run<SymbolicCtx>(e, n, k);
    };
    s.terms_q = [](const Env<PlainCtx<Rational>>& e, long n, long k) {
        return TermsFn::template run<PlainCtx<Rational>>(e, n, k);
    };
    return s;
}

#define QCONTIG_TERMS_FN(NAME, EXPR)                                                 \
    struct NAME {                                                                    \
        template <class Ctx>                                                         \
        static std::vector<typename Ctx::Value> run(const Env<Ctx>& e, long n,       \
                                                    long k) {                        \
            (void)k;                                                                 \
            return EXPR;                                                             \
        }                                                                            \
    }

QCONTIG_TERMS_FN(Rec26Fn, Rec26<Ctx>::terms(e, n, k));
QCONTIG_TERMS_FN(Rec32Fn, Rec32<Ctx>::terms(e, n, k));
QCONTIG_TERMS_FN(Rec4Fn, Sec4<Ctx>::rec_terms(e, n, k));
QCONTIG_TERMS_FN(Rec53Fn, Sec5<Ctx>::rec_terms(e, n, k));
QCONTIG_TERMS_FN(Rec66Fn, Rec66<Ctx>::terms(e, n, k));
QCONTIG_TERMS_FN(Rec72Fn, Sec7<Ctx>::rec_terms_pq(e, n, k, false));
QCONTIG_TERMS_FN(Rec76Fn, Sec7<Ctx>::rec_terms_pq(e, n, k, true));
QCONTIG_TERMS_FN(Rec8Fn, Rec8<Ctx>::terms(e, n, k));
QCONTIG_TERMS_FN(Rec9Fn, Rec9<Ctx>::terms(e, n, k));
QCONTIG_TERMS_FN(Closed26Fn, closed26_terms<Ctx>(e, n, k));
QCONTIG_TERMS_FN(Closed32Fn, closed32_terms<Ctx>(e, n, k));
QCONTIG_TERMS_FN(Closed66Fn, closed66_terms<Ctx>(e, n, k));
QCONTIG_TERMS_FN(Closed8Fn, closed8_terms<Ctx>(e, n, k));
QCONTIG_TERMS_FN(Closed9Fn, closed9_terms<Ctx>(e, n, k));
QCONTIG_TERMS_FN(Cert4Fn, Sec4<Ctx>::cert_terms(e, n, k));
QCONTIG_TERMS_FN(Cert54Fn, Sec5<Ctx>::cert54_terms(e, n, k));
QCONTIG_TERMS_FN(Cert55Fn, Sec5<Ctx>::cert55_terms(e, n, k));
QCONTIG_TERMS_FN(Cert73Fn, Sec7<Ctx>::cert_terms_pq(e, n, k, false));
QCONTIG_TERMS_FN(Cert76Fn, Sec7<Ctx>::cert_terms_pq(e, n, k, true));

#undef QCONTIG_TERMS_FN

template <class HFn>
CertificateSpec make_cert(std::string id, std::string anchor, int v, long min_n,
                          std::vector<std::string> symbols, const RecurrenceSpec& lhs, HFn) {
    CertificateSpec s;
    s.id = std::move(id);
    s.anchor = std::move(anchor);
    s.v = v;
    s.min_n = min_n;
    s.symbols = std::move(symbols);
    s.lhs_sym = lhs.terms_sym;
    s.lhs_q = lhs.terms_q;
    s.h_sym = [](const Env<SymbolicCtx>& e, long n, long k) {
        return HFn::template run<SymbolicCtx>(e, n, k);
    };
    s.h_q = [](const Env<PlainCtx<Rational>>& e, long n, long k) {
        return HFn::template run<PlainCtx<Rational>>(e, n, k);
    };
    return s;
}

struct HZero {
    template <class Ctx>
    static typename Ctx::Value run(const Env<Ctx>&, long, long) {
        return Ctx::zero_value();
    }
};
struct H54 {
    template <class Ctx>
    static typename Ctx::Value run(const Env<Ctx>& e, long n, long k) {
        using S = typename Ctx::Scalar;
        const S &q = at<Ctx>(e, "q"), &a = at<Ctx>(e, "a"), &b = at<Ctx>(e, "b"),
                &d = at<Ctx>(e, "d"), &ee = at<Ctx>(e, "e"), &f = at<Ctx>(e, "f");
        return Sec5<Ctx>::H(q, a, b, d, ee, f, n, k);
    }
};
struct H55 {
    template <class Ctx>
    static typename Ctx::Value run(const Env<Ctx>& e, long n, long k) {
        using S = typename Ctx::Scalar;
        const S &q = at<Ctx>(e, "q"), &a = at<Ctx>(e, "a"), &b = at<Ctx>(e, "b"),
                &d = at<Ctx>(e, "d"), &ee = at<Ctx>(e, "e"), &f = at<Ctx>(e, "f");
        return Sec5<Ctx>::Q(q, a, b, d, ee, f, n, k);
    }
};
struct H73 {
    template <class Ctx>
    static typename Ctx::Value run(const Env<Ctx>& e, long n, long k) {
        return Sec7<Ctx>::h_at(e, n, k, false);
    }
};
struct H76 {
    template <class Ctx>
    static typename Ctx::Value run(const Env<Ctx>& e, long n, long k) {
        return Sec7<Ctx>::h_at(e, n, k, true);
    }
};

std::vector<RecurrenceSpec> build_recurrences() {
    std::vector<RecurrenceSpec> v;
    v.push_back(make_rec("rec_2_6", "(2.6)", 2, 2, {"q", "b", "c"}, Rec26Fn{}));
    v.push_back(make_rec("rec_3_2", "(3.2)", 2, 2, {"q", "b", "c", "d"}, Rec32Fn{}));
    v.push_back(make_rec("rec_4_beta", "section 4 F-relation", 2, 2, {"q", "x", "b", "c"},
                         Rec4Fn{}));
    v.push_back(make_rec("rec_5_3", "(5.3)", 1, 1, {"q", "a", "b", "d", "e", "f"}, Rec53Fn{}));
    v.push_back(make_rec("rec_6_6", "(6.6)", 1, 1, {"p", "q", "a", "b", "d"}, Rec66Fn{}));
    v.push_back(make_rec("rec_7_2", "(7.2)", 1, 1, {"q", "a", "b", "c", "A", "B", "C"},
                         Rec72Fn{}));
    v.push_back(make_rec("rec_7_6_alpha", "section 7 bibasic alpha relation", 1, 1,
                         {"p", "q", "a", "b", "c", "A", "B", "C"}, Rec76Fn{}));
    v.push_back(make_rec("rec_8_sylvester", "section 8 three-term relation", 1, 1, {"q", "x"},
                         Rec8Fn{}));
    v.push_back(make_rec("rec_9_kang", "section 9 three-term relation", 1, 1,
                         {"q", "c", "d", "x"}, Rec9Fn{}));
    v.push_back(make_rec("closed_2_6", "(2.6) for the closed form", 2, 2, {"q", "b", "c"},
                         Closed26Fn{}));
    v.push_back(make_rec("closed_3_2", "(3.2) for the closed form", 2, 2, {"q", "b", "c", "d"},
                         Closed32Fn{}));
    v.push_back(make_rec("closed_6_6", "(6.6) for the closed form", 1, 1,
                         {"p", "q", "a", "b", "d"}, Closed66Fn{}));
    v.push_back(make_rec("closed_8_sylvester", "section 8 closed-form relation", 1, 1,
                         {"q", "x"}, Closed8Fn{}));
    v.push_back(make_rec("closed_9_kang", "section 9 closed-form relation", 1, 1,
                         {"q", "c", "d", "x"}, Closed9Fn{}));
    return v;
}

std::vector<CertificateSpec> build_certificates(const std::vector<RecurrenceSpec>&) {
    std::vector<CertificateSpec> v;
    RecurrenceSpec cert4 =
        make_rec("cert_4_zero_lhs", "", 2, 2, {"q", "x", "b", "c"}, Cert4Fn{});
    RecurrenceSpec cert54 =
        make_rec("cert_5_4_lhs", "", 1, 1, {"q", "a", "b", "d", "e", "f"}, Cert54Fn{});
    RecurrenceSpec cert55 =
        make_rec("cert_5_5_lhs", "", 1, 1, {"q", "a", "b", "d", "e", "f"}, Cert55Fn{});
    RecurrenceSpec cert73 =
        make_rec("cert_7_3_lhs", "", 1, 1, {"q", "a", "b", "c", "A", "B", "C"}, Cert73Fn{});
    RecurrenceSpec cert76 = make_rec("cert_7_6_lhs", "", 1, 1,
                                     {"p", "q", "a", "b", "c", "A", "B", "C"}, Cert76Fn{});
    v.push_back(make_cert("cert_4_zero", "section 4 zero certificate", 2, 2,
                          {"q", "x", "b", "c"}, cert4, HZero{}));
    v.push_back(make_cert("cert_5_4", "(5.4)", 1, 1, {"q", "a", "b", "d", "e", "f"}, cert54,
                          H54{}));
    v.push_back(make_cert("cert_5_5", "(5.5)", 1, 1, {"q", "a", "b", "d", "e", "f"}, cert55,
                          H55{}));
    v.push_back(make_cert("cert_7_3", "(7.3)", 1, 1, {"q", "a", "b", "c", "A", "B", "C"},
                          cert73, H73{}));
    v.push_back(make_cert("cert_7_6", "section 7 constructed certificate", 1, 1,
                          {"p", "q", "a", "b", "c", "A", "B", "C"}, cert76, H76{}));
    return v;
}

Env<SymbolicCtx> sym_env(const std::vector<std::string>& symbols, Workspace& ws) {
    Env<SymbolicCtx> env;
    for (const auto& s : symbols) env.emplace(s, RationalFunction::var(ws.symbol(s)));
    return env;
}

Env<PlainCtx<Rational>> sampled_env(const std::vector<std::string>& symbols, SplitMix64& rng,
                                    std::uint64_t pool) {
    Env<PlainCtx<Rational>> env;
    for (const auto& s : symbols) env.emplace(s, Rational(rng.next_in(pool)));
    return env;
}

} // namespace

const std::vector<RecurrenceSpec>& recurrence_catalog() {
    static const std::vector<RecurrenceSpec> v = build_recurrences();
    return v;
}

const std::vector<CertificateSpec>& certificate_catalog() {
    static const std::vector<CertificateSpec> v = build_certificates(recurrence_catalog());
    return v;
}

const RecurrenceSpec& recurrence(const std::string& id) {
    for (const auto& r : recurrence_catalog())
        if (r.id == id) return r;
    throw error("unknown recurrence: " + id);
}

const CertificateSpec& certificate(const std::string& id) {
    for (const auto& c : certificate_catalog())
        if (c.id == id) return c;
    throw error("unknown certificate: " + id);
}

VerificationReport verify_recurrence(const RecurrenceSpec& spec, long n, long k,
                                     const CheckOptions& opts) {
    VerificationReport rep;
    rep.identity = spec.id;
    rep.instance.n = n;
    rep.instance.m = k;
    rep.mode = opts.probabilistic ? "probabilistic" : "exact";
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (n < spec.min_n) throw error(spec.id + " requires n >= " + std::to_string(spec.min_n));
        if (!opts.probabilistic) {
            Workspace ws;
            auto env = sym_env(spec.symbols, ws);
            rep.status = sum_factored(spec.terms_sym(env, n, k)).is_zero() ? Status::Pass
                                                                           : Status::Fail;
        } else {
            rep.instance.kind = Instance::Kind::Seeded;
            rep.instance.seed = opts.seed;
            SplitMix64 rng(fnv1a(opts.seed, spec.id, n, k));
            rep.status = Status::Pass;
            int done = 0, budget = 100 * opts.trials;
            while (done < opts.trials) {
                if (budget-- <= 0)
                    throw resample_budget_error("resample budget exhausted avoiding poles");
                auto env = sampled_env(spec.symbols, rng, opts.pool_size);
                try {
                    Rational acc(0);
                    for (const auto& t : spec.terms_q(env, n, k)) acc += t;
                    if (acc != 0) {
                        rep.status = Status::Fail;
                        std::map<std::string, std::string> w;
                        for (const auto& [key, val] : env) w[key] = val.str();
                        rep.witness = std::move(w);
                        break;
                    }
                    ++done;
                } catch (const pole_error&) {
                } catch (const zero_divisor_error&) {
                }
            }
        }
    } catch (const error& e) {
        rep.status = Status::Error;
        rep.detail = e.what();
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerificationReport verify_certificate(const CertificateSpec& spec, long n,
                                      const CheckOptions& opts) {
    VerificationReport rep;
    rep.identity = spec.id;
    rep.instance.n = n;
    rep.mode = opts.probabilistic ? "probabilistic" : "exact";
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (n < spec.min_n) throw error(spec.id + " requires n >= " + std::to_string(spec.min_n));
        if (!opts.probabilistic) {
            Workspace ws;
            auto env = sym_env(spec.symbols, ws);
            bool ok = spec.h_sym(env, n, n).to_rf().is_zero() &&
                      spec.h_sym(env, n, -1).to_rf().is_zero();
            if (!ok) rep.detail = "boundary H(n,n) or H(n,-1) nonzero";
            for (long k = 0; ok && k <= n; ++k) {
                auto terms = spec.lhs_sym(env, n, k);
                auto hk = spec.h_sym(env, n, k);
                hk.mul_rational(Rational(-1));
                terms.push_back(std::move(hk));
                terms.push_back(spec.h_sym(env, n, k - 1));
                if (!sum_factored(terms).is_zero()) {
                    ok = false;
                    rep.detail = "certificate equation fails at k=" + std::to_string(k);
                }
            }
            rep.status = ok ? Status::Pass : Status::Fail;
        } else {
            rep.instance.kind = Instance::Kind::Seeded;
            rep.instance.seed = opts.seed;
            SplitMix64 rng(fnv1a(opts.seed, spec.id, n, 0));
            rep.status = Status::Pass;
            int done = 0, budget = 100 * opts.trials;
            while (done < opts.trials && rep.status == Status::Pass) {
                if (budget-- <= 0)
                    throw resample_budget_error("resample budget exhausted avoiding poles");
                auto env = sampled_env(spec.symbols, rng, opts.pool_size);
                try {
                    bool ok = spec.h_q(env, n, n) == 0 && spec.h_q(env, n, -1) == 0;
                    for (long k = 0; ok && k <= n; ++k) {
                        Rational acc(0);
                        for (const auto& t : spec.lhs_q(env, n, k)) acc += t;
                        acc -= spec.h_q(env, n, k);
                        acc += spec.h_q(env, n, k - 1);
                        if (acc != 0) ok = false;
                    }
                    if (!ok) {
                        rep.status = Status::Fail;
                        std::map<std::string, std::string> w;
                        for (const auto& [key, val] : env) w[key] = val.str();
                        rep.witness = std::move(w);
                        break;
                    }
                    ++done;
                } catch (const pole_error&) {
                } catch (const zero_divisor_error&) {
                }
            }
        }
    } catch (const error& e) {
        rep.status = Status::Error;
        rep.detail = e.what();
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerificationReport verify_split_poised_base_telescoping(long k) {
    VerificationReport rep;
    rep.identity = "split_poised_base_telescoping";
    rep.instance.n = k;
    rep.mode = "exact";
    auto t0 = std::chrono::steady_clock::now();

    Workspace ws{"q", "A", "B", "C"};
    auto q = RationalFunction::var(ws.lookup("q"));
    auto A = RationalFunction::var(ws.lookup("A"));
    auto B = RationalFunction::var(ws.lookup("B"));
    auto C = RationalFunction::var(ws.lookup("C"));
    const auto one = RationalFunction::from_rational(Rational(1));

    auto u = [&](long j) -> FactoredRF {
        auto v = SymbolicCtx::poch(A * q, q, j);
        v = SymbolicCtx::mul(std::move(v), SymbolicCtx::poch(B * q, q, j));
        v = SymbolicCtx::mul(std::move(v), SymbolicCtx::poch(C * q, q, j));
        v = SymbolicCtx::mul(std::move(v), SymbolicCtx::poch(A * q / (B * C), q, j));
        v = SymbolicCtx::mul(std::move(v), SymbolicCtx::rpoch(q, q, j));
        v = SymbolicCtx::mul(std::move(v), SymbolicCtx::rpoch(A * q / B, q, j));
        v = SymbolicCtx::mul(std::move(v), SymbolicCtx::rpoch(A * q / C, q, j));
        v = SymbolicCtx::mul(std::move(v), SymbolicCtx::rpoch(B * C * q, q, j));
        return v;
    };

    auto lhs = SymbolicCtx::from_scalar(one - A * q.pow(2 * k));
    lhs = SymbolicCtx::mul(std::move(lhs), SymbolicCtx::pow(one - A, -1));
    lhs = SymbolicCtx::mul(std::move(lhs), SymbolicCtx::poch(A, q, k));
    lhs = SymbolicCtx::mul(std::move(lhs), SymbolicCtx::poch(B, q, k));
    lhs = SymbolicCtx::mul(std::move(lhs), SymbolicCtx::poch(C, q, k));
    lhs = SymbolicCtx::mul(std::move(lhs), SymbolicCtx::poch(A / (B * C), q, k));
    lhs = SymbolicCtx::mul(std::move(lhs), SymbolicCtx::pow(q, k));
    lhs = SymbolicCtx::mul(std::move(lhs), SymbolicCtx::rpoch(q, q, k));
    lhs = SymbolicCtx::mul(std::move(lhs), SymbolicCtx::rpoch(A * q / B, q, k));
    lhs = SymbolicCtx::mul(std::move(lhs), SymbolicCtx::rpoch(A * q / C, q, k));
    lhs = SymbolicCtx::mul(std::move(lhs), SymbolicCtx::rpoch(B * C * q, q, k));
    lhs.mul_rational(Rational(-1));

    auto um1 = u(k - 1);
    um1.mul_rational(Rational(-1));
    RationalFunction residue = sum_factored({u(k), std::move(um1), std::move(lhs)});
    rep.status = residue.is_zero() ? Status::Pass : Status::Fail;
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace qcontig
