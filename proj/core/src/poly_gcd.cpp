#include "qcontig/polynomial.hpp"
#include "qcontig/rng.hpp"

#include <algorithm>
#include <cassert>

// Multivariate GCD over Q, defined on primitive parts.
//
// Fast paths: structural equality, monomial extraction, trial division both
// ways, and a modular univariate-image probe that certifies coprimality.
// The probe is one-sided: when the image gcd has degree 0 in a variable and
// the leading coefficients survived the evaluation, the true gcd has degree
// 0 in that variable. Only when the probe reports a likely common factor do
// we fall back to a primitive pseudo-remainder sequence.

namespace qcontig {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1; // Mersenne prime

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a % kPrime, kPrime - 2); }

std::uint64_t rational_mod(const Rational& c) {
    Int n = num(c), d = den(c);
    Int np = n % Int(kPrime);
    if (np < 0) np += Int(kPrime);
    Int dp = d % Int(kPrime);
    std::uint64_t nu = np.convert_to<std::uint64_t>();
    std::uint64_t du = dp.convert_to<std::uint64_t>();
    if (du == 0) return UINT64_MAX; // degenerate: denominator divisible by p
    return mulmod(nu, invmod(du));
}

// Univariate image of `p` in variable `var` with all other variables at
// `point` (mod kPrime). Returns dense coefficient vector; empty on failure.
std::vector<std::uint64_t> univariate_image(const Polynomial& p, std::uint32_t var,
                                            const std::vector<std::uint64_t>& point) {
    const int d = p.degree(var);
    std::vector<std::uint64_t> img(static_cast<std::size_t>(d) + 1, 0);
    // precompute power tables for the other variables
    std::vector<std::vector<std::uint64_t>> pows(p.nvars());
    for (std::uint32_t v = 0; v < p.nvars(); ++v) {
        if (v == var) continue;
        int dv = p.degree(v);
        pows[v].resize(static_cast<std::size_t>(dv) + 1);
        pows[v][0] = 1;
        for (int e = 1; e <= dv; ++e) pows[v][e] = mulmod(pows[v][e - 1], point[v]);
    }
    for (std::size_t t = 0; t < p.term_count(); ++t) {
        std::uint64_t c = rational_mod(p.coeff(t));
        if (c == UINT64_MAX) return {};
        auto row = p.exps(t);
        std::uint64_t m = c;
        for (std::uint32_t v = 0; v < p.nvars(); ++v) {
            if (v == var || row[v] == 0) continue;
            m = mulmod(m, pows[v][row[v]]);
        }
        std::size_t e = var < p.nvars() ? row[var] : 0;
        img[e] = (img[e] + m) % kPrime;
    }
    while (!img.empty() && img.back() == 0) img.pop_back();
    return img;
}

int uni_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    auto deg = [](const std::vector<std::uint64_t>& p) { return static_cast<int>(p.size()) - 1; };
    while (!b.empty()) {
        // a mod b
        std::uint64_t inv_lb = invmod(b.back());
        while (deg(a) >= deg(b) && !a.empty()) {
            std::uint64_t f = mulmod(a.back(), inv_lb);
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t s = mulmod(f, b[i]);
                a[off + i] = (a[off + i] + kPrime - s) % kPrime;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return deg(a);
}

} // namespace

namespace detail {

int coprimality_probe(const Polynomial& a, const Polynomial& b, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::uint32_t n = std::max(a.nvars(), b.nvars());
    std::vector<std::uint32_t> common;
    for (std::uint32_t v = 0; v < n; ++v)
        if (a.degree(v) > 0 && b.degree(v) > 0) common.push_back(v);
    if (common.empty()) return 0;

    for (std::uint32_t v : common) {
        bool certified = false;
        for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
            std::vector<std::uint64_t> point(n);
            for (auto& x : point) x = 1 + rng.next() % (kPrime - 1);
            auto ia = univariate_image(a.aligned(n), v, point);
            auto ib = univariate_image(b.aligned(n), v, point);
            if (ia.empty() || ib.empty()) continue;
            // leading coefficient must survive the evaluation, otherwise the
            // image gcd can lose degree
            if (static_cast<int>(ia.size()) - 1 != a.degree(v)) continue;
            if (static_cast<int>(ib.size()) - 1 != b.degree(v)) continue;
            int d = uni_gcd_degree(std::move(ia), std::move(ib));
            if (d == 0) certified = true;
            else return 1; // likely common factor in v
        }
        if (!certified) return -1;
    }
    return 0;
}

} // namespace detail

namespace {

// content of p viewed as a univariate polynomial in `var` with polynomial
// coefficients: gcd of those coefficients (recursive)
Polynomial content_in_var(const Polynomial& p, std::uint32_t var) {
    // split terms by exponent of var
    std::vector<Polynomial> coeffs;
    const std::uint32_t n = p.nvars();
    const int d = p.degree(var);
    std::vector<PolyBuilder> builders;
    builders.reserve(static_cast<std::size_t>(d) + 1);
    for (int e = 0; e <= d; ++e) builders.emplace_back(n);
    std::vector<Polynomial::Exp> row(n);
    for (std::size_t t = 0; t < p.term_count(); ++t) {
        auto e = p.exps(t);
        std::copy(e.begin(), e.end(), row.begin());
        int ev = row[var];
        row[var] = 0;
        builders[ev].add(row, p.coeff(t));
    }
    Polynomial g;
    for (auto& bld : builders) {
        Polynomial c = bld.take();
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive_part() : Polynomial::gcd(g, c);
        if (g.is_one()) break;
    }
    return g.is_zero() ? Polynomial::constant(Rational(1)) : g;
}

// pseudo-remainder of a by b w.r.t. var (deg_var a >= deg_var b > 0)
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, std::uint32_t var) {
    const int db = b.degree(var);
    // leading coefficient of b in var
    auto lead_of = [var](const Polynomial& p, int d) {
        const std::uint32_t n = p.nvars();
        PolyBuilder bld(n);
        std::vector<Polynomial::Exp> row(n);
        for (std::size_t t = 0; t < p.term_count(); ++t) {
            auto e = p.exps(t);
            if (e[var] != d) continue;
            std::copy(e.begin(), e.end(), row.begin());
            row[var] = 0;
            bld.add(row, p.coeff(t));
        }
        return bld.take();
    };
    const Polynomial lb = lead_of(b, db);
    while (!a.is_zero() && a.degree(var) >= db) {
        const int da = a.degree(var);
        Polynomial la = lead_of(a, da);
        // a = lb*a - la*x^(da-db)*b
        std::vector<Polynomial::Exp> sh(std::max(a.nvars(), b.nvars()), 0);
        sh[var] = static_cast<Polynomial::Exp>(da - db);
        Polynomial shift_b = b.aligned(static_cast<std::uint32_t>(sh.size()))
                                 .shifted(Rational(1), sh);
        a = a * lb - shift_b * la;
    }
    return a;
}

Polynomial gcd_prs(Polynomial a, Polynomial b, std::uint32_t var) {
    if (a.degree(var) < b.degree(var)) std::swap(a, b);
    Polynomial ca = content_in_var(a, var);
    Polynomial cb = content_in_var(b, var);
    Polynomial cont_gcd = Polynomial::gcd(ca, cb);
    a = a.divexact(ca);
    b = b.divexact(cb);
    while (true) {
        if (b.is_zero()) return (cont_gcd * a.primitive_part()).primitive_part();
        if (b.degree(var) == 0) return cont_gcd;
        // quick exit: b divides a
        if (auto q = a.try_divide(b); q.has_value())
            return (cont_gcd * b.primitive_part()).primitive_part();
        Polynomial r = pseudo_rem(a, b, var);
        a = std::move(b);
        if (r.is_zero()) {
            b = Polynomial();
        } else {
            b = r.divexact(content_in_var(r, var)).primitive_part();
        }
    }
}

} // namespace

Polynomial Polynomial::gcd(const Polynomial& a0, const Polynomial& b0) {
    if (a0.is_zero()) return b0.primitive_part();
    if (b0.is_zero()) return a0.primitive_part();
    Polynomial a = a0.primitive_part();
    Polynomial b = b0.primitive_part();
    if (a == b) return a;
    if (a.is_constant() || b.is_constant()) return constant(Rational(1));

    // common monomial part
    const std::uint32_t n = std::max(a.nvars(), b.nvars());
    a = a.aligned(n);
    b = b.aligned(n);
    std::vector<Exp> mono(n, 0);
    auto min_exps = [n](const Polynomial& p, std::vector<Exp>& m) {
        for (std::uint32_t v = 0; v < n; ++v) {
            Exp mn = 0xffff;
            for (std::size_t t = 0; t < p.term_count(); ++t)
                mn = std::min(mn, p.exps(t)[v]);
            m[v] = std::min(m[v], mn);
        }
    };
    std::vector<Exp> ma(n, 0xffff), mb(n, 0xffff);
    min_exps(a, ma);
    min_exps(b, mb);
    bool have_mono = false;
    for (std::uint32_t v = 0; v < n; ++v) {
        mono[v] = std::min(ma[v], mb[v]);
        if (mono[v]) have_mono = true;
    }
    Polynomial common_mono = monomial(Rational(1), mono);
    if (have_mono) {
        a = a.divexact(common_mono);
        b = b.divexact(common_mono);
    }

    Polynomial result = common_mono;
    if (a.is_constant() || b.is_constant()) return result;

    // trial division both ways
    if (a.term_count() <= b.term_count()) {
        if (b.try_divide(a).has_value()) return (result * a).primitive_part();
    } else if (a.try_divide(b).has_value()) {
        return (result * b).primitive_part();
    }

    int probe = detail::coprimality_probe(a, b, 0x9e3779b97f4a7c15ull);
    if (probe == 0) return result;

    // pick a main variable common to both with smallest min degree
    std::uint32_t var = n;
    int best = INT32_MAX;
    for (std::uint32_t v = 0; v < n; ++v) {
        int da = a.degree(v), db = b.degree(v);
        if (da > 0 && db > 0 && std::min(da, db) < best) {
            best = std::min(da, db);
            var = v;
        }
    }
    if (var == n) return result; // no common variable

    Polynomial g = gcd_prs(a, b, var);
    return (result * g).primitive_part();
}

} // namespace qcontig
