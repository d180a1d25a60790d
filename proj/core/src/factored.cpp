#include "qcontig/factored.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace qcontig {

namespace {

// Cyclotomic polynomials in one variable, cached by (var, order is implied
// by caller alignment). Phi_d computed as (x^d - 1) / prod_{e|d, e<d} Phi_e.
Polynomial x_pow_minus_one(Symbol v, unsigned m) {
    Polynomial p = Polynomial::variable(v, m) - Polynomial::constant(Rational(1));
    return p;
}

void cyclotomic_factors(Symbol v, unsigned m, std::vector<Polynomial>& out) {
    // returns Phi_d for all d | m (with multiplicity 1 each)
    std::vector<unsigned> divs;
    for (unsigned d = 1; d <= m; ++d)
        if (m % d == 0) divs.push_back(d);
    std::map<unsigned, Polynomial> phi;
    for (unsigned d : divs) {
        Polynomial p = x_pow_minus_one(v, d);
        for (unsigned e : divs) {
            if (e >= d || d % e != 0) continue;
            p = p.divexact(phi.at(e));
        }
        phi.emplace(d, std::move(p));
    }
    for (unsigned d : divs) out.push_back(std::move(phi.at(d)));
}

} // namespace

void split_factor(const Polynomial& p0, std::vector<std::pair<Polynomial, int>>& out, int exp) {
    assert(!p0.is_zero());
    if (p0.is_constant()) return;

    // monomial content -> individual variable powers
    const std::uint32_t n = p0.nvars();
    std::vector<Polynomial::Exp> mono(n, 0xffff);
    for (std::size_t t = 0; t < p0.term_count(); ++t) {
        auto row = p0.exps(t);
        for (std::uint32_t v = 0; v < n; ++v) mono[v] = std::min(mono[v], row[v]);
    }
    Polynomial p = p0;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (mono[v] == 0) continue;
        out.emplace_back(Polynomial::variable(Symbol{v}), exp * static_cast<int>(mono[v]));
    }
    if (std::any_of(mono.begin(), mono.end(), [](auto e) { return e != 0; })) {
        std::vector<Polynomial::Exp> m2(mono.begin(), mono.end());
        p = p.divexact(Polynomial::monomial(Rational(1), m2));
    }
    if (p.is_constant()) {
        assert(p.is_one());
        return;
    }

    if (p.term_count() == 2) {
        // binomial c1*M1 - c2*M2 (descending order, lead positive, coprime
        // integer coefficients, disjoint monomials after content removal)
        const Rational& c1 = p.coeff(0);
        const Rational& c2 = p.coeff(1);
        auto e1 = p.exps(0);
        auto e2 = p.exps(1);

        // difference of squares
        if (c2 < 0) {
            bool even = true;
            for (std::uint32_t v = 0; v < n; ++v)
                if ((e1[v] | e2[v]) & 1) { even = false; break; }
            Rational s1, s2;
            if (even && try_sqrt(c1, s1) && try_sqrt(-c2, s2)) {
                std::vector<Polynomial::Exp> h1(n), h2(n);
                for (std::uint32_t v = 0; v < n; ++v) {
                    h1[v] = static_cast<Polynomial::Exp>(e1[v] / 2);
                    h2[v] = static_cast<Polynomial::Exp>(e2[v] / 2);
                }
                Polynomial a = Polynomial::monomial(s1, h1);
                Polynomial b = Polynomial::monomial(s2, h2);
                split_factor((a - b).primitive_part(), out, exp);
                split_factor((a + b).primitive_part(), out, exp);
                return;
            }
        }

        // univariate v^m -+ 1: cyclotomic split
        std::uint32_t var = n;
        bool univariate = true;
        for (std::uint32_t v = 0; v < n && univariate; ++v) {
            if (e1[v] == 0 && e2[v] == 0) continue;
            if (var == n) var = v;
            else univariate = false;
        }
        if (univariate && var != n && c1 == 1 && e2[var] == 0 && (c2 == 1 || c2 == -1)) {
            unsigned m = e1[var];
            if (m > 1) {
                std::vector<Polynomial> fs;
                if (c2 == -1) {
                    cyclotomic_factors(Symbol{var}, m, fs); // v^m - 1
                } else {
                    // v^m + 1 = (v^{2m} - 1)/(v^m - 1): Phi_d for d | 2m, d not| m
                    std::vector<Polynomial> f2m, fm;
                    cyclotomic_factors(Symbol{var}, 2 * m, f2m);
                    cyclotomic_factors(Symbol{var}, m, fm);
                    for (auto& f : f2m) {
                        bool in_m = false;
                        for (auto& g : fm)
                            if (f == g) { in_m = true; break; }
                        if (!in_m) fs.push_back(std::move(f));
                    }
                }
                for (auto& f : fs) out.emplace_back(std::move(f), exp);
                return;
            }
        }
    }

    out.emplace_back(std::move(p), exp);
}

void FactoredRF::merge_factor(Polynomial p, int exp) {
    if (exp == 0) return;
    auto it = std::lower_bound(
        factors_.begin(), factors_.end(), p,
        [](const auto& a, const Polynomial& b) { return a.first.compare(b) == std::strong_ordering::less; });
    if (it != factors_.end() && it->first == p) {
        it->second += exp;
        if (it->second == 0) factors_.erase(it);
    } else {
        factors_.emplace(it, std::move(p), exp);
    }
}

void FactoredRF::mul_rational(const Rational& c) {
    if (c == 0) {
        coeff_ = 0;
        factors_.clear();
        return;
    }
    coeff_ *= c;
}

void FactoredRF::mul_poly(const Polynomial& p, int exp) {
    if (is_zero()) return;
    if (p.is_zero()) {
        if (exp < 0) throw zero_divisor_error("division by zero polynomial factor");
        coeff_ = 0;
        factors_.clear();
        return;
    }
    Rational c = p.content();
    mul_rational(pow_rational(c, exp));
    if (is_zero()) return;
    Polynomial pp = p.primitive_part();
    if (pp.is_one()) return;
    std::vector<std::pair<Polynomial, int>> pieces;
    split_factor(pp, pieces, exp);
    for (auto& [f, e] : pieces) merge_factor(std::move(f), e);
}

void FactoredRF::mul_rf(const RationalFunction& f, int exp) {
    if (is_zero()) return;
    if (f.is_zero()) {
        if (exp < 0) throw zero_divisor_error("division by zero rational function");
        coeff_ = 0;
        factors_.clear();
        return;
    }
    mul_poly(f.num(), exp);
    mul_poly(f.den(), -exp);
}

void FactoredRF::mul(const FactoredRF& o, int exp) {
    if (is_zero()) return;
    if (o.is_zero()) {
        if (exp < 0) throw zero_divisor_error("division by zero factored value");
        coeff_ = 0;
        factors_.clear();
        return;
    }
    mul_rational(pow_rational(o.coeff_, exp));
    for (const auto& [f, e] : o.factors_) merge_factor(f, e * exp);
}

RationalFunction FactoredRF::to_rf() const {
    if (is_zero()) return RationalFunction();
    Polynomial num = Polynomial::constant(coeff_);
    Polynomial den = Polynomial::constant(Rational(1));
    for (const auto& [f, e] : factors_) {
        Polynomial& dst = e > 0 ? num : den;
        for (int i = 0; i < std::abs(e); ++i) dst *= f;
    }
    // factors are coprime by construction; make() still certifies via the
    // cheap probe and normalizes scaling
    return RationalFunction::make(std::move(num), std::move(den));
}

RationalFunction sum_factored(const std::vector<FactoredRF>& terms) {
    // lcm of denominators as a factor multiset
    std::map<Polynomial, int, decltype([](const Polynomial& a, const Polynomial& b) {
                 return a.compare(b) == std::strong_ordering::less;
             })>
        lcm;
    bool any = false;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        any = true;
        for (const auto& [f, e] : t.factors())
            if (e < 0) {
                int& cur = lcm[f];
                cur = std::max(cur, -e);
            }
    }
    if (!any) return RationalFunction();

    Polynomial num;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        Polynomial part = Polynomial::constant(t.coeff());
        for (const auto& [f, e] : t.factors())
            for (int i = 0; i < e; ++i) part *= f;
        for (const auto& [f, need] : lcm) {
            int have = 0;
            for (const auto& [g, e] : t.factors())
                if (e < 0 && g == f) { have = -e; break; }
            for (int i = have; i < need; ++i) part *= f;
        }
        num += part;
    }
    if (num.is_zero()) return RationalFunction();

    // reduce against the known denominator factorization
    Polynomial den = Polynomial::constant(Rational(1));
    for (auto& [f, e] : lcm) {
        while (e > 0) {
            auto q = num.try_divide(f);
            if (!q) break;
            num = std::move(*q);
            --e;
        }
        for (int i = 0; i < e; ++i) den *= f;
    }
    return RationalFunction::make(std::move(num), std::move(den));
}

} // namespace qcontig
