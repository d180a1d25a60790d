#include "qcontig/rational_function.hpp"

#include <sstream>

#include "qcontig/rng.hpp"

namespace qcontig {

RationalFunction RationalFunction::make(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw zero_divisor_error("rational function with zero denominator");
    RationalFunction f;
    if (num.is_zero()) return f;

    if (!den.is_one()) {
        Polynomial g = Polynomial::gcd(num, den);
        if (!g.is_one()) {
            num = num.divexact(g);
            den = den.divexact(g);
        }
    }
    // scale so den is integer, content 1, positive leading coefficient
    Rational c = den.content();
    if (c != 1) {
        den = den.scaled(Rational(1) / c);
        num = num.scaled(Rational(1) / c);
    }
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

RationalFunction RationalFunction::from_rational(Rational c) {
    RationalFunction f;
    f.num_ = Polynomial::constant(std::move(c));
    return f;
}

RationalFunction RationalFunction::from_poly(Polynomial p) {
    RationalFunction f;
    f.num_ = std::move(p);
    return f;
}

RationalFunction RationalFunction::var(Symbol s) {
    RationalFunction f;
    f.num_ = Polynomial::variable(s);
    return f;
}

Rational RationalFunction::to_rational() const {
    if (!is_constant()) throw error("rational function is not constant");
    if (num_.is_zero()) return Rational(0);
    return num_.leading_coeff() / den_.leading_coeff();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Henrici: with g = gcd(d1, d2), d1 = g d1', d2 = g d2', the candidate
    // n1 d2' + n2 d1' over g d1' d2' only shares factors with g.
    Polynomial g = Polynomial::gcd(den_, o.den_);
    if (g.is_one()) {
        Polynomial n = num_ * o.den_ + o.num_ * den_;
        if (n.is_zero()) return RationalFunction();
        RationalFunction f;
        Polynomial d = den_ * o.den_;
        Rational c = d.content();
        if (c != 1) {
            d = d.scaled(Rational(1) / c);
            n = n.scaled(Rational(1) / c);
        }
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;
    }
    Polynomial d1r = den_.divexact(g);
    Polynomial d2r = o.den_.divexact(g);
    Polynomial n = num_ * d2r + o.num_ * d1r;
    if (n.is_zero()) return RationalFunction();
    Polynomial h = Polynomial::gcd(n, g);
    if (!h.is_one()) {
        n = n.divexact(h);
        g = g.divexact(h);
    }
    Polynomial d = g * d1r * d2r;
    RationalFunction f;
    Rational c = d.content();
    if (c != 1) {
        d = d.scaled(Rational(1) / c);
        n = n.scaled(Rational(1) / c);
    }
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    return f;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    Polynomial g1 = Polynomial::gcd(num_, o.den_);
    Polynomial g2 = Polynomial::gcd(o.num_, den_);
    Polynomial n = (g1.is_one() ? num_ : num_.divexact(g1)) *
                   (g2.is_one() ? o.num_ : o.num_.divexact(g2));
    Polynomial d = (g2.is_one() ? den_ : den_.divexact(g2)) *
                   (g1.is_one() ? o.den_ : o.den_.divexact(g1));
    RationalFunction f;
    Rational c = d.content();
    if (c != 1) {
        d = d.scaled(Rational(1) / c);
        n = n.scaled(Rational(1) / c);
    }
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    return f;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw zero_divisor_error("division by zero rational function");
    RationalFunction inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    Rational c = inv.den_.content();
    if (c != 1) {
        inv.den_ = inv.den_.scaled(Rational(1) / c);
        inv.num_ = inv.num_.scaled(Rational(1) / c);
    }
    return *this * inv;
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return from_rational(Rational(1));
    if (is_zero()) {
        if (e < 0) throw zero_divisor_error("0 raised to a negative power");
        return RationalFunction();
    }
    RationalFunction base = *this;
    if (e < 0) base = from_rational(Rational(1)) / base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    RationalFunction acc = from_rational(Rational(1));
    while (k) {
        if (k & 1) acc *= base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Rational RationalFunction::eval(std::span<const Rational> point) const {
    const std::uint32_t n = std::max(num_.nvars(), den_.nvars());
    if (point.size() < n) {
        // only a problem if a missing variable actually occurs
        for (std::uint32_t v = static_cast<std::uint32_t>(point.size()); v < n; ++v)
            if (num_.degree(v) > 0 || den_.degree(v) > 0)
                throw unassigned_symbol_error("unassigned symbol id " + std::to_string(v));
    }
    Rational zero(0), one(1);
    Rational d = den_.eval(point, zero, one);
    if (d == 0) throw pole_error("pole at evaluation point");
    return num_.eval(point, zero, one) / d;
}

Rational RationalFunction::eval(const Workspace& ws,
                                const std::map<std::string, Rational>& point) const {
    std::vector<Rational> vals(ws.size(), Rational(0));
    std::vector<bool> assigned(ws.size(), false);
    for (const auto& [name, v] : point) {
        Symbol s = ws.lookup(name);
        vals[s.id] = v;
        assigned[s.id] = true;
    }
    const std::uint32_t n = std::max(num_.nvars(), den_.nvars());
    for (std::uint32_t v = 0; v < n; ++v)
        if ((num_.degree(v) > 0 || den_.degree(v) > 0) && (v >= ws.size() || !assigned[v]))
            throw unassigned_symbol_error("unassigned symbol: " +
                                          (v < ws.size() ? ws.name(Symbol{v}) : std::to_string(v)));
    return eval(vals);
}

std::string RationalFunction::to_string(const Workspace& ws) const {
    if (den_.is_one()) return num_.to_string(ws);
    return "(" + num_.to_string(ws) + ") / (" + den_.to_string(ws) + ")";
}

EqualityResult rf_equal(const RationalFunction& a, const RationalFunction& b) {
    EqualityResult r;
    r.equal = (a == b);
    return r;
}

EqualityResult rf_equal(const RationalFunction& a, const RationalFunction& b,
                        const ProbabilisticOptions& opts) {
    if (opts.trials < 1) throw error("probabilistic equality requires trials >= 1");
    EqualityResult r;
    const std::uint32_t n =
        std::max(std::max(a.num().nvars(), a.den().nvars()),
                 std::max(b.num().nvars(), b.den().nvars()));
    const long dbound =
        std::max(0, std::max(a.num().total_degree() + std::max(0, b.den().total_degree()),
                             b.num().total_degree() + std::max(0, a.den().total_degree())));
    SplitMix64 rng(opts.seed);
    for (int t = 0; t < opts.trials; ++t) {
        int budget = opts.resample_budget;
        while (true) {
            if (budget-- <= 0)
                throw resample_budget_error("resample budget exhausted avoiding poles");
            std::vector<Rational> point(n);
            for (auto& p : point) p = Rational(rng.next_in(opts.pool_size));
            try {
                Rational va = a.eval(point);
                Rational vb = b.eval(point);
                if (va != vb) {
                    r.equal = false;
                    EqualityWitness w;
                    for (std::uint32_t v = 0; v < n; ++v) w.point[v] = point[v];
                    w.lhs = va;
                    w.rhs = vb;
                    r.witness = std::move(w);
                    return r;
                }
                break; // trial passed
            } catch (const pole_error&) {
                continue; // resample
            }
        }
    }
    r.equal = true;
    double ratio = static_cast<double>(dbound) / static_cast<double>(opts.pool_size);
    r.error_bound = 1.0;
    for (int t = 0; t < opts.trials; ++t) r.error_bound *= ratio;
    return r;
}

} // namespace qcontig
