#include "qcontig/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace qcontig {

namespace {

// Descending lex order: variable 0 compared first, larger exponent first.
int cmp_rows(const Polynomial::Exp* a, std::uint32_t na,
             const Polynomial::Exp* b, std::uint32_t nb) {
    const std::uint32_t n = std::max(na, nb);
    for (std::uint32_t v = 0; v < n; ++v) {
        const Polynomial::Exp ea = v < na ? a[v] : 0;
        const Polynomial::Exp eb = v < nb ? b[v] : 0;
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
}

} // namespace

Rational pow_rational(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    Rational base = r;
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv) {
        if (base == 0) throw zero_divisor_error("0 raised to a negative power");
        base = Rational(1) / base;
    }
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool try_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    Int n = num(r), d = den(r);
    if (mpz_perfect_square_p(n.backend().data()) == 0) return false;
    if (mpz_perfect_square_p(d.backend().data()) == 0) return false;
    Int sn = sqrt(n), sd = sqrt(d);
    out = Rational(sn) / Rational(sd);
    return true;
}

bool Polynomial::mono_is_trivial(std::size_t t) const {
    auto e = exps(t);
    return std::all_of(e.begin(), e.end(), [](Exp x) { return x == 0; });
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c == 0) return p;
    p.nvars_ = 0;
    p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::variable(Symbol s, unsigned exp) {
    Polynomial p;
    if (exp == 0) return constant(Rational(1));
    p.nvars_ = s.id + 1;
    p.exps_.assign(p.nvars_, 0);
    p.exps_[s.id] = static_cast<Exp>(exp);
    p.coeffs_.emplace_back(1);
    return p;
}

Polynomial Polynomial::monomial(Rational c, std::span<const Exp> exps) {
    Polynomial p;
    if (c == 0) return p;
    p.nvars_ = static_cast<std::uint32_t>(exps.size());
    p.exps_.assign(exps.begin(), exps.end());
    p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::aligned(std::uint32_t n) const {
    if (nvars_ >= n) return *this;
    Polynomial p;
    p.nvars_ = n;
    p.coeffs_ = coeffs_;
    p.exps_.assign(term_count() * n, 0);
    for (std::size_t t = 0; t < term_count(); ++t)
        std::copy_n(exps_.data() + t * nvars_, nvars_, p.exps_.data() + t * n);
    return p;
}

void Polynomial::align_pair(const Polynomial& a, const Polynomial& b,
                            Polynomial& a2, Polynomial& b2,
                            const Polynomial*& pa, const Polynomial*& pb) {
    if (a.nvars_ == b.nvars_) {
        pa = &a;
        pb = &b;
        return;
    }
    const std::uint32_t n = std::max(a.nvars_, b.nvars_);
    if (a.nvars_ < n) {
        a2 = a.aligned(n);
        pa = &a2;
    } else {
        pa = &a;
    }
    if (b.nvars_ < n) {
        b2 = b.aligned(n);
        pb = &b2;
    } else {
        pb = &b;
    }
}

int Polynomial::degree(std::uint32_t var) const {
    if (is_zero()) return -1;
    if (var >= nvars_) return 0;
    int d = 0;
    for (std::size_t t = 0; t < term_count(); ++t)
        d = std::max(d, static_cast<int>(exps_[t * nvars_ + var]));
    return d;
}

int Polynomial::total_degree() const {
    if (is_zero()) return -1;
    int d = 0;
    for (std::size_t t = 0; t < term_count(); ++t) {
        int s = 0;
        for (std::uint32_t v = 0; v < nvars_; ++v) s += exps_[t * nvars_ + v];
        d = std::max(d, s);
    }
    return d;
}

std::vector<std::uint32_t> Polynomial::support() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < nvars_; ++v)
        if (degree(v) > 0) out.push_back(v);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial sa, sb;
    const Polynomial *a, *b;
    align_pair(*this, o, sa, sb, a, b);
    const std::uint32_t n = a->nvars_;

    Polynomial r;
    r.nvars_ = n;
    r.exps_.reserve(a->exps_.size() + b->exps_.size());
    r.coeffs_.reserve(a->coeffs_.size() + b->coeffs_.size());

    std::size_t i = 0, j = 0;
    while (i < a->term_count() && j < b->term_count()) {
        int c = cmp_rows(a->exps_.data() + i * n, n, b->exps_.data() + j * n, n);
        if (c > 0) {
            r.exps_.insert(r.exps_.end(), a->exps_.begin() + i * n, a->exps_.begin() + (i + 1) * n);
            r.coeffs_.push_back(a->coeffs_[i]);
            ++i;
        } else if (c < 0) {
            r.exps_.insert(r.exps_.end(), b->exps_.begin() + j * n, b->exps_.begin() + (j + 1) * n);
            r.coeffs_.push_back(b->coeffs_[j]);
            ++j;
        } else {
            Rational s = a->coeffs_[i] + b->coeffs_[j];
            if (s != 0) {
                r.exps_.insert(r.exps_.end(), a->exps_.begin() + i * n, a->exps_.begin() + (i + 1) * n);
                r.coeffs_.push_back(std::move(s));
            }
            ++i;
            ++j;
        }
    }
    for (; i < a->term_count(); ++i) {
        r.exps_.insert(r.exps_.end(), a->exps_.begin() + i * n, a->exps_.begin() + (i + 1) * n);
        r.coeffs_.push_back(a->coeffs_[i]);
    }
    for (; j < b->term_count(); ++j) {
        r.exps_.insert(r.exps_.end(), b->exps_.begin() + j * n, b->exps_.begin() + (j + 1) * n);
        r.coeffs_.push_back(b->coeffs_[j]);
    }
    if (r.coeffs_.empty()) return Polynomial();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial p = *this;
    for (auto& x : p.coeffs_) x *= c;
    return p;
}

Polynomial Polynomial::shifted(const Rational& c, std::span<const Exp> sh) const {
    if (c == 0 || is_zero()) return Polynomial();
    const std::uint32_t n = std::max<std::uint32_t>(nvars_, static_cast<std::uint32_t>(sh.size()));
    Polynomial p = aligned(n);
    for (std::size_t t = 0; t < p.term_count(); ++t) {
        for (std::size_t v = 0; v < sh.size(); ++v) {
            unsigned s = p.exps_[t * n + v] + sh[v];
            assert(s <= 0xffff && "exponent overflow");
            p.exps_[t * n + v] = static_cast<Exp>(s);
        }
        p.coeffs_[t] *= c;
    }
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    const Polynomial* small = this;
    const Polynomial* big = &o;
    if (small->term_count() > big->term_count()) std::swap(small, big);

    if (small->term_count() == 1)
        return big->aligned(small->nvars_).shifted(small->coeffs_[0], small->exps(0));

    // Tree-merge of shifted copies keeps products of short factors cheap.
    if (small->term_count() <= 16) {
        std::vector<Polynomial> parts;
        parts.reserve(small->term_count());
        Polynomial bigA = big->aligned(small->nvars_);
        for (std::size_t t = 0; t < small->term_count(); ++t)
            parts.push_back(bigA.shifted(small->coeffs_[t], small->exps(t)));
        while (parts.size() > 1) {
            std::vector<Polynomial> next;
            for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
                next.push_back(parts[i] + parts[i + 1]);
            if (parts.size() & 1) next.push_back(std::move(parts.back()));
            parts = std::move(next);
        }
        return std::move(parts[0]);
    }

    // General case: hash accumulation.
    Polynomial sa, sb;
    const Polynomial *a, *b;
    align_pair(*small, *big, sa, sb, a, b);
    const std::uint32_t n = a->nvars_;
    std::unordered_map<std::u16string, Rational> acc;
    acc.reserve(a->term_count() * 2);
    std::u16string key(n, 0);
    for (std::size_t i = 0; i < a->term_count(); ++i) {
        const Exp* ea = a->exps_.data() + i * n;
        for (std::size_t j = 0; j < b->term_count(); ++j) {
            const Exp* eb = b->exps_.data() + j * n;
            for (std::uint32_t v = 0; v < n; ++v)
                key[v] = static_cast<char16_t>(ea[v] + eb[v]);
            acc[key] += a->coeffs_[i] * b->coeffs_[j];
        }
    }
    PolyBuilder builder(n);
    std::vector<Exp> row(n);
    for (auto& [k, c] : acc) {
        if (c == 0) continue;
        for (std::uint32_t v = 0; v < n; ++v) row[v] = static_cast<Exp>(k[v]);
        builder.add(row, std::move(c));
    }
    return builder.take();
}

bool Polynomial::operator==(const Polynomial& o) const {
    return compare(o) == std::strong_ordering::equal;
}

std::strong_ordering Polynomial::compare(const Polynomial& o) const {
    if (term_count() != o.term_count()) return term_count() <=> o.term_count();
    for (std::size_t t = 0; t < term_count(); ++t) {
        int c = cmp_rows(exps_.data() + t * nvars_, nvars_,
                         o.exps_.data() + t * o.nvars_, o.nvars_);
        if (c != 0) return c > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        if (coeffs_[t] != o.coeffs_[t])
            return coeffs_[t] > o.coeffs_[t] ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

namespace {

// Heap entry for Johnson-style division: the next unconsumed contribution to
// the running remainder, either an original dividend term or a product
// q_i * d_j (j >= 1) generated lazily.
struct DivEntry {
    std::vector<Polynomial::Exp> mono;
    std::size_t qi;  // quotient term index, or SIZE_MAX for dividend stream
    std::size_t j;   // divisor tail index (>=1) or dividend term index
};

} // namespace

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& d) const {
    if (d.is_zero()) throw zero_divisor_error("polynomial division by zero");
    if (is_zero()) return Polynomial();
    Polynomial sa, sb;
    const Polynomial *a, *b;
    align_pair(*this, d, sa, sb, a, b);
    const std::uint32_t n = a->nvars_;

    const Exp* dlead = b->exps_.data();
    const Rational& dlc = b->coeffs_[0];

    std::vector<Exp> qexps;
    std::vector<Rational> qcoeffs;

    auto entry_less = [n](const DivEntry& x, const DivEntry& y) {
        return cmp_rows(x.mono.data(), n, y.mono.data(), n) < 0;
    };
    std::priority_queue<DivEntry, std::vector<DivEntry>, decltype(entry_less)> heap(entry_less);

    heap.push(DivEntry{{a->exps_.begin(), a->exps_.begin() + n}, SIZE_MAX, 0});

    std::vector<Exp> qmono(n);
    while (!heap.empty()) {
        std::vector<Exp> mono = heap.top().mono;
        Rational c(0);
        while (!heap.empty() && cmp_rows(heap.top().mono.data(), n, mono.data(), n) == 0) {
            DivEntry e = heap.top();
            heap.pop();
            if (e.qi == SIZE_MAX) {
                c += a->coeffs_[e.j];
                if (e.j + 1 < a->term_count())
                    heap.push(DivEntry{
                        {a->exps_.begin() + (e.j + 1) * n, a->exps_.begin() + (e.j + 2) * n},
                        SIZE_MAX,
                        e.j + 1});
            } else {
                // subtract q_qi * d_j
                c -= qcoeffs[e.qi] * b->coeffs_[e.j];
                if (e.j + 1 < b->term_count()) {
                    DivEntry ne;
                    ne.qi = e.qi;
                    ne.j = e.j + 1;
                    ne.mono.resize(n);
                    const Exp* qe = qexps.data() + e.qi * n;
                    const Exp* de = b->exps_.data() + ne.j * n;
                    for (std::uint32_t v = 0; v < n; ++v)
                        ne.mono[v] = static_cast<Exp>(qe[v] + de[v]);
                    heap.push(std::move(ne));
                }
            }
        }
        if (c == 0) continue;
        // mono must be divisible by the divisor's leading monomial.
        for (std::uint32_t v = 0; v < n; ++v) {
            if (mono[v] < dlead[v]) return std::nullopt;
            qmono[v] = static_cast<Exp>(mono[v] - dlead[v]);
        }
        qexps.insert(qexps.end(), qmono.begin(), qmono.end());
        qcoeffs.push_back(c / dlc);
        if (b->term_count() > 1) {
            DivEntry ne;
            ne.qi = qcoeffs.size() - 1;
            ne.j = 1;
            ne.mono.resize(n);
            const Exp* de = b->exps_.data() + n;
            for (std::uint32_t v = 0; v < n; ++v)
                ne.mono[v] = static_cast<Exp>(qmono[v] + de[v]);
            heap.push(std::move(ne));
        }
    }

    Polynomial q;
    q.nvars_ = n;
    q.exps_ = std::move(qexps);
    q.coeffs_ = std::move(qcoeffs);
    return q;
}

Polynomial Polynomial::divexact(const Polynomial& d) const {
    auto q = try_divide(d);
    if (!q) throw error("divexact: not divisible");
    return std::move(*q);
}

Rational Polynomial::content() const {
    if (is_zero()) return Rational(0);
    Int g(0), l(1);
    for (const auto& c : coeffs_) {
        g = boost::multiprecision::gcd(g, num(c));
        l = boost::multiprecision::lcm(l, den(c));
    }
    Rational r = Rational(g) / Rational(l);
    if (leading_coeff() < 0) r = -r;
    return r;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / content());
}

std::string Polynomial::to_string(const Workspace& ws) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t t = 0; t < term_count(); ++t) {
        const Rational& c = coeffs_[t];
        if (t > 0) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        bool printed = false;
        if (a != 1 || mono_is_trivial(t)) {
            os << a.str();
            printed = true;
        }
        for (std::uint32_t v = 0; v < nvars_; ++v) {
            Exp e = exps_[t * nvars_ + v];
            if (e == 0) continue;
            if (printed) os << "*";
            os << (v < ws.size() ? ws.name(Symbol{v}) : "x" + std::to_string(v));
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

void PolyBuilder::add(std::span<const Polynomial::Exp> exps, Rational c) {
    assert(exps.size() == nvars_);
    exps_.insert(exps_.end(), exps.begin(), exps.end());
    coeffs_.push_back(std::move(c));
}

Polynomial PolyBuilder::take() {
    const std::uint32_t n = nvars_;
    const std::size_t cnt = coeffs_.size();
    std::vector<std::size_t> idx(cnt);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return cmp_rows(exps_.data() + a * n, n, exps_.data() + b * n, n) > 0;
    });
    Polynomial p;
    p.nvars_ = n;
    p.exps_.reserve(cnt * n);
    p.coeffs_.reserve(cnt);
    for (std::size_t k = 0; k < cnt;) {
        Rational c = std::move(coeffs_[idx[k]]);
        std::size_t j = k + 1;
        while (j < cnt &&
               cmp_rows(exps_.data() + idx[k] * n, n, exps_.data() + idx[j] * n, n) == 0) {
            c += coeffs_[idx[j]];
            ++j;
        }
        if (c != 0) {
            p.exps_.insert(p.exps_.end(), exps_.begin() + idx[k] * n,
                           exps_.begin() + (idx[k] + 1) * n);
            p.coeffs_.push_back(std::move(c));
        }
        k = j;
    }
    exps_.clear();
    coeffs_.clear();
    return p;
}

} // namespace qcontig
