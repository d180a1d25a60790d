#include "qcontig/contiguous.hpp"

#include <chrono>

namespace qcontig {

FactoredRF well_poised_term(const std::vector<RationalFunction>& a, const RationalFunction& q,
                            const RationalFunction& z, long k) {
    if (k < 0) return FactoredRF::zero();
    FactoredRF v;
    const RationalFunction one = RationalFunction::from_rational(Rational(1));
    for (const auto& ai : a)
        for (long j = 0; j < k; ++j) v.mul_rf(one - ai * q.pow(j), 1);
    for (long j = 0; j < k; ++j) v.mul_rf(one - q.pow(j + 1), -1);
    for (std::size_t i = 1; i < a.size(); ++i)
        for (long j = 0; j < k; ++j) v.mul_rf(one - a[0] * q.pow(j + 1) / a[i], -1);
    v.mul_rf(z, static_cast<int>(k));
    return v;
}

RationalFunction contiguous_alpha(const std::vector<RationalFunction>& a,
                                  const RationalFunction& q, const RationalFunction& z) {
    const std::size_t r = a.size() - 1;
    const RationalFunction one = RationalFunction::from_rational(Rational(1));
    const RationalFunction &a1 = a[0], &ar = a[r - 1], &ar1 = a[r];
    FactoredRF v;
    v.mul_rf(ar - ar1, 1);
    v.mul_rf(one - a1 / (ar * ar1), 1);
    v.mul_rf(one - a1, 1);
    v.mul_rf(one - a1 * q, 1);
    for (std::size_t i = 1; i + 2 <= r; ++i) v.mul_rf(one - a[i], 1); // (1-a_2)...(1-a_{r-1})
    v.mul_rf(z, 1);
    v.mul_rf(one - a1 / ar, -1);
    v.mul_rf(one - a1 / ar1, -1);
    for (std::size_t i = 1; i <= r; ++i) v.mul_rf(one - a1 * q / a[i], -1);
    return v.to_rf();
}

RationalFunction contiguous_beta(const std::vector<RationalFunction>& a,
                                 const RationalFunction& q, const RationalFunction& z) {
    const std::size_t r = a.size() - 1;
    const RationalFunction one = RationalFunction::from_rational(Rational(1));
    const RationalFunction &a1 = a[0], &ar1 = a[r];
    FactoredRF v;
    v.mul_rational(Rational(-1));
    v.mul_rf(one - a1, 1);
    v.mul_rf(one - a1 * q, 1);
    for (std::size_t i = 1; i + 1 <= r; ++i) v.mul_rf(one - a[i], 1); // (1-a_2)...(1-a_r)
    v.mul_rf(z, 1);
    v.mul_rf(one - a1 / ar1, -1);
    for (std::size_t i = 1; i <= r; ++i) v.mul_rf(one - a1 * q / a[i], -1);
    return v.to_rf();
}

VerificationReport verify_contiguous(int variant, int r, long k) {
    VerificationReport rep;
    rep.identity = variant == 1 ? "contiguous_1_1" : "contiguous_1_2";
    rep.instance.n = k;
    rep.instance.m = r;
    rep.mode = "exact";
    auto t0 = std::chrono::steady_clock::now();

    Workspace ws;
    auto q = RationalFunction::var(ws.symbol("q"));
    auto z = RationalFunction::var(ws.symbol("z"));
    std::vector<RationalFunction> a;
    for (int i = 1; i <= r + 1; ++i)
        a.push_back(RationalFunction::var(ws.symbol("a" + std::to_string(i))));

    auto shift_all = [&q](const std::vector<RationalFunction>& v) {
        std::vector<RationalFunction> out;
        out.push_back(v[0] * q * q);
        for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i] * q);
        return out;
    };

    std::vector<FactoredRF> terms;
    if (variant == 1) {
        auto sh1 = a;
        sh1[static_cast<std::size_t>(r) - 1] = a[static_cast<std::size_t>(r) - 1] * q;
        auto sh2 = a;
        sh2[static_cast<std::size_t>(r)] = a[static_cast<std::size_t>(r)] * q;
        terms.push_back(well_poised_term(sh1, q, z, k));
        auto t2 = well_poised_term(sh2, q, z, k);
        t2.mul_rational(Rational(-1));
        terms.push_back(std::move(t2));
        auto t3 = well_poised_term(shift_all(a), q, z, k - 1);
        t3.mul_rf(contiguous_alpha(a, q, z), 1);
        t3.mul_rational(Rational(-1));
        terms.push_back(std::move(t3));
    } else if (variant == 2) {
        auto sh2 = a;
        sh2[static_cast<std::size_t>(r)] = a[static_cast<std::size_t>(r)] * q;
        terms.push_back(well_poised_term(a, q, q * z, k));
        auto t2 = well_poised_term(sh2, q, z, k);
        t2.mul_rational(Rational(-1));
        terms.push_back(std::move(t2));
        auto t3 = well_poised_term(shift_all(a), q, z, k - 1);
        t3.mul_rf(contiguous_beta(a, q, z), 1);
        t3.mul_rational(Rational(-1));
        terms.push_back(std::move(t3));
    } else {
        throw error("contiguous relation variant must be 1 or 2");
    }

    RationalFunction residue = sum_factored(terms);
    rep.status = residue.is_zero() ? Status::Pass : Status::Fail;
    if (rep.status == Status::Fail) rep.detail = "nonzero residue";
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace qcontig
