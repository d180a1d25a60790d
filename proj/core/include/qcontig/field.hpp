#pragma once

#include <boost/multiprecision/gmp.hpp>

#include "qcontig/rational_function.hpp"

namespace qcontig {

/// Extended-precision real for the numeric module (50 decimal digits).
using Float50 = boost::multiprecision::number<boost::multiprecision::gmp_float<50>>;

template <>
inline Float50 make_field_value<Float50>(const Rational& r) {
    return Float50(num(r)) / Float50(den(r));
}

template <>
inline RationalFunction make_field_value<RationalFunction>(const Rational& r) {
    return RationalFunction::from_rational(r);
}

/// Generic field hooks shared by the q-series builders so one identity
/// definition serves exact symbolic, exact rational, and floating modes.
template <class F>
struct FieldOps {
    static F from_int(long v) { return make_field_value<F>(Rational(v)); }
    static F from_rational(const Rational& r) { return make_field_value<F>(r); }
    static F one() { return from_int(1); }
    static F zero() { return from_int(0); }
    static bool is_zero(const F& v) { return v == zero(); }
    static F pow(const F& base, long e) {
        if (e == 0) return one();
        F b = base;
        if (e < 0) {
            if (is_zero(b)) throw zero_divisor_error("0 raised to a negative power");
            b = one() / b;
        }
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        F acc = one();
        while (k) {
            if (k & 1) acc = acc * b;
            b = b * b;
            k >>= 1;
        }
        return acc;
    }
    static F div(const F& a, const F& b) {
        if (is_zero(b)) throw zero_divisor_error("division by zero");
        return a / b;
    }
};

template <>
inline bool FieldOps<RationalFunction>::is_zero(const RationalFunction& v) {
    return v.is_zero();
}

template <>
inline RationalFunction FieldOps<RationalFunction>::pow(const RationalFunction& base, long e) {
    return base.pow(e);
}

/// Max-plus "degree bound" pseudo-field: running any identity generator over
/// it yields an upper bound on the total degree of the cleared difference,
/// which feeds the Schwartz-Zippel error accounting.
struct DegBound {
    long d = 0;
    friend DegBound operator+(DegBound a, DegBound b) { return {a.d + b.d}; }
    friend DegBound operator-(DegBound a, DegBound b) { return {a.d + b.d}; }
    friend DegBound operator*(DegBound a, DegBound b) { return {a.d + b.d}; }
    friend DegBound operator/(DegBound a, DegBound b) { return {a.d + b.d}; }
    friend bool operator==(DegBound, DegBound) { return false; }
};

template <>
inline DegBound make_field_value<DegBound>(const Rational&) { return {0}; }

template <>
struct FieldOps<DegBound> {
    static DegBound from_int(long) { return {0}; }
    static DegBound from_rational(const Rational&) { return {0}; }
    static DegBound one() { return {0}; }
    static DegBound zero() { return {0}; }
    static bool is_zero(const DegBound&) { return false; }
    static DegBound pow(const DegBound& b, long e) { return {b.d * (e < 0 ? -e : e)}; }
    static DegBound div(const DegBound& a, const DegBound& b) { return a / b; }
};

} // namespace qcontig
