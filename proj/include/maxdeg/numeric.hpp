#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

namespace maxdeg {

using Rational = mpq_class;
using Integer = mpz_class;
using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>, boost::multiprecision::et_off>;

enum class NumberMode { exact, float64 };

// Uniform access to the handful of scalar operations the series code needs.
// Exact scalars refuse transcendental operations except at the points where
// the result is rational.
template <class T>
struct Scalar;

template <>
struct Scalar<Rational> {
    static constexpr bool exact = true;
    static Rational from_int(long v) { return Rational(v); }
    static Rational ratio(long p, long q) {
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    static double to_double(const Rational& v) { return v.get_d(); }
    static Rational exp(const Rational& v) {
        if (sgn(v) != 0) throw std::domain_error("exp of a nonzero rational is not rational");
        return 1;
    }
    static Rational log(const Rational& v) {
        if (v != 1) throw std::domain_error("log of a rational other than 1 is not rational");
        return 0;
    }
    static void mul_add(Rational& acc, const Rational& a, const Rational& b) {
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
    }
    static std::string str(const Rational& v) { return v.get_str(); }
};

template <class F>
struct FloatScalar {
    static constexpr bool exact = false;
    static F from_int(long v) { return F(v); }
    static F ratio(long p, long q) { return F(p) / F(q); }
    static bool is_zero(const F& v) { return v == 0; }
    static double to_double(const F& v) { return static_cast<double>(v); }
    static F exp(const F& v) {
        using std::exp;
        return exp(v);
    }
    static F log(const F& v) {
        using std::log;
        return log(v);
    }
    static void mul_add(F& acc, const F& a, const F& b) { acc += a * b; }
};

template <>
struct Scalar<double> : FloatScalar<double> {
    static std::string str(double v);
};

template <>
struct Scalar<long double> : FloatScalar<long double> {};

template <>
struct Scalar<HighFloat> : FloatScalar<HighFloat> {};

inline std::string Scalar<double>::str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace maxdeg
