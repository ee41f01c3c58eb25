#pragma once

// Truncated power series in x with optional polynomial caps in w and t.
//
// A series with wcap == 0 does not depend on w at all, and binary operations
// broadcast it against series that do. When both operands carry w (or t),
// the smaller cap wins. The same rule applies to the x order.
//
// Coefficients are stored in the variable s where x = scale * s; the scale
// is a property of the construction context (see SeriesContext), not of the
// series, so only the handful of operations that mention x explicitly take it.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxdeg/numeric.hpp"

namespace maxdeg {

template <class T>
class Series {
public:
    struct Extent {
        int k = -1;  // highest w degree present in the row, -1 if the row is zero
        int l = -1;
    };

    Series() : Series(0) {}

    explicit Series(int order, int wcap = 0, int tcap = 0)
        : n_(order), k_(wcap), l_(tcap) {
        if (order < 0 || wcap < 0 || tcap < 0) throw std::invalid_argument("negative series cap");
        c_.assign(static_cast<std::size_t>(n_ + 1) * (k_ + 1) * (l_ + 1), T(0));
    }

    static Series constant(const T& c, int order, int wcap = 0, int tcap = 0) {
        Series r(order, wcap, tcap);
        r.at(0) = c;
        return r;
    }
    static Series monomial(int order, int wcap, int tcap, int i, int k, int l, const T& c) {
        Series r(order, wcap, tcap);
        if (i <= order && k <= wcap && l <= tcap) r.at(i, k, l) = c;
        return r;
    }
    // x = scale * s
    static Series variable(int order, const T& scale = T(1)) {
        return monomial(order, 0, 0, 1, 0, 0, scale);
    }

    int order() const { return n_; }
    int wcap() const { return k_; }
    int tcap() const { return l_; }

    T& at(int i, int k = 0, int l = 0) { return c_[index(i, k, l)]; }
    const T& at(int i, int k = 0, int l = 0) const { return c_[index(i, k, l)]; }

    // Reads outside the caps are zero.
    T get(int i, int k = 0, int l = 0) const {
        if (i < 0 || k < 0 || l < 0 || i > n_ || k > k_ || l > l_) return T(0);
        return c_[index(i, k, l)];
    }

    std::span<const T> coefficients() const { return c_; }

    Extent row_extent(int i) const {
        Extent e;
        for (int k = 0; k <= k_; ++k)
            for (int l = 0; l <= l_; ++l)
                if (!Scalar<T>::is_zero(at(i, k, l))) {
                    e.k = std::max(e.k, k);
                    e.l = std::max(e.l, l);
                }
        return e;
    }
    std::vector<Extent> extents() const {
        std::vector<Extent> e(n_ + 1);
        for (int i = 0; i <= n_; ++i) e[i] = row_extent(i);
        return e;
    }

    bool row_is_constant(int i) const {
        auto e = row_extent(i);
        return e.k <= 0 && e.l <= 0;
    }

    // Pads with zeros or truncates; caps unchanged.
    Series resized(int order) const { return reshaped(order, k_, l_); }
    Series truncated(int order) const { return resized(std::min(order, n_)); }

    Series reshaped(int order, int wcap, int tcap) const {
        Series r(order, wcap, tcap);
        int n = std::min(order, n_), kk = std::min(wcap, k_), ll = std::min(tcap, l_);
        for (int i = 0; i <= n; ++i)
            for (int k = 0; k <= kk; ++k)
                for (int l = 0; l <= ll; ++l) r.at(i, k, l) = at(i, k, l);
        return r;
    }

    // Copy of row i as a series whose only nonzero row is 0.
    Series row(int i, int order) const {
        Series r(order, k_, l_);
        for (int k = 0; k <= k_; ++k)
            for (int l = 0; l <= l_; ++l) r.at(0, k, l) = at(i, k, l);
        return r;
    }

    bool operator==(const Series& o) const {
        return n_ == o.n_ && k_ == o.k_ && l_ == o.l_ && c_ == o.c_;
    }

    Series operator-() const {
        Series r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Series& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    Series& operator/=(const T& s) {
        if (Scalar<T>::is_zero(s)) throw std::domain_error("series divided by zero scalar");
        for (auto& v : c_) v /= s;
        return *this;
    }
    Series& operator+=(const T& s) {
        at(0) += s;
        return *this;
    }
    Series& operator-=(const T& s) {
        at(0) -= s;
        return *this;
    }

private:
    std::size_t index(int i, int k, int l) const {
        return (static_cast<std::size_t>(i) * (k_ + 1) + k) * (l_ + 1) + l;
    }

    int n_, k_, l_;
    std::vector<T> c_;
};

namespace detail {

inline int combine_cap(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return std::min(a, b);
}

// dst[di] += A[ai] * B[bi] as polynomials in (w, t), truncated to dst's caps.
template <class T>
void row_mul_acc(Series<T>& dst, int di, const Series<T>& a, int ai,
                 typename Series<T>::Extent ea, const Series<T>& b, int bi,
                 typename Series<T>::Extent eb) {
    if (ea.k < 0 || eb.k < 0) return;
    const int K = dst.wcap(), L = dst.tcap();
    for (int k1 = 0; k1 <= std::min(ea.k, K); ++k1)
        for (int l1 = 0; l1 <= std::min(ea.l, L); ++l1) {
            const T& x = a.at(ai, k1, l1);
            if (Scalar<T>::is_zero(x)) continue;
            for (int k2 = 0; k2 <= std::min(eb.k, K - k1); ++k2)
                for (int l2 = 0; l2 <= std::min(eb.l, L - l1); ++l2)
                    Scalar<T>::mul_add(dst.at(di, k1 + k2, l1 + l2), x, b.at(bi, k2, l2));
        }
}

template <class T>
void require_constant_row0(const Series<T>& a, const char* what) {
    if (!a.row_is_constant(0))
        throw std::domain_error(std::string(what) + ": x^0 coefficient must not depend on w or t");
}

}  // namespace detail

template <class T>
Series<T> operator+(const Series<T>& a, const Series<T>& b) {
    Series<T> r(std::min(a.order(), b.order()), detail::combine_cap(a.wcap(), b.wcap()),
                detail::combine_cap(a.tcap(), b.tcap()));
    for (int i = 0; i <= r.order(); ++i)
        for (int k = 0; k <= r.wcap(); ++k)
            for (int l = 0; l <= r.tcap(); ++l) r.at(i, k, l) = a.get(i, k, l) + b.get(i, k, l);
    return r;
}

template <class T>
Series<T> operator-(const Series<T>& a, const Series<T>& b) {
    return a + (-b);
}

template <class T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) {
    Series<T> r(std::min(a.order(), b.order()), detail::combine_cap(a.wcap(), b.wcap()),
                detail::combine_cap(a.tcap(), b.tcap()));
    const int N = r.order();
    auto ea = a.extents(), eb = b.extents();
    for (int i = 0; i <= N; ++i) {
        if (ea[i].k < 0) continue;
        for (int j = 0; i + j <= N; ++j) detail::row_mul_acc(r, i + j, a, i, ea[i], b, j, eb[j]);
    }
    return r;
}

template <class T> Series<T> operator*(Series<T> a, const T& s) { return a *= s; }
template <class T> Series<T> operator*(const T& s, Series<T> a) { return a *= s; }
template <class T> Series<T> operator/(Series<T> a, const T& s) { return a /= s; }
template <class T> Series<T> operator+(Series<T> a, const T& s) { return a += s; }
template <class T> Series<T> operator+(const T& s, Series<T> a) { return a += s; }
template <class T> Series<T> operator-(Series<T> a, const T& s) { return a -= s; }
template <class T> Series<T> operator-(const T& s, const Series<T>& a) { return (-a) += s; }

// a / b. The x^0 coefficient of b must be a nonzero constant.
template <class T>
Series<T> operator/(const Series<T>& a, const Series<T>& b) {
    detail::require_constant_row0(b, "division");
    const T b0 = b.at(0);
    if (Scalar<T>::is_zero(b0)) throw std::domain_error("division by a series with zero constant term");
    Series<T> r(std::min(a.order(), b.order()), detail::combine_cap(a.wcap(), b.wcap()),
                detail::combine_cap(a.tcap(), b.tcap()));
    const int N = r.order();
    auto eb = b.extents();
    std::vector<typename Series<T>::Extent> er(N + 1);
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= r.wcap(); ++k)
            for (int l = 0; l <= r.tcap(); ++l) r.at(n, k, l) = -a.get(n, k, l);
        for (int i = 1; i <= n; ++i) detail::row_mul_acc(r, n, b, i, eb[i], r, n - i, er[n - i]);
        for (int k = 0; k <= r.wcap(); ++k)
            for (int l = 0; l <= r.tcap(); ++l) {
                T& v = r.at(n, k, l);
                v = -v / b0;
            }
        er[n] = r.row_extent(n);
    }
    return r;
}

// exp(a). Row 0 of a must be constant; in exact mode it must be zero unless
// exp of it is supplied.
template <class T>
Series<T> exp_series(const Series<T>& a, const T* exp_of_constant = nullptr) {
    detail::require_constant_row0(a, "exp_series");
    Series<T> r(a.order(), a.wcap(), a.tcap());
    r.at(0) = exp_of_constant ? *exp_of_constant : Scalar<T>::exp(a.at(0));
    // theta a = x d/dx a, then n f_n = sum_{k>=1} (theta a)_k f_{n-k}
    Series<T> ta = a;
    for (int i = 0; i <= a.order(); ++i)
        for (int k = 0; k <= a.wcap(); ++k)
            for (int l = 0; l <= a.tcap(); ++l) ta.at(i, k, l) *= T(i);
    auto et = ta.extents();
    std::vector<typename Series<T>::Extent> er(a.order() + 1);
    er[0] = r.row_extent(0);
    for (int n = 1; n <= a.order(); ++n) {
        for (int k = 1; k <= n; ++k) detail::row_mul_acc(r, n, ta, k, et[k], r, n - k, er[n - k]);
        const T inv = T(1) / T(n);
        for (int k = 0; k <= r.wcap(); ++k)
            for (int l = 0; l <= r.tcap(); ++l) r.at(n, k, l) *= inv;
        er[n] = r.row_extent(n);
    }
    return r;
}

// log(a). Row 0 of a must be constant; exact mode requires it to equal 1.
template <class T>
Series<T> log_series(const Series<T>& a) {
    detail::require_constant_row0(a, "log_series");
    const T a0 = a.at(0);
    if (Scalar<T>::is_zero(a0)) throw std::domain_error("log of a series with zero constant term");
    Series<T> r(a.order(), a.wcap(), a.tcap());
    r.at(0) = Scalar<T>::log(a0);
    Series<T> tr(a.order(), a.wcap(), a.tcap());  // theta r
    auto ea = a.extents();
    std::vector<typename Series<T>::Extent> et(a.order() + 1);
    for (int n = 1; n <= a.order(); ++n) {
        // n a_n = sum_{k=1}^{n} (theta r)_k a_{n-k}
        for (int k = 0; k <= a.wcap(); ++k)
            for (int l = 0; l <= a.tcap(); ++l) tr.at(n, k, l) = -T(n) * a.at(n, k, l);
        for (int k = 1; k < n; ++k) detail::row_mul_acc(tr, n, tr, k, et[k], a, n - k, ea[n - k]);
        for (int k = 0; k <= a.wcap(); ++k)
            for (int l = 0; l <= a.tcap(); ++l) {
                T& v = tr.at(n, k, l);
                v = -v / a0;
                r.at(n, k, l) = v / T(n);
            }
        et[n] = tr.row_extent(n);
    }
    return r;
}

template <class T>
Series<T> pow(const Series<T>& a, unsigned e) {
    Series<T> r = Series<T>::constant(T(1), a.order(), a.wcap(), a.tcap());
    Series<T> b = a;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

template <class T>
Series<T> pow(const Series<T>& a, const Series<T>& b) {
    return exp_series(b * log_series(a));
}

// outer(inner(s)), with inner expressed in outer's own variable.
template <class T>
Series<T> compose(const Series<T>& outer, const Series<T>& inner) {
    if (inner.wcap() != 0 || inner.tcap() != 0)
        throw std::invalid_argument("compose: inner series must be univariate");
    if (!Scalar<T>::is_zero(inner.at(0)))
        throw std::domain_error("compose: inner series must have zero constant term");
    const int N = std::min(outer.order(), inner.order());
    Series<T> r = outer.row(N, N);
    for (int j = N - 1; j >= 0; --j) r = r * inner + outer.row(j, N);
    return r;
}

// d/dx with x = scale * s.
template <class T>
Series<T> differentiate_x(const Series<T>& a, const T& scale = T(1)) {
    if (a.order() < 1) throw std::invalid_argument("differentiate_x needs order >= 1");
    Series<T> r(a.order() - 1, a.wcap(), a.tcap());
    for (int i = 0; i < a.order(); ++i)
        for (int k = 0; k <= a.wcap(); ++k)
            for (int l = 0; l <= a.tcap(); ++l) r.at(i, k, l) = T(i + 1) * a.at(i + 1, k, l) / scale;
    return r;
}

// x * a, same order.
template <class T>
Series<T> times_x(const Series<T>& a, const T& scale = T(1)) {
    Series<T> r(a.order(), a.wcap(), a.tcap());
    for (int i = 0; i < a.order(); ++i)
        for (int k = 0; k <= a.wcap(); ++k)
            for (int l = 0; l <= a.tcap(); ++l) r.at(i + 1, k, l) = scale * a.at(i, k, l);
    return r;
}

// a / x; row 0 must vanish, order drops by one.
template <class T>
Series<T> divide_by_x(const Series<T>& a, const T& scale = T(1)) {
    if (a.row_extent(0).k >= 0) throw std::domain_error("divide_by_x: nonzero x^0 row");
    if (a.order() < 1) throw std::invalid_argument("divide_by_x needs order >= 1");
    Series<T> r(a.order() - 1, a.wcap(), a.tcap());
    for (int i = 0; i < a.order(); ++i)
        for (int k = 0; k <= a.wcap(); ++k)
            for (int l = 0; l <= a.tcap(); ++l) r.at(i, k, l) = a.at(i + 1, k, l) / scale;
    return r;
}

// w d/dw
template <class T>
Series<T> theta_w(const Series<T>& a) {
    Series<T> r = a;
    for (int i = 0; i <= a.order(); ++i)
        for (int k = 0; k <= a.wcap(); ++k)
            for (int l = 0; l <= a.tcap(); ++l) r.at(i, k, l) *= T(k);
    return r;
}

// Inverse of theta_w on series without a w^0 column.
template <class T>
Series<T> integrate_w(const Series<T>& a) {
    Series<T> r = a;
    for (int i = 0; i <= a.order(); ++i)
        for (int l = 0; l <= a.tcap(); ++l)
            if (!Scalar<T>::is_zero(a.at(i, 0, l)))
                throw std::domain_error("integrate_w: nonzero w^0 column");
    for (int i = 0; i <= a.order(); ++i)
        for (int k = 1; k <= a.wcap(); ++k)
            for (int l = 0; l <= a.tcap(); ++l) r.at(i, k, l) /= T(k);
    return r;
}

// Substitute a value for w (resp. t); the result no longer carries that variable.
template <class T>
Series<T> eval_w(const Series<T>& a, const T& w) {
    Series<T> r(a.order(), 0, a.tcap());
    for (int i = 0; i <= a.order(); ++i)
        for (int l = 0; l <= a.tcap(); ++l) {
            T acc(0), p(1);
            for (int k = 0; k <= a.wcap(); ++k) {
                acc += a.at(i, k, l) * p;
                p *= w;
            }
            r.at(i, 0, l) = acc;
        }
    return r;
}

template <class T>
Series<T> eval_t(const Series<T>& a, const T& t) {
    Series<T> r(a.order(), a.wcap(), 0);
    for (int i = 0; i <= a.order(); ++i)
        for (int k = 0; k <= a.wcap(); ++k) {
            T acc(0), p(1);
            for (int l = 0; l <= a.tcap(); ++l) {
                acc += a.at(i, k, l) * p;
                p *= t;
            }
            r.at(i, k, 0) = acc;
        }
    return r;
}

template <class T>
Series<T> swap_wt(const Series<T>& a) {
    Series<T> r(a.order(), a.tcap(), a.wcap());
    for (int i = 0; i <= a.order(); ++i)
        for (int k = 0; k <= a.wcap(); ++k)
            for (int l = 0; l <= a.tcap(); ++l) r.at(i, l, k) = a.at(i, k, l);
    return r;
}

// Fixed point y = phi(y) by Newton iteration, doubling the number of correct
// x-coefficients per step. dphi is the derivative of phi with respect to y.
// y0 holds the x^0 row of the solution; phi must reproduce it.
template <class T>
Series<T> solve_implicit(const std::function<Series<T>(const Series<T>&)>& phi,
                         const std::function<Series<T>(const Series<T>&)>& dphi,
                         const Series<T>& y0, int order) {
    Series<T> y = y0.resized(0);
    Series<T> check = phi(y) - y;
    for (T v : check.coefficients()) {
        bool bad = Scalar<T>::exact ? !Scalar<T>::is_zero(v)
                                    : Scalar<T>::to_double(v) > 1e-12 || Scalar<T>::to_double(v) < -1e-12;
        if (bad) throw std::domain_error("solve_implicit: initial term is not a fixed point at order 0");
    }
    int prec = 1;
    while (prec <= order) {
        const int o = std::min(2 * prec - 1, order);
        y = y.resized(o);
        Series<T> f = phi(y);
        Series<T> d = dphi(y);
        if (f.order() < o || d.order() < o)
            throw std::logic_error("solve_implicit: functional lost precision");
        y = y + (f - y) / (T(1) - d);
        prec = o + 1;
    }
    return y;
}

// Square root with constant term +sqrt(a0); exact mode needs a0 = 1.
template <class T>
Series<T> sqrt_series(const Series<T>& a) {
    detail::require_constant_row0(a, "sqrt_series");
    T z0;
    if constexpr (Scalar<T>::exact) {
        if (a.at(0) != 1) throw std::domain_error("sqrt_series: exact mode needs constant term 1");
        z0 = 1;
    } else {
        using std::sqrt;
        z0 = sqrt(a.at(0));
    }
    auto phi = [&a](const Series<T>& z) { return z - (z * z - a.truncated(z.order())) / T(2); };
    auto dphi = [](const Series<T>& z) { return T(1) - z; };
    return solve_implicit<T>(phi, dphi, Series<T>::constant(z0, 0, a.wcap(), a.tcap()), a.order());
}

// Construction context: truncation caps plus the scale of the x variable.
template <class T>
struct SeriesContext {
    int order = 0;
    int wcap = 0;
    int tcap = 0;
    T scale = T(1);

    SeriesContext with_order(int o) const {
        SeriesContext c = *this;
        c.order = o;
        return c;
    }
    Series<T> x() const { return Series<T>::variable(order, scale); }
    Series<T> one() const { return Series<T>::constant(T(1), order); }
    Series<T> w() const { return Series<T>::monomial(order, wcap, 0, 0, 1, 0, T(1)); }
    Series<T> t() const { return Series<T>::monomial(order, 0, tcap, 0, 0, 1, T(1)); }
};

}  // namespace maxdeg
