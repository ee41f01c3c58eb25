#pragma once

// Block decomposition: connected graphs from their 2-connected blocks.

#include "maxdeg/series.hpp"

namespace maxdeg {

template <class T>
struct BlockSeries {
    Series<T> Bprime, Bsecond;  // univariate, order >= N + 1
    Series<T> Brooted;          // order >= N + 1
    Series<T> Bdouble;          // order >= N, optional
};

template <class T>
struct ConnectedGF {
    Series<T> v;        // x C'(x)
    Series<T> Cprime;
    Series<T> Csecond;
    Series<T> Crooted;
    Series<T> Cdouble;
};

// v = x exp(B'(v)) by Newton; C'(x) = exp(B'(v)).
template <class T>
Series<T> solve_vertex_substitution(const SeriesContext<T>& ctx, const Series<T>& Bprime,
                                    const Series<T>& Bsecond) {
    const Series<T> X = ctx.x();
    const T s = ctx.scale;
    auto phi = [&](const Series<T>& v) {
        Series<T> u = v / s;
        return X.truncated(v.order()) * exp_series(compose(Bprime.truncated(v.order()), u));
    };
    auto dphi = [&](const Series<T>& v) {
        Series<T> u = v / s;
        return X.truncated(v.order()) * exp_series(compose(Bprime.truncated(v.order()), u)) *
               compose(Bsecond.truncated(v.order()), u);
    };
    return solve_implicit<T>(phi, dphi, Series<T>::constant(T(0), 0), ctx.order);
}

template <class T>
ConnectedGF<T> build_connected(const SeriesContext<T>& ctx, const BlockSeries<T>& b) {
    const int N = ctx.order;
    if (b.Bprime.order() < N + 1 || b.Bsecond.order() < N + 1 || b.Brooted.order() < N + 1)
        throw std::invalid_argument("build_connected: block series need order N + 1");
    const T s = ctx.scale;
    auto up = ctx.with_order(N + 1);
    ConnectedGF<T> c;
    Series<T> v = solve_vertex_substitution(up, b.Bprime, b.Bsecond);
    const Series<T> u = v / s;
    Series<T> Cp = exp_series(compose(b.Bprime.truncated(N + 1), u));
    Series<T> Cr = exp_series(compose(b.Brooted.reshaped(N + 1, ctx.wcap, 0), u));
    c.v = v.truncated(N);
    c.Cprime = Cp.truncated(N);
    c.Csecond = differentiate_x(Cp, s);
    c.Crooted = Cr.truncated(N);
    if (ctx.tcap > 0) {
        if (b.Bdouble.order() < N) throw std::invalid_argument("build_connected: Bdouble order too small");
        const Series<T> x = ctx.x();
        const Series<T> dCw = differentiate_x(Cr, s);
        const Series<T> dCt = swap_wt(differentiate_x(Cr.reshaped(N + 1, ctx.tcap, 0), s));
        const Series<T> Ct = swap_wt(Cr.reshaped(N, ctx.tcap, 0));
        const Series<T> vp = differentiate_x(v, s);
        const Series<T> Bdd = compose(b.Bdouble.reshaped(N, ctx.wcap, ctx.tcap), u.truncated(N));
        c.Cdouble = x / vp * dCw * dCt + Bdd * c.Crooted * Ct;
    }
    return c;
}

}  // namespace maxdeg
