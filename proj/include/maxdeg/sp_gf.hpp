#pragma once

// Series-parallel networks and 2-connected SP generating functions.

#include "maxdeg/series.hpp"

namespace maxdeg {

template <class T>
struct SeriesParallelGF {
    Series<T> E, S;      // networks, series networks
    Series<T> Eprime;    // dE/dx
    Series<T> D, S_w;    // first pole degree marked by w
    Series<T> D1, S1, D2, S2;
    Series<T> D2_1t, S2_1t;
    Series<T> B, Bprime, Bsecond;
    Series<T> Brooted, Bdouble;
};

// E = 2 exp(x E^2 / (1 + xE)) - 1
template <class T>
Series<T> build_networks_E(const SeriesContext<T>& ctx) {
    const Series<T> X = ctx.x();
    auto inner = [X](const Series<T>& e) {
        Series<T> x = X.truncated(e.order());
        return x * e * e / (T(1) + x * e);
    };
    auto phi = [inner](const Series<T>& e) { return T(2) * exp_series(inner(e)) - T(1); };
    auto dphi = [X, inner](const Series<T>& e) {
        Series<T> x = X.truncated(e.order());
        Series<T> xe = x * e;
        // d/dE [x E^2 / (1 + xE)] = xE (2 + xE) / (1 + xE)^2
        Series<T> g = xe * (T(2) + xe) / ((T(1) + xe) * (T(1) + xe));
        return T(2) * exp_series(inner(e)) * g;
    };
    return solve_implicit<T>(phi, dphi, Series<T>::constant(T(1), 0), ctx.order);
}

// D = (1 + w) exp(x D E / (1 + xE)) - 1, with h = xE / (1 + xE) given.
template <class T>
Series<T> build_networks_D(const SeriesContext<T>& ctx, const Series<T>& h) {
    const Series<T> w = ctx.w();
    auto phi = [w, h](const Series<T>& d) {
        Series<T> hh = h.truncated(d.order());
        return (T(1) + w.truncated(d.order())) * exp_series(hh * d) - T(1);
    };
    auto dphi = [w, h](const Series<T>& d) {
        Series<T> hh = h.truncated(d.order());
        return (T(1) + w.truncated(d.order())) * exp_series(hh * d) * hh;
    };
    Series<T> d0 = Series<T>::monomial(0, ctx.wcap, 0, 0, 1, 0, T(1));
    return solve_implicit<T>(phi, dphi, d0, ctx.order);
}

template <class T>
SeriesParallelGF<T> build_series_parallel(const SeriesContext<T>& ctx) {
    if (ctx.order < 1) throw std::invalid_argument("build_series_parallel: order must be >= 1");
    SeriesParallelGF<T> g;
    const Series<T> x = ctx.x();
    g.E = build_networks_E(ctx);
    const Series<T>& E = g.E;
    const Series<T> xE = x * E;
    const Series<T> one_xE = T(1) + xE;
    g.S = xE * E / one_xE;
    const Series<T> crit = T(1) - T(2) * xE * E - xE * xE * E;  // 1 - 2xE^2 - x^2E^3
    g.Eprime = (T(1) + E) * E * E / crit;
    const Series<T>& Ep = g.Eprime;

    g.B = log_series(one_xE) / T(2) -
          xE * (xE * xE + xE + T(2) - T(2) * x) / (T(4) * one_xE);
    g.Bprime = xE * (T(2) - xE * E) / (T(2) * one_xE);
    {
        const Series<T> E2 = E * E, E3 = E2 * E;
        const Series<T> x2 = x * x;
        Series<T> num = T(2) * E + T(2) * x * Ep - T(2) * x * E3 - T(3) * x2 * E2 * Ep -
                        x2 * E3 * E - T(2) * x2 * x * E3 * Ep;
        g.Bsecond = num / (T(2) * one_xE * one_xE);
    }

    if (ctx.wcap == 0) return g;
    const Series<T> h = xE / one_xE;
    SeriesContext<T> dctx = ctx;
    dctx.wcap = std::max(ctx.wcap, ctx.tcap);
    const Series<T> Dfull = build_networks_D(dctx, h);
    g.D = Dfull.reshaped(ctx.order, ctx.wcap, 0);
    const Series<T>& D = g.D;
    g.S_w = h * D;
    g.Brooted = x * (D - h * D * (T(1) + D / T(2)));

    if (ctx.tcap == 0) return g;
    const Series<T> w = ctx.w(), t = ctx.t();
    const Series<T> wt = w * t;
    const Series<T> Dt = swap_wt(Dfull).reshaped(ctx.order, 0, ctx.tcap);
    const Series<T> DwDt = D * Dt;
    g.S1 = x / one_xE * DwDt;
    const Series<T> eS1 = exp_series(g.S1);
    g.D1 = (T(1) + wt) * eS1 - T(1);
    const Series<T> Dt2 = Dt * Dt;
    g.D2_1t = x * (T(1) + E) / crit * Dt2;
    g.S2_1t = x / crit * Dt2;
    const Series<T> split = T(1) - xE * D;
    const Series<T> tail = x * xE * one_xE / crit * D * Dt2 / split;
    g.D2 = x * (T(1) + D) * Dt / split * g.D1 + (T(1) + D) * tail;
    g.S2 = x * Dt / split * g.D1 + tail;
    const Series<T> eSw = exp_series(g.S_w);
    g.Bdouble = integrate_w(wt * eS1 + w * eSw * g.S2);
    return g;
}

}  // namespace maxdeg
