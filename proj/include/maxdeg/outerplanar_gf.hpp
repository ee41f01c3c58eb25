#pragma once

// Dissections and 2-connected outerplanar generating functions.

#include <tuple>

#include "maxdeg/series.hpp"

namespace maxdeg {

template <class T>
struct OuterplanarGF {
    Series<T> A, S;           // dissections of the (n+2)-gon; S = 2A + 1
    Series<T> A_w, S_w;       // first pole degree marked by w
    Series<T> A1, A2, S2;     // double-rooted dissections; S2 from its linear relation
    Series<T> S2_1t;          // S2(x,1,t)
    Series<T> Bprime, Bsecond, Brooted, Bdouble;
};

// A(x) from 2xA^2 + (3x-1)A + x = 0 with A(0) = 0, and S = 2A + 1.
template <class T>
std::pair<Series<T>, Series<T>> build_dissections(const SeriesContext<T>& ctx) {
    if (ctx.order < 1) throw std::invalid_argument("build_dissections: order must be >= 1");
    auto up = ctx.with_order(ctx.order + 1);
    Series<T> x = up.x();
    Series<T> root = sqrt_series(T(1) - T(6) * x + x * x);
    Series<T> A = divide_by_x(T(1) - T(3) * x - root, ctx.scale) / T(4);
    Series<T> S = T(2) * A + T(1);
    return {A, S};
}

template <class T>
OuterplanarGF<T> build_outerplanar(const SeriesContext<T>& ctx) {
    OuterplanarGF<T> g;
    auto up = ctx.with_order(ctx.order + 1);
    auto [Aup, Sup] = build_dissections(up);
    g.A = Aup.truncated(ctx.order);
    g.S = Sup.truncated(ctx.order);
    g.Bsecond = differentiate_x(up.x() + up.x() * Aup / T(2), ctx.scale);
    const Series<T> x = ctx.x();
    const Series<T> w = ctx.w();
    const Series<T> t = ctx.t();
    const Series<T>& A = g.A;
    const Series<T> y = x * g.S;  // x(2A+1)
    const Series<T> one_y = T(1) + y;
    const Series<T> den_w = T(1) - y * w;
    const Series<T> den_t = T(1) - y * t;

    g.A_w = w * w * y / den_w;
    g.S_w = w * one_y / den_w;
    g.Bprime = x + x * A / T(2);
    g.Brooted = x * w + x * g.A_w / T(2);

    if (ctx.tcap > 0) {
        const Series<T> wt = w * t;
        const Series<T> core = x * wt * wt * one_y;
        g.A1 = core / (den_w * den_t);
        const Series<T> P1 = T(1) - x * (T(4) * A + T(1));
        const Series<T> P2 = T(1) - T(2) * A + y;
        const Series<T> chain = T(1) - x * (T(4) * A + T(3));
        g.A2 = core * (P1 + x * (wt - w - t) * P2) / (den_w * den_w * den_t * den_t * chain);
        g.S2_1t = T(2) * x * t * t * one_y / (den_t * den_t * chain);
        const Series<T> S_t = swap_wt(g.S_w);
        g.S2 = g.A2 * (T(1) + x * g.S) + (wt + g.A1) * x * S_t + (w + g.A_w) * x * g.S2_1t;
        g.Bdouble = wt + g.A1 / T(2) + g.A2 / T(2);
    }
    return g;
}

}  // namespace maxdeg
