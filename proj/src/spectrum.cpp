#include "maxdeg/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxdeg/connected_lift.hpp"
#include "maxdeg/constants.hpp"
#include "maxdeg/outerplanar_gf.hpp"
#include "maxdeg/sp_gf.hpp"

namespace maxdeg {

namespace {

template <class T>
T scale_for(GraphClass c) {
    if constexpr (std::is_same_v<T, Rational>)
        return Rational(1);
    else
        return static_cast<T>(singularity(c));
}

template <class T>
BlockSeries<T> blocks(GraphClass c, const SeriesContext<T>& ctx) {
    BlockSeries<T> b;
    if (is_outerplanar_class(c)) {
        auto g = build_outerplanar(ctx);
        b = {g.Bprime, g.Bsecond, g.Brooted, g.Bdouble};
    } else {
        auto g = build_series_parallel(ctx);
        b = {g.Bprime, g.Bsecond, g.Brooted, g.Bdouble};
    }
    return b;
}

}  // namespace

template <class T>
SpectrumEngine<T>::SpectrumEngine(GraphClass c, int max_n, int kmax, int pair_kmax)
    : cls_(c), max_n_(max_n), kmax_(std::max(kmax, 1)), pair_kmax_(pair_kmax) {
    if (max_n < min_size(c)) throw std::invalid_argument("SpectrumEngine: size below the class minimum");
    const int N = std::max(max_n - 1, 1);
    const int L = pair_kmax < 0 ? 0 : std::max(pair_kmax, 1);
    const int K = std::max(kmax_, L);
    SeriesContext<T> ctx{N, K, L, scale_for<T>(c)};
    if (is_biconnected_class(c)) {
        BlockSeries<T> b = blocks(c, ctx);
        gprime_ = b.Bprime;
        gsecond_ = b.Bsecond;
        grooted_ = b.Brooted;
        gdouble_ = b.Bdouble;
    } else {
        BlockSeries<T> b = blocks(c, ctx.with_order(N + 1));
        ConnectedGF<T> g = build_connected(ctx, b);
        gprime_ = g.Cprime;
        gsecond_ = g.Csecond;
        grooted_ = g.Crooted;
        gdouble_ = g.Cdouble;
    }
}

template <class T>
DegreeTable<T> SpectrumEngine<T>::table(int n) const {
    if (n < min_size(cls_) || n > max_n_) throw std::out_of_range("SpectrumEngine::table: size out of range");
    DegreeTable<T> d;
    d.cls = cls_;
    d.n = n;
    const int km = std::min(kmax_, n - 1);
    const T total = gprime_.get(n - 1);
    d.single.resize(km + 1);
    for (int k = 0; k <= km; ++k) d.single[k] = grooted_.get(n - 1, k) / total;
    if (pair_kmax_ >= 0 && n >= 2) {
        const int pm = std::min(pair_kmax_, n - 1);
        const T pt = gsecond_.get(n - 2);
        d.pair.assign(pm + 1, std::vector<T>(pm + 1));
        for (int k = 0; k <= pm; ++k)
            for (int l = 0; l <= pm; ++l) d.pair[k][l] = gdouble_.get(n - 2, k, l) / pt;
    }
    return d;
}

template <class T>
Integer SpectrumEngine<T>::count(int n) const {
    if constexpr (!std::is_same_v<T, Rational>) {
        throw std::logic_error("SpectrumEngine::count: exact mode only");
    } else {
        if (n < min_size(cls_) || n > max_n_) throw std::out_of_range("SpectrumEngine::count: size out of range");
        Integer f = 1;
        for (int i = 2; i < n; ++i) f *= i;
        Rational r = gprime_.get(n - 1) * Rational(f);
        if (r.get_den() != 1) throw std::logic_error("SpectrumEngine::count: non-integral count");
        return r.get_num();
    }
}

template class SpectrumEngine<Rational>;
template class SpectrumEngine<double>;

DegreeTable<Rational> degree_table_exact(GraphClass c, int n, int kmax, int pair_kmax) {
    return SpectrumEngine<Rational>(c, n, kmax, pair_kmax).table(n);
}

DegreeTable<double> degree_table_float(GraphClass c, int n, int kmax, int pair_kmax) {
    return SpectrumEngine<double>(c, n, kmax, pair_kmax).table(n);
}

std::vector<Integer> class_counts(GraphClass c, int nmax) {
    std::vector<Integer> out(nmax + 1);
    if (nmax < min_size(c)) return out;
    SpectrumEngine<Rational> e(c, nmax, 1);
    for (int n = min_size(c); n <= nmax; ++n) out[n] = e.count(n);
    return out;
}

namespace {

using H = HighFloat;
using HS = Series<HighFloat>;

// D(w) = (1 + w) exp(h D) - 1 as a series in w (stored in the x slot)
HS networks_D_in_w(const H& h, int kmax) {
    const HS w = HS::variable(kmax);
    auto phi = [&](const HS& d) { return (H(1) + w.truncated(d.order())) * exp_series(h * d) - H(1); };
    auto dphi = [&](const HS& d) { return h * (H(1) + w.truncated(d.order())) * exp_series(h * d); };
    return solve_implicit<H>(phi, dphi, HS::constant(H(0), 0), kmax);
}

}  // namespace

LimitDistribution limit_distribution(GraphClass c, int kmax) {
    if (kmax < 1) throw std::invalid_argument("limit_distribution: kmax must be positive");
    const ConstantsReport& cr = class_constants(c);
    LimitDistribution L;
    L.cls = c;
    L.q = cr.q;
    const HS w = HS::variable(kmax);
    HS p;
    switch (c) {
        case GraphClass::biconnected_outerplanar: {
            H a = 1 + sqrt(H(2));
            p = H(2) * w * w / ((a - w) * (a - w));
            L.alpha = 1;
            L.family = "polynomial";
            break;
        }
        case GraphClass::biconnected_sp: {
            H rho1 = cr.auxiliaries.at("rho1"), E0 = cr.auxiliaries.at("E0");
            HS D = networks_D_in_w(rho1 * E0 / (1 + rho1 * E0), kmax);
            p = D * D / H(E0 * E0);
            L.alpha = -1.5;
            L.family = "polynomial";
            break;
        }
        case GraphClass::connected_outerplanar: {
            H v = cr.auxiliaries.at("v0"), rho = cr.auxiliaries.at("rho");
            H y = point::outerplanar_y(v), yp = point::outerplanar_yprime(v);
            HS one_minus = H(1) - y * w;
            HS Bw = v * w + H(v * y) * w * w / (H(2) * one_minus);
            HS dBw = w + w * w * (H(y + v * yp) - H(y * y) * w) / (H(2) * one_minus * one_minus);
            p = rho * exp_series(Bw) * dBw;
            L.alpha = 0.25;
            L.family = "exp_sqrt";
            break;
        }
        case GraphClass::connected_sp: {
            H v = cr.auxiliaries.at("v0"), rho = cr.auxiliaries.at("rho2");
            H E = point::networks_E(v), Ep = point::networks_Eprime(v);
            H h = v * E / (1 + v * E);
            H hp = (E + v * Ep) / ((1 + v * E) * (1 + v * E));
            HS D = networks_D_in_w(h, kmax);
            // D_x (1 - (1 + D) h) = (1 + D) h' D, so the square-root blow-up of D_x cancels
            HS core = D - h * D * (H(1) + D / H(2));
            HS dBw = core + H(v * hp / 2) * D * D;
            p = rho * exp_series(v * core) * dBw;
            L.alpha = -1.5;
            L.family = "polynomial";
            break;
        }
    }
    L.dbar.resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k) L.dbar[k] = p.get(k);
    return L;
}

std::vector<ConvergenceRow> convergence_report(GraphClass c, const std::vector<int>& ngrid,
                                               const std::vector<int>& kgrid, bool pairs) {
    if (ngrid.empty() || kgrid.empty()) return {};
    const int nmax = *std::max_element(ngrid.begin(), ngrid.end());
    const int kmax = *std::max_element(kgrid.begin(), kgrid.end());
    SpectrumEngine<double> eng(c, nmax, kmax, pairs ? kmax : -1);
    LimitDistribution lim = limit_distribution(c, kmax);
    std::vector<ConvergenceRow> rows;
    for (int n : ngrid) {
        DegreeTable<double> d = eng.table(n);
        for (int k : kgrid) {
            ConvergenceRow r{n, k, -1, d.single_at(k), lim.at(k), 0};
            r.ratio = r.limit > 0 ? r.value / r.limit : 0;
            rows.push_back(r);
        }
        if (!pairs) continue;
        for (int k : kgrid)
            for (int l : kgrid) {
                ConvergenceRow r{n, k, l, d.pair_at(k, l), lim.at(k) * lim.at(l), 0};
                r.ratio = r.limit > 0 ? r.value / r.limit : 0;
                rows.push_back(r);
            }
    }
    return rows;
}

}  // namespace maxdeg
