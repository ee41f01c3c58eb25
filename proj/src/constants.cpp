#include "maxdeg/constants.hpp"

#include <mutex>
#include <stdexcept>

namespace maxdeg {

namespace {

using H = HighFloat;

H sq(const H& a) { return a * a; }

}  // namespace

HighFloat find_root(const std::function<HighFloat(const HighFloat&)>& f, HighFloat lo, HighFloat hi) {
    H flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) throw std::runtime_error("find_root: bracket does not change sign");
    while (hi - lo > H("1e-6") * abs(hi)) {
        H mid = (lo + hi) / 2, fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    H x = (lo + hi) / 2;
    const H h("1e-22");
    for (int it = 0; it < 60; ++it) {
        H fx = f(x);
        H d = (f(x + h) - f(x - h)) / (2 * h);
        if (d == 0) break;
        H nx = x - fx / d;
        if (nx <= lo || nx >= hi) throw std::runtime_error("find_root: Newton left the bracket");
        H step = abs(nx - x);
        x = nx;
        if (step < H("1e-44") * abs(x)) return x;
    }
    if (abs(f(x)) > H("1e-30")) throw std::runtime_error("find_root: Newton did not converge");
    return x;
}

namespace point {

HighFloat dissections_A(const HighFloat& x) {
    if (x == 0) return 0;
    return (1 - 3 * x - sqrt(1 - 6 * x + x * x)) / (4 * x);
}

HighFloat outerplanar_Bprime(const HighFloat& x) { return (1 + 5 * x - sqrt(1 - 6 * x + x * x)) / 8; }

HighFloat outerplanar_Bsecond(const HighFloat& x) { return (5 + (3 - x) / sqrt(1 - 6 * x + x * x)) / 8; }

HighFloat outerplanar_y(const HighFloat& x) { return x * (2 * dissections_A(x) + 1); }

HighFloat outerplanar_yprime(const HighFloat& x) {
    // A' from implicit differentiation of 2xA^2 + (3x-1)A + x = 0
    H A = dissections_A(x);
    H Ap = -(2 * A * A + 3 * A + 1) / (4 * x * A + 3 * x - 1);
    return 2 * A + 1 + 2 * x * Ap;
}

HighFloat networks_E(const HighFloat& x) {
    // Newton from below on the convex F(E) = 2exp(g) - 1 - E converges to the smaller root.
    H E = 1;
    for (int it = 0; it < 400; ++it) {
        H u = x * E;
        H g = x * E * E / (1 + u);
        H eg = exp(g);
        H F = 2 * eg - 1 - E;
        H dF = 2 * eg * u * (2 + u) / sq(1 + u) - 1;
        if (dF >= 0) throw std::domain_error("networks_E: point beyond the singularity");
        H step = F / dF;
        E -= step;
        if (abs(step) < H("1e-45")) break;
    }
    return E;
}

HighFloat networks_Eprime(const HighFloat& x) {
    H E = networks_E(x);
    return (1 + E) * E * E / (1 - 2 * x * E * E - x * x * E * E * E);
}

HighFloat sp_Bprime(const HighFloat& x) {
    H E = networks_E(x);
    return x * E * (2 - x * E * E) / (2 * (1 + x * E));
}

HighFloat sp_Bsecond(const HighFloat& x) {
    H e = networks_E(x);
    H ep = (1 + e) * e * e / (1 - 2 * x * e * e - x * x * e * e * e);
    H x2 = x * x, e2 = e * e, e3 = e2 * e;
    H num = 2 * e + 2 * x * ep - 2 * x * e3 - 3 * x2 * e2 * ep - x2 * e3 * e - 2 * x2 * x * e3 * ep;
    return num / (2 * sq(1 + x * e));
}

HighFloat sp_w0(const HighFloat& x) {
    H u = x * networks_E(x);
    return (1 + 1 / u) * exp(-1 / (1 + u)) - 1;
}

}  // namespace point

ConstantsReport solve_class_constants(GraphClass cls) {
    ConstantsReport r;
    r.cls = cls;
    switch (cls) {
        case GraphClass::biconnected_outerplanar: {
            H s2 = sqrt(H(2));
            r.x0 = 3 - 2 * s2;
            r.q = s2 - 1;
            r.residuals["q_quadratic"] = static_cast<double>(abs(r.q * r.q + 2 * r.q - 1));
            r.residuals["x0_discriminant"] = static_cast<double>(abs(1 - 6 * r.x0 + r.x0 * r.x0));
            break;
        }
        case GraphClass::biconnected_sp: {
            // singular point of E = G(x, E): G_E = 1 reduces to x E^2 (2 + xE) = 1
            auto u_of = [](const H& E) { return sqrt(1 + 1 / E) - 1; };
            auto F = [&](const H& E) {
                H u = u_of(E);
                return 2 * exp(u * E / (1 + u)) - 1 - E;
            };
            H E0 = find_root(F, H("1.2"), H("3"));
            H rho1 = u_of(E0) / E0;
            H u = rho1 * E0;
            H eg = exp(rho1 * E0 * E0 / (1 + u));
            H Gx = 2 * eg * E0 * E0 / sq(1 + u);
            H gE = u * (2 + u) / sq(1 + u);
            H GEE = 2 * eg * (gE * gE + 2 * rho1 / (sq(1 + u) * (1 + u)));
            H E1 = -sqrt(2 * rho1 * Gx / GEE);
            H w0 = (1 + 1 / u) * exp(-1 / (1 + u)) - 1;
            r.x0 = rho1;
            r.q = 1 / w0;
            r.auxiliaries["E0"] = E0;
            r.auxiliaries["E1"] = E1;
            r.auxiliaries["rho1"] = rho1;
            r.auxiliaries["w0_rho1"] = w0;
            r.residuals["E_fixed_point"] = static_cast<double>(abs(2 * eg - 1 - E0));
            r.residuals["singular_condition"] = static_cast<double>(abs(rho1 * E0 * E0 * (2 + u) - 1));
            r.residuals["G_E_minus_one"] = static_cast<double>(abs(2 * eg * gE - 1));
            break;
        }
        case GraphClass::connected_outerplanar: {
            H xs = 3 - 2 * sqrt(H(2));
            H v0 = find_root([](const H& v) { return 1 - v * point::outerplanar_Bsecond(v); }, H("0.16"),
                             xs * (1 - H("1e-12")));
            H rho = v0 * exp(-point::outerplanar_Bprime(v0));
            H A0 = point::dissections_A(v0);
            r.x0 = rho;
            r.q = v0 * (1 + 2 * A0);
            r.auxiliaries["v0"] = v0;
            r.auxiliaries["rho"] = rho;
            r.auxiliaries["A_v0"] = A0;
            r.residuals["one_minus_v0_Bsecond"] = static_cast<double>(abs(1 - v0 * point::outerplanar_Bsecond(v0)));
            r.residuals["v_fixed_point"] = static_cast<double>(abs(v0 - rho * exp(point::outerplanar_Bprime(v0))));
            r.residuals["A_quadratic"] = static_cast<double>(abs(2 * v0 * A0 * A0 + (3 * v0 - 1) * A0 + v0));
            break;
        }
        case GraphClass::connected_sp: {
            const ConstantsReport& b = class_constants(GraphClass::biconnected_sp);
            H rho1 = b.x0;
            H v0 = find_root([](const H& v) { return 1 - v * point::sp_Bsecond(v); }, H("0.1278"),
                             rho1 * (1 - H("1e-12")));
            H rho2 = v0 * exp(-point::sp_Bprime(v0));
            H E = point::networks_E(v0);
            H w0 = point::sp_w0(v0);
            r.x0 = rho2;
            r.q = 1 / w0;
            r.auxiliaries["v0"] = v0;
            r.auxiliaries["rho2"] = rho2;
            r.auxiliaries["rho1"] = rho1;
            r.auxiliaries["E_v0"] = E;
            r.auxiliaries["w0_v0"] = w0;
            r.residuals["one_minus_v0_Bsecond"] = static_cast<double>(abs(1 - v0 * point::sp_Bsecond(v0)));
            r.residuals["v_fixed_point"] = static_cast<double>(abs(v0 - rho2 * exp(point::sp_Bprime(v0))));
            r.residuals["E_fixed_point"] =
                static_cast<double>(abs(2 * exp(v0 * E * E / (1 + v0 * E)) - 1 - E));
            break;
        }
    }
    r.c = 1 / log(1 / r.q);
    r.residuals["c_from_q"] = static_cast<double>(abs(r.c * log(1 / r.q) - 1));
    return r;
}

const ConstantsReport& class_constants(GraphClass c) {
    static std::once_flag flags[4];
    static ConstantsReport reports[4];
    const int i = static_cast<int>(c);
    std::call_once(flags[i], [&] { reports[i] = solve_class_constants(c); });
    return reports[i];
}

double singularity(GraphClass c) { return static_cast<double>(class_constants(c).x0); }

}  // namespace maxdeg
