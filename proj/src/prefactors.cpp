#include <cmath>
#include <numbers>

#include "maxdeg/constants.hpp"
#include "maxdeg/spectrum.hpp"
#include "maxdeg/sp_gf.hpp"

namespace maxdeg {

namespace {

struct Fit {
    double value;
    double spread;
};

// r(h) = a + b h + c h^2 sampled at h, h/2, h/4 (h = 1/n or 1/sqrt k)
Fit richardson(double r1, double r2, double r4) {
    double first = 2 * r4 - r2;
    double second = (8 * r4 - 6 * r2 + r1) / 3;
    return {second, std::abs(second - first)};
}

void record(std::map<std::string, double>& out, const std::string& name, Fit f, double tol = 1e-2) {
    out[name] = f.value;
    out[name + "_flagged"] = f.spread > tol * std::abs(f.value) ? 1.0 : 0.0;
}

// [s^{n-1}] F' rho n^{3/2} at scale rho, extrapolated in 1/n from n/4, n/2, n
Fit count_prefactor(const Series<double>& fprime, double rho, int n) {
    auto r = [&](int m) { return fprime.get(m - 1) * rho * std::pow(m, 1.5); };
    return richardson(r(n / 4), r(n / 2), r(n));
}

}  // namespace

std::map<std::string, double> asymptotic_prefactors(GraphClass c) {
    const ConstantsReport& cr = class_constants(c);
    const double q = static_cast<double>(cr.q);
    std::map<std::string, double> out;
    const int n = 300;
    switch (c) {
        case GraphClass::biconnected_outerplanar:
            out["dbar_prefactor"] = 2;  // d̄_k = 2 (k - 1) q^k
            break;
        case GraphClass::biconnected_sp: {
            const double rho = singularity(c);
            SeriesContext<double> ctx{n, 0, 0, rho};
            record(out, "b", count_prefactor(build_series_parallel(ctx).Bprime, rho, n));
            LimitDistribution L = limit_distribution(c, 400);
            auto r = [&](int k) { return L.at(k) * std::pow(k, 1.5) * std::pow(q, -k); };
            record(out, "dbar_prefactor", richardson(r(100), r(200), r(400)));
            break;
        }
        case GraphClass::connected_outerplanar: {
            const double v0 = static_cast<double>(cr.auxiliaries.at("v0"));
            const double rho = static_cast<double>(cr.auxiliaries.at("rho"));
            const double yp = static_cast<double>(point::outerplanar_yprime(cr.auxiliaries.at("v0")));
            const double lambda = v0 / (2 * q);
            const double c2 = 2 * std::sqrt(lambda);
            const double c1 = rho * v0 * yp * std::exp(lambda / 2) /
                              (4 * std::sqrt(std::numbers::pi) * q * q * std::pow(lambda, 0.75));
            out["c1"] = c1;
            out["c2"] = c2;
            LimitDistribution L = limit_distribution(c, 400);
            auto r = [&](int k) {
                return L.at(k) * std::pow(k, -0.25) * std::pow(q, -k) * std::exp(-c2 * std::sqrt(k));
            };
            Fit f = richardson(r(25), r(100), r(400));
            record(out, "c1_fit", f);
            out["c1_flagged"] = std::abs(f.value - c1) > 1e-2 * c1 ? 1.0 : 0.0;
            break;
        }
        case GraphClass::connected_sp: {
            const double rho = singularity(c);
            SpectrumEngine<double> eng(c, n + 1, 1);
            record(out, "c", count_prefactor(eng.gprime(), rho, n));
            LimitDistribution L = limit_distribution(c, 400);
            auto r = [&](int k) { return L.at(k) * std::pow(k, 1.5) * std::pow(q, -k); };
            record(out, "c_prime", richardson(r(100), r(200), r(400)));
            break;
        }
    }
    return out;
}

}  // namespace maxdeg
