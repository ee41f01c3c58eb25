#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "maxdeg/bounds.hpp"
#include "maxdeg/cli.hpp"
#include "maxdeg/constants.hpp"
#include "maxdeg/io.hpp"
#include "maxdeg/sampler.hpp"
#include "maxdeg/verify.hpp"

namespace py = pybind11;
using namespace maxdeg;

namespace {

py::object fraction(const Rational& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(r.get_str());
}

GraphClass cls(const std::string& name) { return parse_class(name); }

py::dict constants_dict(const std::string& name) {
    const auto& r = class_constants(cls(name));
    py::dict d, aux, res;
    d["class"] = class_name(r.cls);
    d["x0"] = static_cast<double>(r.x0);
    d["q"] = static_cast<double>(r.q);
    d["c"] = static_cast<double>(r.c);
    for (auto& [k, v] : r.auxiliaries) aux[py::str(k)] = static_cast<double>(v);
    for (auto& [k, v] : r.residuals) res[py::str(k)] = v;
    d["auxiliaries"] = aux;
    d["residuals"] = res;
    return d;
}

py::dict degree_table(const std::string& name, int n, int kmax, bool pairs, bool exact) {
    py::dict out;
    const int k = kmax < 0 ? default_kmax(n) : kmax;
    auto fill = [&](const auto& d, auto conv) {
        py::list single, pair;
        for (auto& v : d.single) single.append(conv(v));
        for (auto& row : d.pair) {
            py::list r;
            for (auto& v : row) r.append(conv(v));
            pair.append(r);
        }
        out["class"] = class_name(d.cls);
        out["n"] = d.n;
        out["single"] = single;
        out["pair"] = pair;
    };
    if (exact) fill(degree_table_exact(cls(name), n, k, pairs ? k : -1), fraction);
    else fill(degree_table_float(cls(name), n, k, pairs ? k : -1), [](double v) { return v; });
    return out;
}

}  // namespace

PYBIND11_MODULE(_maxdeg, m) {
    m.doc() = "Maximum degree of random outerplanar and series-parallel graphs";
    m.attr("classes") = py::make_tuple("2conn-outerplanar", "conn-outerplanar", "2conn-sp", "conn-sp");

    m.def("counts", [](const std::string& name, int nmax) {
        py::dict out;
        auto c = class_counts(cls(name), nmax);
        for (int n = min_size(cls(name)); n <= nmax; ++n) out[py::int_(n)] = py::int_(py::str(c[n].get_str()));
        return out;
    }, py::arg("cls"), py::arg("nmax"));

    m.def("constants", &constants_dict, py::arg("cls"));

    m.def("degree_table", &degree_table, py::arg("cls"), py::arg("n"), py::arg("kmax") = -1,
          py::arg("pairs") = false, py::arg("exact") = true);

    m.def("limit_distribution", [](const std::string& name, int kmax) {
        auto lim = limit_distribution(cls(name), kmax);
        std::vector<double> out;
        for (int k = 0; k <= kmax; ++k) out.push_back(lim.at(k));
        return out;
    }, py::arg("cls"), py::arg("kmax"));

    m.def("bounds", [](const std::string& name, int n) {
        auto b = max_degree_bounds_float(cls(name), n);
        py::list rows;
        for (auto& r : b.rows) rows.append(py::make_tuple(r.k, r.lower, r.upper));
        return py::make_tuple(rows, b.expectation_lower, b.expectation_upper);
    }, py::arg("cls"), py::arg("n"), "rows (k, lower, upper) for P{maxdeg > k}, then the bounds on E maxdeg");

    m.def("sample", [](const std::string& name, int n, std::uint64_t seed) {
        return sample_graph(cls(name), n, seed).edges();
    }, py::arg("cls"), py::arg("n"), py::arg("seed"), "edge list on vertices 0..n-1");

    m.def("experiment", [](const std::string& name, const std::vector<int>& ngrid, int samples, std::uint64_t seed,
                           int workers) {
        ExperimentResult r;
        {
            py::gil_scoped_release release;
            r = max_degree_experiment(cls(name), ngrid, samples, seed, workers);
        }
        return experiment_json(r).dump();
    }, py::arg("cls"), py::arg("ngrid"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 1,
       "JSON summary");

    m.def("is_member", [](const std::string& name, int n, const std::vector<std::pair<int, int>>& edges) {
        LabelledGraph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return is_member(g, cls(name));
    }, py::arg("cls"), py::arg("n"), py::arg("edges"));

    m.def("verify", [](int nmax) {
        for (auto& line : verify_oracle(nmax))
            if (!line.ok) return false;
        return true;
    }, py::arg("nmax"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
