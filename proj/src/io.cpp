#include "maxdeg/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace maxdeg {

using nlohmann::json;

std::string format_number(const Rational& v) { return v.get_str(); }

std::string format_number(double v) { return Scalar<double>::str(v); }

std::string format_number(const HighFloat& v, int digits) {
    std::ostringstream s;
    s.precision(digits);
    s << v;
    return s.str();
}

void write_counts_csv(std::ostream& out, GraphClass c, const std::vector<Integer>& counts) {
    out << "class,n,count\n";
    for (std::size_t n = 1; n < counts.size(); ++n)
        if (counts[n] != 0 || static_cast<int>(n) >= min_size(c))
            out << class_name(c) << ',' << n << ',' << counts[n].get_str() << '\n';
}

namespace {

template <class T>
void degree_csv(std::ostream& out, const DegreeTable<T>& d) {
    out << "class,n,k,l,value\n";
    const std::string cls = class_name(d.cls);
    for (int k = 0; k <= d.kmax(); ++k)
        out << cls << ',' << d.n << ',' << k << ",," << format_number(d.single[k]) << '\n';
    for (int k = 0; k <= d.pair_kmax(); ++k)
        for (int l = 0; l <= d.pair_kmax(); ++l)
            out << cls << ',' << d.n << ',' << k << ',' << l << ',' << format_number(d.pair[k][l]) << '\n';
}

template <class T>
json degree_json(const DegreeTable<T>& d, const char* mode) {
    json j;
    j["schema"] = schema_version;
    j["class"] = class_name(d.cls);
    j["n"] = d.n;
    j["mode"] = mode;
    j["single"] = json::array();
    for (auto& v : d.single) j["single"].push_back(format_number(v));
    j["pair"] = json::array();
    for (auto& row : d.pair) {
        json r = json::array();
        for (auto& v : row) r.push_back(format_number(v));
        j["pair"].push_back(r);
    }
    return j;
}

template <class T>
void bounds_csv(std::ostream& out, const MaxDegreeBounds<T>& b, const std::optional<std::map<int, double>>& ref) {
    out << "class,n,k,tail,lower,upper";
    if (ref) out << ",reference";
    out << '\n';
    for (auto& r : b.rows) {
        out << class_name(b.cls) << ',' << b.n << ',' << r.k << ',' << format_number(r.tail) << ','
            << format_number(r.lower) << ',' << format_number(r.upper);
        if (ref) {
            auto it = ref->find(r.k);
            out << ',';
            if (it != ref->end()) out << format_number(it->second);
        }
        out << '\n';
    }
}

}  // namespace

void write_degree_table_csv(std::ostream& out, const DegreeTable<Rational>& d) { degree_csv(out, d); }
void write_degree_table_csv(std::ostream& out, const DegreeTable<double>& d) { degree_csv(out, d); }
json degree_table_json(const DegreeTable<Rational>& d) { return degree_json(d, "exact"); }
json degree_table_json(const DegreeTable<double>& d) { return degree_json(d, "float"); }

void write_bounds_csv(std::ostream& out, const MaxDegreeBounds<Rational>& b,
                      const std::optional<std::map<int, double>>& reference) {
    bounds_csv(out, b, reference);
}
void write_bounds_csv(std::ostream& out, const MaxDegreeBounds<double>& b,
                      const std::optional<std::map<int, double>>& reference) {
    bounds_csv(out, b, reference);
}

void write_convergence_csv(std::ostream& out, GraphClass c, const std::vector<ConvergenceRow>& rows) {
    out << "class,n,k,l,value,limit,ratio\n";
    for (auto& r : rows) {
        out << class_name(c) << ',' << r.n << ',' << r.k << ',';
        if (r.l >= 0) out << r.l;
        out << ',' << format_number(r.value) << ',' << format_number(r.limit) << ',' << format_number(r.ratio) << '\n';
    }
}

json convergence_json(GraphClass c, const std::vector<ConvergenceRow>& rows) {
    json j;
    j["schema"] = schema_version;
    j["class"] = class_name(c);
    j["rows"] = json::array();
    for (auto& r : rows) {
        json row = {{"n", r.n}, {"k", r.k}, {"value", r.value}, {"limit", r.limit}, {"ratio", r.ratio}};
        if (r.l >= 0) row["l"] = r.l;
        j["rows"].push_back(row);
    }
    return j;
}

json constants_json(const ConstantsReport& r) {
    json j;
    j["schema"] = schema_version;
    j["class"] = class_name(r.cls);
    j["x0"] = format_number(r.x0);
    j["q"] = format_number(r.q);
    j["c"] = format_number(r.c);
    j["auxiliaries"] = json::object();
    for (auto& [k, v] : r.auxiliaries) j["auxiliaries"][k] = format_number(v);
    j["residuals"] = json::object();
    for (auto& [k, v] : r.residuals) j["residuals"][k] = v;
    return j;
}

json oracle_json(const OracleResult& o) {
    json j;
    j["schema"] = schema_version;
    j["class"] = class_name(o.cls);
    j["n"] = o.n;
    j["count"] = o.count;
    j["edges"] = o.edges;
    j["degree"] = json::object();
    for (auto [k, v] : o.degree) j["degree"][std::to_string(k)] = v;
    j["pair"] = json::array();
    for (auto& [kl, v] : o.pair) j["pair"].push_back({kl.first, kl.second, v});
    j["maxdeg"] = json::object();
    for (auto [k, v] : o.maxdeg) j["maxdeg"][std::to_string(k)] = v;
    return j;
}

void write_experiment_csv(std::ostream& out, const ExperimentResult& r) {
    out << "class,n,sample,maxdeg\n";
    for (auto& rec : r.records)
        for (std::size_t i = 0; i < rec.maxdeg.size(); ++i)
            out << class_name(rec.cls) << ',' << rec.n << ',' << i << ',' << rec.maxdeg[i] << '\n';
}

json experiment_json(const ExperimentResult& r) {
    json j;
    j["schema"] = schema_version;
    j["slope"] = r.slope;
    j["intercept"] = r.intercept;
    j["records"] = json::array();
    for (auto& rec : r.records) {
        json h = json::object();
        for (auto [k, v] : rec.histogram) h[std::to_string(k)] = v;
        j["records"].push_back({{"class", class_name(rec.cls)},
                                {"n", rec.n},
                                {"seed", rec.seed},
                                {"samples", rec.samples},
                                {"rng", rec.rng},
                                {"mean", rec.mean},
                                {"variance", rec.variance},
                                {"histogram", h}});
    }
    return j;
}

void write_experiment_dat(std::ostream& out, const ExperimentResult& r, double c) {
    out << "# n mean_maxdeg c_log_n\n";
    for (auto& rec : r.records)
        out << rec.n << ' ' << format_number(rec.mean) << ' ' << format_number(c * std::log(rec.n)) << '\n';
}

}  // namespace maxdeg
