#include "maxdeg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>

#include "CLI11.hpp"
#include "maxdeg/io.hpp"
#include "maxdeg/verify.hpp"

namespace maxdeg {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int resolved_kmax(const RunConfig& cfg, int n) { return cfg.kmax < 0 ? default_kmax(n) : std::min(cfg.kmax, n - 1); }

bool exact_mode(const RunConfig& cfg, int n) {
    if (cfg.mode == "exact") return true;
    if (cfg.mode == "float") return false;
    return n <= 60;
}

// Opens cfg.output (or returns out) for the lifetime of the holder.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
        out_ = file_.get();
    }
    std::ostream& operator*() { return *out_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* out_;
};

void cmd_counts(const RunConfig& cfg, std::ostream& out) {
    const GraphClass c = parse_class(cfg.cls);
    if (cfg.n < 1) throw UsageError("counts: nmax must be positive");
    auto counts = class_counts(c, cfg.n);
    if (cfg.format == "json") {
        nlohmann::json j = {{"schema", schema_version}, {"class", class_name(c)}, {"counts", nlohmann::json::object()}};
        for (int n = min_size(c); n <= cfg.n; ++n) j["counts"][std::to_string(n)] = counts[n].get_str();
        out << j.dump(2) << '\n';
    } else {
        write_counts_csv(out, c, counts);
    }
}

void cmd_constants(const RunConfig& cfg, std::ostream& out) {
    const GraphClass c = parse_class(cfg.cls);
    nlohmann::json j = constants_json(solve_class_constants(c));
    if (cfg.precision != 20) {
        const auto& r = class_constants(c);
        j["x0"] = format_number(r.x0, cfg.precision);
        j["q"] = format_number(r.q, cfg.precision);
        j["c"] = format_number(r.c, cfg.precision);
        for (auto& [k, v] : r.auxiliaries) j["auxiliaries"][k] = format_number(v, cfg.precision);
    }
    out << j.dump(2) << '\n';
}

void cmd_degrees(const RunConfig& cfg, std::ostream& out) {
    const GraphClass c = parse_class(cfg.cls);
    if (cfg.n < min_size(c)) throw UsageError("degrees: n below the class minimum");
    const int k = resolved_kmax(cfg, cfg.n);
    const int p = cfg.pairs ? k : -1;
    auto emit = [&](const auto& d) {
        if (cfg.format == "json") out << degree_table_json(d).dump(2) << '\n';
        else write_degree_table_csv(out, d);
    };
    if (exact_mode(cfg, cfg.n)) emit(degree_table_exact(c, cfg.n, k, p));
    else emit(degree_table_float(c, cfg.n, k, p));
}

void cmd_tails(const RunConfig& cfg, std::ostream& out) {
    const GraphClass c = parse_class(cfg.cls);
    std::vector<int> ngrid = cfg.ngrid;
    if (ngrid.empty()) throw UsageError("tails: --n-grid is required");
    for (int n : ngrid)
        if (n < std::max(2, min_size(c))) throw UsageError("tails: sizes must be at least 2");
    const int kmax = cfg.kmax < 0 ? default_kmax(*std::max_element(ngrid.begin(), ngrid.end())) : cfg.kmax;
    std::vector<int> kgrid;
    for (int k = 1; k <= kmax; ++k) kgrid.push_back(k);
    auto rows = convergence_report(c, ngrid, kgrid, cfg.pairs);
    if (cfg.format == "json") out << convergence_json(c, rows).dump(2) << '\n';
    else write_convergence_csv(out, c, rows);
}

std::map<int, double> sampled_tail(GraphClass c, int n, int samples, std::uint64_t seed, int workers) {
    auto r = max_degree_experiment(c, {n}, samples, seed, workers);
    std::map<int, double> ref;
    double above = samples;
    for (int k = 0; k < n; ++k) {
        auto it = r.records[0].histogram.find(k);
        if (it != r.records[0].histogram.end()) above -= it->second;
        ref[k] = above / samples;
    }
    return ref;
}

void cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    const GraphClass c = parse_class(cfg.cls);
    if (cfg.n < std::max(2, min_size(c))) throw UsageError("bounds: n must be at least 2");
    std::optional<std::map<int, double>> ref;
    if (cfg.reference == "oracle") {
        if (cfg.n > 7) throw UsageError("bounds: oracle reference needs n <= 7");
        auto o = enumerate(c, cfg.n, true, cfg.workers);
        ref.emplace();
        std::int64_t above = o.count;
        for (int k = 0; k < cfg.n; ++k) {
            auto it = o.maxdeg.find(k);
            if (it != o.maxdeg.end()) above -= it->second;
            (*ref)[k] = static_cast<double>(above) / static_cast<double>(o.count);
        }
    } else if (cfg.reference == "sampler") {
        ref = sampled_tail(c, cfg.n, cfg.samples, cfg.seed, cfg.workers);
    }
    if (exact_mode(cfg, cfg.n)) write_bounds_csv(out, max_degree_bounds_exact(c, cfg.n), ref);
    else write_bounds_csv(out, max_degree_bounds_float(c, cfg.n), ref);
}

void cmd_sample(const RunConfig& cfg, std::ostream& out) {
    const GraphClass c = parse_class(cfg.cls);
    if (cfg.n < min_size(c)) throw UsageError("sample: n below the class minimum");
    if (cfg.samples < 1) throw UsageError("sample: --count must be positive");
    Sampler s(c, cfg.n);
    for (int i = 0; i < cfg.samples; ++i) {
        Rng rng(derive_seed(cfg.seed, i));
        if (i > 0) out << '\n';
        out << s.sample(cfg.n, rng).to_edge_list();
    }
}

void cmd_experiment(const RunConfig& cfg, std::ostream& out) {
    const GraphClass c = parse_class(cfg.cls);
    if (cfg.ngrid.empty()) throw UsageError("experiment: --n-grid is required");
    if (cfg.samples < 1) throw UsageError("experiment: --samples must be positive");
    auto r = max_degree_experiment(c, cfg.ngrid, cfg.samples, cfg.seed, cfg.workers);
    const std::string prefix = cfg.output.empty() ? "experiment-" + class_name(c) : cfg.output;
    const double cc = static_cast<double>(class_constants(c).c);
    {
        std::ofstream f(prefix + ".csv", std::ios::binary);
        write_experiment_csv(f, r);
    }
    {
        std::ofstream f(prefix + ".json", std::ios::binary);
        f << experiment_json(r).dump(2) << '\n';
    }
    {
        std::ofstream f(prefix + ".dat", std::ios::binary);
        write_experiment_dat(f, r, cc);
    }
    out << "n,mean,c_log_n\n";
    for (auto& rec : r.records)
        out << rec.n << ',' << format_number(rec.mean) << ',' << format_number(cc * std::log(rec.n)) << '\n';
    out << "slope," << format_number(r.slope) << ",c," << format_number(cc) << '\n';
}

bool cmd_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.level < 1 || cfg.level > 3) throw UsageError("verify: level must be 1, 2 or 3");
    bool ok = true;
    for (auto& line : verify_oracle(cfg.level + 4, cfg.workers)) {
        out << (line.ok ? "ok " : "MISMATCH ") << class_name(line.cls) << " n=" << line.n;
        if (!line.ok) out << ' ' << line.detail;
        out << '\n';
        ok = ok && line.ok;
    }
    return ok;
}

CLI::Validator class_check() {
    return CLI::Validator(
        [](std::string& s) -> std::string {
            try {
                parse_class(s);
                return {};
            } catch (const std::invalid_argument& e) {
                return e.what();
            }
        },
        "CLASS", "graph class");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Maximum degree of random outerplanar and series-parallel graphs", "maxdeg"};
    app.require_subcommand(1);
    const std::string classes = "2conn-outerplanar, conn-outerplanar, 2conn-sp or conn-sp";

    auto add_class = [&](CLI::App* s) { s->add_option("class", cfg.cls, classes)->required()->check(class_check()); };
    auto add_output = [&](CLI::App* s) { s->add_option("-o,--output", cfg.output, "write to this file"); };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    };
    auto add_mode = [&](CLI::App* s) {
        s->add_option("--mode", cfg.mode, "exact rationals, doubles, or exact up to n = 60")
            ->check(CLI::IsMember({"exact", "float", "auto"}))
            ->capture_default_str();
    };
    auto add_workers = [&](CLI::App* s) {
        s->add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    };

    auto* counts = app.add_subcommand("counts", "labelled graph counts for n = 1..nmax (CSV: class,n,count)");
    add_class(counts);
    counts->add_option("nmax", cfg.n, "largest size")->required();
    add_format(counts);
    add_output(counts);

    auto* constants = app.add_subcommand("constants", "singularity, q and c as JSON {schema,class,x0,q,c,auxiliaries,residuals}");
    add_class(constants);
    constants->add_option("--precision", cfg.precision, "significant digits")->check(CLI::Range(6, 50))->capture_default_str();
    add_output(constants);

    auto* degrees = app.add_subcommand("degrees", "degree distribution d_{n,k} (CSV: class,n,k,l,value)");
    add_class(degrees);
    degrees->add_option("n", cfg.n, "graph size")->required();
    degrees->add_option("kmax", cfg.kmax, "largest degree (default ceil(4 log n))");
    degrees->add_flag("--pairs", cfg.pairs, "include d_{n,k,l}");
    add_mode(degrees);
    add_format(degrees);
    add_output(degrees);

    auto* tails = app.add_subcommand("tails", "d_{n,k} against the limit law (CSV: class,n,k,l,value,limit,ratio)");
    add_class(tails);
    tails->add_option("--n-grid", cfg.ngrid, "sizes")->required()->delimiter(',');
    tails->add_option("--kmax", cfg.kmax, "largest degree");
    tails->add_flag("--pairs", cfg.pairs, "include pair ratios");
    add_format(tails);
    add_output(tails);

    auto* bounds = app.add_subcommand("bounds", "moment bounds on P{maxdeg > k} (CSV: class,n,k,tail,lower,upper[,reference])");
    add_class(bounds);
    bounds->add_option("n", cfg.n, "graph size")->required();
    bounds->add_option("--reference", cfg.reference, "add an observed tail")->check(CLI::IsMember({"oracle", "sampler"}));
    bounds->add_option("--samples", cfg.samples, "sampler draws")->capture_default_str();
    bounds->add_option("--seed", cfg.seed, "sampler seed")->capture_default_str();
    add_mode(bounds);
    add_workers(bounds);
    add_output(bounds);

    auto* sample = app.add_subcommand("sample", "uniform random graphs as 1-indexed edge lists (\"n m\" header)");
    add_class(sample);
    sample->add_option("n", cfg.n, "graph size")->required();
    sample->add_option("--count", cfg.samples, "number of graphs, separated by blank lines")->capture_default_str();
    sample->add_option("--seed", cfg.seed, "seed; graph i uses derive_seed(seed, i)")->capture_default_str();
    add_output(sample);

    auto* experiment = app.add_subcommand(
        "experiment", "maximum degree over a size grid; writes PREFIX.csv, PREFIX.json and PREFIX.dat");
    add_class(experiment);
    experiment->add_option("--n-grid", cfg.ngrid, "sizes")->required()->delimiter(',');
    experiment->add_option("--samples", cfg.samples, "draws per size")->capture_default_str();
    experiment->add_option("--seed", cfg.seed, "seed")->capture_default_str();
    experiment->add_option("-o,--output", cfg.output, "file prefix (default experiment-CLASS)");
    add_workers(experiment);

    auto* verify = app.add_subcommand("verify", "compare tables with exhaustive enumeration (level 1: n <= 5, 2: n <= 6, 3: n <= 7)");
    verify->add_option("level", cfg.level, "1, 2 or 3")->capture_default_str();
    add_workers(verify);
    add_output(verify);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    try {
        const bool to_prefix = cfg.subcommand == "experiment";
        Sink sink(to_prefix ? std::string{} : cfg.output, out);
        if (cfg.subcommand == "counts") cmd_counts(cfg, *sink);
        else if (cfg.subcommand == "constants") cmd_constants(cfg, *sink);
        else if (cfg.subcommand == "degrees") cmd_degrees(cfg, *sink);
        else if (cfg.subcommand == "tails") cmd_tails(cfg, *sink);
        else if (cfg.subcommand == "bounds") cmd_bounds(cfg, *sink);
        else if (cfg.subcommand == "sample") cmd_sample(cfg, *sink);
        else if (cfg.subcommand == "experiment") cmd_experiment(cfg, *sink);
        else if (cfg.subcommand == "verify" && !cmd_verify(cfg, *sink)) return 1;
        (*sink).flush();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace maxdeg
