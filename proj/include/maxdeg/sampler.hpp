#pragma once

// Exact-size uniform sampling by the recursive method, and max-degree experiments.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "maxdeg/graph.hpp"

namespace maxdeg {

std::uint64_t splitmix64(std::uint64_t x);

// Seed for stream i of a run: splitmix64 applied to seed + i * golden gamma.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// mt19937_64 with a fixed 53-bit mapping to [0, 1), identical on every platform.
class Rng {
public:
    static constexpr const char* algorithm = "mt19937_64/splitmix64";
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    std::uint64_t below(std::uint64_t bound) { return static_cast<std::uint64_t>(uniform() * bound); }

private:
    std::mt19937_64 gen_;
};

// Coefficient tables in the scaled variable s = x / sigma, indexed by size.
// v is the vertex atom (x itself for 2-connected classes, x C'(x) otherwise),
// B the vertex-rooted blocks in v, C = exp(B).
struct SamplerTables {
    GraphClass cls{};
    double sigma = 0;
    int order = 0;
    std::map<std::string, std::vector<double>> series;

    const std::vector<double>& at(const std::string& name) const { return series.at(name); }
};

SamplerTables build_sampler_tables(GraphClass c, int order);

class Sampler {
public:
    // Tables to max_n; MAXDEG_CACHE_DIR, when set, holds them between runs.
    Sampler(GraphClass c, int max_n);

    GraphClass cls() const { return tables_.cls; }
    int max_n() const { return max_n_; }
    const SamplerTables& tables() const { return tables_; }

    LabelledGraph sample(int n, Rng& rng) const;
    // Edge list with labels 0..n-1 already permuted.
    std::vector<std::pair<int, int>> sample_edges(int n, Rng& rng) const;
    int sample_max_degree(int n, Rng& rng) const;

private:
    int max_n_;
    SamplerTables tables_;
};

LabelledGraph sample_graph(GraphClass c, int n, std::uint64_t seed);

struct ExperimentRecord {
    GraphClass cls{};
    int n = 0;
    std::uint64_t seed = 0;
    int samples = 0;
    std::string rng = Rng::algorithm;
    std::vector<int> maxdeg;  // one entry per sample, in sample order
    double mean = 0;
    double variance = 0;
    std::map<int, int> histogram;
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;
    // least squares mean Δn = slope log n + intercept
    double slope = 0;
    double intercept = 0;
};

// Sample i at size n uses derive_seed(seed, n * 2^32 + i), so results do not depend on workers.
ExperimentResult max_degree_experiment(GraphClass c, const std::vector<int>& ngrid, int samples,
                                       std::uint64_t seed, int workers = 1);

}  // namespace maxdeg
