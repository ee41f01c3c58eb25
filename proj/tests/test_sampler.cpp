#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <filesystem>
#include <unistd.h>

#include "doctest.h"
#include "maxdeg/oracle.hpp"
#include "maxdeg/sampler.hpp"
#include "maxdeg/spectrum.hpp"

using namespace maxdeg;

namespace {

double chi2_pvalue(const std::vector<double>& observed, const std::vector<double>& expected) {
    double x = 0;
    int cells = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0) {
            if (observed[i] > 0) return 0;
            continue;
        }
        x += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
        ++cells;
    }
    boost::math::chi_squared dist(cells - 1);
    return boost::math::cdf(boost::math::complement(dist, x));
}

double uniformity_pvalue(GraphClass c, int n, int draws, std::uint64_t seed) {
    Sampler s(c, n);
    Rng rng(seed);
    std::map<std::vector<std::pair<int, int>>, double> freq;
    for (int i = 0; i < draws; ++i) freq[s.sample(n, rng).edges()] += 1;
    const double total = static_cast<double>(enumerate(c, n).count);
    std::vector<double> obs, exp;
    for (auto& [g, f] : freq) {
        obs.push_back(f);
        exp.push_back(draws / total);
    }
    // graphs never drawn
    for (std::int64_t missing = static_cast<std::int64_t>(total) - static_cast<std::int64_t>(freq.size()); missing > 0;
         --missing) {
        obs.push_back(0);
        exp.push_back(draws / total);
    }
    return chi2_pvalue(obs, exp);
}

}  // namespace

TEST_CASE("triangle is the only 2-connected outerplanar graph on 3 vertices") {
    Sampler s(GraphClass::biconnected_outerplanar, 3);
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        auto g = s.sample(3, rng);
        CHECK(g.size() == 3);
    }
    auto k2 = sample_graph(GraphClass::biconnected_sp, 2, 5);
    CHECK(k2.size() == 1);
    CHECK(sample_graph(GraphClass::connected_sp, 1, 5).size() == 0);
}

TEST_CASE("uniform over small classes") {
    CHECK(uniformity_pvalue(GraphClass::biconnected_outerplanar, 4, 100000, 11) > 0.001);
    CHECK(uniformity_pvalue(GraphClass::biconnected_sp, 5, 60000, 12) > 0.001);
    CHECK(uniformity_pvalue(GraphClass::connected_outerplanar, 4, 60000, 13) > 0.001);
    CHECK(uniformity_pvalue(GraphClass::connected_sp, 5, 100000, 14) > 0.001);
}

TEST_CASE("samples belong to their class") {
    for (GraphClass c : all_classes) {
        CAPTURE(class_name(c));
        Sampler s(c, 50);
        Rng rng(derive_seed(99, static_cast<std::uint64_t>(c)));
        for (int i = 0; i < 1000; ++i) {
            auto g = s.sample(50, rng);
            REQUIRE(g.order() == 50);
            CHECK(is_member(g, c));
        }
    }
}

TEST_CASE("vertex degrees follow the exact table") {
    for (GraphClass c : all_classes) {
        CAPTURE(class_name(c));
        const int n = 10, draws = 100000;
        auto d = degree_table_exact(c, n, n - 1);
        Sampler s(c, n);
        Rng rng(derive_seed(2024, static_cast<std::uint64_t>(c)));
        std::vector<double> random_vertex(n, 0), first_label(n, 0), last_label(n, 0);
        for (int i = 0; i < draws; ++i) {
            auto g = s.sample(n, rng);
            random_vertex[g.degree(static_cast<int>(rng.below(n)))] += 1;
            first_label[g.degree(0)] += 1;
            last_label[g.degree(n - 1)] += 1;
        }
        std::vector<double> expected(n);
        for (int k = 0; k < n; ++k) expected[k] = d.single_at(k).get_d() * draws;
        CHECK(chi2_pvalue(random_vertex, expected) > 0.001);
        // labels are exchangeable
        CHECK(chi2_pvalue(first_label, expected) > 0.001);
        CHECK(chi2_pvalue(last_label, expected) > 0.001);
    }
}

TEST_CASE("tables agree with the exact series") {
    for (GraphClass c : all_classes) {
        auto t = build_sampler_tables(c, 30);
        SpectrumEngine<Rational> e(c, 31, 1);
        const auto& g = is_biconnected_class(c) ? t.at("B") : t.at("C");
        for (int m = 0; m <= 30; ++m) {
            double want = e.gprime().get(m).get_d() * std::pow(t.sigma, m);
            CHECK(std::abs(g[m] - want) <= 1e-13 * std::abs(want));
        }
    }
}

TEST_CASE("seeds determine samples and experiments") {
    auto a = sample_graph(GraphClass::connected_sp, 40, 17);
    auto b = sample_graph(GraphClass::connected_sp, 40, 17);
    auto c = sample_graph(GraphClass::connected_sp, 40, 18);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());
    auto r1 = max_degree_experiment(GraphClass::biconnected_sp, {20, 40}, 50, 5, 1);
    auto r3 = max_degree_experiment(GraphClass::biconnected_sp, {20, 40}, 50, 5, 3);
    REQUIRE(r1.records.size() == 2);
    CHECK(r1.records[0].maxdeg == r3.records[0].maxdeg);
    CHECK(r1.records[1].maxdeg == r3.records[1].maxdeg);
    CHECK(r1.slope == r3.slope);
    int hist = 0;
    for (auto [k, v] : r1.records[1].histogram) hist += v;
    CHECK(hist == 50);
    CHECK(r1.records[1].rng == std::string(Rng::algorithm));
}

TEST_CASE("sampler size errors") {
    CHECK_THROWS_AS(Sampler(GraphClass::biconnected_outerplanar, 1), std::invalid_argument);
    Sampler s(GraphClass::connected_outerplanar, 10);
    Rng rng(1);
    CHECK_THROWS_AS(s.sample(11, rng), std::out_of_range);
    CHECK_THROWS_AS(s.sample(0, rng), std::invalid_argument);
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("table cache round trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("maxdeg-cache-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    ::setenv("MAXDEG_CACHE_DIR", dir.c_str(), 1);
    auto fresh = build_sampler_tables(GraphClass::connected_sp, 64);
    CHECK(fs::exists(dir / "sampler-conn-sp-64.bin"));
    auto cached = build_sampler_tables(GraphClass::connected_sp, 64);
    ::unsetenv("MAXDEG_CACHE_DIR");
    CHECK(cached.sigma == fresh.sigma);
    CHECK(cached.series == fresh.series);
    fs::remove_all(dir);
}
