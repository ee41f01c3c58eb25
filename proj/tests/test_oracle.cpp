#include <bit>

#include "doctest.h"
#include "maxdeg/oracle.hpp"
#include "maxdeg/outerplanar_gf.hpp"
#include "maxdeg/sp_gf.hpp"

using namespace maxdeg;

namespace {

LabelledGraph complete(int n) {
    LabelledGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

LabelledGraph k23() {
    LabelledGraph g(5);
    for (int a : {0, 1})
        for (int b : {2, 3, 4}) g.add_edge(a, b);
    return g;
}

LabelledGraph from_mask(int n, unsigned mask) {
    LabelledGraph g(n);
    int e = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++e)
            if (mask >> e & 1u) g.add_edge(u, v);
    return g;
}

bool crosses(int a, int b, int c, int d) {
    auto inside = [&](int x) { return a < x && x < b; };
    if (a == c || a == d || b == c || b == d) return false;
    return inside(c) != inside(d);
}

}  // namespace

TEST_CASE("membership of small named graphs") {
    CHECK_FALSE(is_series_parallel(complete(4)));
    CHECK_FALSE(is_outerplanar(complete(4)));
    CHECK(is_series_parallel(k23()));
    CHECK_FALSE(is_outerplanar(k23()));
    CHECK(is_member(k23(), GraphClass::biconnected_sp));
    CHECK_FALSE(is_member(k23(), GraphClass::biconnected_outerplanar));
    LabelledGraph tree(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}) tree.add_edge(u, v);
    CHECK(is_member(tree, GraphClass::connected_sp));
    CHECK(is_member(tree, GraphClass::connected_outerplanar));
    CHECK_FALSE(is_member(tree, GraphClass::biconnected_sp));
    CHECK(has_k4_minor(complete(4)));
    CHECK(has_k23_minor(k23()));
    CHECK_FALSE(has_k23_minor(complete(4)));
    CHECK(is_biconnected(complete(2)));
    CHECK_FALSE(is_biconnected(LabelledGraph(1)));
}

TEST_CASE("reduction and brute-force minor routes agree for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const unsigned total = 1u << (n * (n - 1) / 2);
        int disagreements = 0;
        for (unsigned mask = 0; mask < total; ++mask) {
            LabelledGraph g = from_mask(n, mask);
            bool sp = is_series_parallel(g);
            if (sp != !has_k4_minor(g)) ++disagreements;
            if (sp && is_outerplanar(g) != !has_k23_minor(g)) ++disagreements;
            if (!sp && is_outerplanar(g)) ++disagreements;
        }
        CHECK(disagreements == 0);
    }
}

TEST_CASE("class counts and tallies") {
    CHECK(enumerate(GraphClass::biconnected_outerplanar, 2).count == 1);
    CHECK(enumerate(GraphClass::biconnected_outerplanar, 3).count == 1);
    auto r4 = enumerate(GraphClass::biconnected_outerplanar, 4);
    CHECK(r4.count == 9);
    CHECK(r4.maxdeg == std::map<int, std::int64_t>{{2, 3}, {3, 6}});
    CHECK(enumerate(GraphClass::connected_outerplanar, 4).count == 37);
    CHECK(enumerate(GraphClass::connected_sp, 3).count == 4);
    CHECK(enumerate(GraphClass::connected_outerplanar, 1).count == 1);
    CHECK_THROWS_AS(enumerate(GraphClass::biconnected_sp, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate(GraphClass::biconnected_sp, 7), std::invalid_argument);

    for (GraphClass c : all_classes)
        for (int n = min_size(c); n <= 6; ++n) {
            auto r = enumerate(c, n, false, 3);
            std::int64_t deg = 0, pairs = 0, md = 0, weighted = 0;
            for (auto [k, v] : r.degree) {
                deg += v;
                weighted += k * v;
            }
            for (auto [kl, v] : r.pair) {
                pairs += v;
                CHECK(r.pair.at({kl.second, kl.first}) == v);
            }
            for (auto [k, v] : r.maxdeg) md += v;
            CHECK(deg == n * r.count);
            CHECK(pairs == std::int64_t(n) * (n - 1) * r.count);
            CHECK(md == r.count);
            CHECK(weighted == 2 * r.edges);
            CHECK(enumerate(c, n, false, 1).pair == r.pair);
        }
}

TEST_CASE("network and dissection counts against enumeration") {
    // two-terminal networks: graphs G on poles {0,1} plus m labelled vertices
    // such that G + {0,1} is 2-connected and series-parallel
    Rational fact = 1;
    SeriesContext<Rational> ctx{3, 0, 0, Rational(1)};
    auto E = build_series_parallel(ctx).E;
    for (int m = 0; m <= 3; ++m) {
        if (m > 0) fact *= m;
        int n = m + 2;
        const unsigned total = 1u << (n * (n - 1) / 2);
        long count = 0;
        for (unsigned mask = 1; mask < total; ++mask) {
            LabelledGraph g = from_mask(n, mask);
            LabelledGraph h = g;
            if (!h.has_edge(0, 1)) h.add_edge(0, 1);
            if (is_biconnected(h) && is_series_parallel(h)) ++count;
        }
        CHECK(Rational(count) == fact * E.at(m));
    }
    // dissections of the (n+2)-gon: non-crossing diagonal sets
    auto [A, S] = build_dissections(SeriesContext<Rational>{5, 0, 0, Rational(1)});
    for (int n = 1; n <= 5; ++n) {
        int m = n + 2;
        std::vector<std::pair<int, int>> diag;
        for (int a = 0; a < m; ++a)
            for (int b = a + 2; b < m; ++b)
                if (!(a == 0 && b == m - 1)) diag.emplace_back(a, b);
        long count = 0;
        for (unsigned mask = 0; mask < (1u << diag.size()); ++mask) {
            bool ok = true;
            for (std::size_t i = 0; i < diag.size() && ok; ++i)
                for (std::size_t j = i + 1; j < diag.size() && ok; ++j)
                    if ((mask >> i & 1u) && (mask >> j & 1u) &&
                        crosses(diag[i].first, diag[i].second, diag[j].first, diag[j].second))
                        ok = false;
            if (ok) ++count;
        }
        CHECK(Rational(count) == A.at(n));
    }
}
