#pragma once

// Exhaustive enumeration of small labelled graphs and class membership tests.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "maxdeg/graph.hpp"

namespace maxdeg {

bool is_connected(const LabelledGraph& g);
// K2 counts as 2-connected; K1 does not.
bool is_biconnected(const LabelledGraph& g);
// No K4 minor, by deleting vertices of degree <= 1 and suppressing degree-2 vertices.
bool is_series_parallel(const LabelledGraph& g);
// Boyer-Myrvold planarity of g plus an apex joined to every vertex.
bool is_outerplanar(const LabelledGraph& g);
bool is_member(const LabelledGraph& g, GraphClass c);

// Brute-force minor search over disjoint connected branch sets (n <= 16).
bool has_minor(const LabelledGraph& g, int h, const std::vector<std::pair<int, int>>& h_edges);
bool has_k4_minor(const LabelledGraph& g);
bool has_k23_minor(const LabelledGraph& g);

struct OracleResult {
    GraphClass cls{};
    int n = 0;
    std::int64_t count = 0;
    std::map<int, std::int64_t> degree;                 // vertex degree tally
    std::map<std::pair<int, int>, std::int64_t> pair;   // ordered pairs of distinct vertices
    std::map<int, std::int64_t> maxdeg;
    std::int64_t edges = 0;                             // total edge count over the class
};

inline constexpr int oracle_max_default = 6;

// All graphs on n labelled vertices in the class. n = 7 needs allow_seven.
OracleResult enumerate(GraphClass c, int n, bool allow_seven = false, int workers = 1);

}  // namespace maxdeg
