#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maxdeg {

enum class GraphClass { biconnected_outerplanar, connected_outerplanar, biconnected_sp, connected_sp };

inline constexpr GraphClass all_classes[] = {GraphClass::biconnected_outerplanar, GraphClass::connected_outerplanar,
                                             GraphClass::biconnected_sp, GraphClass::connected_sp};

inline bool is_biconnected_class(GraphClass c) {
    return c == GraphClass::biconnected_outerplanar || c == GraphClass::biconnected_sp;
}
inline bool is_outerplanar_class(GraphClass c) {
    return c == GraphClass::biconnected_outerplanar || c == GraphClass::connected_outerplanar;
}
inline int min_size(GraphClass c) { return is_biconnected_class(c) ? 2 : 1; }

inline std::string class_name(GraphClass c) {
    switch (c) {
        case GraphClass::biconnected_outerplanar: return "2conn-outerplanar";
        case GraphClass::connected_outerplanar: return "conn-outerplanar";
        case GraphClass::biconnected_sp: return "2conn-sp";
        case GraphClass::connected_sp: return "conn-sp";
    }
    return "?";
}

inline GraphClass parse_class(std::string_view s) {
    for (GraphClass c : all_classes)
        if (class_name(c) == s) return c;
    throw std::invalid_argument("unknown graph class '" + std::string(s) +
                                "' (expected 2conn-outerplanar, conn-outerplanar, 2conn-sp or conn-sp)");
}

// Simple undirected graph on vertices 0..n-1; printed 1-indexed.
class LabelledGraph {
public:
    LabelledGraph() = default;
    explicit LabelledGraph(int n) : adj_(n) {}

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const {
        int m = 0;
        for (auto& a : adj_) m += static_cast<int>(a.size());
        return m / 2;
    }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const {
        int d = 0;
        for (auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
        return d;
    }

    bool has_edge(int u, int v) const {
        auto& a = adj_.at(u);
        return std::binary_search(a.begin(), a.end(), v);
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loop");
        if (u < 0 || v < 0 || u >= order() || v >= order()) throw std::out_of_range("vertex out of range");
        insert(adj_[u], v);
        insert(adj_[v], u);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[u])
                if (u < v) e.emplace_back(u, v);
        return e;
    }

    // "n m" header then one "u v" line per edge, 1-indexed, sorted
    std::string to_edge_list() const {
        std::string s = std::to_string(order()) + " " + std::to_string(size()) + "\n";
        for (auto [u, v] : edges()) s += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
        return s;
    }

    bool operator==(const LabelledGraph&) const = default;

private:
    static void insert(std::vector<int>& a, int v) {
        auto it = std::lower_bound(a.begin(), a.end(), v);
        if (it != a.end() && *it == v) throw std::invalid_argument("multi-edge");
        a.insert(it, v);
    }

    std::vector<std::vector<int>> adj_;
};

}  // namespace maxdeg
