#include "maxdeg/oracle.hpp"

#include <array>
#include <bit>
#include <functional>
#include <stdexcept>
#include <thread>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace maxdeg {

namespace {

using Mask = std::uint32_t;

bool connected_without(const LabelledGraph& g, int removed) {
    const int n = g.order();
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (v != removed) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (v != removed && !seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == alive;
}

// Bitmask view of a graph with at most 32 vertices.
struct SmallGraph {
    int n = 0;
    std::array<Mask, 32> adj{};

    explicit SmallGraph(const LabelledGraph& g) : n(g.order()) {
        if (n > 32) throw std::invalid_argument("graph too large for bitmask routines");
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) adj[u] |= Mask(1) << v;
    }
    SmallGraph() = default;

    Mask all() const { return n == 32 ? ~Mask(0) : (Mask(1) << n) - 1; }

    bool connected_within(Mask s) const {
        if (s == 0) return false;
        Mask seen = s & (~s + 1), frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
            next &= s & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == s;
    }

    Mask neighborhood(Mask s) const {
        Mask r = 0;
        for (; s; s &= s - 1) r |= adj[std::countr_zero(s)];
        return r;
    }

    bool biconnected() const {
        if (n == 1) return false;
        if (n == 2) return adj[0] != 0;
        if (!connected_within(all())) return false;
        for (int v = 0; v < n; ++v)
            if (!connected_within(all() & ~(Mask(1) << v))) return false;
        return true;
    }

    bool k4_minor_free() const {
        std::array<Mask, 32> a = adj;
        Mask alive = all();
        bool changed = true;
        while (changed && alive) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (!(alive >> v & 1)) continue;
                Mask nb = a[v];
                int d = std::popcount(nb);
                if (d > 2) continue;
                for (Mask f = nb; f; f &= f - 1) a[std::countr_zero(f)] &= ~(Mask(1) << v);
                if (d == 2) {
                    int x = std::countr_zero(nb), y = std::countr_zero(nb & (nb - 1));
                    a[x] |= Mask(1) << y;
                    a[y] |= Mask(1) << x;
                }
                a[v] = 0;
                alive &= ~(Mask(1) << v);
                changed = true;
            }
        }
        return alive == 0;
    }
};

LabelledGraph from_small(const SmallGraph& s) {
    LabelledGraph g(s.n);
    for (int u = 0; u < s.n; ++u)
        for (Mask f = s.adj[u]; f; f &= f - 1) {
            int v = std::countr_zero(f);
            if (u < v) g.add_edge(u, v);
        }
    return g;
}

bool small_member(const SmallGraph& s, GraphClass c) {
    if (is_biconnected_class(c)) {
        if (!s.biconnected()) return false;
    } else if (!s.connected_within(s.all())) {
        return false;
    }
    if (!s.k4_minor_free()) return false;
    if (is_outerplanar_class(c)) return is_outerplanar(from_small(s));
    return true;
}

}  // namespace

bool is_connected(const LabelledGraph& g) { return g.order() > 0 && connected_without(g, -1); }

bool is_biconnected(const LabelledGraph& g) {
    const int n = g.order();
    if (n < 2) return false;
    if (n == 2) return g.has_edge(0, 1);
    if (!is_connected(g)) return false;
    for (int v = 0; v < n; ++v)
        if (!connected_without(g, v)) return false;
    return true;
}

bool is_series_parallel(const LabelledGraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    auto erase = [&](int a, int b) { adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b)); };
    std::vector<char> removed(n, 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() <= 2) queue.push_back(v);
    int left = n;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (removed[v] || adj[v].size() > 2) continue;
        std::vector<int> nb = adj[v];
        for (int u : nb) erase(u, v);
        if (nb.size() == 2 && std::find(adj[nb[0]].begin(), adj[nb[0]].end(), nb[1]) == adj[nb[0]].end()) {
            adj[nb[0]].push_back(nb[1]);
            adj[nb[1]].push_back(nb[0]);
        }
        adj[v].clear();
        removed[v] = 1;
        --left;
        for (int u : nb)
            if (adj[u].size() <= 2) queue.push_back(u);
    }
    return left == 0;
}

bool is_outerplanar(const LabelledGraph& g) {
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const int n = g.order();
    BG bg(n + 1);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    for (int v = 0; v < n; ++v) boost::add_edge(v, n, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool is_member(const LabelledGraph& g, GraphClass c) {
    if (is_biconnected_class(c) ? !is_biconnected(g) : !is_connected(g)) return false;
    if (!is_series_parallel(g)) return false;
    return !is_outerplanar_class(c) || is_outerplanar(g);
}

bool has_minor(const LabelledGraph& g, int h, const std::vector<std::pair<int, int>>& h_edges) {
    if (g.order() > 16) throw std::invalid_argument("has_minor: brute force limited to 16 vertices");
    SmallGraph s(g);
    std::vector<Mask> conn;
    for (Mask m = 1; m <= s.all(); ++m)
        if (s.connected_within(m)) conn.push_back(m);
    std::vector<std::vector<int>> earlier(h);
    for (auto [a, b] : h_edges) earlier[std::max(a, b)].push_back(std::min(a, b));
    std::vector<Mask> branch(h), nbr(h);
    std::function<bool(int, Mask)> place = [&](int idx, Mask used) {
        if (idx == h) return true;
        for (Mask m : conn) {
            if (m & used) continue;
            bool ok = true;
            for (int j : earlier[idx])
                if (!(nbr[j] & m)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            branch[idx] = m;
            nbr[idx] = s.neighborhood(m);
            if (place(idx + 1, used | m)) return true;
        }
        return false;
    };
    return place(0, 0);
}

bool has_k4_minor(const LabelledGraph& g) {
    return has_minor(g, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

bool has_k23_minor(const LabelledGraph& g) {
    return has_minor(g, 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

OracleResult enumerate(GraphClass c, int n, bool allow_seven, int workers) {
    if (n < min_size(c)) throw std::invalid_argument("enumerate: n below the class minimum");
    if (n > 7 || (n == 7 && !allow_seven))
        throw std::invalid_argument("enumerate: n too large (n = 7 must be requested explicitly)");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t(1) << slots.size();
    workers = std::max(1, workers);

    auto run = [&](std::uint64_t lo, std::uint64_t hi, OracleResult& r) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            SmallGraph s;
            s.n = n;
            int m = 0;
            for (std::size_t e = 0; e < slots.size(); ++e)
                if (mask >> e & 1) {
                    auto [u, v] = slots[e];
                    s.adj[u] |= Mask(1) << v;
                    s.adj[v] |= Mask(1) << u;
                    ++m;
                }
            if (!small_member(s, c)) continue;
            ++r.count;
            r.edges += m;
            int deg[32], dmax = 0;
            for (int v = 0; v < n; ++v) {
                deg[v] = std::popcount(s.adj[v]);
                dmax = std::max(dmax, deg[v]);
                ++r.degree[deg[v]];
            }
            ++r.maxdeg[dmax];
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v) ++r.pair[{deg[u], deg[v]}];
        }
    };

    std::vector<OracleResult> parts(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
        threads.emplace_back(run, lo, hi, std::ref(parts[w]));
    }
    for (auto& t : threads) t.join();

    OracleResult r;
    r.cls = c;
    r.n = n;
    for (auto& p : parts) {
        r.count += p.count;
        r.edges += p.edges;
        for (auto [k, v] : p.degree) r.degree[k] += v;
        for (auto [k, v] : p.pair) r.pair[k] += v;
        for (auto [k, v] : p.maxdeg) r.maxdeg[k] += v;
    }
    return r;
}

}  // namespace maxdeg
