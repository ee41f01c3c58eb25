#include "maxdeg/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "maxdeg/constants.hpp"

namespace maxdeg {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed + stream * 0x9e3779b97f4a7c15ULL);
}

namespace {

using Vec = std::vector<double>;

double conv(const Vec& a, const Vec& b, int m, int lo, int hi) {
    double s = 0;
    for (int i = lo; i <= hi; ++i) s += a[i] * b[m - i];
    return s;
}

// Online tables: index m of every series depends on indices < m of the others,
// and for connected classes v_{m+1} = sigma C_m closes the loop.
SamplerTables compute_tables(GraphClass c, int N) {
    SamplerTables t;
    t.cls = c;
    t.order = N;
    t.sigma = singularity(c);
    const double sigma = t.sigma;
    const bool block_only = is_biconnected_class(c);
    Vec v(N + 2, 0.0), B(N + 1, 0.0), C(N + 1, 0.0);
    v[1] = sigma;
    auto times_v = [&](const Vec& b, int m) {
        if (m == 0) return 0.0;
        return block_only ? sigma * b[m - 1] : conv(v, b, m, 1, m);
    };
    auto exp_step = [&](int m) {
        if (m == 0) {
            C[0] = 1;
            return;
        }
        double s = 0;
        for (int j = 1; j <= m; ++j) s += j * B[j] * C[m - j];
        C[m] = s / m;
        if (!block_only) v[m + 1] = sigma * C[m];
    };

    if (is_outerplanar_class(c)) {
        Vec F(N + 1, 0.0), P(N + 1, 0.0), Q(N + 1, 0.0), A(N + 1, 0.0), VA(N + 1, 0.0);
        for (int m = 0; m <= N; ++m) {
            P[m] = times_v(F, m);
            Q[m] = P[m] + (m >= 2 ? conv(P, Q, m, 1, m - 1) : 0.0);
            A[m] = m >= 1 ? conv(F, Q, m, 0, m - 1) : 0.0;
            F[m] = (m == 0 ? 1.0 : 0.0) + A[m];
            VA[m] = times_v(A, m);
            B[m] = v[m] + VA[m] / 2;
            exp_step(m);
        }
        t.series = {{"F", F}, {"P", P}, {"Q", Q}, {"A", A}, {"VA", VA}};
    } else {
        Vec W(N + 1, 0.0), WE(N + 1, 0.0), S(N + 1, 0.0), X(N + 1, 0.0), E(N + 1, 0.0), Nn(N + 1, 0.0),
            VX(N + 1, 0.0);
        for (int m = 0; m <= N; ++m) {
            W[m] = times_v(E, m);
            WE[m] = m >= 1 ? conv(W, E, m, 1, m) : 0.0;
            S[m] = WE[m] - (m >= 2 ? conv(W, S, m, 1, m - 1) : 0.0);
            if (m == 0) {
                X[0] = 1;
            } else {
                double s = 0;
                for (int j = 1; j <= m; ++j) s += j * S[j] * X[m - j];
                X[m] = s / m;
            }
            E[m] = m == 0 ? 1.0 : 2 * X[m];
            Nn[m] = E[m] - S[m];
            VX[m] = times_v(X, m);
            // B = vE (2 - vE^2) / (2 (1 + vE))
            double num = 2 * W[m] - (m >= 2 ? conv(W, WE, m, 1, m - 1) : 0.0);
            B[m] = num / 2 - (m >= 2 ? conv(W, B, m, 1, m - 1) : 0.0);
            exp_step(m);
        }
        t.series = {{"W", W}, {"S", S}, {"X", X}, {"E", E}, {"N", Nn}, {"VX", VX}};
    }
    v.resize(N + 1);
    t.series["v"] = v;
    t.series["B"] = B;
    t.series["C"] = C;
    return t;
}

constexpr char cache_magic[8] = {'M', 'X', 'D', 'G', 'T', 'B', '0', '1'};

std::filesystem::path cache_path(GraphClass c, int N) {
    const char* dir = std::getenv("MAXDEG_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) / ("sampler-" + std::string(class_name(c)) + "-" + std::to_string(N) + ".bin");
}

bool load_tables(const std::filesystem::path& p, GraphClass c, int N, SamplerTables& t) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return false;
    char magic[8];
    std::int32_t order = 0, count = 0;
    in.read(magic, 8);
    in.read(reinterpret_cast<char*>(&t.sigma), sizeof t.sigma);
    in.read(reinterpret_cast<char*>(&order), sizeof order);
    in.read(reinterpret_cast<char*>(&count), sizeof count);
    if (!in || !std::equal(magic, magic + 8, cache_magic) || order != N) return false;
    for (int i = 0; i < count; ++i) {
        std::int32_t len = 0;
        in.read(reinterpret_cast<char*>(&len), sizeof len);
        std::string name(len, '\0');
        in.read(name.data(), len);
        Vec v(N + 1);
        in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
        if (!in) return false;
        t.series[name] = std::move(v);
    }
    t.cls = c;
    t.order = N;
    return t.sigma == singularity(c);
}

void store_tables(const std::filesystem::path& p, const SamplerTables& t) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    auto tmp = p;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return;
        std::int32_t order = t.order, count = static_cast<std::int32_t>(t.series.size());
        out.write(cache_magic, 8);
        out.write(reinterpret_cast<const char*>(&t.sigma), sizeof t.sigma);
        out.write(reinterpret_cast<const char*>(&order), sizeof order);
        out.write(reinterpret_cast<const char*>(&count), sizeof count);
        for (auto& [name, v] : t.series) {
            std::int32_t len = static_cast<std::int32_t>(name.size());
            out.write(reinterpret_cast<const char*>(&len), sizeof len);
            out.write(name.data(), len);
            out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
        }
    }
    std::filesystem::rename(tmp, p, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

// Index in [lo, hi] with probability weight(i) / total, scanning from both ends.
// If rounding leaves the scan short of total, the weights are renormalized.
template <class Weight>
int pick(int lo, int hi, double total, Weight&& weight, Rng& rng) {
    double u = rng.uniform() * total;
    for (int i = lo, j = hi; i <= j;) {
        if ((u -= weight(i)) < 0) return i;
        if (i == j) break;
        ++i;
        if ((u -= weight(j)) < 0) return j;
        --j;
    }
    double s = 0;
    int last = -1;
    for (int k = lo; k <= hi; ++k) {
        double w = weight(k);
        s += w;
        if (w > 0) last = k;
    }
    if (last < 0) throw std::logic_error("sampler: no branch carries weight");
    u = rng.uniform() * s;
    for (int k = lo; k <= hi; ++k)
        if ((u -= weight(k)) < 0) return k;
    return last;
}

class Builder {
public:
    Builder(const SamplerTables& t, Rng& rng) : t_(t), rng_(rng), outer_(is_outerplanar_class(t.cls)) {
        v_ = &t.at("v");
        B_ = &t.at("B");
        C_ = &t.at("C");
        if (outer_) {
            F_ = &t.at("F");
            P_ = &t.at("P");
            Q_ = &t.at("Q");
            A_ = &t.at("A");
            VA_ = &t.at("VA");
        } else {
            W_ = &t.at("W");
            S_ = &t.at("S");
            X_ = &t.at("X");
            E_ = &t.at("E");
            N_ = &t.at("N");
            VX_ = &t.at("VX");
        }
    }

    std::vector<std::pair<int, int>> run(int n) {
        edges_.clear();
        edges_.reserve(static_cast<std::size_t>(n) * 2);
        nv_ = 1;
        hangs_.clear();
        if (is_biconnected_class(t_.cls)) {
            block(0, n - 1, true);
        } else if (n > 1) {
            hangs_.push_back({0, n - 1});
        }
        while (!hangs_.empty()) {
            auto [u, m] = hangs_.back();
            hangs_.pop_back();
            hang(u, m);
        }
        if (nv_ != n) throw std::logic_error("sampler: size mismatch");
        return std::move(edges_);
    }

private:
    enum Kind { gap, face, network, set_s, series, non_series };
    struct Task {
        Kind kind;
        int a, b, m;
    };

    const Vec& v() const { return *v_; }

    int atom(int s) {
        int u = nv_++;
        if (s > 1) pending_.push_back({u, s - 1});
        return u;
    }

    void edge(int a, int b) { edges_.emplace_back(a, b); }

    // the set of blocks hanging at u, of total size m
    void hang(int u, int m) {
        const Vec &B = *B_, &C = *C_;
        while (m > 0) {
            const int mm = m;
            int j = pick(1, mm, mm * C[mm], [&](int i) { return i * B[i] * C[mm - i]; }, rng_);
            block(u, j, false);
            m -= j;
        }
    }

    // one vertex-rooted block of size m at r; top marks the whole 2-connected graph
    void block(int r, int m, bool top) {
        for (;;) {
            const std::size_t e0 = edges_.size();
            const int nv0 = nv_;
            pending_.clear();
            if (outer_) {
                outer_block(r, m);
                break;
            }
            sp_block(r, m);
            int deg = 0;
            for (std::size_t i = e0; i < edges_.size(); ++i) deg += (edges_[i].first == r) + (edges_[i].second == r);
            // the proposal reaches each rooted block once per root neighbour
            double accept = top ? std::min(1.0, 2.0 / deg) : 1.0 / deg;
            if (rng_.uniform() < accept) break;
            edges_.resize(e0);
            nv_ = nv0;
        }
        hangs_.insert(hangs_.end(), pending_.begin(), pending_.end());
        pending_.clear();
    }

    void outer_block(int r, int m) {
        const Vec &VA = *VA_, &A = *A_;
        const double k2 = v()[m];
        if (rng_.uniform() * (*B_)[m] < k2) {
            edge(r, atom(m));
            return;
        }
        int s = pick(1, m - 1, VA[m], [&](int i) { return v()[i] * A[m - i]; }, rng_);
        int u = atom(s);
        drain({Task{face, r, u, m - s}});
    }

    void sp_block(int r, int m) {
        const Vec& X = *X_;
        int s = pick(1, m, (*VX_)[m], [&](int i) { return v()[i] * X[m - i]; }, rng_);
        int u = atom(s);
        edge(r, u);
        if (m - s > 0) drain({Task{set_s, r, u, m - s}});
    }

    void drain(std::vector<Task> stack) {
        while (!stack.empty()) {
            Task k = stack.back();
            stack.pop_back();
            switch (k.kind) {
                case gap:
                    if (k.m == 0)
                        edge(k.a, k.b);
                    else
                        stack.push_back({face, k.a, k.b, k.m});
                    break;
                case face: do_face(k, stack); break;
                case network:
                    if (k.m == 0) {
                        edge(k.a, k.b);
                        break;
                    }
                    if (rng_.uniform() < 0.5) edge(k.a, k.b);
                    stack.push_back({set_s, k.a, k.b, k.m});
                    break;
                case set_s: do_set(k, stack); break;
                case series: do_series(k, stack); break;
                case non_series: do_non_series(k, stack); break;
            }
        }
    }

    // dissection with root edge a-b: a path a, p1, ..., b with a gap on every step
    void do_face(const Task& k, std::vector<Task>& stack) {
        const Vec &F = *F_, &P = *P_, &Q = *Q_;
        edge(k.a, k.b);
        const int m = k.m;
        int q = pick(1, m, (*A_)[m], [&](int i) { return Q[i] * F[m - i]; }, rng_);
        const int f = m - q;
        int cur = k.a;
        while (q > 0) {
            const int qq = q;
            int p = pick(1, qq, Q[qq], [&](int i) { return i == qq ? P[qq] : P[i] * Q[qq - i]; }, rng_);
            int s = pick(1, p, P[p], [&](int i) { return v()[i] * F[p - i]; }, rng_);
            int u = atom(s);
            stack.push_back({gap, cur, u, p - s});
            cur = u;
            q -= p;
        }
        stack.push_back({gap, cur, k.b, f});
    }

    void do_set(const Task& k, std::vector<Task>& stack) {
        const Vec &S = *S_, &X = *X_;
        int m = k.m;
        while (m > 0) {
            const int mm = m;
            int j = pick(1, mm, mm * X[mm], [&](int i) { return i * S[i] * X[mm - i]; }, rng_);
            stack.push_back({series, k.a, k.b, j});
            m -= j;
        }
    }

    // non-series part from a to a new vertex u, then any network from u to b
    void do_series(const Task& k, std::vector<Task>& stack) {
        const Vec &N = *N_, &W = *W_, &E = *E_;
        const int m = k.m;
        int nk = pick(0, m - 1, (*S_)[m], [&](int i) { return N[i] * W[m - i]; }, rng_);
        const int rest = m - nk;
        int s = pick(1, rest, W[rest], [&](int i) { return v()[i] * E[rest - i]; }, rng_);
        int u = atom(s);
        stack.push_back({non_series, k.a, u, nk});
        stack.push_back({network, u, k.b, rest - s});
    }

    void do_non_series(const Task& k, std::vector<Task>& stack) {
        const Vec &S = *S_, &X = *X_;
        const int m = k.m;
        if (m == 0) {
            edge(k.a, k.b);
            return;
        }
        if (rng_.uniform() * (*N_)[m] < X[m]) {
            edge(k.a, k.b);
            stack.push_back({set_s, k.a, k.b, m});
            return;
        }
        // at least two series components
        int j = pick(1, m - 1, m * (X[m] - S[m]), [&](int i) { return i * S[i] * X[m - i]; }, rng_);
        stack.push_back({series, k.a, k.b, j});
        stack.push_back({set_s, k.a, k.b, m - j});
    }

    const SamplerTables& t_;
    Rng& rng_;
    bool outer_;
    const Vec *v_, *B_, *C_;
    const Vec *F_ = nullptr, *P_ = nullptr, *Q_ = nullptr, *A_ = nullptr, *VA_ = nullptr;
    const Vec *W_ = nullptr, *S_ = nullptr, *X_ = nullptr, *E_ = nullptr, *N_ = nullptr, *VX_ = nullptr;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::pair<int, int>> hangs_, pending_;
    int nv_ = 0;
};

}  // namespace

SamplerTables build_sampler_tables(GraphClass c, int order) {
    if (order < 1) throw std::invalid_argument("build_sampler_tables: order must be positive");
    auto path = cache_path(c, order);
    SamplerTables t;
    if (!path.empty() && load_tables(path, c, order, t)) return t;
    t = compute_tables(c, order);
    if (!path.empty()) store_tables(path, t);
    return t;
}

Sampler::Sampler(GraphClass c, int max_n) : max_n_(max_n) {
    if (max_n < min_size(c)) throw std::invalid_argument("Sampler: size below the class minimum");
    tables_ = build_sampler_tables(c, std::max(max_n - 1, 1));
}

std::vector<std::pair<int, int>> Sampler::sample_edges(int n, Rng& rng) const {
    if (n < min_size(cls())) throw std::invalid_argument("sample: size below the class minimum");
    if (n > max_n_) throw std::out_of_range("sample: size beyond the sampler tables");
    Builder b(tables_, rng);
    auto edges = b.run(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    for (auto& [a, b2] : edges) {
        a = perm[a];
        b2 = perm[b2];
    }
    return edges;
}

LabelledGraph Sampler::sample(int n, Rng& rng) const {
    LabelledGraph g(n);
    for (auto [a, b] : sample_edges(n, rng)) g.add_edge(a, b);
    return g;
}

int Sampler::sample_max_degree(int n, Rng& rng) const {
    auto edges = sample_edges(n, rng);
    std::vector<int> deg(n, 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return n > 0 ? *std::max_element(deg.begin(), deg.end()) : 0;
}

LabelledGraph sample_graph(GraphClass c, int n, std::uint64_t seed) {
    Sampler s(c, n);
    Rng rng(seed);
    return s.sample(n, rng);
}

ExperimentResult max_degree_experiment(GraphClass c, const std::vector<int>& ngrid, int samples,
                                       std::uint64_t seed, int workers) {
    if (samples < 1) throw std::invalid_argument("max_degree_experiment: samples must be positive");
    ExperimentResult res;
    if (ngrid.empty()) return res;
    Sampler sampler(c, *std::max_element(ngrid.begin(), ngrid.end()));
    workers = std::max(1, workers);
    for (int n : ngrid) {
        ExperimentRecord r;
        r.cls = c;
        r.n = n;
        r.seed = seed;
        r.samples = samples;
        r.maxdeg.assign(samples, 0);
        std::atomic<int> next{0};
        auto work = [&] {
            for (int i; (i = next++) < samples;) {
                Rng rng(derive_seed(seed, (static_cast<std::uint64_t>(n) << 32) + static_cast<std::uint64_t>(i)));
                r.maxdeg[i] = sampler.sample_max_degree(n, rng);
            }
        };
        std::vector<std::jthread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
        pool.clear();
        double sum = 0, sq = 0;
        for (int d : r.maxdeg) {
            sum += d;
            sq += static_cast<double>(d) * d;
            ++r.histogram[d];
        }
        r.mean = sum / samples;
        r.variance = samples > 1 ? (sq - samples * r.mean * r.mean) / (samples - 1) : 0.0;
        res.records.push_back(std::move(r));
    }
    if (res.records.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double k = static_cast<double>(res.records.size());
        for (auto& r : res.records) {
            double x = std::log(r.n);
            sx += x;
            sy += r.mean;
            sxx += x * x;
            sxy += x * r.mean;
        }
        res.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        res.intercept = (sy - res.slope * sx) / k;
    }
    return res;
}

}  // namespace maxdeg
