#pragma once

// Degree probabilities d_{n,k}, pair probabilities d_{n,k,l} and their limits.

#include <cmath>
#include <vector>

#include "maxdeg/graph.hpp"
#include "maxdeg/numeric.hpp"
#include "maxdeg/series.hpp"

namespace maxdeg {

template <class T>
struct DegreeTable {
    GraphClass cls{};
    int n = 0;
    std::vector<T> single;             // k = 0..kmax
    std::vector<std::vector<T>> pair;  // (k, l), empty unless requested

    int kmax() const { return static_cast<int>(single.size()) - 1; }
    int pair_kmax() const { return static_cast<int>(pair.size()) - 1; }
    bool full_support() const { return kmax() >= n - 1; }
    bool pair_full_support() const { return pair_kmax() >= n - 1; }
    T single_at(int k) const { return k >= 0 && k <= kmax() ? single[k] : T(0); }
    T pair_at(int k, int l) const {
        return k >= 0 && l >= 0 && k <= pair_kmax() && l <= pair_kmax() ? pair[k][l] : T(0);
    }
};

inline int default_kmax(int n) { return std::max(1, std::min(n - 1, static_cast<int>(std::ceil(4 * std::log(n))))); }

// The class generating functions G', G•, G'' and G•• computed once up to a
// maximum size, then sliced for every n. Exact mode uses rationals with the
// plain variable; float mode rescales x by the class singularity.
template <class T>
class SpectrumEngine {
public:
    // pair_kmax < 0 skips the double-rooted series.
    SpectrumEngine(GraphClass c, int max_n, int kmax, int pair_kmax = -1);

    GraphClass cls() const { return cls_; }
    int max_n() const { return max_n_; }
    DegreeTable<T> table(int n) const;
    // (n-1)! [x^{n-1}] G'(x), the number of graphs of size n (exact mode)
    Integer count(int n) const;

    const Series<T>& gprime() const { return gprime_; }
    const Series<T>& grooted() const { return grooted_; }
    const Series<T>& gdouble() const { return gdouble_; }
    const Series<T>& gsecond() const { return gsecond_; }

private:
    GraphClass cls_;
    int max_n_, kmax_, pair_kmax_;
    Series<T> gprime_, grooted_, gsecond_, gdouble_;
};

extern template class SpectrumEngine<Rational>;
extern template class SpectrumEngine<double>;

DegreeTable<Rational> degree_table_exact(GraphClass c, int n, int kmax, int pair_kmax = -1);
DegreeTable<double> degree_table_float(GraphClass c, int n, int kmax, int pair_kmax = -1);

std::vector<Integer> class_counts(GraphClass c, int nmax);

struct LimitDistribution {
    GraphClass cls{};
    std::vector<HighFloat> dbar;  // k = 0..kmax
    HighFloat q;
    // d̄_k ~ prefactor k^alpha q^k, times exp(c2 sqrt k) for the "exp_sqrt" family
    double alpha = 0;
    std::string family;

    double at(int k) const { return k >= 0 && k < static_cast<int>(dbar.size()) ? static_cast<double>(dbar[k]) : 0.0; }
};

LimitDistribution limit_distribution(GraphClass c, int kmax);

struct ConvergenceRow {
    int n = 0;
    int k = 0;
    int l = -1;  // -1 for single-vertex rows
    double value = 0;
    double limit = 0;
    double ratio = 0;
};

// Ratios d_{n,k}/d̄_k and (with pairs) d_{n,k,l}/(d̄_k d̄_l) in float mode.
std::vector<ConvergenceRow> convergence_report(GraphClass c, const std::vector<int>& ngrid,
                                               const std::vector<int>& kgrid, bool pairs);

}  // namespace maxdeg
