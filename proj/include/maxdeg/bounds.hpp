#pragma once

// First and second moment bounds on P{Δn > k} and E Δn from degree tables.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "maxdeg/spectrum.hpp"

namespace maxdeg {

template <class T>
struct TailBounds {
    int k = 0;
    T tail;   // Σ_{l>k} d_{n,l}
    T lower;  // (n tail)^2 / (n tail + n(n-1) Σ_{l1,l2>k} d_{n,l1,l2})
    T upper;  // min(1, n tail)
};

template <class T>
struct MaxDegreeBounds {
    GraphClass cls{};
    int n = 0;
    std::vector<TailBounds<T>> rows;  // k = 0..n-1
    T expectation_lower;
    T expectation_upper;
    int kmax() const { return static_cast<int>(rows.size()) - 1; }
};

template <class T>
T tail(const DegreeTable<T>& d, int k) {
    if (!d.full_support()) throw std::invalid_argument("tail: degree table does not cover k <= n-1");
    T s = 0;
    for (int l = std::max(k + 1, 0); l <= d.kmax(); ++l) s += d.single[l];
    return s;
}

template <class T>
T pair_tail(const DegreeTable<T>& d, int k) {
    if (!d.pair_full_support()) throw std::invalid_argument("pair_tail: pair table does not cover k <= n-1");
    T s = 0;
    for (int a = std::max(k + 1, 0); a <= d.pair_kmax(); ++a)
        for (int b = std::max(k + 1, 0); b <= d.pair_kmax(); ++b) s += d.pair[a][b];
    return s;
}

template <class T>
TailBounds<T> prob_bounds(const DegreeTable<T>& d, int k) {
    TailBounds<T> b;
    b.k = k;
    b.tail = tail(d, k);
    const T n = d.n;
    const T ey = n * b.tail;  // E Y_{n,k}
    b.upper = ey < T(1) ? ey : T(1);
    if (ey == T(0)) {
        b.lower = 0;
        return b;
    }
    const T second = ey + n * (n - T(1)) * pair_tail(d, k);
    b.lower = ey * ey / second;
    return b;
}

template <class T>
MaxDegreeBounds<T> max_degree_bounds(const DegreeTable<T>& d) {
    MaxDegreeBounds<T> m;
    m.cls = d.cls;
    m.n = d.n;
    m.expectation_lower = 0;
    m.expectation_upper = 0;
    for (int k = 0; k < d.n; ++k) {
        m.rows.push_back(prob_bounds(d, k));
        m.expectation_lower += m.rows.back().lower;
        m.expectation_upper += m.rows.back().upper;
    }
    return m;
}

template <class T>
std::pair<T, T> expectation_bounds(const DegreeTable<T>& d) {
    auto m = max_degree_bounds(d);
    return {m.expectation_lower, m.expectation_upper};
}

// Full-support tables for size n; exact mode is practical up to n of a few dozen.
inline MaxDegreeBounds<Rational> max_degree_bounds_exact(GraphClass c, int n) {
    return max_degree_bounds(degree_table_exact(c, n, n - 1, n - 1));
}

inline MaxDegreeBounds<double> max_degree_bounds_float(GraphClass c, int n) {
    return max_degree_bounds(degree_table_float(c, n, n - 1, n - 1));
}

// k0(n) = min{k : n Σ_{l>k} d̄_l <= 1}; needs lim.dbar long enough for the tail.
inline int threshold_k0(const LimitDistribution& lim, double n) {
    HighFloat t = 1;
    for (int k = 0; k < static_cast<int>(lim.dbar.size()); ++k) {
        t -= lim.dbar[k];
        if (n * t <= 1) return k;
    }
    throw std::out_of_range("threshold_k0: limit distribution too short");
}

// k1(n) = max{k : n Σ_{l>k} d̄_l >= log n}
inline int threshold_k1(const LimitDistribution& lim, double n) {
    HighFloat t = 1;
    int last = -1;
    for (int k = 0; k < static_cast<int>(lim.dbar.size()); ++k) {
        t -= lim.dbar[k];
        if (n * t >= std::log(n)) last = k;
        else return last;
    }
    throw std::out_of_range("threshold_k1: limit distribution too short");
}

}  // namespace maxdeg
