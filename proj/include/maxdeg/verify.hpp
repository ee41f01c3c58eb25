#pragma once

// Generating-function tables against exhaustive enumeration.

#include <string>
#include <vector>

#include "maxdeg/graph.hpp"

namespace maxdeg {

struct VerifyLine {
    GraphClass cls{};
    int n = 0;
    bool ok = true;
    std::string detail;  // first mismatch, empty when ok
};

// Counts, d_{n,k} and d_{n,k,l} must agree exactly. P{Δn > k} must equal n Σ_{l>k} d_{n,l}
// when no two vertices can exceed k, and lie inside the moment bounds otherwise.
VerifyLine verify_size(GraphClass c, int n, int workers = 1);
std::vector<VerifyLine> verify_oracle(int nmax, int workers = 1);

}  // namespace maxdeg
