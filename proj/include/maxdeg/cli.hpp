#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace maxdeg {

struct RunConfig {
    std::string subcommand;
    std::string cls;
    int n = 0;
    std::vector<int> ngrid;
    int kmax = -1;  // -1: ceil(4 log n), capped at n-1
    int samples = 1;
    std::uint64_t seed = 1;
    int precision = 20;  // digits for high-precision constants
    std::string output;  // empty: standard output; a prefix for experiment
    std::string format = "csv";
    std::string mode = "auto";  // exact | float | auto (exact up to n = 60)
    bool pairs = false;
    std::string reference;  // bounds: none | oracle | sampler
    int level = 1;
    int workers = 1;
};

// Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments, 3 runtime failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxdeg
