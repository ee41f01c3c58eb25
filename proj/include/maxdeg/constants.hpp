#pragma once

// Singular points, exponential bases q and max-degree constants c = 1/log(1/q).

#include <functional>
#include <map>
#include <string>

#include "maxdeg/graph.hpp"
#include "maxdeg/numeric.hpp"

namespace maxdeg {

struct ConstantsReport {
    GraphClass cls{};
    HighFloat x0;   // dominant singularity of the class generating function
    HighFloat q;
    HighFloat c;
    std::map<std::string, HighFloat> auxiliaries;
    std::map<std::string, double> residuals;
};

// 50 significant digits throughout.
ConstantsReport solve_class_constants(GraphClass c);

// Cached per class; thread-safe.
const ConstantsReport& class_constants(GraphClass c);

// x0 rounded to double, used as the variable scale in float mode.
double singularity(GraphClass c);

// Bracketed bisection to 1e-6 relative width, then Newton polish.
HighFloat find_root(const std::function<HighFloat(const HighFloat&)>& f, HighFloat lo, HighFloat hi);

// Scalar evaluators at a real point inside the disc of convergence.
namespace point {

HighFloat dissections_A(const HighFloat& x);
HighFloat outerplanar_Bprime(const HighFloat& x);
HighFloat outerplanar_Bsecond(const HighFloat& x);
// y(x) = x (2A(x) + 1) and its derivative
HighFloat outerplanar_y(const HighFloat& x);
HighFloat outerplanar_yprime(const HighFloat& x);

// smallest solution of E = 2 exp(x E^2 / (1 + xE)) - 1
HighFloat networks_E(const HighFloat& x);
HighFloat networks_Eprime(const HighFloat& x);
HighFloat sp_Bprime(const HighFloat& x);
HighFloat sp_Bsecond(const HighFloat& x);
// (1 + 1/(xE)) exp(-1/(1 + xE)) - 1, the singular w of D(x, w)
HighFloat sp_w0(const HighFloat& x);

}  // namespace point

// Secondary constants: count prefactors and degree-tail prefactors.
// Values whose fit quality is poor carry a "<name>_flagged" entry of 1.
std::map<std::string, double> asymptotic_prefactors(GraphClass c);

}  // namespace maxdeg
