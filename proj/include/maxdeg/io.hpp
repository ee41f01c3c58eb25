#pragma once

// CSV, JSON and gnuplot emitters. Schemas are listed in docs/schemas.md.

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "maxdeg/bounds.hpp"
#include "maxdeg/constants.hpp"
#include "maxdeg/oracle.hpp"
#include "maxdeg/sampler.hpp"
#include "maxdeg/spectrum.hpp"

namespace maxdeg {

inline constexpr int schema_version = 1;

// Rationals print as "p/q" (or "p"), doubles with 17 significant digits.
std::string format_number(const Rational& v);
std::string format_number(double v);
std::string format_number(const HighFloat& v, int digits = 20);

void write_counts_csv(std::ostream& out, GraphClass c, const std::vector<Integer>& counts);

// class,n,k,l,value; l is empty on single-vertex rows
void write_degree_table_csv(std::ostream& out, const DegreeTable<Rational>& d);
void write_degree_table_csv(std::ostream& out, const DegreeTable<double>& d);
nlohmann::json degree_table_json(const DegreeTable<Rational>& d);
nlohmann::json degree_table_json(const DegreeTable<double>& d);

void write_convergence_csv(std::ostream& out, GraphClass c, const std::vector<ConvergenceRow>& rows);
nlohmann::json convergence_json(GraphClass c, const std::vector<ConvergenceRow>& rows);

// class, x0, q, c, auxiliaries, residuals; values as decimal strings to 20 digits
nlohmann::json constants_json(const ConstantsReport& r);

// n,k,tail,lower,upper[,reference]
void write_bounds_csv(std::ostream& out, const MaxDegreeBounds<Rational>& b,
                      const std::optional<std::map<int, double>>& reference = std::nullopt);
void write_bounds_csv(std::ostream& out, const MaxDegreeBounds<double>& b,
                      const std::optional<std::map<int, double>>& reference = std::nullopt);

nlohmann::json oracle_json(const OracleResult& o);

// class,n,sample,maxdeg
void write_experiment_csv(std::ostream& out, const ExperimentResult& r);
nlohmann::json experiment_json(const ExperimentResult& r);
// "n mean c*log(n)" rows for gnuplot
void write_experiment_dat(std::ostream& out, const ExperimentResult& r, double c);

}  // namespace maxdeg
