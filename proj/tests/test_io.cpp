#include <sstream>

#include "doctest.h"
#include "maxdeg/io.hpp"

using namespace maxdeg;

TEST_CASE("degree table emitters") {
    auto d = degree_table_exact(GraphClass::biconnected_outerplanar, 4, 3, 3);
    std::ostringstream s;
    write_degree_table_csv(s, d);
    CHECK(s.str().rfind("class,n,k,l,value\n2conn-outerplanar,4,0,,0\n", 0) == 0);
    CHECK(s.str().find("2conn-outerplanar,4,3,3,1/9\n") != std::string::npos);
    auto j = degree_table_json(d);
    CHECK(j["single"][2] == "2/3");
    CHECK(j["pair"][2][3] == "2/9");
    CHECK(j["mode"] == "exact");
    CHECK(degree_table_json(degree_table_float(GraphClass::biconnected_outerplanar, 4, 3))["mode"] == "float");
}

TEST_CASE("number formatting round-trips") {
    CHECK(format_number(Rational(6, 9)) == "6/9");
    CHECK(std::stod(format_number(0.1)) == 0.1);
    CHECK(format_number(HighFloat(1) / 3, 10) == "0.3333333333");
}

TEST_CASE("oracle and constants json") {
    auto o = oracle_json(enumerate(GraphClass::biconnected_outerplanar, 4));
    CHECK(o["count"] == 9);
    CHECK(o["degree"]["2"] == 24);
    CHECK(o["maxdeg"]["3"] == 6);
    auto c = constants_json(class_constants(GraphClass::biconnected_outerplanar));
    CHECK(c["class"] == "2conn-outerplanar");
    CHECK(c["q"].get<std::string>().rfind("0.41421356237309504", 0) == 0);
}

TEST_CASE("bounds and experiment emitters") {
    std::ostringstream s;
    write_bounds_csv(s, max_degree_bounds_exact(GraphClass::biconnected_outerplanar, 4), std::map<int, double>{{2, 0.5}});
    CHECK(s.str().find("2conn-outerplanar,4,2,1/3,2/3,1,0.5\n") != std::string::npos);
    CHECK(s.str().find("2conn-outerplanar,4,1,1,1,1,\n") != std::string::npos);
    ExperimentResult r;
    ExperimentRecord rec;
    rec.cls = GraphClass::connected_sp;
    rec.n = 8;
    rec.maxdeg = {3, 4};
    rec.mean = 3.5;
    r.records.push_back(rec);
    std::ostringstream csv, dat;
    write_experiment_csv(csv, r);
    write_experiment_dat(dat, r, 2);
    CHECK(csv.str() == "class,n,sample,maxdeg\nconn-sp,8,0,3\nconn-sp,8,1,4\n");
    CHECK(dat.str().rfind("# n mean_maxdeg c_log_n\n8 3.5 4.158883083359671", 0) == 0);
}
