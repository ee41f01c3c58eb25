#include <algorithm>
#include <random>

#include "doctest.h"
#include "maxdeg/outerplanar_gf.hpp"
#include "maxdeg/series.hpp"
#include "maxdeg/sp_gf.hpp"

using namespace maxdeg;
using Q = Rational;
using SQ = Series<Q>;

namespace {

SQ poly(std::initializer_list<long> c, int order) {
    SQ r(order);
    int i = 0;
    for (long v : c) {
        if (i <= order) r.at(i) = v;
        ++i;
    }
    return r;
}

SQ random_series(std::mt19937_64& rng, int order, int wcap, int tcap) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    SQ r(order, wcap, tcap);
    for (int i = 0; i <= order; ++i)
        for (int k = 0; k <= wcap; ++k)
            for (int l = 0; l <= tcap; ++l) {
                Q v(num(rng), den(rng));
                v.canonicalize();
                r.at(i, k, l) = v;
            }
    return r;
}

}  // namespace

TEST_CASE("products and quotients of polynomials") {
    SQ x = SQ::variable(2);
    CHECK((Q(1) + x) * (Q(1) - x) == poly({1, 0, -1}, 2));
    SQ geo = SQ::constant(1, 3) / (Q(1) - SQ::variable(3));
    CHECK(geo == poly({1, 1, 1, 1}, 3));
    CHECK_THROWS_AS(SQ::constant(1, 3) / SQ::variable(3), std::domain_error);
}

TEST_CASE("dissection quadratic residual vanishes") {
    SeriesContext<Q> ctx{20, 0, 0, Q(1)};
    auto [A, S] = build_dissections(ctx);
    SQ x = ctx.x();
    SQ res = Q(2) * x * A * A + (Q(3) * x - Q(1)) * A + x;
    for (const Q& c : res.coefficients()) CHECK(c == 0);
    CHECK(A.at(0) == 0);
    CHECK(A.at(1) == 1);
    CHECK(A.at(2) == 3);
    CHECK(A.at(3) == 11);
}

TEST_CASE("exp and log") {
    SQ e = exp_series(SQ::variable(3));
    CHECK(e.at(0) == 1);
    CHECK(e.at(1) == 1);
    CHECK(e.at(2) == Q(1, 2));
    CHECK(e.at(3) == Q(1, 6));
    SQ back = log_series(exp_series(SQ::variable(10)));
    CHECK(back == SQ::variable(10));
    CHECK_THROWS_AS(exp_series(SQ::constant(1, 4)), std::domain_error);
    CHECK_THROWS_AS(log_series(SQ::constant(2, 4)), std::domain_error);
    SQ w = SQ::monomial(3, 2, 0, 0, 1, 0, 1);
    CHECK_THROWS_AS(exp_series(w), std::domain_error);
}

TEST_CASE("exp of series networks matches (E+1)/2") {
    SeriesContext<Q> ctx{12, 0, 0, Q(1)};
    auto g = build_series_parallel(ctx);
    CHECK(exp_series(g.S) == (g.E + Q(1)) / Q(2));
}

TEST_CASE("composition") {
    std::mt19937_64 rng(7);
    SQ inner = random_series(rng, 6, 0, 0);
    inner.at(0) = 0;
    SQ onew = SQ::constant(1, 6, 1) + SQ::monomial(6, 1, 0, 0, 1, 0, 1);
    CHECK(compose(onew, inner) == onew);

    SeriesContext<Q> ctx{10, 0, 0, Q(1)};
    auto [A, S] = build_dissections(ctx);
    CHECK(compose(A, SQ::variable(10)) == A);
    CHECK_THROWS_AS(compose(A, SQ::constant(1, 10)), std::domain_error);

    // compose against naive Horner-free power sums
    SQ outer = random_series(rng, 6, 2, 0);
    SQ direct(6, 2, 0), p = SQ::constant(1, 6);
    for (int j = 0; j <= 6; ++j) {
        direct = direct + outer.row(j, 6) * p;
        p = p * inner;
    }
    CHECK(compose(outer, inner) == direct);
}

TEST_CASE("differentiate_x and integrate_w") {
    SQ x2 = SQ::monomial(4, 0, 0, 2, 0, 0, 1);
    CHECK(differentiate_x(x2) == SQ::monomial(3, 0, 0, 1, 0, 0, 2));
    SQ w2 = SQ::monomial(2, 3, 0, 0, 2, 0, 1);
    CHECK(integrate_w(theta_w(w2)) == w2);
    CHECK_THROWS_AS(integrate_w(SQ::constant(1, 2, 3)), std::domain_error);
}

TEST_CASE("solve_implicit") {
    SQ X = SQ::variable(8);
    auto phi = [&](const SQ& y) { return X.truncated(y.order()) * (Q(1) + y); };
    auto dphi = [&](const SQ& y) { return X.truncated(y.order()); };
    SQ y = solve_implicit<Q>(phi, dphi, SQ::constant(0, 0), 8);
    CHECK(y.at(0) == 0);
    for (int i = 1; i <= 8; ++i) CHECK(y.at(i) == 1);
    CHECK_THROWS_AS(solve_implicit<Q>(phi, dphi, SQ::constant(1, 0), 8), std::domain_error);

    SeriesContext<Q> ctx{12, 13, 0, Q(1)};
    auto g = build_series_parallel(ctx);
    CHECK(g.E.at(0) == 1);
    CHECK(g.E.at(1) == 2);
    CHECK(g.E.at(2) == 7);
    CHECK(eval_w(g.D, Q(1)) == g.E);
    CHECK(g.D.at(0, 1) == 1);
    // residual of the fixed point
    SQ x = ctx.x();
    SQ res = Q(2) * exp_series(x * g.E * g.E / (Q(1) + x * g.E)) - Q(1) - g.E;
    for (const Q& c : res.coefficients()) CHECK(c == 0);
}

TEST_CASE("square root branch") {
    SQ a = poly({1, -6, 1}, 15);
    SQ z = sqrt_series(a);
    CHECK(z.at(0) == 1);
    CHECK(z * z == a);
}

TEST_CASE("exact arithmetic is independent of association order") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        SQ a = random_series(rng, 5, 2, 1), b = random_series(rng, 5, 2, 1), c = random_series(rng, 5, 2, 1);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        std::vector<SQ> terms{a, b, c, a * b, b * c};
        SQ s1(5, 2, 1);
        for (auto& t : terms) s1 = s1 + t;
        std::shuffle(terms.begin(), terms.end(), rng);
        SQ s2(5, 2, 1);
        for (auto& t : terms) s2 = s2 + t;
        CHECK(s1 == s2);
        c.at(0) = 3;
        c.at(0, 1, 0) = 0;
        c.at(0, 0, 1) = 0;
        c.at(0, 1, 1) = 0;
        c.at(0, 2, 0) = 0;
        c.at(0, 2, 1) = 0;
        CHECK((a / c) * c == a);
    }
}

TEST_CASE("float mode agrees with exact mode through order 50") {
    SeriesContext<Q> cq{50, 4, 0, Q(1)};
    SeriesContext<double> cd{50, 4, 0, 1.0};
    auto check_close = [](const SQ& e, const Series<double>& f) {
        REQUIRE(e.order() == f.order());
        for (int i = 0; i <= e.order(); ++i) {
            double rowmax = 0;
            for (int k = 0; k <= e.wcap(); ++k) rowmax = std::max(rowmax, std::abs(e.at(i, k).get_d()));
            // exact zeros are compared against the size of their row
            for (int k = 0; k <= e.wcap(); ++k) {
                double ex = e.at(i, k).get_d(), fl = f.at(i, k);
                CHECK(std::abs(fl - ex) <= 1e-9 * std::abs(ex) + 1e-14 * rowmax);
            }
        }
    };
    auto oq = build_outerplanar(cq);
    auto od = build_outerplanar(cd);
    check_close(oq.A, od.A);
    check_close(oq.Brooted, od.Brooted);
    SeriesContext<Q> sq{30, 4, 0, Q(1)};
    SeriesContext<double> sd{30, 4, 0, 1.0};
    auto pq = build_series_parallel(sq);
    auto pd = build_series_parallel(sd);
    check_close(pq.E, pd.E);
    check_close(pq.D, pd.D);
    check_close(pq.Brooted, pd.Brooted);
}

TEST_CASE("scaled variable stores sigma^n times the coefficient") {
    SeriesContext<double> plain{40, 0, 0, 1.0};
    SeriesContext<double> scaled{40, 0, 0, 0.125};
    auto a = build_series_parallel(plain).E;
    auto b = build_series_parallel(scaled).E;
    double p = 1;
    for (int i = 0; i <= 40; ++i) {
        CHECK(b.at(i) == doctest::Approx(a.at(i) * p).epsilon(1e-11));
        p *= 0.125;
    }
}
