#include "maxdeg/verify.hpp"

#include "maxdeg/bounds.hpp"
#include "maxdeg/oracle.hpp"

namespace maxdeg {

namespace {

Rational frac(std::int64_t a, std::int64_t b) {
    Rational r(Integer(std::to_string(a)), Integer(std::to_string(b)));
    r.canonicalize();
    return r;
}

template <class K>
std::int64_t lookup(const std::map<K, std::int64_t>& m, const K& k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
}

}  // namespace

VerifyLine verify_size(GraphClass c, int n, int workers) {
    VerifyLine line{c, n, true, {}};
    auto fail = [&](std::string what) {
        if (line.ok) line.detail = std::move(what);
        line.ok = false;
    };
    const OracleResult o = enumerate(c, n, n == 7, workers);
    SpectrumEngine<Rational> eng(c, n, n - 1, n - 1);
    if (eng.count(n) != o.count) fail("count " + eng.count(n).get_str() + " != " + std::to_string(o.count));
    const DegreeTable<Rational> d = eng.table(n);
    for (int k = 0; k < n; ++k)
        if (d.single_at(k) != frac(lookup(o.degree, k), n * o.count)) fail("d_{n," + std::to_string(k) + "}");
    if (n < 2) return line;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (d.pair_at(k, l) != frac(lookup(o.pair, std::pair{k, l}), std::int64_t(n) * (n - 1) * o.count))
                fail("d_{n," + std::to_string(k) + "," + std::to_string(l) + "}");
    const auto b = max_degree_bounds(d);
    std::int64_t above = o.count, weighted = 0;
    for (auto [k, v] : o.maxdeg) weighted += k * v;
    for (int k = 0; k < n; ++k) {
        above -= lookup(o.maxdeg, k);
        const Rational p = frac(above, o.count);
        const auto& row = b.rows[k];
        if (pair_tail(d, k) == 0 ? p != Rational(n) * row.tail : (p < row.lower || p > row.upper))
            fail("P{maxdeg > " + std::to_string(k) + "}");
    }
    const Rational mean = frac(weighted, o.count);
    if (mean < b.expectation_lower || mean > b.expectation_upper) fail("E maxdeg");
    return line;
}

std::vector<VerifyLine> verify_oracle(int nmax, int workers) {
    if (nmax > 7) throw std::invalid_argument("verify_oracle: enumeration stops at n = 7");
    std::vector<VerifyLine> out;
    for (GraphClass c : all_classes)
        for (int n = min_size(c); n <= nmax; ++n) out.push_back(verify_size(c, n, workers));
    return out;
}

}  // namespace maxdeg
