#include "doctest.h"

#include "antiloc/poly.hpp"
#include "antiloc/series.hpp"

using namespace antiloc;

TEST_CASE("F2[x] arithmetic and gcd") {
    FpPoly x = FpPoly::x(2);
    FpPoly x1 = fp_add(x, FpPoly::constant(2, 1));  // x+1
    CHECK(fp_mul(x, x1).str() == "x^2+x");
    CHECK(fp_gcd(x, x1).str() == "1");
    FpPoly u(2), v(2);
    FpPoly g = fp_ext_gcd(x, x1, u, v);
    CHECK(g.str() == "1");
    CHECK(fp_eq(fp_add(fp_mul(u, x), fp_mul(v, x1)), FpPoly::constant(2, 1)));
}

TEST_CASE("polynomial parsing round trips") {
    CHECK(fp_parse(5, "x^2+3x+1").str() == "x^2+3*x+1");
    CHECK(fp_parse(2, "x^2+x").str() == "x^2+x");
    CHECK(q_parse("1/2x^2-3").str() == "1/2*x^2+-3");
    CHECK(fp_parse(3, "0").is_zero());
}

TEST_CASE("generic smith over F2[x]: diag(x, x+1) -> diag(1, x^2+x)") {
    auto ops = fp_euc_ops(2);
    GMat<FpPoly> m(2, 2, FpPoly(2));
    m.at(0, 0) = FpPoly::x(2);
    m.at(1, 1) = fp_parse(2, "x+1");
    auto s = generic_smith(m, ops);
    CHECK(s.d.at(0, 0).str() == "1");
    CHECK(s.d.at(1, 1).str() == "x^2+x");
    CHECK(s.rank == 2);
    // U*A*V = D
    auto mul = [&](const GMat<FpPoly>& a, const GMat<FpPoly>& b) {
        GMat<FpPoly> z(a.r, b.c, FpPoly(2));
        for (int i = 0; i < a.r; ++i)
            for (int k = 0; k < a.c; ++k)
                for (int j = 0; j < b.c; ++j) z.at(i, j) = fp_add(z.at(i, j), fp_mul(a.at(i, k), b.at(k, j)));
        return z;
    };
    auto lhs = mul(mul(s.u, m), s.v);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(fp_eq(lhs.at(i, j), s.d.at(i, j)));
}

TEST_CASE("generic smith over Q[x]") {
    auto ops = q_euc_ops();
    GMat<QPoly> m(2, 2, QPoly());
    m.at(0, 0) = q_parse("x^2-1");
    m.at(0, 1) = q_parse("x-1");
    m.at(1, 1) = q_parse("x+1");
    auto s = generic_smith(m, ops);
    CHECK(s.rank == 2);
    // divisibility: d00 | d11
    auto [q, r] = q_divmod(s.d.at(1, 1), s.d.at(0, 0));
    CHECK(r.is_zero());
}

TEST_CASE("series arithmetic truncates in y and tracks poles") {
    SeriesParams pr{2, 4, 3};
    SeriesElem a = ser_monomial(pr, 1, -2, 1);  // x^-2 y
    SeriesElem b = ser_monomial(pr, 1, 0, 3);   // y^3
    CHECK(ser_mul(pr, a, b).is_zero());         // y^4 truncated away
    SeriesElem c = ser_add(pr, a, a);
    CHECK(c.is_zero());  // char 2
    CHECK(ser_pole_order(a) == 2);
    CHECK(ser_str(a) == "x^-2*y");
    CHECK(ser_parse(pr, "x^-2*y") == a);
}

TEST_CASE("telescope: counterexample data forces pole N-1") {
    for (int N = 2; N <= 8; ++N) {
        SeriesParams pr{5, N, 0};
        auto data = counterexample_data(pr);
        for (int k = 1; k < N; ++k) {
            auto v = series_telescope_decide(pr, k, data);
            CHECK_FALSE(v.contraadjusted);
            CHECK(v.witness_index == 0);
            CHECK(v.forced_pole == N - 1);
        }
        // a roomy box admits the back-substituted solution
        auto ok = series_telescope_decide(pr, N, data);
        CHECK(ok.contraadjusted);
        REQUIRE(ok.solution.size() == static_cast<size_t>(N + 1));
        // verify the equations b_n - y b_{n+1} = a_n
        SeriesElem y = ser_monomial(pr, 1, 0, 1);
        for (int n = 0; n < N; ++n) {
            SeriesElem lhs = ser_add(pr, ok.solution[n], ser_neg(pr, ser_mul(pr, y, ok.solution[n + 1])));
            CHECK(lhs == data[n]);
        }
    }
}

TEST_CASE("telescope: pole-free data is solvable in any box") {
    SeriesParams pr{3, 6, 2};
    std::vector<SeriesElem> data;
    for (int n = 0; n < 6; ++n) data.push_back(ser_monomial(pr, 1 + n % 2, n % 3, n % 6));
    auto v = series_telescope_decide(pr, 1, data);
    CHECK(v.contraadjusted);
}
