#pragma once

// Desk-scale model of k[[x,y]][x^-1]: polynomials in y of degree < N whose
// coefficients are Laurent polynomials in x over F_p. The y-truncation order
// N is a hard ring parameter; the pole bound k parameterizes membership
// boxes for the telescope equation solver. A bound k admits pole orders
// strictly below k (the forced witness of the counterexample has pole order
// N-1, which violates every bound k < N).

#include <map>
#include <string>
#include <vector>

#include "antiloc/ints.hpp"

namespace antiloc {

struct SeriesParams {
    i64 p = 2;       // coefficient field F_p
    int order_n = 4;  // y-degrees 0..order_n-1
    int pole_k = 2;   // default membership box
    bool operator==(const SeriesParams& o) const { return p == o.p && order_n == o.order_n && pole_k == o.pole_k; }
};

struct SeriesElem {
    // (x exponent, y exponent) -> nonzero coefficient in [1, p)
    std::map<std::pair<int, int>, i64> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const SeriesElem& o) const { return t == o.t; }
};

SeriesElem ser_zero();
SeriesElem ser_monomial(const SeriesParams& pr, i64 coeff, int xe, int ye);
SeriesElem ser_one(const SeriesParams& pr);
SeriesElem ser_add(const SeriesParams& pr, const SeriesElem& a, const SeriesElem& b);
SeriesElem ser_neg(const SeriesParams& pr, const SeriesElem& a);
SeriesElem ser_mul(const SeriesParams& pr, const SeriesElem& a, const SeriesElem& b);
SeriesElem ser_scale(const SeriesParams& pr, i64 c, const SeriesElem& a);

// largest i >= 0 such that some x^-i appears (0 if none)
int ser_pole_order(const SeriesElem& a);
int ser_y_degree(const SeriesElem& a);  // -1 for zero
std::string ser_str(const SeriesElem& a);
SeriesElem ser_parse(const SeriesParams& pr, const std::string& s);

// Truncated instance of the telescope system b_n - y*b_{n+1} = a_n,
// n = 0..N-1, solved inside the box {pole order < bound}. The element b_0 is
// fully forced by the data; unsolvability is certified by the first forced
// partial solution whose pole order reaches the bound.
struct SeriesTelescopeVerdict {
    bool contraadjusted = false;
    std::vector<SeriesElem> solution;  // b_0..b_N on success (b_N = 0)
    int witness_index = -1;            // first n with an out-of-box forced value
    SeriesElem forced_partial;         // the forced b_{witness_index}
    int forced_pole = 0;
    std::string note;
};

SeriesTelescopeVerdict series_telescope_decide(const SeriesParams& pr, int pole_bound,
                                               const std::vector<SeriesElem>& data);

// The counterexample data a_n = x^-n, n = 0..N-1.
std::vector<SeriesElem> counterexample_data(const SeriesParams& pr);

}  // namespace antiloc
