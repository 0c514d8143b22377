#include "antiloc/series.hpp"

#include <algorithm>
#include <sstream>

namespace antiloc {

SeriesElem ser_zero() { return SeriesElem{}; }

SeriesElem ser_monomial(const SeriesParams& pr, i64 coeff, int xe, int ye) {
    SeriesElem e;
    coeff = pos_mod(coeff, pr.p);
    if (coeff != 0 && ye >= 0 && ye < pr.order_n) e.t[{xe, ye}] = coeff;
    return e;
}

SeriesElem ser_one(const SeriesParams& pr) { return ser_monomial(pr, 1, 0, 0); }

SeriesElem ser_add(const SeriesParams& pr, const SeriesElem& a, const SeriesElem& b) {
    SeriesElem r = a;
    for (const auto& [k, v] : b.t) {
        i64 nv = pos_mod(r.t.count(k) ? r.t[k] + v : v, pr.p);
        if (nv == 0)
            r.t.erase(k);
        else
            r.t[k] = nv;
    }
    return r;
}

SeriesElem ser_neg(const SeriesParams& pr, const SeriesElem& a) {
    SeriesElem r;
    for (const auto& [k, v] : a.t) r.t[k] = pos_mod(-v, pr.p);
    return r;
}

SeriesElem ser_scale(const SeriesParams& pr, i64 c, const SeriesElem& a) {
    SeriesElem r;
    c = pos_mod(c, pr.p);
    for (const auto& [k, v] : a.t) {
        i64 nv = pos_mod(checked_mul(c, v), pr.p);
        if (nv != 0) r.t[k] = nv;
    }
    return r;
}

SeriesElem ser_mul(const SeriesParams& pr, const SeriesElem& a, const SeriesElem& b) {
    SeriesElem r;
    for (const auto& [ka, va] : a.t)
        for (const auto& [kb, vb] : b.t) {
            int xe = ka.first + kb.first, ye = ka.second + kb.second;
            if (ye >= pr.order_n) continue;  // y-truncation
            auto key = std::make_pair(xe, ye);
            i64 nv = pos_mod((r.t.count(key) ? r.t[key] : 0) + checked_mul(va, vb), pr.p);
            if (nv == 0)
                r.t.erase(key);
            else
                r.t[key] = nv;
        }
    return r;
}

int ser_pole_order(const SeriesElem& a) {
    int pole = 0;
    for (const auto& [k, v] : a.t) pole = std::max(pole, -k.first);
    return pole;
}

int ser_y_degree(const SeriesElem& a) {
    int d = -1;
    for (const auto& [k, v] : a.t) d = std::max(d, k.second);
    return d;
}

std::string ser_str(const SeriesElem& a) {
    if (a.t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in (y, x) lexicographic order for readability
    std::vector<std::pair<std::pair<int, int>, i64>> terms(a.t.begin(), a.t.end());
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        if (l.first.second != r.first.second) return l.first.second < r.first.second;
        return l.first.first < r.first.first;
    });
    for (const auto& [k, v] : terms) {
        if (!first) os << " + ";
        first = false;
        auto [xe, ye] = k;
        bool printed = false;
        if (v != 1 || (xe == 0 && ye == 0)) {
            os << v;
            printed = true;
        }
        if (xe != 0) {
            if (printed) os << "*";
            os << "x^" << xe;
            printed = true;
        }
        if (ye != 0) {
            if (printed) os << "*";
            os << "y";
            if (ye != 1) os << "^" << ye;
        }
    }
    return os.str();
}

SeriesElem ser_parse(const SeriesParams& pr, const std::string& input) {
    // terms like "3*x^-2*y^4" joined by '+'
    SeriesElem out;
    std::string s = input;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty() || s == "0") return out;
    size_t pos = 0;
    auto read_int = [&](i64& val) {
        i64 sign = 1;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        i64 v = 0;
        bool any = false;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos++] - '0');
            any = true;
        }
        val = sign * v;
        return any;
    };
    while (pos < s.size()) {
        if (s[pos] == '+') ++pos;
        i64 coeff = 1;
        int xe = 0, ye = 0;
        bool neg = false;
        if (s[pos] == '-') { neg = true; ++pos; }
        if (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
            i64 v;
            read_int(v);
            coeff = v;
        }
        while (pos < s.size() && (s[pos] == '*' || s[pos] == 'x' || s[pos] == 'y')) {
            if (s[pos] == '*') { ++pos; continue; }
            char var = s[pos++];
            i64 e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                if (!read_int(e)) throw std::runtime_error("series parse: bad exponent");
            }
            if (var == 'x') xe = static_cast<int>(e);
            else ye = static_cast<int>(e);
        }
        if (neg) coeff = -coeff;
        out = ser_add(pr, out, ser_monomial(pr, coeff, xe, ye));
    }
    return out;
}

SeriesTelescopeVerdict series_telescope_decide(const SeriesParams& pr, int pole_bound,
                                               const std::vector<SeriesElem>& data) {
    int n_eq = static_cast<int>(data.size());
    SeriesTelescopeVerdict v;
    // Forced values: b_n = sum_{i=0}^{n_eq-1-n} y^i a_{n+i} with b_{n_eq} = 0.
    // Any admissible solution agrees with these outside the reach of the free
    // tail unknown, and the tail cannot carry out-of-box poles itself, so the
    // decision reduces to a pole check of the forced values.
    SeriesElem y = ser_monomial(pr, 1, 0, 1);
    std::vector<SeriesElem> b(n_eq + 1, ser_zero());
    for (int n = n_eq - 1; n >= 0; --n) b[n] = ser_add(pr, data[n], ser_mul(pr, y, b[n + 1]));
    for (int n = 0; n < n_eq; ++n) {
        int pole = ser_pole_order(b[n]);
        if (pole >= pole_bound) {
            v.contraadjusted = false;
            v.witness_index = n;
            v.forced_partial = b[n];
            v.forced_pole = pole;
            v.note = "forced partial solution b_" + std::to_string(n) + " has pole order " + std::to_string(pole) +
                     ", out of the box {pole < " + std::to_string(pole_bound) + "}";
            return v;
        }
    }
    v.contraadjusted = true;
    v.solution = b;
    v.note = "back-substituted solution within the box";
    return v;
}

std::vector<SeriesElem> counterexample_data(const SeriesParams& pr) {
    std::vector<SeriesElem> data;
    for (int n = 0; n < pr.order_n; ++n) data.push_back(ser_monomial(pr, 1, -n, 0));
    return data;
}

}  // namespace antiloc
