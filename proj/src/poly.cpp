#include "antiloc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace antiloc {

namespace {

template <class C, class Add>
std::vector<C> add_vecs(const std::vector<C>& a, const std::vector<C>& b, const C& zero, Add add) {
    std::vector<C> out(std::max(a.size(), b.size()), zero);
    for (size_t i = 0; i < out.size(); ++i) {
        C va = i < a.size() ? a[i] : zero;
        C vb = i < b.size() ? b[i] : zero;
        out[i] = add(va, vb);
    }
    return out;
}

std::string poly_str_terms(const std::vector<std::pair<std::string, int>>& terms, const std::string& var) {
    if (terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& [coef, e] = terms[i];
        if (i) s += "+";
        if (e == 0) {
            s += coef;
        } else {
            if (coef != "1") s += coef + "*";
            s += var;
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

}  // namespace

std::string FpPoly::str(const std::string& var) const {
    std::vector<std::pair<std::string, int>> terms;
    for (int i = deg(); i >= 0; --i)
        if (coeff(i) != 0) terms.push_back({std::to_string(coeff(i)), i});
    return poly_str_terms(terms, var);
}

std::string QPoly::str(const std::string& var) const {
    std::vector<std::pair<std::string, int>> terms;
    for (int i = deg(); i >= 0; --i)
        if (!c[i].is_zero()) terms.push_back({c[i].str(), i});
    return poly_str_terms(terms, var);
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw std::logic_error("FpPoly char mismatch");
    FpPoly r(a.p);
    r.c = add_vecs(a.c, b.c, static_cast<i64>(0), [&](i64 x, i64 y) { return pos_mod(x + y, a.p); });
    r.trim();
    return r;
}

FpPoly fp_neg(const FpPoly& a) {
    FpPoly r(a.p);
    r.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = pos_mod(-a.c[i], a.p);
    r.trim();
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) { return fp_add(a, fp_neg(b)); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw std::logic_error("FpPoly char mismatch");
    FpPoly r(a.p);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = pos_mod(r.c[i + j] + checked_mul(a.c[i], b.c[j]), a.p);
    r.trim();
    return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::domain_error("FpPoly division by zero");
    FpPoly q(a.p), r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c.assign(a.deg() - b.deg() + 1, 0);
    bool ok = false;
    i64 lead_inv = mod_inverse(b.lead(), b.p, ok);
    if (!ok) throw std::domain_error("FpPoly leading coefficient not invertible");
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int shift = r.deg() - b.deg();
        i64 factor = pos_mod(checked_mul(r.lead(), lead_inv), a.p);
        q.c[shift] = pos_mod(q.c[shift] + factor, a.p);
        for (int i = 0; i <= b.deg(); ++i)
            r.c[i + shift] = pos_mod(r.c[i + shift] - checked_mul(factor, b.c[i]), a.p);
        r.trim();
    }
    q.trim();
    return {q, r};
}

FpPoly fp_monic(const FpPoly& a) {
    if (a.is_zero()) return a;
    bool ok = false;
    i64 inv = mod_inverse(a.lead(), a.p, ok);
    if (!ok) throw std::domain_error("FpPoly not over a field");
    return fp_mul(a, FpPoly::constant(a.p, inv));
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_divmod(a, b).second;
        a = b;
        b = r;
    }
    return fp_monic(a);
}

FpPoly fp_ext_gcd(const FpPoly& a, const FpPoly& b, FpPoly& x, FpPoly& y) {
    FpPoly old_r = a, r = b;
    FpPoly old_x = FpPoly::constant(a.p, 1), xx(a.p);
    FpPoly old_y(a.p), yy = FpPoly::constant(a.p, 1);
    while (!r.is_zero()) {
        auto [q, rem] = fp_divmod(old_r, r);
        old_r = r;
        r = rem;
        FpPoly t = fp_sub(old_x, fp_mul(q, xx));
        old_x = xx;
        xx = t;
        t = fp_sub(old_y, fp_mul(q, yy));
        old_y = yy;
        yy = t;
    }
    // normalize to monic gcd
    if (!old_r.is_zero()) {
        bool ok = false;
        i64 inv = mod_inverse(old_r.lead(), a.p, ok);
        FpPoly u = FpPoly::constant(a.p, inv);
        old_r = fp_mul(old_r, u);
        old_x = fp_mul(old_x, u);
        old_y = fp_mul(old_y, u);
    }
    x = old_x;
    y = old_y;
    return old_r;
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& m) { return fp_divmod(a, m).second; }

bool fp_eq(const FpPoly& a, const FpPoly& b) { return a.p == b.p && a.c == b.c; }

QPoly q_add(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c = add_vecs(a.c, b.c, Frac(0), [](const Frac& x, const Frac& y) { return x + y; });
    r.trim();
    return r;
}

QPoly q_neg(const QPoly& a) {
    QPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

QPoly q_sub(const QPoly& a, const QPoly& b) { return q_add(a, q_neg(b)); }

QPoly q_mul(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Frac(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
}

std::pair<QPoly, QPoly> q_divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly division by zero");
    QPoly q, r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c.assign(a.deg() - b.deg() + 1, Frac(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int shift = r.deg() - b.deg();
        Frac factor = r.lead() / b.lead();
        q.c[shift] = q.c[shift] + factor;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + shift] = r.c[i + shift] - factor * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

QPoly q_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = q_divmod(a, b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        Frac inv = Frac(1) / a.lead();
        a = q_mul(a, QPoly::constant(inv));
    }
    return a;
}

bool q_eq(const QPoly& a, const QPoly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

// --- tiny parser for linear combinations of c*x^e terms -------------------

namespace {

struct TermParser {
    std::string s;
    size_t pos = 0;
    std::string var;

    explicit TermParser(std::string in, std::string v) : s(std::move(in)), var(std::move(v)) {
        s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                s.end());
    }

    bool done() const { return pos >= s.size(); }

    // returns list of (coef_num, coef_den, exponent)
    std::vector<std::tuple<i64, i64, int>> parse() {
        std::vector<std::tuple<i64, i64, int>> terms;
        if (s.empty() || s == "0") return terms;
        while (!done()) {
            i64 sign = 1;
            if (s[pos] == '+') ++pos;
            else if (s[pos] == '-') { sign = -1; ++pos; }
            i64 num = 1, den = 1;
            bool saw_number = false;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                num = 0;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    num = checked_add(checked_mul(num, 10), s[pos++] - '0');
                saw_number = true;
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    den = 0;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                        den = checked_add(checked_mul(den, 10), s[pos++] - '0');
                }
            }
            if (pos < s.size() && s[pos] == '*') ++pos;
            int e = 0;
            if (pos + var.size() <= s.size() && s.compare(pos, var.size(), var) == 0) {
                pos += var.size();
                e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = 0;
                    bool eneg = false;
                    if (pos < s.size() && s[pos] == '-') { eneg = true; ++pos; }
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) e = e * 10 + (s[pos++] - '0');
                    if (eneg) e = -e;
                }
            } else if (!saw_number) {
                throw std::runtime_error("polynomial parse error at '" + s.substr(pos) + "'");
            }
            terms.push_back({checked_mul(sign, num), den, e});
        }
        return terms;
    }
};

}  // namespace

FpPoly fp_parse(i64 p, const std::string& s, const std::string& var) {
    TermParser tp(s, var);
    FpPoly out(p);
    for (auto& [num, den, e] : tp.parse()) {
        if (e < 0) throw std::runtime_error("negative exponent in polynomial");
        if (den != 1) {
            bool ok = false;
            i64 inv = mod_inverse(den, p, ok);
            if (!ok) throw std::runtime_error("denominator not invertible mod p");
            num = checked_mul(num, inv);
        }
        FpPoly t(p);
        t.c.assign(e + 1, 0);
        t.c[e] = pos_mod(num, p);
        out = fp_add(out, t);
    }
    return out;
}

QPoly q_parse(const std::string& s, const std::string& var) {
    TermParser tp(s, var);
    QPoly out;
    for (auto& [num, den, e] : tp.parse()) {
        if (e < 0) throw std::runtime_error("negative exponent in polynomial");
        std::vector<Frac> c(e + 1, Frac(0));
        c[e] = Frac(num, den);
        out = q_add(out, QPoly(c));
    }
    return out;
}

// --- generic Smith form ----------------------------------------------------

template <class T>
GSmith<T> generic_smith(const GMat<T>& input, const EucOps<T>& ops) {
    GSmith<T> res;
    res.d = input;
    auto& d = res.d;
    res.u = GMat<T>(d.r, d.r, ops.zero());
    res.v = GMat<T>(d.c, d.c, ops.zero());
    for (int i = 0; i < d.r; ++i) res.u.at(i, i) = ops.one();
    for (int i = 0; i < d.c; ++i) res.v.at(i, i) = ops.one();

    auto row_add = [&](int i, int j, const T& q) {  // row_i += q*row_j
        for (int k = 0; k < d.c; ++k) d.at(i, k) = ops.add(d.at(i, k), ops.mul(q, d.at(j, k)));
        for (int k = 0; k < res.u.c; ++k) res.u.at(i, k) = ops.add(res.u.at(i, k), ops.mul(q, res.u.at(j, k)));
    };
    auto col_add = [&](int i, int j, const T& q) {  // col_i += q*col_j
        for (int k = 0; k < d.r; ++k) d.at(k, i) = ops.add(d.at(k, i), ops.mul(q, d.at(k, j)));
        for (int k = 0; k < res.v.r; ++k) res.v.at(k, i) = ops.add(res.v.at(k, i), ops.mul(q, res.v.at(k, j)));
    };
    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < d.c; ++k) std::swap(d.at(i, k), d.at(j, k));
        for (int k = 0; k < res.u.c; ++k) std::swap(res.u.at(i, k), res.u.at(j, k));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < d.r; ++k) std::swap(d.at(k, i), d.at(k, j));
        for (int k = 0; k < res.v.r; ++k) std::swap(res.v.at(k, i), res.v.at(k, j));
    };
    auto row_scale = [&](int i, const T& u) {
        for (int k = 0; k < d.c; ++k) d.at(i, k) = ops.mul(u, d.at(i, k));
        for (int k = 0; k < res.u.c; ++k) res.u.at(i, k) = ops.mul(u, res.u.at(i, k));
    };

    int n = std::min(d.r, d.c);
    for (int t = 0; t < n; ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            i64 best = 0;
            for (int i = t; i < d.r; ++i)
                for (int j = t; j < d.c; ++j)
                    if (!ops.is_zero(d.at(i, j))) {
                        i64 nn = ops.norm(d.at(i, j));
                        if (pi < 0 || nn < best) { best = nn; pi = i; pj = j; }
                    }
            if (pi < 0) goto finished;
            row_swap(t, pi);
            col_swap(t, pj);

            bool clean = true;
            for (int i = t + 1; i < d.r; ++i)
                if (!ops.is_zero(d.at(i, t))) {
                    auto [q, r] = ops.divmod(d.at(i, t), d.at(t, t));
                    row_add(i, t, ops.neg(q));
                    if (!ops.is_zero(d.at(i, t))) clean = false;
                }
            for (int j = t + 1; j < d.c; ++j)
                if (!ops.is_zero(d.at(t, j))) {
                    auto [q, r] = ops.divmod(d.at(t, j), d.at(t, t));
                    col_add(j, t, ops.neg(q));
                    if (!ops.is_zero(d.at(t, j))) clean = false;
                }
            if (!clean) continue;

            bool divides = true;
            for (int i = t + 1; i < d.r && divides; ++i)
                for (int j = t + 1; j < d.c; ++j) {
                    auto [q, r] = ops.divmod(d.at(i, j), d.at(t, t));
                    if (!ops.is_zero(r)) {
                        row_add(t, i, ops.one());
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        row_scale(t, ops.unit_to_normalize(d.at(t, t)));
    }
finished:
    res.rank = 0;
    for (int i = 0; i < n; ++i)
        if (!ops.is_zero(d.at(i, i))) ++res.rank;
    return res;
}

template GSmith<i64> generic_smith<i64>(const GMat<i64>&, const EucOps<i64>&);
template GSmith<FpPoly> generic_smith<FpPoly>(const GMat<FpPoly>&, const EucOps<FpPoly>&);
template GSmith<QPoly> generic_smith<QPoly>(const GMat<QPoly>&, const EucOps<QPoly>&);

EucOps<i64> int_euc_ops() {
    EucOps<i64> o;
    o.zero = [] { return static_cast<i64>(0); };
    o.one = [] { return static_cast<i64>(1); };
    o.add = [](const i64& a, const i64& b) { return checked_add(a, b); };
    o.neg = [](const i64& a) { return checked_neg(a); };
    o.mul = [](const i64& a, const i64& b) { return checked_mul(a, b); };
    o.divmod = [](const i64& a, const i64& b) {
        i64 q = a / b;
        return std::pair<i64, i64>(q, a - q * b);
    };
    o.is_zero = [](const i64& a) { return a == 0; };
    o.norm = [](const i64& a) { return abs_i64(a); };
    o.unit_to_normalize = [](const i64& a) { return a < 0 ? static_cast<i64>(-1) : static_cast<i64>(1); };
    o.str = [](const i64& a) { return std::to_string(a); };
    return o;
}

EucOps<FpPoly> fp_euc_ops(i64 p) {
    EucOps<FpPoly> o;
    o.zero = [p] { return FpPoly(p); };
    o.one = [p] { return FpPoly::constant(p, 1); };
    o.add = [](const FpPoly& a, const FpPoly& b) { return fp_add(a, b); };
    o.neg = [](const FpPoly& a) { return fp_neg(a); };
    o.mul = [](const FpPoly& a, const FpPoly& b) { return fp_mul(a, b); };
    o.divmod = [](const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b); };
    o.is_zero = [](const FpPoly& a) { return a.is_zero(); };
    o.norm = [](const FpPoly& a) { return static_cast<i64>(a.deg()) + 1; };
    o.unit_to_normalize = [p](const FpPoly& a) {
        bool ok = false;
        i64 inv = a.is_zero() ? 1 : mod_inverse(a.lead(), p, ok);
        return FpPoly::constant(p, a.is_zero() ? 1 : inv);
    };
    o.str = [](const FpPoly& a) { return a.str(); };
    return o;
}

EucOps<QPoly> q_euc_ops() {
    EucOps<QPoly> o;
    o.zero = [] { return QPoly(); };
    o.one = [] { return QPoly::constant(Frac(1)); };
    o.add = [](const QPoly& a, const QPoly& b) { return q_add(a, b); };
    o.neg = [](const QPoly& a) { return q_neg(a); };
    o.mul = [](const QPoly& a, const QPoly& b) { return q_mul(a, b); };
    o.divmod = [](const QPoly& a, const QPoly& b) { return q_divmod(a, b); };
    o.is_zero = [](const QPoly& a) { return a.is_zero(); };
    o.norm = [](const QPoly& a) { return static_cast<i64>(a.deg()) + 1; };
    o.unit_to_normalize = [](const QPoly& a) {
        return a.is_zero() ? QPoly::constant(Frac(1)) : QPoly::constant(Frac(1) / a.lead());
    };
    o.str = [](const QPoly& a) { return a.str(); };
    return o;
}

}  // namespace antiloc
