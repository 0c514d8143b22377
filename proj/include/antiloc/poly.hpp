#pragma once

// Univariate polynomials over F_p and Q, plus a generic Smith normal form
// over Euclidean domains (Z, F_p[x], Q[x]) used by the matrix normal-form
// operations for PID backends.

#include <functional>
#include <string>
#include <vector>

#include "antiloc/ints.hpp"

namespace antiloc {

struct FpPoly {
    i64 p = 2;
    std::vector<i64> c;  // c[i] * x^i, entries in [0,p), trailing zeros trimmed

    FpPoly() = default;
    explicit FpPoly(i64 prime) : p(prime) {}
    FpPoly(i64 prime, std::vector<i64> coeffs) : p(prime), c(std::move(coeffs)) { trim(); }

    void trim() {
        for (auto& v : c) v = pos_mod(v, p);
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    i64 lead() const { return c.empty() ? 0 : c.back(); }
    i64 coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0; }

    static FpPoly x(i64 p, int e = 1) {
        FpPoly f(p);
        f.c.assign(e + 1, 0);
        f.c[e] = 1;
        return f;
    }
    static FpPoly constant(i64 p, i64 v) { return FpPoly(p, {v}); }

    std::string str(const std::string& var = "x") const;
};

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_neg(const FpPoly& a);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
// division with remainder; requires b nonzero
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic
FpPoly fp_ext_gcd(const FpPoly& a, const FpPoly& b, FpPoly& x, FpPoly& y);
FpPoly fp_mod(const FpPoly& a, const FpPoly& m);
bool fp_eq(const FpPoly& a, const FpPoly& b);
FpPoly fp_monic(const FpPoly& a);

struct QPoly {
    std::vector<Frac> c;

    QPoly() = default;
    explicit QPoly(std::vector<Frac> coeffs) : c(std::move(coeffs)) { trim(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Frac lead() const { return c.empty() ? Frac(0) : c.back(); }
    static QPoly constant(const Frac& v) { return QPoly({v}); }
    static QPoly x(int e = 1) {
        std::vector<Frac> v(e + 1, Frac(0));
        v[e] = Frac(1);
        return QPoly(v);
    }
    std::string str(const std::string& var = "x") const;
};

QPoly q_add(const QPoly& a, const QPoly& b);
QPoly q_sub(const QPoly& a, const QPoly& b);
QPoly q_neg(const QPoly& a);
QPoly q_mul(const QPoly& a, const QPoly& b);
std::pair<QPoly, QPoly> q_divmod(const QPoly& a, const QPoly& b);
QPoly q_gcd(QPoly a, QPoly b);
bool q_eq(const QPoly& a, const QPoly& b);

// parse "x^2+3x+1" style strings; integers coerced into the coefficient field
FpPoly fp_parse(i64 p, const std::string& s, const std::string& var = "x");
QPoly q_parse(const std::string& s, const std::string& var = "x");

// --- generic Smith normal form over a Euclidean domain -------------------

template <class T>
struct EucOps {
    std::function<T()> zero;
    std::function<T()> one;
    std::function<T(const T&, const T&)> add;
    std::function<T(const T&)> neg;
    std::function<T(const T&, const T&)> mul;
    std::function<std::pair<T, T>(const T&, const T&)> divmod;
    std::function<bool(const T&)> is_zero;
    std::function<i64(const T&)> norm;             // Euclidean size; compared between nonzero values
    std::function<T(const T&)> unit_to_normalize;  // unit u with u*a canonical (sign / monic)
    std::function<std::string(const T&)> str;
};

template <class T>
struct GMat {
    int r = 0, c = 0;
    std::vector<T> a;
    GMat() = default;
    GMat(int rows, int cols, const T& fill) : r(rows), c(cols), a(static_cast<size_t>(rows) * cols, fill) {}
    T& at(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }
};

template <class T>
struct GSmith {
    GMat<T> d, u, v;  // u*a*v = d
    int rank = 0;
};

template <class T>
GSmith<T> generic_smith(const GMat<T>& input, const EucOps<T>& ops);

EucOps<i64> int_euc_ops();
EucOps<FpPoly> fp_euc_ops(i64 p);
EucOps<QPoly> q_euc_ops();

// explicit instantiations provided in poly.cpp
extern template GSmith<i64> generic_smith<i64>(const GMat<i64>&, const EucOps<i64>&);
extern template GSmith<FpPoly> generic_smith<FpPoly>(const GMat<FpPoly>&, const EucOps<FpPoly>&);
extern template GSmith<QPoly> generic_smith<QPoly>(const GMat<QPoly>&, const EucOps<QPoly>&);

}  // namespace antiloc
