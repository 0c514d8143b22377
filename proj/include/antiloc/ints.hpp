#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace antiloc {

using i64 = long long;

struct arithmetic_overflow : std::runtime_error {
    explicit arithmetic_overflow(const std::string& what) : std::runtime_error("integer overflow: " + what) {}
};

struct backend_unavailable : std::runtime_error {
    explicit backend_unavailable(const std::string& what) : std::runtime_error("backend unavailable: " + what) {}
};

struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& what) : std::runtime_error("invariant violation: " + what) {}
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow("add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow("sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow("mul");
    return r;
}

inline i64 checked_neg(i64 a) {
    if (a == INT64_MIN) throw arithmetic_overflow("neg");
    return -a;
}

inline i64 abs_i64(i64 a) { return a < 0 ? checked_neg(a) : a; }

// Euclidean floor division; remainder in [0, |b|).
inline i64 floor_div(i64 a, i64 b) {
    if (b == 0) throw std::domain_error("floor_div by zero");
    i64 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline i64 pos_mod(i64 a, i64 b) {
    i64 r = a % b;
    if (r < 0) r += abs_i64(b);
    return r;
}

inline i64 gcd_i64(i64 a, i64 b) {
    a = abs_i64(a);
    b = abs_i64(b);
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 lcm_i64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(abs_i64(a) / gcd_i64(a, b), abs_i64(b));
}

// g = gcd(a,b) >= 0 with x*a + y*b = g.
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    i64 old_r = a, r = b;
    i64 old_x = 1, xx = 0;
    i64 old_y = 0, yy = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = checked_sub(old_r, checked_mul(q, r));
        old_r = r; r = t;
        t = checked_sub(old_x, checked_mul(q, xx));
        old_x = xx; xx = t;
        t = checked_sub(old_y, checked_mul(q, yy));
        old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = checked_neg(old_r); old_x = checked_neg(old_x); old_y = checked_neg(old_y); }
    x = old_x;
    y = old_y;
    return old_r;
}

inline i64 pow_i64(i64 base, i64 e) {
    if (e < 0) throw std::domain_error("pow_i64 negative exponent");
    i64 r = 1;
    while (e) {
        if (e & 1) r = checked_mul(r, base);
        e >>= 1;
        if (e) base = checked_mul(base, base);
    }
    return r;
}

inline i64 mod_pow(i64 base, i64 e, i64 m) {
    base = pos_mod(base, m);
    i64 r = 1 % m;
    while (e) {
        if (e & 1) r = checked_mul(r, base) % m;
        base = checked_mul(base, base) % m;
        e >>= 1;
    }
    return r;
}

// Inverse of a mod m when gcd(a,m)=1.
inline i64 mod_inverse(i64 a, i64 m, bool& ok) {
    i64 x, y;
    i64 g = ext_gcd(pos_mod(a, m), m, x, y);
    if (g != 1) { ok = false; return 0; }
    ok = true;
    return pos_mod(x, m);
}

inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    n = abs_i64(n);
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.push_back({p, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline std::vector<i64> prime_support(i64 n) {
    std::vector<i64> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

// Largest divisor of n coprime to s.
inline i64 coprime_part(i64 n, i64 s) {
    n = abs_i64(n);
    s = abs_i64(s);
    if (n == 0) return 0;
    i64 g = gcd_i64(n, s);
    while (g > 1) {
        while (n % g == 0) n /= g;
        g = gcd_i64(n, s);
    }
    return n;
}

// Exact rational numbers on checked 64-bit words.
struct Frac {
    i64 num = 0, den = 1;

    Frac() = default;
    Frac(i64 n) : num(n), den(1) {}
    Frac(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Frac with zero denominator");
        if (den < 0) { num = checked_neg(num); den = checked_neg(den); }
        i64 g = gcd_i64(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)), checked_mul(a.den, b.den));
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)), checked_mul(a.den, b.den));
    }
    friend Frac operator*(const Frac& a, const Frac& b) { return Frac(checked_mul(a.num, b.num), checked_mul(a.den, b.den)); }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num == 0) throw std::domain_error("Frac division by zero");
        return Frac(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
    }
    Frac operator-() const { return Frac(checked_neg(num), den); }
    friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace antiloc
