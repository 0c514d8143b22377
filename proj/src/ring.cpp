#include "antiloc/ring.hpp"

#include <algorithm>
#include <sstream>

namespace antiloc {

namespace {

template <class T>
const T& as(const Elem& e, const char* what) {
    const T* p = std::get_if<T>(&e);
    if (!p) throw std::logic_error(std::string("element does not belong to this ring backend: ") + what);
    return *p;
}

i64 radical_int(i64 s) {
    i64 r = 1;
    for (auto& [p, e] : factorize(s)) r = checked_mul(r, p);
    return r;
}

FpPoly radical_fp(FpPoly f) {
    f = fp_monic(f);
    for (;;) {
        if (f.deg() <= 0) return f;
        // derivative
        FpPoly d(f.p);
        d.c.assign(std::max(0, f.deg()), 0);
        for (int i = 1; i <= f.deg(); ++i) d.c[i - 1] = pos_mod(checked_mul(f.c[i], i), f.p);
        d.trim();
        if (d.is_zero()) {
            // f = g(x^p); over F_p the coefficients are their own p-th roots
            FpPoly g(f.p);
            g.c.assign(f.deg() / f.p + 1, 0);
            for (int i = 0; i * f.p <= f.deg(); ++i) g.c[i] = f.coeff(i * static_cast<int>(f.p));
            g.trim();
            f = g;
            continue;
        }
        FpPoly g = fp_gcd(f, d);
        if (g.deg() == 0) return f;
        f = fp_divmod(f, g).first;
    }
}

QPoly radical_q(QPoly f) {
    if (f.is_zero()) return f;
    f = q_mul(f, QPoly::constant(Frac(1) / f.lead()));
    QPoly d;
    d.c.assign(std::max(0, f.deg()), Frac(0));
    for (int i = 1; i <= f.deg(); ++i) d.c[i - 1] = f.c[i] * Frac(i);
    d.trim();
    if (d.is_zero()) return f;
    QPoly g = q_gcd(f, d);
    if (g.deg() == 0) return f;
    return q_divmod(f, g).first;
}

}  // namespace

Elem RingBase::pow(const Elem& a, i64 e) const {
    if (e < 0) throw std::domain_error("RingBase::pow negative exponent");
    Elem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

uint32_t FiniteData::from_coords(const std::vector<i64>& c) const {
    std::vector<i64> key(c.size());
    for (size_t i = 0; i < c.size(); ++i) key[i] = pos_mod(c[i], basis_ord[i]);
    auto it = idx_of_coords.find(key);
    if (it == idx_of_coords.end()) throw invariant_violation("finite ring coords lookup failed");
    return it->second;
}

IMat FiniteData::mult_matrix(uint32_t r) const {
    int k = static_cast<int>(basis.size());
    IMat m(k, k);
    for (int j = 0; j < k; ++j) {
        uint32_t prod = mul(r, basis[j]);
        const auto& cc = coords[prod];
        for (int i = 0; i < k; ++i) m.at(i, j) = cc[i];
    }
    return m;
}

// --- finite table ring -----------------------------------------------------

class FiniteRing final : public RingBase {
public:
    FiniteData fd;
    Json desc;
    std::optional<ChartMaps> charts;

    RingKind kind() const override { return RingKind::Finite; }
    Elem zero() const override { return TabIdx{fd.zero_idx}; }
    Elem one() const override { return TabIdx{fd.one_idx}; }
    Elem add(const Elem& a, const Elem& b) const override {
        return TabIdx{fd.add(as<TabIdx>(a, "fin").i, as<TabIdx>(b, "fin").i)};
    }
    Elem neg(const Elem& a) const override { return TabIdx{fd.neg(as<TabIdx>(a, "fin").i)}; }
    Elem mul(const Elem& a, const Elem& b) const override {
        return TabIdx{fd.mul(as<TabIdx>(a, "fin").i, as<TabIdx>(b, "fin").i)};
    }
    bool eq(const Elem& a, const Elem& b) const override { return as<TabIdx>(a, "fin").i == as<TabIdx>(b, "fin").i; }
    std::optional<Elem> inv(const Elem& a) const override {
        uint32_t x = as<TabIdx>(a, "fin").i;
        for (uint32_t y = 0; y < fd.n; ++y)
            if (fd.mul(x, y) == fd.one_idx) return Elem(TabIdx{y});
        return std::nullopt;
    }
    Elem from_int(i64 v) const override {
        std::vector<i64> c = fd.coords[fd.one_idx];
        for (auto& x : c) x = checked_mul(x, v);
        return TabIdx{fd.from_coords(c)};
    }
    std::string show(const Elem& a) const override { return fd.names[as<TabIdx>(a, "fin").i]; }
    Elem parse(const std::string& s) const override {
        auto it = fd.by_name.find(s);
        if (it != fd.by_name.end()) return TabIdx{it->second};
        try {
            size_t used = 0;
            i64 v = std::stoll(s, &used);
            if (used == s.size()) return from_int(v);
        } catch (...) {
        }
        throw std::runtime_error("cannot parse '" + s + "' in ring " + desc.dump());
    }
    std::optional<i64> order() const override { return static_cast<i64>(fd.n); }
    Json descriptor() const override { return desc; }
    const FiniteData* finite() const override { return &fd; }
};

Ring make_finite_ring(Json descriptor, uint32_t n, const std::function<uint32_t(uint32_t, uint32_t)>& addf,
                      const std::function<uint32_t(uint32_t, uint32_t)>& mulf, uint32_t zero_idx, uint32_t one_idx,
                      const std::vector<std::string>& names, const std::vector<uint32_t>& basis,
                      const std::vector<i64>& basis_ord) {
    if (n == 0) throw std::logic_error("finite ring needs at least the zero element");
    if (n > 4096) throw backend_unavailable("finite ring of order " + std::to_string(n) + " exceeds the table cap 4096");
    auto ring = std::make_shared<FiniteRing>();
    FiniteData& fd = ring->fd;
    fd.n = n;
    fd.zero_idx = zero_idx;
    fd.one_idx = one_idx;
    fd.names = names;
    for (uint32_t i = 0; i < n; ++i) fd.by_name[names[i]] = i;
    fd.add_tab.resize(static_cast<size_t>(n) * n);
    fd.mul_tab.resize(static_cast<size_t>(n) * n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            fd.add_tab[static_cast<size_t>(i) * n + j] = addf(i, j);
            fd.mul_tab[static_cast<size_t>(i) * n + j] = mulf(i, j);
        }
    fd.neg_tab.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
        bool found = false;
        for (uint32_t j = 0; j < n; ++j)
            if (fd.add(i, j) == zero_idx) {
                fd.neg_tab[i] = j;
                found = true;
                break;
            }
        if (!found) throw invariant_violation("finite ring: missing additive inverse");
    }
    fd.basis = basis;
    fd.basis_ord = basis_ord;
    // walk all coordinate tuples; the walk must be a bijection onto elements
    i64 total = 1;
    for (i64 d : basis_ord) total = checked_mul(total, d);
    if (total != static_cast<i64>(n)) throw invariant_violation("finite ring: basis does not span");
    fd.coords.assign(n, {});
    std::vector<bool> assigned(n, false);
    std::vector<i64> cur(basis.size(), 0);
    for (;;) {
        uint32_t e = zero_idx;
        for (size_t i = 0; i < basis.size(); ++i)
            for (i64 t = 0; t < cur[i]; ++t) e = fd.add(e, basis[i]);
        if (assigned[e]) throw invariant_violation("finite ring: basis walk is not injective");
        assigned[e] = true;
        fd.coords[e] = cur;
        fd.idx_of_coords[cur] = e;
        size_t i = 0;
        while (i < basis.size()) {
            if (++cur[i] < basis_ord[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == basis.size()) break;
    }
    for (uint32_t i = 0; i < n; ++i)
        if (!assigned[i]) throw invariant_violation("finite ring: basis walk misses an element");
    ring->desc = std::move(descriptor);
    return ring;
}

Ring make_zmod(i64 n) {
    if (n < 1) throw std::domain_error("make_zmod needs n >= 1");
    if (n > 4096) throw backend_unavailable("Z/n with n > 4096");
    std::vector<std::string> names;
    for (i64 i = 0; i < n; ++i) names.push_back(std::to_string(i));
    std::vector<uint32_t> basis;
    std::vector<i64> basis_ord;
    if (n > 1) {
        basis = {1};
        basis_ord = {n};
    }
    return make_finite_ring(Json{{"kind", "Zmod"}, {"n", n}}, static_cast<uint32_t>(n),
                            [n](uint32_t a, uint32_t b) { return static_cast<uint32_t>((a + b) % n); },
                            [n](uint32_t a, uint32_t b) {
                                return static_cast<uint32_t>(checked_mul(static_cast<i64>(a), static_cast<i64>(b)) % n);
                            },
                            0, static_cast<uint32_t>(1 % n), names, basis, basis_ord);
}

Ring make_quotient_poly_fp(i64 p, const FpPoly& modulus, const std::string& var) {
    if (modulus.deg() < 1) throw std::domain_error("QuotientPoly needs deg >= 1");
    if (modulus.lead() != 1) throw std::domain_error("QuotientPoly modulus must be monic");
    int d = modulus.deg();
    i64 n64 = pow_i64(p, d);
    if (n64 > 4096) throw backend_unavailable("quotient poly ring too large");
    uint32_t n = static_cast<uint32_t>(n64);
    auto decode = [p, d](uint32_t idx) {
        FpPoly f(p);
        f.c.assign(d, 0);
        for (int i = 0; i < d; ++i) {
            f.c[i] = idx % p;
            idx = static_cast<uint32_t>(idx / p);
        }
        f.trim();
        return f;
    };
    auto encode = [p, d](const FpPoly& f) {
        uint32_t idx = 0;
        for (int i = d - 1; i >= 0; --i) idx = static_cast<uint32_t>(idx * p + f.coeff(i));
        return idx;
    };
    std::vector<std::string> names;
    for (uint32_t i = 0; i < n; ++i) names.push_back(decode(i).str(var));
    std::vector<uint32_t> basis;
    std::vector<i64> basis_ord;
    for (int i = 0; i < d; ++i) {
        basis.push_back(encode(FpPoly::x(p, i)));
        basis_ord.push_back(p);
    }
    Json desc{{"kind", "QuotientPoly"}, {"p", p}, {"modulus", modulus.str(var)}, {"var", var}};
    return make_finite_ring(desc, n, [&, p](uint32_t a, uint32_t b) { return encode(fp_add(decode(a), decode(b))); },
                            [&, p](uint32_t a, uint32_t b) { return encode(fp_mod(fp_mul(decode(a), decode(b)), modulus)); },
                            encode(FpPoly(p)), encode(FpPoly::constant(p, 1)), names, basis, basis_ord);
}

Ring make_bivar_trunc(i64 p, int dx, int dy) {
    i64 dim = static_cast<i64>(dx) * dy;
    i64 n64 = pow_i64(p, dim);
    if (n64 > 4096) throw backend_unavailable("bivariate truncation ring too large");
    uint32_t n = static_cast<uint32_t>(n64);
    SeriesParams pr{p, dy, 0};
    auto decode = [&](uint32_t idx) {
        SeriesElem e;
        for (int i = 0; i < dx; ++i)
            for (int j = 0; j < dy; ++j) {
                i64 c = idx % p;
                idx = static_cast<uint32_t>(idx / p);
                if (c != 0) e.t[{i, j}] = c;
            }
        return e;
    };
    auto encode = [&](const SeriesElem& e) {
        uint32_t idx = 0;
        for (int i = dx - 1; i >= 0; --i)
            for (int j = dy - 1; j >= 0; --j) {
                auto it = e.t.find({i, j});
                i64 c = it == e.t.end() ? 0 : it->second;
                idx = static_cast<uint32_t>(idx * p + c);
            }
        return idx;
    };
    auto truncate_x = [&](SeriesElem e) {
        SeriesElem out;
        for (const auto& [k, v] : e.t)
            if (k.first < dx) out.t[k] = v;
        return out;
    };
    std::vector<std::string> names;
    for (uint32_t i = 0; i < n; ++i) names.push_back(ser_str(decode(i)));
    std::vector<uint32_t> basis;
    std::vector<i64> basis_ord;
    for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dy; ++j) {
            basis.push_back(encode(ser_monomial(pr, 1, i, j)));
            basis_ord.push_back(p);
        }
    Json desc{{"kind", "BivarTrunc"}, {"p", p}, {"degX", dx}, {"degY", dy}};
    return make_finite_ring(desc, n, [&](uint32_t a, uint32_t b) { return encode(ser_add(pr, decode(a), decode(b))); },
                            [&](uint32_t a, uint32_t b) { return encode(truncate_x(ser_mul(pr, decode(a), decode(b)))); },
                            encode(ser_zero()), encode(ser_one(pr)), names, basis, basis_ord);
}

// --- the integers ----------------------------------------------------------

class IntegerRing final : public RingBase {
public:
    RingKind kind() const override { return RingKind::Integer; }
    Elem zero() const override { return static_cast<i64>(0); }
    Elem one() const override { return static_cast<i64>(1); }
    Elem add(const Elem& a, const Elem& b) const override { return checked_add(as<i64>(a, "Z"), as<i64>(b, "Z")); }
    Elem neg(const Elem& a) const override { return checked_neg(as<i64>(a, "Z")); }
    Elem mul(const Elem& a, const Elem& b) const override { return checked_mul(as<i64>(a, "Z"), as<i64>(b, "Z")); }
    bool eq(const Elem& a, const Elem& b) const override { return as<i64>(a, "Z") == as<i64>(b, "Z"); }
    std::optional<Elem> inv(const Elem& a) const override {
        i64 v = as<i64>(a, "Z");
        if (v == 1 || v == -1) return Elem(v);
        return std::nullopt;
    }
    Elem from_int(i64 v) const override { return v; }
    std::string show(const Elem& a) const override { return std::to_string(as<i64>(a, "Z")); }
    Elem parse(const std::string& s) const override { return static_cast<i64>(std::stoll(s)); }
    std::optional<i64> order() const override { return std::nullopt; }
    Json descriptor() const override { return Json{{"kind", "Int"}}; }
};

Ring make_integer_ring() {
    static Ring r = std::make_shared<IntegerRing>();
    return r;
}

// --- polynomial rings --------------------------------------------------------

class PolyFpRing final : public RingBase {
public:
    i64 p;
    std::string var;
    PolyFpRing(i64 prime, std::string v) : p(prime), var(std::move(v)) {}
    RingKind kind() const override { return RingKind::PolyFp; }
    Elem zero() const override { return FpPoly(p); }
    Elem one() const override { return FpPoly::constant(p, 1); }
    Elem add(const Elem& a, const Elem& b) const override { return fp_add(as<FpPoly>(a, "Fp[x]"), as<FpPoly>(b, "Fp[x]")); }
    Elem neg(const Elem& a) const override { return fp_neg(as<FpPoly>(a, "Fp[x]")); }
    Elem mul(const Elem& a, const Elem& b) const override { return fp_mul(as<FpPoly>(a, "Fp[x]"), as<FpPoly>(b, "Fp[x]")); }
    bool eq(const Elem& a, const Elem& b) const override { return fp_eq(as<FpPoly>(a, "Fp[x]"), as<FpPoly>(b, "Fp[x]")); }
    std::optional<Elem> inv(const Elem& a) const override {
        const FpPoly& f = as<FpPoly>(a, "Fp[x]");
        if (f.deg() != 0) return std::nullopt;
        bool ok = false;
        i64 iv = mod_inverse(f.lead(), p, ok);
        if (!ok) return std::nullopt;
        return Elem(FpPoly::constant(p, iv));
    }
    Elem from_int(i64 v) const override { return FpPoly::constant(p, pos_mod(v, p)); }
    std::string show(const Elem& a) const override { return as<FpPoly>(a, "Fp[x]").str(var); }
    Elem parse(const std::string& s) const override { return fp_parse(p, s, var); }
    std::optional<i64> order() const override { return std::nullopt; }
    Json descriptor() const override { return Json{{"kind", "Poly"}, {"base", "F" + std::to_string(p)}, {"var", var}}; }
};

Ring make_poly_fp(i64 p, const std::string& var) { return std::make_shared<PolyFpRing>(p, var); }

class PolyQRing final : public RingBase {
public:
    std::string var;
    explicit PolyQRing(std::string v) : var(std::move(v)) {}
    RingKind kind() const override { return RingKind::PolyQ; }
    Elem zero() const override { return QPoly(); }
    Elem one() const override { return QPoly::constant(Frac(1)); }
    Elem add(const Elem& a, const Elem& b) const override { return q_add(as<QPoly>(a, "Q[x]"), as<QPoly>(b, "Q[x]")); }
    Elem neg(const Elem& a) const override { return q_neg(as<QPoly>(a, "Q[x]")); }
    Elem mul(const Elem& a, const Elem& b) const override { return q_mul(as<QPoly>(a, "Q[x]"), as<QPoly>(b, "Q[x]")); }
    bool eq(const Elem& a, const Elem& b) const override { return q_eq(as<QPoly>(a, "Q[x]"), as<QPoly>(b, "Q[x]")); }
    std::optional<Elem> inv(const Elem& a) const override {
        const QPoly& f = as<QPoly>(a, "Q[x]");
        if (f.deg() != 0) return std::nullopt;
        return Elem(QPoly::constant(Frac(1) / f.lead()));
    }
    Elem from_int(i64 v) const override { return QPoly::constant(Frac(v)); }
    std::string show(const Elem& a) const override { return as<QPoly>(a, "Q[x]").str(var); }
    Elem parse(const std::string& s) const override { return q_parse(s, var); }
    std::optional<i64> order() const override { return std::nullopt; }
    Json descriptor() const override { return Json{{"kind", "Poly"}, {"base", "Q"}, {"var", var}}; }
};

Ring make_poly_q(const std::string& var) { return std::make_shared<PolyQRing>(var); }

// --- localizations -----------------------------------------------------------

class LocZRing final : public RingBase {
public:
    i64 s;  // radical, >= 2
    explicit LocZRing(i64 rad) : s(rad) {}

    LocZElem norm(i64 num, int exp) const {
        while (exp > 0 && num != 0 && num % s == 0) {
            num /= s;
            --exp;
        }
        if (num == 0) exp = 0;
        return LocZElem{num, exp};
    }
    RingKind kind() const override { return RingKind::LocalizedZ; }
    Elem zero() const override { return LocZElem{0, 0}; }
    Elem one() const override { return LocZElem{1, 0}; }
    Elem add(const Elem& ea, const Elem& eb) const override {
        auto a = as<LocZElem>(ea, "Z[1/s]"), b = as<LocZElem>(eb, "Z[1/s]");
        int e = std::max(a.exp, b.exp);
        i64 na = checked_mul(a.num, pow_i64(s, e - a.exp));
        i64 nb = checked_mul(b.num, pow_i64(s, e - b.exp));
        return norm(checked_add(na, nb), e);
    }
    Elem neg(const Elem& ea) const override {
        auto a = as<LocZElem>(ea, "Z[1/s]");
        return LocZElem{checked_neg(a.num), a.exp};
    }
    Elem mul(const Elem& ea, const Elem& eb) const override {
        auto a = as<LocZElem>(ea, "Z[1/s]"), b = as<LocZElem>(eb, "Z[1/s]");
        return norm(checked_mul(a.num, b.num), a.exp + b.exp);
    }
    bool eq(const Elem& a, const Elem& b) const override {
        return as<LocZElem>(a, "Z[1/s]") == as<LocZElem>(b, "Z[1/s]");
    }
    std::optional<Elem> inv(const Elem& ea) const override {
        auto a = as<LocZElem>(ea, "Z[1/s]");
        if (a.num == 0) return std::nullopt;
        i64 n = abs_i64(a.num);
        // invertible iff num divides a power of s
        if (coprime_part(n, s) != 1) return std::nullopt;
        int j = 0;
        i64 power = 1;
        while (power % n != 0) {
            power = checked_mul(power, s);
            ++j;
        }
        i64 inv_num = power / n;
        if (a.num < 0) inv_num = checked_neg(inv_num);
        // value = s^exp / num = inv_num / s^(j - exp)
        int e = j - a.exp;
        if (e < 0) {
            inv_num = checked_mul(inv_num, pow_i64(s, -e));
            e = 0;
        }
        return Elem(norm(inv_num, e));
    }
    Elem from_int(i64 v) const override { return LocZElem{v, 0}; }
    Elem from_rational(i64 p, i64 q) const {  // q must divide a power of s
        if (q < 0) { p = checked_neg(p); q = checked_neg(q); }
        i64 g = gcd_i64(p, q);
        if (g > 1) { p /= g; q /= g; }
        if (coprime_part(q, s) != 1) throw std::domain_error("denominator not invertible in Z[1/s]");
        int j = 0;
        i64 power = 1;
        while (power % q != 0) {
            power = checked_mul(power, s);
            ++j;
        }
        return norm(checked_mul(p, power / q), j);
    }
    std::string show(const Elem& ea) const override {
        auto a = as<LocZElem>(ea, "Z[1/s]");
        if (a.exp == 0) return std::to_string(a.num);
        return std::to_string(a.num) + "/" + std::to_string(s) + "^" + std::to_string(a.exp);
    }
    Elem parse(const std::string& str) const override {
        auto slash = str.find('/');
        if (slash == std::string::npos) return from_int(std::stoll(str));
        i64 num = std::stoll(str.substr(0, slash));
        std::string den = str.substr(slash + 1);
        auto caret = den.find('^');
        i64 base = std::stoll(caret == std::string::npos ? den : den.substr(0, caret));
        i64 e = caret == std::string::npos ? 1 : std::stoll(den.substr(caret + 1));
        return from_rational(num, pow_i64(base, e));
    }
    std::optional<i64> order() const override { return std::nullopt; }
    Json descriptor() const override {
        return Json{{"kind", "Localized"}, {"base", Json{{"kind", "Int"}}}, {"s", std::to_string(s)}};
    }
};

Ring make_localized_z(i64 s) {
    s = radical_int(abs_i64(s));
    if (s < 2) throw std::domain_error("make_localized_z needs |s| >= 2");
    return std::make_shared<LocZRing>(s);
}

template <class P, class Pops>
struct LocPolyCore {
    // shared denominator-power representation logic for localized poly rings
};

class LocPolyFpRing final : public RingBase {
public:
    i64 p;
    FpPoly s;  // monic radical, deg >= 1
    std::string var;
    LocPolyFpRing(i64 prime, FpPoly rad, std::string v) : p(prime), s(std::move(rad)), var(std::move(v)) {}

    LocPolyFElem norm(FpPoly num, int exp) const {
        while (exp > 0 && !num.is_zero()) {
            auto [q, r] = fp_divmod(num, s);
            if (!r.is_zero()) break;
            num = q;
            --exp;
        }
        if (num.is_zero()) exp = 0;
        return LocPolyFElem{num, exp};
    }
    RingKind kind() const override { return RingKind::LocalizedPolyFp; }
    Elem zero() const override { return LocPolyFElem{FpPoly(p), 0}; }
    Elem one() const override { return LocPolyFElem{FpPoly::constant(p, 1), 0}; }
    Elem add(const Elem& ea, const Elem& eb) const override {
        auto a = as<LocPolyFElem>(ea, "Fp[x][1/s]"), b = as<LocPolyFElem>(eb, "Fp[x][1/s]");
        int e = std::max(a.exp, b.exp);
        FpPoly na = a.num, nb = b.num;
        for (int i = a.exp; i < e; ++i) na = fp_mul(na, s);
        for (int i = b.exp; i < e; ++i) nb = fp_mul(nb, s);
        return norm(fp_add(na, nb), e);
    }
    Elem neg(const Elem& ea) const override {
        auto a = as<LocPolyFElem>(ea, "Fp[x][1/s]");
        return LocPolyFElem{fp_neg(a.num), a.exp};
    }
    Elem mul(const Elem& ea, const Elem& eb) const override {
        auto a = as<LocPolyFElem>(ea, "Fp[x][1/s]"), b = as<LocPolyFElem>(eb, "Fp[x][1/s]");
        return norm(fp_mul(a.num, b.num), a.exp + b.exp);
    }
    bool eq(const Elem& a, const Elem& b) const override {
        return as<LocPolyFElem>(a, "Fp[x][1/s]") == as<LocPolyFElem>(b, "Fp[x][1/s]");
    }
    std::optional<Elem> inv(const Elem& ea) const override {
        auto a = as<LocPolyFElem>(ea, "Fp[x][1/s]");
        if (a.num.is_zero()) return std::nullopt;
        // invertible iff num divides a power of s
        FpPoly n = fp_monic(a.num);
        i64 lead = a.num.lead();
        int j = 0;
        FpPoly power = FpPoly::constant(p, 1);
        while (j <= 64) {
            auto [q, r] = fp_divmod(power, n);
            if (r.is_zero()) {
                bool ok = false;
                i64 li = mod_inverse(lead, p, ok);
                FpPoly inv_num = fp_mul(q, FpPoly::constant(p, li));
                int e = j - a.exp;
                if (e < 0) {
                    for (int i = 0; i < -e; ++i) inv_num = fp_mul(inv_num, s);
                    e = 0;
                }
                return Elem(norm(inv_num, e));
            }
            if (power.deg() > n.deg() + s.deg() * 64) break;
            power = fp_mul(power, s);
            ++j;
        }
        return std::nullopt;
    }
    Elem from_int(i64 v) const override { return LocPolyFElem{FpPoly::constant(p, pos_mod(v, p)), 0}; }
    std::string show(const Elem& ea) const override {
        auto a = as<LocPolyFElem>(ea, "Fp[x][1/s]");
        if (a.exp == 0) return a.num.str(var);
        return "(" + a.num.str(var) + ")/(" + s.str(var) + ")^" + std::to_string(a.exp);
    }
    Elem parse(const std::string& str) const override {
        auto slash = str.find(")/(");
        if (slash == std::string::npos) return LocPolyFElem{fp_parse(p, str, var), 0};
        FpPoly num = fp_parse(p, str.substr(1, slash - 1), var);
        auto caret = str.rfind('^');
        int e = static_cast<int>(std::stoll(str.substr(caret + 1)));
        return LocPolyFElem{num, e};
    }
    std::optional<i64> order() const override { return std::nullopt; }
    Json descriptor() const override {
        return Json{{"kind", "Localized"},
                    {"base", Json{{"kind", "Poly"}, {"base", "F" + std::to_string(p)}, {"var", var}}},
                    {"s", s.str(var)}};
    }
};

Ring make_localized_poly_fp(i64 p, const FpPoly& s, const std::string& var) {
    FpPoly rad = radical_fp(s);
    if (rad.deg() < 1) throw std::domain_error("localization of Fp[x] needs deg(s) >= 1");
    return std::make_shared<LocPolyFpRing>(p, rad, var);
}

class LocPolyQRing final : public RingBase {
public:
    QPoly s;
    std::string var;
    LocPolyQRing(QPoly rad, std::string v) : s(std::move(rad)), var(std::move(v)) {}

    LocPolyQElem norm(QPoly num, int exp) const {
        while (exp > 0 && !num.is_zero()) {
            auto [q, r] = q_divmod(num, s);
            if (!r.is_zero()) break;
            num = q;
            --exp;
        }
        if (num.is_zero()) exp = 0;
        return LocPolyQElem{num, exp};
    }
    RingKind kind() const override { return RingKind::LocalizedPolyQ; }
    Elem zero() const override { return LocPolyQElem{QPoly(), 0}; }
    Elem one() const override { return LocPolyQElem{QPoly::constant(Frac(1)), 0}; }
    Elem add(const Elem& ea, const Elem& eb) const override {
        auto a = as<LocPolyQElem>(ea, "Q[x][1/s]"), b = as<LocPolyQElem>(eb, "Q[x][1/s]");
        int e = std::max(a.exp, b.exp);
        QPoly na = a.num, nb = b.num;
        for (int i = a.exp; i < e; ++i) na = q_mul(na, s);
        for (int i = b.exp; i < e; ++i) nb = q_mul(nb, s);
        return norm(q_add(na, nb), e);
    }
    Elem neg(const Elem& ea) const override {
        auto a = as<LocPolyQElem>(ea, "Q[x][1/s]");
        return LocPolyQElem{q_neg(a.num), a.exp};
    }
    Elem mul(const Elem& ea, const Elem& eb) const override {
        auto a = as<LocPolyQElem>(ea, "Q[x][1/s]"), b = as<LocPolyQElem>(eb, "Q[x][1/s]");
        return norm(q_mul(a.num, b.num), a.exp + b.exp);
    }
    bool eq(const Elem& a, const Elem& b) const override {
        return as<LocPolyQElem>(a, "Q[x][1/s]") == as<LocPolyQElem>(b, "Q[x][1/s]");
    }
    std::optional<Elem> inv(const Elem& ea) const override {
        auto a = as<LocPolyQElem>(ea, "Q[x][1/s]");
        if (a.num.is_zero()) return std::nullopt;
        QPoly power = QPoly::constant(Frac(1));
        for (int j = 0; j <= 64; ++j) {
            auto [q, r] = q_divmod(power, a.num);
            if (r.is_zero()) {
                int e = j - a.exp;
                QPoly inv_num = q;
                if (e < 0) {
                    for (int i = 0; i < -e; ++i) inv_num = q_mul(inv_num, s);
                    e = 0;
                }
                return Elem(norm(inv_num, e));
            }
            power = q_mul(power, s);
        }
        return std::nullopt;
    }
    Elem from_int(i64 v) const override { return LocPolyQElem{QPoly::constant(Frac(v)), 0}; }
    std::string show(const Elem& ea) const override {
        auto a = as<LocPolyQElem>(ea, "Q[x][1/s]");
        if (a.exp == 0) return a.num.str(var);
        return "(" + a.num.str(var) + ")/(" + s.str(var) + ")^" + std::to_string(a.exp);
    }
    Elem parse(const std::string& str) const override {
        auto slash = str.find(")/(");
        if (slash == std::string::npos) return LocPolyQElem{q_parse(str, var), 0};
        QPoly num = q_parse(str.substr(1, slash - 1), var);
        auto caret = str.rfind('^');
        int e = static_cast<int>(std::stoll(str.substr(caret + 1)));
        return LocPolyQElem{num, e};
    }
    std::optional<i64> order() const override { return std::nullopt; }
    Json descriptor() const override {
        return Json{{"kind", "Localized"}, {"base", Json{{"kind", "Poly"}, {"base", "Q"}, {"var", var}}}, {"s", s.str(var)}};
    }
};

Ring make_localized_poly_q(const QPoly& s, const std::string& var) {
    QPoly rad = radical_q(s);
    if (rad.deg() < 1) throw std::domain_error("localization of Q[x] needs deg(s) >= 1");
    return std::make_shared<LocPolyQRing>(rad, var);
}

// --- truncated Laurent series ring ------------------------------------------

class TruncSeriesRing final : public RingBase {
public:
    SeriesParams pr;
    explicit TruncSeriesRing(SeriesParams params) : pr(params) {}
    RingKind kind() const override { return RingKind::TruncSeries; }
    Elem zero() const override { return ser_zero(); }
    Elem one() const override { return ser_one(pr); }
    Elem add(const Elem& a, const Elem& b) const override {
        return ser_add(pr, as<SeriesElem>(a, "series"), as<SeriesElem>(b, "series"));
    }
    Elem neg(const Elem& a) const override { return ser_neg(pr, as<SeriesElem>(a, "series")); }
    Elem mul(const Elem& a, const Elem& b) const override {
        return ser_mul(pr, as<SeriesElem>(a, "series"), as<SeriesElem>(b, "series"));
    }
    bool eq(const Elem& a, const Elem& b) const override {
        return as<SeriesElem>(a, "series") == as<SeriesElem>(b, "series");
    }
    std::optional<Elem> inv(const Elem& ea) const override {
        const SeriesElem& f = as<SeriesElem>(ea, "series");
        // y-degree-0 slice must be a monomial c*x^a; then f = u(1+g), g nilpotent
        SeriesElem slice0;
        for (const auto& [k, v] : f.t)
            if (k.second == 0) slice0.t[k] = v;
        if (slice0.t.size() != 1) return std::nullopt;
        auto [mono, c] = *slice0.t.begin();
        bool ok = false;
        i64 cinv = mod_inverse(c, pr.p, ok);
        if (!ok) return std::nullopt;
        SeriesElem uinv = ser_monomial(pr, cinv, -mono.first, 0);
        SeriesElem g = ser_add(pr, ser_mul(pr, uinv, f), ser_neg(pr, ser_one(pr)));  // nilpotent part
        SeriesElem inv = ser_one(pr), gp = ser_one(pr);
        for (int i = 1; i < pr.order_n; ++i) {
            gp = ser_mul(pr, gp, ser_neg(pr, g));
            inv = ser_add(pr, inv, gp);
        }
        return Elem(ser_mul(pr, inv, uinv));
    }
    Elem from_int(i64 v) const override { return ser_monomial(pr, v, 0, 0); }
    std::string show(const Elem& a) const override { return ser_str(as<SeriesElem>(a, "series")); }
    Elem parse(const std::string& s) const override { return ser_parse(pr, s); }
    std::optional<i64> order() const override { return std::nullopt; }
    Json descriptor() const override {
        return Json{{"kind", "TruncSeries"},
                    {"field", "F" + std::to_string(pr.p)},
                    {"poleBound", pr.pole_k},
                    {"orderBound", pr.order_n}};
    }
};

Ring make_trunc_series(const SeriesParams& params) { return std::make_shared<TruncSeriesRing>(params); }

bool ring_same(const Ring& a, const Ring& b) { return a == b || a->descriptor() == b->descriptor(); }

// --- homs ---------------------------------------------------------------------

RingHom identity_hom(const Ring& r) {
    RingHom h;
    h.src = r;
    h.dst = r;
    h.map = [](const Elem& e) { return e; };
    h.desc = Json{{"hom", "identity"}};
    return h;
}

RingHom compose_homs(const RingHom& g, const RingHom& f) {
    RingHom h;
    h.src = f.src;
    h.dst = g.dst;
    auto fm = f.map, gm = g.map;
    h.map = [fm, gm](const Elem& e) { return gm(fm(e)); };
    h.desc = Json{{"hom", "compose"}, {"outer", g.desc}, {"inner", f.desc}};
    if (f.localized_at && g.desc.value("hom", "") == "identity") h.localized_at = f.localized_at;
    return h;
}

bool verify_hom(const RingHom& h, int samples) {
    const Ring& r = h.src;
    const Ring& s = h.dst;
    if (!s->eq(h.map(r->zero()), s->zero())) return false;
    if (!s->eq(h.map(r->one()), s->one())) return false;
    std::vector<Elem> pool;
    if (const FiniteData* fd = r->finite()) {
        for (uint32_t i = 0; i < fd->n; ++i) pool.push_back(TabIdx{i});
    } else {
        for (int i = -samples / 2; i <= samples / 2; ++i) pool.push_back(r->from_int(i));
    }
    size_t cap = pool.size() > 96 ? 96 : pool.size();
    for (size_t i = 0; i < cap; ++i)
        for (size_t j = i; j < cap; ++j) {
            const Elem &a = pool[i], &b = pool[j];
            if (!s->eq(h.map(r->add(a, b)), s->add(h.map(a), h.map(b)))) return false;
            if (!s->eq(h.map(r->mul(a, b)), s->mul(h.map(a), h.map(b)))) return false;
        }
    return true;
}

bool Cover::verify() const {
    if (elems.empty() || elems.size() != bezout.size()) return false;
    Elem acc = ring->zero();
    for (size_t i = 0; i < elems.size(); ++i) acc = ring->add(acc, ring->mul(bezout[i], elems[i]));
    return ring->eq(acc, ring->one());
}

// --- idempotent charts and localization ----------------------------------------

Elem idempotent_chart(const Ring& r, const Elem& s) {
    const FiniteData* fd = r->finite();
    if (!fd) throw backend_unavailable("idempotent_chart needs a finite ring");
    uint32_t si = std::get<TabIdx>(s).i;
    AbGroup g = fd->ab_group();
    // minimal k >= 1 with s^k in s^{k+1} R
    uint32_t sk = si;
    for (uint32_t k = 1; k <= fd->n + 1; ++k) {
        uint32_t sk1 = fd->mul(sk, si);
        AbMap mult(g, g, fd->mult_matrix(sk1));
        if (ab_solve(mult, fd->coords[sk]).has_value()) {
            // ideal (s^k) = (s^{k+1}); find the idempotent generating it
            std::vector<uint32_t> ideal;
            std::vector<bool> seen(fd->n, false);
            for (uint32_t x = 0; x < fd->n; ++x) {
                uint32_t y = fd->mul(sk, x);
                if (!seen[y]) {
                    seen[y] = true;
                    ideal.push_back(y);
                }
            }
            for (uint32_t e : ideal) {
                if (fd->mul(e, e) != e) continue;
                bool identity_on_ideal = true;
                for (uint32_t x : ideal)
                    if (fd->mul(e, x) != x) {
                        identity_on_ideal = false;
                        break;
                    }
                if (identity_on_ideal) return TabIdx{e};
            }
            throw invariant_violation("idempotent generator not found in a finite ring");
        }
        sk = sk1;
    }
    throw invariant_violation("idempotent_chart: power chain did not stabilize");
}

namespace {

Localization localize_finite(const Ring& r, const Elem& s) {
    const FiniteData* fd = r->finite();
    Elem e = idempotent_chart(r, s);
    uint32_t ei = std::get<TabIdx>(e).i;

    // chart elements: the ideal eR
    std::vector<uint32_t> chart_to_base;
    std::vector<uint32_t> base_to_chart(fd->n, 0);
    std::vector<bool> seen(fd->n, false);
    for (uint32_t x = 0; x < fd->n; ++x) {
        uint32_t y = fd->mul(ei, x);
        if (!seen[y]) {
            seen[y] = true;
            chart_to_base.push_back(y);
        }
    }
    std::sort(chart_to_base.begin(), chart_to_base.end());
    std::map<uint32_t, uint32_t> back;
    for (uint32_t i = 0; i < chart_to_base.size(); ++i) back[chart_to_base[i]] = i;
    for (uint32_t x = 0; x < fd->n; ++x) base_to_chart[x] = back[fd->mul(ei, x)];

    // abelian basis of the chart subgroup
    AbGroup amb = fd->ab_group();
    std::vector<std::vector<i64>> gen_cols;
    for (uint32_t b : fd->basis) gen_cols.push_back(fd->coords[fd->mul(ei, b)]);
    IMat gens = gen_cols.empty() ? IMat(amb.rank(), 0) : IMat::from_cols(amb.rank(), gen_cols);
    Subgroup sub = subgroup_from_gens(amb, gens);
    std::vector<uint32_t> sbasis;
    std::vector<i64> sord;
    for (int j = 0; j < sub.group.rank(); ++j) {
        std::vector<i64> unit(sub.group.rank(), 0);
        unit[j] = 1;
        std::vector<i64> amb_coords = amb.reduce(sub.incl.apply(unit));
        sbasis.push_back(back[fd->from_coords(amb_coords)]);
        sord.push_back(sub.group.ord[j]);
    }

    std::vector<std::string> names;
    for (uint32_t b : chart_to_base) names.push_back(fd->names[b]);

    Json desc{{"kind", "Localized"}, {"base", r->descriptor()}, {"s", r->show(s)}};
    uint32_t n = static_cast<uint32_t>(chart_to_base.size());
    Ring chart = make_finite_ring(
        desc, n, [&](uint32_t a, uint32_t b) { return back[fd->add(chart_to_base[a], chart_to_base[b])]; },
        [&](uint32_t a, uint32_t b) { return back[fd->mul(chart_to_base[a], chart_to_base[b])]; },
        back[fd->zero_idx], back[ei], names, sbasis, sord);

    auto chart_fr = std::const_pointer_cast<FiniteRing>(std::static_pointer_cast<const FiniteRing>(chart));
    ChartMaps cm;
    cm.base_to_chart = base_to_chart;
    cm.chart_to_base = chart_to_base;
    chart_fr->charts = cm;

    Localization loc;
    loc.target = chart;
    loc.idempotent = e;
    loc.chart_elems = chart_to_base;
    RingHom h;
    h.src = r;
    h.dst = chart;
    std::vector<uint32_t> tbl = base_to_chart;
    h.map = [tbl](const Elem& x) { return Elem(TabIdx{tbl[std::get<TabIdx>(x).i]}); };
    h.desc = Json{{"hom", "localize"}, {"s", r->show(s)}};
    h.localized_at = s;
    loc.hom = h;
    return loc;
}

}  // namespace

const ChartMaps* chart_maps(const Ring& chart) {
    auto fr = std::dynamic_pointer_cast<const FiniteRing>(chart);
    if (!fr || !fr->charts) return nullptr;
    return &*fr->charts;
}

Localization localize_ring(const Ring& r, const Elem& s) {
    switch (r->kind()) {
        case RingKind::Finite:
            return localize_finite(r, s);
        case RingKind::Integer: {
            i64 v = std::get<i64>(s);
            if (v == 0) {
                Ring zero = make_zmod(1);
                Localization loc;
                loc.target = zero;
                RingHom h;
                h.src = r;
                h.dst = zero;
                h.map = [zero](const Elem&) { return zero->zero(); };
                h.desc = Json{{"hom", "localize"}, {"s", "0"}};
                h.localized_at = s;
                loc.hom = h;
                return loc;
            }
            if (v == 1 || v == -1) {
                Localization loc;
                loc.target = r;
                loc.hom = identity_hom(r);
                loc.hom.localized_at = s;
                return loc;
            }
            Ring t = make_localized_z(v);
            Localization loc;
            loc.target = t;
            RingHom h;
            h.src = r;
            h.dst = t;
            h.map = [](const Elem& x) { return Elem(LocZElem{std::get<i64>(x), 0}); };
            h.desc = Json{{"hom", "localize"}, {"s", std::to_string(v)}};
            h.localized_at = s;
            loc.hom = h;
            return loc;
        }
        case RingKind::LocalizedZ: {
            auto lr = std::static_pointer_cast<const LocZRing>(r);
            LocZElem u = std::get<LocZElem>(s);
            if (u.num == 0) {
                Ring zero = make_zmod(1);
                Localization loc;
                loc.target = zero;
                RingHom h;
                h.src = r;
                h.dst = zero;
                h.map = [zero](const Elem&) { return zero->zero(); };
                h.desc = Json{{"hom", "localize"}, {"s", "0"}};
                h.localized_at = s;
                loc.hom = h;
                return loc;
            }
            if (coprime_part(abs_i64(u.num), lr->s) == 1) {
                Localization loc;  // already a unit
                loc.target = r;
                loc.hom = identity_hom(r);
                loc.hom.localized_at = s;
                return loc;
            }
            i64 s2 = radical_int(checked_mul(lr->s, abs_i64(u.num)));
            Ring t = make_localized_z(s2);
            auto tr = std::static_pointer_cast<const LocZRing>(t);
            i64 old_s = lr->s;
            Localization loc;
            loc.target = t;
            RingHom h;
            h.src = r;
            h.dst = t;
            h.map = [tr, old_s](const Elem& x) {
                auto v = std::get<LocZElem>(x);
                return Elem(tr->from_rational(v.num, pow_i64(old_s, v.exp)));
            };
            h.desc = Json{{"hom", "localize"}, {"s", r->show(s)}};
            h.localized_at = s;
            loc.hom = h;
            return loc;
        }
        case RingKind::PolyFp: {
            auto pr = std::static_pointer_cast<const PolyFpRing>(r);
            const FpPoly& f = std::get<FpPoly>(s);
            if (f.is_zero()) throw backend_unavailable("localizing a polynomial ring at 0 (use the zero ring directly)");
            if (f.deg() == 0) {
                Localization loc;
                loc.target = r;
                loc.hom = identity_hom(r);
                loc.hom.localized_at = s;
                return loc;
            }
            Ring t = make_localized_poly_fp(pr->p, f, pr->var);
            Localization loc;
            loc.target = t;
            RingHom h;
            h.src = r;
            h.dst = t;
            h.map = [](const Elem& x) { return Elem(LocPolyFElem{std::get<FpPoly>(x), 0}); };
            h.desc = Json{{"hom", "localize"}, {"s", r->show(s)}};
            h.localized_at = s;
            loc.hom = h;
            return loc;
        }
        case RingKind::PolyQ: {
            auto qr = std::static_pointer_cast<const PolyQRing>(r);
            const QPoly& f = std::get<QPoly>(s);
            if (f.is_zero()) throw backend_unavailable("localizing a polynomial ring at 0 (use the zero ring directly)");
            if (f.deg() == 0) {
                Localization loc;
                loc.target = r;
                loc.hom = identity_hom(r);
                loc.hom.localized_at = s;
                return loc;
            }
            Ring t = make_localized_poly_q(f, qr->var);
            Localization loc;
            loc.target = t;
            RingHom h;
            h.src = r;
            h.dst = t;
            h.map = [](const Elem& x) { return Elem(LocPolyQElem{std::get<QPoly>(x), 0}); };
            h.desc = Json{{"hom", "localize"}, {"s", r->show(s)}};
            h.localized_at = s;
            loc.hom = h;
            return loc;
        }
        case RingKind::TruncSeries: {
            if (r->inv(s).has_value()) {
                Localization loc;
                loc.target = r;
                loc.hom = identity_hom(r);
                loc.hom.localized_at = s;
                return loc;
            }
            throw backend_unavailable("localization of the truncated series ring at a non-unit");
        }
        default:
            throw backend_unavailable("localize_ring for this ring backend");
    }
}

std::optional<Cover> unit_ideal_witness(const Ring& r, const std::vector<Elem>& elems) {
    if (elems.empty()) throw std::domain_error("unit_ideal_witness needs at least one element");
    Cover c;
    c.ring = r;
    c.elems = elems;
    switch (r->kind()) {
        case RingKind::Integer: {
            // fold extended gcd
            i64 g = std::get<i64>(elems[0]);
            std::vector<i64> coef{1};
            for (size_t i = 1; i < elems.size(); ++i) {
                i64 x, y;
                i64 g2 = ext_gcd(g, std::get<i64>(elems[i]), x, y);
                for (auto& cc : coef) cc = checked_mul(cc, x);
                coef.push_back(y);
                g = g2;
            }
            if (abs_i64(g) != 1) return std::nullopt;
            if (g == -1)
                for (auto& cc : coef) cc = checked_neg(cc);
            for (i64 cc : coef) c.bezout.push_back(Elem(cc));
            if (!c.verify()) throw invariant_violation("integer bezout witness failed re-check");
            return c;
        }
        case RingKind::PolyFp: {
            i64 p = std::get<FpPoly>(elems[0]).p;
            FpPoly g = std::get<FpPoly>(elems[0]);
            std::vector<FpPoly> coef{FpPoly::constant(p, 1)};
            for (size_t i = 1; i < elems.size(); ++i) {
                FpPoly x(p), y(p);
                FpPoly g2 = fp_ext_gcd(g, std::get<FpPoly>(elems[i]), x, y);
                for (auto& cc : coef) cc = fp_mul(cc, x);
                coef.push_back(y);
                g = g2;
            }
            if (g.deg() != 0) return std::nullopt;
            bool ok = false;
            i64 gi = mod_inverse(g.lead(), p, ok);
            for (auto& cc : coef) c.bezout.push_back(Elem(fp_mul(cc, FpPoly::constant(p, gi))));
            if (!c.verify()) throw invariant_violation("poly bezout witness failed re-check");
            return c;
        }
        case RingKind::Finite: {
            const FiniteData* fd = r->finite();
            AbGroup g = fd->ab_group();
            // solve sum_j c_j s_j = 1 as an abelian-group equation on R^d
            int d = static_cast<int>(elems.size());
            std::vector<AbGroup> parts(d, g);
            AbGroup dom = direct_sum(parts);
            IMat m(g.rank(), dom.rank());
            for (int j = 0; j < d; ++j) {
                IMat mj = fd->mult_matrix(std::get<TabIdx>(elems[j]).i);
                for (int a = 0; a < g.rank(); ++a)
                    for (int b = 0; b < g.rank(); ++b) m.at(a, j * g.rank() + b) = mj.at(a, b);
            }
            AbMap f(dom, g, m);
            auto sol = ab_solve(f, fd->coords[fd->one_idx]);
            if (!sol) return std::nullopt;
            for (int j = 0; j < d; ++j) {
                std::vector<i64> cc(sol->begin() + j * g.rank(), sol->begin() + (j + 1) * g.rank());
                c.bezout.push_back(Elem(TabIdx{fd->from_coords(g.reduce(cc))}));
            }
            if (!c.verify()) throw invariant_violation("finite-ring bezout witness failed re-check");
            return c;
        }
        case RingKind::LocalizedZ: {
            auto lr = std::static_pointer_cast<const LocZRing>(r);
            // clear denominators; solve over Z against powers of s
            i64 g = 0;
            std::vector<i64> nums;
            for (const auto& e : elems) nums.push_back(std::get<LocZElem>(e).num);
            for (i64 nn : nums) g = gcd_i64(g, nn);
            if (g == 0) return std::nullopt;
            if (coprime_part(g, lr->s) != 1) return std::nullopt;
            // fold bezout over Z, then divide by g in Z[1/s]
            i64 acc = nums[0];
            std::vector<i64> coef{1};
            for (size_t i = 1; i < nums.size(); ++i) {
                i64 x, y;
                i64 g2 = ext_gcd(acc, nums[i], x, y);
                for (auto& cc : coef) cc = checked_mul(cc, x);
                coef.push_back(y);
                acc = g2;
            }
            Elem ginv = *r->inv(Elem(lr->norm(acc, 0)));
            for (size_t j = 0; j < coef.size(); ++j) {
                Elem adj = r->mul(Elem(lr->norm(coef[j], 0)), ginv);
                // coefficient for value num/s^e has to absorb the denominator
                auto orig = std::get<LocZElem>(elems[j]);
                for (int t = 0; t < orig.exp; ++t) adj = r->mul(adj, Elem(lr->norm(lr->s, 0)));
                c.bezout.push_back(adj);
            }
            if (!c.verify()) throw invariant_violation("localized-Z bezout witness failed re-check");
            return c;
        }
        default:
            throw backend_unavailable("unit_ideal_witness for this ring backend");
    }
}

}  // namespace antiloc
