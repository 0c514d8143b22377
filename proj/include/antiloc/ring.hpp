#pragma once

// Effective commutative ring backends. Finite rings carry full operation
// tables plus the abelian structure of (R,+), which is what the module
// machinery consumes. Infinite backends: Z, F_p[x], Q[x], their
// localizations at one element, and the truncated Laurent series model.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "antiloc/abelian.hpp"
#include "antiloc/ints.hpp"
#include "antiloc/poly.hpp"
#include "antiloc/series.hpp"

namespace antiloc {

using Json = nlohmann::json;

struct TabIdx {
    uint32_t i = 0;
    bool operator==(const TabIdx& o) const { return i == o.i; }
};

struct LocZElem {
    i64 num = 0;
    int exp = 0;  // value = num / s^exp, exp minimal
    bool operator==(const LocZElem& o) const { return num == o.num && exp == o.exp; }
};

struct LocPolyFElem {
    FpPoly num;
    int exp = 0;
    bool operator==(const LocPolyFElem& o) const { return fp_eq(num, o.num) && exp == o.exp; }
};

struct LocPolyQElem {
    QPoly num;
    int exp = 0;
    bool operator==(const LocPolyQElem& o) const { return q_eq(num, o.num) && exp == o.exp; }
};

using Elem = std::variant<i64, TabIdx, LocZElem, FpPoly, QPoly, LocPolyFElem, LocPolyQElem, SeriesElem>;

enum class RingKind { Integer, Finite, PolyFp, PolyQ, LocalizedZ, LocalizedPolyFp, LocalizedPolyQ, TruncSeries };

class RingBase;
using Ring = std::shared_ptr<const RingBase>;

// Everything the module layer needs from a finite ring.
struct FiniteData {
    uint32_t n = 0;
    std::vector<uint32_t> add_tab, mul_tab;  // n*n
    std::vector<uint32_t> neg_tab;           // n
    uint32_t zero_idx = 0, one_idx = 0;
    std::vector<std::string> names;
    std::map<std::string, uint32_t> by_name;

    // abelian structure of (R,+): basis elements and their orders
    std::vector<uint32_t> basis;
    std::vector<i64> basis_ord;
    std::vector<std::vector<i64>> coords;  // per element, length basis.size()
    std::map<std::vector<i64>, uint32_t> idx_of_coords;

    uint32_t add(uint32_t a, uint32_t b) const { return add_tab[static_cast<size_t>(a) * n + b]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_tab[static_cast<size_t>(a) * n + b]; }
    uint32_t neg(uint32_t a) const { return neg_tab[a]; }
    AbGroup ab_group() const { return AbGroup(basis_ord); }
    uint32_t from_coords(const std::vector<i64>& c) const;
    // matrix of multiplication-by-r on abelian coordinates
    IMat mult_matrix(uint32_t r) const;
};

class RingBase : public std::enable_shared_from_this<RingBase> {
public:
    virtual ~RingBase() = default;
    virtual RingKind kind() const = 0;
    virtual Elem zero() const = 0;
    virtual Elem one() const = 0;
    virtual Elem add(const Elem& a, const Elem& b) const = 0;
    virtual Elem neg(const Elem& a) const = 0;
    virtual Elem mul(const Elem& a, const Elem& b) const = 0;
    virtual bool eq(const Elem& a, const Elem& b) const = 0;
    virtual std::optional<Elem> inv(const Elem& a) const = 0;
    virtual Elem from_int(i64 v) const = 0;
    virtual std::string show(const Elem& a) const = 0;
    virtual Elem parse(const std::string& s) const = 0;
    virtual std::optional<i64> order() const = 0;
    virtual Json descriptor() const = 0;
    virtual const FiniteData* finite() const { return nullptr; }

    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    bool is_zero(const Elem& a) const { return eq(a, zero()); }
    bool is_one(const Elem& a) const { return eq(a, one()); }
    Elem pow(const Elem& a, i64 e) const;
    std::string str() const { return descriptor().dump(); }
};

// Ring constructors -----------------------------------------------------

Ring make_integer_ring();
Ring make_zmod(i64 n);  // n >= 1; n == 1 is the zero ring
Ring make_poly_fp(i64 p, const std::string& var = "x");
Ring make_poly_q(const std::string& var = "x");
Ring make_quotient_poly_fp(i64 p, const FpPoly& modulus, const std::string& var = "x");
Ring make_localized_z(i64 s);                     // |s| >= 2; stores the radical
Ring make_localized_poly_fp(i64 p, const FpPoly& s, const std::string& var = "x");
Ring make_localized_poly_q(const QPoly& s, const std::string& var = "x");
Ring make_trunc_series(const SeriesParams& params);
// F_p[x,y]/(x^dx, y^dy), as a finite table ring
Ring make_bivar_trunc(i64 p, int dx, int dy);

// generic finite ring from callbacks; basis must additively span
Ring make_finite_ring(Json descriptor, uint32_t n, const std::function<uint32_t(uint32_t, uint32_t)>& addf,
                      const std::function<uint32_t(uint32_t, uint32_t)>& mulf, uint32_t zero_idx, uint32_t one_idx,
                      const std::vector<std::string>& names, const std::vector<uint32_t>& basis,
                      const std::vector<i64>& basis_ord);

bool ring_same(const Ring& a, const Ring& b);  // by descriptor

// Ring homomorphisms -----------------------------------------------------

struct RingHom {
    Ring src, dst;
    std::function<Elem(const Elem&)> map;
    Json desc;
    // set for localization maps R -> R[s^-1]
    std::optional<Elem> localized_at;

    Elem operator()(const Elem& e) const { return map(e); }
};

RingHom identity_hom(const Ring& r);
RingHom compose_homs(const RingHom& g, const RingHom& f);
// checks 0, 1, and +,* on all pairs (finite src) or on sampled elements
bool verify_hom(const RingHom& h, int samples = 64);

// Covers -----------------------------------------------------------------

struct Cover {
    Ring ring;
    std::vector<Elem> elems;
    std::vector<Elem> bezout;  // sum bezout[j]*elems[j] == 1

    bool verify() const;
};

// Operations --------------------------------------------------------------

struct Localization {
    Ring target;
    RingHom hom;
    // finite base only:
    std::optional<Elem> idempotent;       // e with target ~ eR
    std::vector<uint32_t> chart_elems;    // base indices of the chart elements
};

Localization localize_ring(const Ring& r, const Elem& s);
std::optional<Cover> unit_ideal_witness(const Ring& r, const std::vector<Elem>& elems);
Elem idempotent_chart(const Ring& r, const Elem& s);  // finite rings only

// For a finite ring chart built by localize_ring: the retraction r -> e*r
// expressed on chart indices, plus the embedding back.
struct ChartMaps {
    std::vector<uint32_t> base_to_chart;  // size |R|
    std::vector<uint32_t> chart_to_base;  // size |S|
};
const ChartMaps* chart_maps(const Ring& chart);

}  // namespace antiloc
