#pragma once

// Finitely generated abelian group calculus on top of integer Smith normal
// form. Groups are presented as Z^k with coordinate i taken modulo ord[i]
// (ord[i] == 0 encodes a free Z coordinate). Every structural operation
// (kernel, image, cokernel, solving, Hom groups) reduces to lattice
// computations with explicit unimodular transforms.

#include <cassert>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "antiloc/ints.hpp"

namespace antiloc {

struct IMat {
    int r = 0, c = 0;
    std::vector<i64> a;

    IMat() = default;
    IMat(int rows, int cols) : r(rows), c(cols), a(static_cast<size_t>(rows) * cols, 0) {}

    i64& at(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
    const i64& at(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IMat zero(int rows, int cols) { return IMat(rows, cols); }

    IMat transposed() const {
        IMat t(c, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IMat operator*(const IMat& x, const IMat& y) {
        if (x.c != y.r) throw std::logic_error("IMat mul shape mismatch");
        IMat z(x.r, y.c);
        for (int i = 0; i < x.r; ++i)
            for (int k = 0; k < x.c; ++k) {
                i64 v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.c; ++j) z.at(i, j) = checked_add(z.at(i, j), checked_mul(v, y.at(k, j)));
            }
        return z;
    }
    friend IMat operator+(const IMat& x, const IMat& y) {
        if (x.r != y.r || x.c != y.c) throw std::logic_error("IMat add shape mismatch");
        IMat z(x.r, x.c);
        for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = checked_add(x.a[i], y.a[i]);
        return z;
    }
    friend IMat operator-(const IMat& x, const IMat& y) {
        if (x.r != y.r || x.c != y.c) throw std::logic_error("IMat sub shape mismatch");
        IMat z(x.r, x.c);
        for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = checked_sub(x.a[i], y.a[i]);
        return z;
    }
    friend bool operator==(const IMat& x, const IMat& y) { return x.r == y.r && x.c == y.c && x.a == y.a; }

    IMat scaled(i64 k) const {
        IMat z(r, c);
        for (size_t i = 0; i < a.size(); ++i) z.a[i] = checked_mul(a[i], k);
        return z;
    }

    std::vector<i64> apply(const std::vector<i64>& x) const {
        if (static_cast<int>(x.size()) != c) throw std::logic_error("IMat apply shape mismatch");
        std::vector<i64> y(r, 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (at(i, j) != 0) y[i] = checked_add(y[i], checked_mul(at(i, j), x[j]));
        return y;
    }

    IMat col(int j) const {
        IMat m(r, 1);
        for (int i = 0; i < r; ++i) m.at(i, 0) = at(i, j);
        return m;
    }

    std::vector<i64> col_vec(int j) const {
        std::vector<i64> v(r);
        for (int i = 0; i < r; ++i) v[i] = at(i, j);
        return v;
    }

    static IMat from_cols(int rows, const std::vector<std::vector<i64>>& cols) {
        IMat m(rows, static_cast<int>(cols.size()));
        for (int j = 0; j < m.c; ++j) {
            if (static_cast<int>(cols[j].size()) != rows) throw std::logic_error("from_cols shape");
            for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    static IMat hconcat(const IMat& x, const IMat& y) {
        if (x.r != y.r) throw std::logic_error("hconcat shape");
        IMat z(x.r, x.c + y.c);
        for (int i = 0; i < x.r; ++i) {
            for (int j = 0; j < x.c; ++j) z.at(i, j) = x.at(i, j);
            for (int j = 0; j < y.c; ++j) z.at(i, x.c + j) = y.at(i, j);
        }
        return z;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < r; ++i) {
            s += "[";
            for (int j = 0; j < c; ++j) s += std::to_string(at(i, j)) + (j + 1 < c ? "," : "");
            s += "]";
            if (i + 1 < r) s += ",";
        }
        return s + "]";
    }
};

// U*A*V = D with U, V unimodular, D diagonal, d1 | d2 | ..., all di >= 0.
struct SmithResult {
    IMat d, u, v, uinv, vinv;
    int rank = 0;  // number of nonzero diagonal entries
};

SmithResult smith_form(const IMat& input);

// Basis (as columns) of the integer kernel lattice {x : Mx = 0}.
IMat kernel_lattice(const IMat& m);

// One solution of Mx = y over Z, if any.
std::optional<std::vector<i64>> solve_integer(const IMat& m, const std::vector<i64>& y);

bool is_unimodular(const IMat& m);

// ---------------------------------------------------------------------------

struct AbGroup {
    // ord[i] == 0 means a free Z coordinate; torsion entries are >= 1.
    std::vector<i64> ord;

    AbGroup() = default;
    explicit AbGroup(std::vector<i64> o) : ord(std::move(o)) {}

    int rank() const { return static_cast<int>(ord.size()); }
    bool is_finite() const {
        for (i64 d : ord)
            if (d == 0) return false;
        return true;
    }
    int free_rank() const {
        int n = 0;
        for (i64 d : ord)
            if (d == 0) ++n;
        return n;
    }
    std::optional<i64> order() const {
        i64 n = 1;
        for (i64 d : ord) {
            if (d == 0) return std::nullopt;
            n = checked_mul(n, d);
        }
        return n;
    }
    bool is_trivial() const { return order() == std::optional<i64>(1); }

    std::vector<i64> reduce(std::vector<i64> x) const {
        if (static_cast<int>(x.size()) != rank()) throw std::logic_error("AbGroup reduce size");
        for (int i = 0; i < rank(); ++i)
            if (ord[i] > 0) x[i] = pos_mod(x[i], ord[i]);
        return x;
    }
    bool is_zero_elem(const std::vector<i64>& x) const {
        auto y = reduce(x);
        for (i64 v : y)
            if (v != 0) return false;
        return true;
    }

    // Invariant factors with 1s dropped, torsion ascending then 0s.
    std::vector<i64> invariants() const;

    std::string str() const;
};

bool same_invariants(const AbGroup& a, const AbGroup& b);

struct AbMap {
    AbGroup src, dst;
    IMat m;  // dst.rank x src.rank; x -> m*x

    AbMap() = default;
    AbMap(AbGroup s, AbGroup d, IMat mat) : src(std::move(s)), dst(std::move(d)), m(std::move(mat)) {
        if (m.r != dst.rank() || m.c != src.rank()) throw std::logic_error("AbMap shape mismatch");
        reduce_entries();
    }

    void reduce_entries() {
        for (int i = 0; i < m.r; ++i)
            if (dst.ord[i] > 0)
                for (int j = 0; j < m.c; ++j) m.at(i, j) = pos_mod(m.at(i, j), dst.ord[i]);
    }

    // Well-definedness: ord_src[j] * column_j must vanish in dst.
    bool well_defined() const;

    std::vector<i64> apply(const std::vector<i64>& x) const { return dst.reduce(m.apply(src.reduce(x))); }

    static AbMap identity(const AbGroup& g) { return AbMap(g, g, IMat::identity(g.rank())); }
    static AbMap zero(const AbGroup& s, const AbGroup& d) { return AbMap(s, d, IMat::zero(d.rank(), s.rank())); }
};

AbMap compose(const AbMap& g, const AbMap& f);  // g after f
AbMap ab_add(const AbMap& f, const AbMap& g);
AbMap ab_sub(const AbMap& f, const AbMap& g);
bool ab_equal(const AbMap& f, const AbMap& g);

// Presentation of a quotient Z^k / L where L is spanned by the columns of
// rel plus the coordinate lattice diag(ordAmb) (pass empty ordAmb for Z^k).
struct QuotientPresentation {
    AbGroup group;
    IMat proj;  // group.rank x k
    IMat lift;  // k x group.rank ; proj*lift = id in group
};

QuotientPresentation quotient_presentation(int ambient_rank, const IMat& rel_cols, const std::vector<i64>& amb_ord = {});

// Subgroup of amb generated by the columns of gens.
struct Subgroup {
    AbGroup group;
    AbMap incl;        // group -> amb
    IMat gens;         // amb.rank x t, the original generators
    IMat coords_of_gen;  // group.rank x t: generator j as element of group
};

Subgroup subgroup_from_gens(const AbGroup& amb, const IMat& gens);

// Solve gens * c = target inside amb; returns coefficient vector on success.
std::optional<std::vector<i64>> member_solve(const AbGroup& amb, const IMat& gens, const std::vector<i64>& target);

struct Quotient {
    AbGroup group;
    AbMap proj;  // amb -> group
    IMat lift;   // amb.rank x group.rank, section of proj
};

Quotient quotient_by_subgroup(const AbGroup& amb, const IMat& gens);

Subgroup ab_image(const AbMap& f);
Subgroup ab_kernel(const AbMap& f);
Quotient ab_cokernel(const AbMap& f);

std::optional<std::vector<i64>> ab_solve(const AbMap& f, const std::vector<i64>& y);

bool subgroup_contains(const AbGroup& amb, const IMat& gens, const std::vector<i64>& elem);
bool subgroup_leq(const AbGroup& amb, const IMat& gens_a, const IMat& gens_b);  // <A> <= <B>
bool subgroup_eq(const AbGroup& amb, const IMat& gens_a, const IMat& gens_b);

AbGroup direct_sum(const std::vector<AbGroup>& parts);
AbMap inclusion_into_sum(const std::vector<AbGroup>& parts, int which);
AbMap projection_from_sum(const std::vector<AbGroup>& parts, int which);

// Iterate all elements of a finite group (throws if infinite).
void enumerate_elements(const AbGroup& g, const std::function<void(const std::vector<i64>&)>& visit);
i64 enumerate_count(const AbGroup& g);

// Hom group between f.g. abelian groups, with realizations of its elements
// as matrices and the reverse lookup.
struct HomGroup {
    AbGroup src, dst;
    AbGroup group;               // the Hom group itself
    std::vector<IMat> gen_mats;  // a matrix per Hom-group coordinate
    IMat realize(const std::vector<i64>& coords) const;
    std::optional<std::vector<i64>> coords_of(const IMat& mat) const;
    AbMap realize_map(const std::vector<i64>& coords) const { return AbMap(src, dst, realize(coords)); }
};

HomGroup hom_group(const AbGroup& a, const AbGroup& b);

// Induced maps on Hom groups.
AbMap hom_postcompose(const HomGroup& h_src, const HomGroup& h_dst, const AbMap& g);  // Hom(A,B) -> Hom(A,B'), f -> g.f
AbMap hom_precompose(const HomGroup& h_src, const HomGroup& h_dst, const AbMap& g);   // Hom(A,B) -> Hom(A',B), f -> f.g

}  // namespace antiloc
