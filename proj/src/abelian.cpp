#include "antiloc/abelian.hpp"

#include <algorithm>
#include <map>

namespace antiloc {

namespace {

struct SmithWorker {
    IMat d, u, uinv, v, vinv;

    explicit SmithWorker(const IMat& input)
        : d(input),
          u(IMat::identity(input.r)),
          uinv(IMat::identity(input.r)),
          v(IMat::identity(input.c)),
          vinv(IMat::identity(input.c)) {}

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < d.c; ++k) std::swap(d.at(i, k), d.at(j, k));
        for (int k = 0; k < u.c; ++k) std::swap(u.at(i, k), u.at(j, k));
        for (int k = 0; k < uinv.r; ++k) std::swap(uinv.at(k, i), uinv.at(k, j));
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < d.r; ++k) std::swap(d.at(k, i), d.at(k, j));
        for (int k = 0; k < v.r; ++k) std::swap(v.at(k, i), v.at(k, j));
        for (int k = 0; k < vinv.c; ++k) std::swap(vinv.at(i, k), vinv.at(j, k));
    }
    void row_neg(int i) {
        for (int k = 0; k < d.c; ++k) d.at(i, k) = checked_neg(d.at(i, k));
        for (int k = 0; k < u.c; ++k) u.at(i, k) = checked_neg(u.at(i, k));
        for (int k = 0; k < uinv.r; ++k) uinv.at(k, i) = checked_neg(uinv.at(k, i));
    }
    // row_i += q * row_j
    void row_add(int i, int j, i64 q) {
        if (q == 0) return;
        for (int k = 0; k < d.c; ++k) d.at(i, k) = checked_add(d.at(i, k), checked_mul(q, d.at(j, k)));
        for (int k = 0; k < u.c; ++k) u.at(i, k) = checked_add(u.at(i, k), checked_mul(q, u.at(j, k)));
        for (int k = 0; k < uinv.r; ++k) uinv.at(k, j) = checked_sub(uinv.at(k, j), checked_mul(q, uinv.at(k, i)));
    }
    // col_i += q * col_j
    void col_add(int i, int j, i64 q) {
        if (q == 0) return;
        for (int k = 0; k < d.r; ++k) d.at(k, i) = checked_add(d.at(k, i), checked_mul(q, d.at(k, j)));
        for (int k = 0; k < v.r; ++k) v.at(k, i) = checked_add(v.at(k, i), checked_mul(q, v.at(k, j)));
        for (int k = 0; k < vinv.c; ++k) vinv.at(j, k) = checked_sub(vinv.at(j, k), checked_mul(q, vinv.at(i, k)));
    }

    void run() {
        int n = std::min(d.r, d.c);
        for (int t = 0; t < n; ++t) {
            for (;;) {
                // minimal nonzero entry of the trailing submatrix
                int pi = -1, pj = -1;
                i64 best = 0;
                for (int i = t; i < d.r; ++i)
                    for (int j = t; j < d.c; ++j) {
                        i64 x = abs_i64(d.at(i, j));
                        if (x != 0 && (pi < 0 || x < best)) { best = x; pi = i; pj = j; }
                    }
                if (pi < 0) return;  // trailing block is zero
                row_swap(t, pi);
                col_swap(t, pj);

                bool clean = true;
                for (int i = t + 1; i < d.r; ++i) {
                    i64 q = d.at(i, t) / d.at(t, t);
                    row_add(i, t, checked_neg(q));
                    if (d.at(i, t) != 0) clean = false;
                }
                for (int j = t + 1; j < d.c; ++j) {
                    i64 q = d.at(t, j) / d.at(t, t);
                    col_add(j, t, checked_neg(q));
                    if (d.at(t, j) != 0) clean = false;
                }
                if (!clean) continue;

                // pivot must divide the whole trailing block
                bool divides = true;
                for (int i = t + 1; i < d.r && divides; ++i)
                    for (int j = t + 1; j < d.c; ++j)
                        if (d.at(i, j) % d.at(t, t) != 0) {
                            row_add(t, i, 1);
                            divides = false;
                            break;
                        }
                if (divides) break;
            }
            if (d.at(t, t) < 0) row_neg(t);
        }
    }
};

IMat diag_cols_for_torsion(const std::vector<i64>& ord) {
    int k = static_cast<int>(ord.size());
    std::vector<std::vector<i64>> cols;
    for (int i = 0; i < k; ++i)
        if (ord[i] > 0) {
            std::vector<i64> c(k, 0);
            c[i] = ord[i];
            cols.push_back(c);
        }
    return IMat::from_cols(k, cols);
}

}  // namespace

SmithResult smith_form(const IMat& input) {
    SmithWorker w(input);
    w.run();
    SmithResult res;
    res.d = w.d;
    res.u = w.u;
    res.uinv = w.uinv;
    res.v = w.v;
    res.vinv = w.vinv;
    int n = std::min(input.r, input.c);
    res.rank = 0;
    for (int i = 0; i < n; ++i)
        if (res.d.at(i, i) != 0) ++res.rank;
    return res;
}

IMat kernel_lattice(const IMat& m) {
    if (m.c == 0) return IMat(0, 0);
    if (m.r == 0) return IMat::identity(m.c);
    SmithResult s = smith_form(m);
    std::vector<std::vector<i64>> cols;
    for (int j = s.rank; j < m.c; ++j) cols.push_back(s.v.col_vec(j));
    return IMat::from_cols(m.c, cols);
}

std::optional<std::vector<i64>> solve_integer(const IMat& m, const std::vector<i64>& y) {
    if (static_cast<int>(y.size()) != m.r) throw std::logic_error("solve_integer shape");
    if (m.c == 0) {
        for (i64 t : y)
            if (t != 0) return std::nullopt;
        return std::vector<i64>{};
    }
    SmithResult s = smith_form(m);
    std::vector<i64> uy = s.u.apply(y);
    std::vector<i64> z(m.c, 0);
    int n = std::min(m.r, m.c);
    for (int i = 0; i < m.r; ++i) {
        i64 di = (i < n) ? s.d.at(i, i) : 0;
        if (di == 0) {
            if (uy[i] != 0) return std::nullopt;
        } else {
            if (uy[i] % di != 0) return std::nullopt;
            z[i] = uy[i] / di;
        }
    }
    return s.v.apply(z);
}

bool is_unimodular(const IMat& m) {
    if (m.r != m.c) return false;
    SmithResult s = smith_form(m);
    for (int i = 0; i < m.r; ++i)
        if (s.d.at(i, i) != 1) return false;
    return true;
}

std::vector<i64> AbGroup::invariants() const {
    std::vector<i64> tor;
    int free = 0;
    for (i64 d : ord) {
        if (d == 0)
            ++free;
        else if (d > 1)
            tor.push_back(d);
    }
    std::sort(tor.begin(), tor.end());
    // The presentation machinery always produces a divisibility chain, but
    // arbitrary user groups may not; normalize pairwise.
    for (size_t i = 0; i + 1 < tor.size(); ++i)
        for (size_t j = i + 1; j < tor.size(); ++j) {
            i64 g = gcd_i64(tor[i], tor[j]);
            i64 l = checked_mul(tor[i] / g, tor[j]);
            tor[i] = g;
            tor[j] = l;
        }
    std::sort(tor.begin(), tor.end());
    std::vector<i64> out;
    for (i64 d : tor)
        if (d > 1) out.push_back(d);
    for (int i = 0; i < free; ++i) out.push_back(0);
    return out;
}

std::string AbGroup::str() const {
    auto inv = invariants();
    if (inv.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < inv.size(); ++i) {
        s += (inv[i] == 0) ? "Z" : ("Z/" + std::to_string(inv[i]));
        if (i + 1 < inv.size()) s += " + ";
    }
    return s;
}

bool same_invariants(const AbGroup& a, const AbGroup& b) { return a.invariants() == b.invariants(); }

bool AbMap::well_defined() const {
    for (int j = 0; j < src.rank(); ++j) {
        i64 o = src.ord[j];
        if (o == 0) continue;
        for (int i = 0; i < dst.rank(); ++i) {
            i64 v = checked_mul(o, m.at(i, j));
            if (dst.ord[i] == 0) {
                if (v != 0) return false;
            } else if (pos_mod(v, dst.ord[i]) != 0)
                return false;
        }
    }
    return true;
}

AbMap compose(const AbMap& g, const AbMap& f) {
    if (f.dst.rank() != g.src.rank()) throw std::logic_error("compose shape");
    return AbMap(f.src, g.dst, g.m * f.m);
}

AbMap ab_add(const AbMap& f, const AbMap& g) { return AbMap(f.src, f.dst, f.m + g.m); }
AbMap ab_sub(const AbMap& f, const AbMap& g) { return AbMap(f.src, f.dst, f.m - g.m); }

bool ab_equal(const AbMap& f, const AbMap& g) {
    if (f.src.rank() != g.src.rank() || f.dst.rank() != g.dst.rank()) return false;
    IMat d = f.m - g.m;
    for (int j = 0; j < d.c; ++j)
        if (!f.dst.is_zero_elem(d.col_vec(j))) return false;
    return true;
}

QuotientPresentation quotient_presentation(int ambient_rank, const IMat& rel_cols, const std::vector<i64>& amb_ord) {
    IMat rel = rel_cols.r == 0 && ambient_rank > 0 ? IMat(ambient_rank, 0) : rel_cols;
    if (rel.r != ambient_rank) throw std::logic_error("quotient_presentation shape");
    if (!amb_ord.empty()) {
        if (static_cast<int>(amb_ord.size()) != ambient_rank) throw std::logic_error("quotient_presentation ord size");
        rel = IMat::hconcat(rel, diag_cols_for_torsion(amb_ord));
    }
    SmithResult s = smith_form(rel);
    int k = ambient_rank;
    std::vector<i64> full(k, 0);
    int n = std::min(rel.r, rel.c);
    for (int i = 0; i < n; ++i) full[i] = s.d.at(i, i);

    std::vector<int> keep;
    for (int i = 0; i < k; ++i)
        if (full[i] != 1) keep.push_back(i);

    QuotientPresentation q;
    std::vector<i64> ords;
    for (int i : keep) ords.push_back(full[i]);
    q.group = AbGroup(ords);
    q.proj = IMat(static_cast<int>(keep.size()), k);
    for (size_t a = 0; a < keep.size(); ++a)
        for (int j = 0; j < k; ++j) q.proj.at(static_cast<int>(a), j) = s.u.at(keep[a], j);
    q.lift = IMat(k, static_cast<int>(keep.size()));
    for (int i = 0; i < k; ++i)
        for (size_t a = 0; a < keep.size(); ++a) q.lift.at(i, static_cast<int>(a)) = s.uinv.at(i, keep[a]);
    return q;
}

Subgroup subgroup_from_gens(const AbGroup& amb, const IMat& gens) {
    if (gens.r != amb.rank()) throw std::logic_error("subgroup_from_gens shape");
    int t = gens.c;
    IMat aug = IMat::hconcat(gens, diag_cols_for_torsion(amb.ord));
    IMat lat = kernel_lattice(aug);
    // keep the coefficient rows only
    IMat rel(t, lat.c);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < lat.c; ++j) rel.at(i, j) = lat.at(i, j);
    QuotientPresentation qp = quotient_presentation(t, rel);

    Subgroup s;
    s.group = qp.group;
    s.gens = gens;
    s.coords_of_gen = qp.proj;
    s.incl = AbMap(s.group, amb, gens * qp.lift);
    return s;
}

std::optional<std::vector<i64>> member_solve(const AbGroup& amb, const IMat& gens, const std::vector<i64>& target) {
    IMat aug = IMat::hconcat(gens, diag_cols_for_torsion(amb.ord));
    auto sol = solve_integer(aug, amb.reduce(target));
    if (!sol) return std::nullopt;
    return std::vector<i64>(sol->begin(), sol->begin() + gens.c);
}

Quotient quotient_by_subgroup(const AbGroup& amb, const IMat& gens) {
    QuotientPresentation qp = quotient_presentation(amb.rank(), gens, amb.ord);
    Quotient q;
    q.group = qp.group;
    q.proj = AbMap(amb, q.group, qp.proj);
    q.lift = qp.lift;
    return q;
}

Subgroup ab_image(const AbMap& f) { return subgroup_from_gens(f.dst, f.m); }

Subgroup ab_kernel(const AbMap& f) {
    IMat aug = IMat::hconcat(f.m, diag_cols_for_torsion(f.dst.ord));
    IMat lat = kernel_lattice(aug);
    IMat gens(f.src.rank(), lat.c);
    for (int i = 0; i < f.src.rank(); ++i)
        for (int j = 0; j < lat.c; ++j) gens.at(i, j) = lat.at(i, j);
    return subgroup_from_gens(f.src, gens);
}

Quotient ab_cokernel(const AbMap& f) { return quotient_by_subgroup(f.dst, f.m); }

std::optional<std::vector<i64>> ab_solve(const AbMap& f, const std::vector<i64>& y) {
    auto c = member_solve(f.dst, f.m, y);
    if (!c) return std::nullopt;
    return f.src.reduce(*c);
}

bool subgroup_contains(const AbGroup& amb, const IMat& gens, const std::vector<i64>& elem) {
    return member_solve(amb, gens, elem).has_value();
}

bool subgroup_leq(const AbGroup& amb, const IMat& gens_a, const IMat& gens_b) {
    for (int j = 0; j < gens_a.c; ++j)
        if (!subgroup_contains(amb, gens_b, gens_a.col_vec(j))) return false;
    return true;
}

bool subgroup_eq(const AbGroup& amb, const IMat& gens_a, const IMat& gens_b) {
    return subgroup_leq(amb, gens_a, gens_b) && subgroup_leq(amb, gens_b, gens_a);
}

AbGroup direct_sum(const std::vector<AbGroup>& parts) {
    std::vector<i64> ord;
    for (const auto& p : parts) ord.insert(ord.end(), p.ord.begin(), p.ord.end());
    return AbGroup(ord);
}

AbMap inclusion_into_sum(const std::vector<AbGroup>& parts, int which) {
    AbGroup sum = direct_sum(parts);
    int off = 0;
    for (int i = 0; i < which; ++i) off += parts[i].rank();
    IMat m(sum.rank(), parts[which].rank());
    for (int j = 0; j < parts[which].rank(); ++j) m.at(off + j, j) = 1;
    return AbMap(parts[which], sum, m);
}

AbMap projection_from_sum(const std::vector<AbGroup>& parts, int which) {
    AbGroup sum = direct_sum(parts);
    int off = 0;
    for (int i = 0; i < which; ++i) off += parts[i].rank();
    IMat m(parts[which].rank(), sum.rank());
    for (int j = 0; j < parts[which].rank(); ++j) m.at(j, off + j) = 1;
    return AbMap(sum, parts[which], m);
}

void enumerate_elements(const AbGroup& g, const std::function<void(const std::vector<i64>&)>& visit) {
    if (!g.is_finite()) throw std::logic_error("enumerate_elements on infinite group");
    std::vector<i64> x(g.rank(), 0);
    for (;;) {
        visit(x);
        int i = 0;
        while (i < g.rank()) {
            if (++x[i] < g.ord[i]) break;
            x[i] = 0;
            ++i;
        }
        if (i == g.rank()) return;
    }
}

i64 enumerate_count(const AbGroup& g) {
    auto n = g.order();
    if (!n) throw std::logic_error("enumerate_count on infinite group");
    return *n;
}

HomGroup hom_group(const AbGroup& a, const AbGroup& b) {
    HomGroup h;
    h.src = a;
    h.dst = b;
    std::vector<i64> ords;
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) {
            i64 ai = a.ord[i], bj = b.ord[j];
            i64 piece;  // order of Hom(C_ai, C_bj); 0 = Z, 1 = trivial
            i64 scale;
            if (ai == 0) {
                piece = bj;  // Z -> C_bj : C_bj (Z if bj==0)
                scale = 1;
            } else if (bj == 0) {
                continue;  // Hom(Z/a, Z) = 0
            } else {
                i64 g = gcd_i64(ai, bj);
                if (g == 1) continue;
                piece = g;
                scale = bj / g;
            }
            if (piece == 1) continue;
            IMat gen(b.rank(), a.rank());
            gen.at(j, i) = scale;
            ords.push_back(piece);
            h.gen_mats.push_back(gen);
        }
    h.group = AbGroup(ords);
    return h;
}

IMat HomGroup::realize(const std::vector<i64>& coords) const {
    if (coords.size() != gen_mats.size()) throw std::logic_error("HomGroup realize size");
    IMat m(dst.rank(), src.rank());
    for (size_t k = 0; k < gen_mats.size(); ++k)
        if (coords[k] != 0) m = m + gen_mats[k].scaled(coords[k]);
    // reduce mod dst orders
    for (int i = 0; i < m.r; ++i)
        if (dst.ord[i] > 0)
            for (int j = 0; j < m.c; ++j) m.at(i, j) = pos_mod(m.at(i, j), dst.ord[i]);
    return m;
}

std::optional<std::vector<i64>> HomGroup::coords_of(const IMat& mat) const {
    if (mat.r != dst.rank() || mat.c != src.rank()) return std::nullopt;
    std::vector<i64> coords(gen_mats.size(), 0);
    // Each (i,j) position is covered by at most one generator.
    IMat seen(dst.rank(), src.rank());
    for (size_t k = 0; k < gen_mats.size(); ++k) {
        int gi = -1, gj = -1;
        i64 scale = 0;
        for (int i = 0; i < gen_mats[k].r && gi < 0; ++i)
            for (int j = 0; j < gen_mats[k].c; ++j)
                if (gen_mats[k].at(i, j) != 0) {
                    gi = i;
                    gj = j;
                    scale = gen_mats[k].at(i, j);
                    break;
                }
        seen.at(gi, gj) = 1;
        i64 entry = mat.at(gi, gj);
        i64 bj = dst.ord[gi];
        if (bj > 0) entry = pos_mod(entry, bj);
        // entry = c*scale mod bj with scale | bj, so entry itself must be a multiple
        if (entry % scale != 0) return std::nullopt;
        coords[k] = entry / scale;
        if (group.ord[k] > 0) coords[k] = pos_mod(coords[k], group.ord[k]);
    }
    // off-generator positions must vanish in dst
    for (int i = 0; i < mat.r; ++i)
        for (int j = 0; j < mat.c; ++j) {
            if (seen.at(i, j)) continue;
            i64 e = mat.at(i, j);
            if (dst.ord[i] > 0) e = pos_mod(e, dst.ord[i]);
            if (e != 0) return std::nullopt;
        }
    // verify
    IMat r = realize(coords);
    IMat d = r - mat;
    for (int j = 0; j < d.c; ++j)
        if (!dst.is_zero_elem(d.col_vec(j))) return std::nullopt;
    return coords;
}

AbMap hom_postcompose(const HomGroup& h_src, const HomGroup& h_dst, const AbMap& g) {
    std::vector<std::vector<i64>> cols;
    for (const auto& gen : h_src.gen_mats) {
        IMat composed = g.m * gen;
        auto c = h_dst.coords_of(composed);
        if (!c) throw invariant_violation("hom_postcompose: image not a hom");
        cols.push_back(*c);
    }
    return AbMap(h_src.group, h_dst.group, IMat::from_cols(h_dst.group.rank(), cols));
}

AbMap hom_precompose(const HomGroup& h_src, const HomGroup& h_dst, const AbMap& g) {
    std::vector<std::vector<i64>> cols;
    for (const auto& gen : h_src.gen_mats) {
        IMat composed = gen * g.m;
        auto c = h_dst.coords_of(composed);
        if (!c) throw invariant_violation("hom_precompose: image not a hom");
        cols.push_back(*c);
    }
    return AbMap(h_src.group, h_dst.group, IMat::from_cols(h_dst.group.rank(), cols));
}

}  // namespace antiloc
