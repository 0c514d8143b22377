#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "antiloc/abelian.hpp"

using namespace antiloc;

namespace {

IMat mat(int r, int c, std::initializer_list<i64> vals) {
    IMat m(r, c);
    size_t k = 0;
    for (i64 v : vals) m.a[k++] = v;
    REQUIRE(k == m.a.size());
    return m;
}

// brute-force element list of a small finite group
std::vector<std::vector<i64>> all_elems(const AbGroup& g) {
    std::vector<std::vector<i64>> out;
    enumerate_elements(g, [&](const std::vector<i64>& x) { out.push_back(x); });
    return out;
}

IMat random_matrix(std::mt19937_64& rng, int r, int c, i64 lo, i64 hi) {
    IMat m(r, c);
    std::uniform_int_distribution<i64> d(lo, hi);
    for (auto& v : m.a) v = d(rng);
    return m;
}

AbGroup random_group(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> rk(0, 3);
    std::uniform_int_distribution<int> od(1, 4);
    static const i64 choices[] = {2, 3, 4, 6, 8, 9, 12};
    int n = rk(rng);
    std::vector<i64> ord;
    for (int i = 0; i < n; ++i) ord.push_back(choices[od(rng) + static_cast<int>(rng() % 3)]);
    return AbGroup(ord);
}

}  // namespace

TEST_CASE("smith normal form basics") {
    SUBCASE("diag(2,3) -> diag(1,6)") {
        SmithResult s = smith_form(mat(2, 2, {2, 0, 0, 3}));
        CHECK(s.d.at(0, 0) == 1);
        CHECK(s.d.at(1, 1) == 6);
        CHECK(s.rank == 2);
    }
    SUBCASE("identity fixed") {
        SmithResult s = smith_form(IMat::identity(3));
        CHECK(s.d == IMat::identity(3));
    }
    SUBCASE("transforms are inverse pairs and UAV=D") {
        std::mt19937_64 rng(7);
        for (int iter = 0; iter < 200; ++iter) {
            int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
            IMat a = random_matrix(rng, r, c, -9, 9);
            SmithResult s = smith_form(a);
            CHECK(s.u * s.uinv == IMat::identity(r));
            CHECK(s.v * s.vinv == IMat::identity(c));
            CHECK(s.u * a * s.v == s.d);
            for (int i = 0; i + 1 < std::min(r, c); ++i) {
                i64 x = s.d.at(i, i), y = s.d.at(i + 1, i + 1);
                if (x != 0 && y != 0) CHECK(y % x == 0);
                if (x == 0) CHECK(y == 0);
            }
        }
    }
}

TEST_CASE("integer kernels and solving vs brute force") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        int r = 1 + static_cast<int>(rng() % 3), c = 1 + static_cast<int>(rng() % 3);
        IMat m = random_matrix(rng, r, c, -4, 4);
        IMat k = kernel_lattice(m);
        // every kernel column is killed
        for (int j = 0; j < k.c; ++j) {
            auto y = m.apply(k.col_vec(j));
            for (i64 v : y) CHECK(v == 0);
        }
        // brute force small solutions are spanned
        std::vector<i64> x(c, 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == c) {
                auto y = m.apply(x);
                for (i64 v : y)
                    if (v != 0) return;
                auto sol = solve_integer(k, x);
                CHECK(sol.has_value());
                return;
            }
            for (i64 v = -2; v <= 2; ++v) {
                x[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }
}

TEST_CASE("quotient presentation: Z^2 / <(2,0),(0,3)>") {
    QuotientPresentation q = quotient_presentation(2, mat(2, 2, {2, 0, 0, 3}));
    CHECK(q.group.invariants() == std::vector<i64>{6});
    // proj . lift = identity on the group
    IMat pl = q.proj * q.lift;
    CHECK(q.group.is_zero_elem((pl - IMat::identity(q.group.rank())).col_vec(0)));
}

TEST_CASE("subgroup/quotient/kernel/image against enumeration oracles") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 120; ++iter) {
        AbGroup amb = random_group(rng);
        if (!amb.is_finite() || *amb.order() > 400) continue;
        int t = static_cast<int>(rng() % 3);
        IMat gens = random_matrix(rng, amb.rank(), t, -6, 6);

        // oracle: closure of generators under addition
        std::set<std::vector<i64>> closure;
        closure.insert(amb.reduce(std::vector<i64>(amb.rank(), 0)));
        bool grew = true;
        while (grew) {
            grew = false;
            auto snapshot = closure;
            for (const auto& x : snapshot)
                for (int j = 0; j < t; ++j) {
                    std::vector<i64> y(amb.rank());
                    for (int i = 0; i < amb.rank(); ++i) y[i] = checked_add(x[i], gens.at(i, j));
                    y = amb.reduce(y);
                    if (closure.insert(y).second) grew = true;
                }
        }

        Subgroup sub = subgroup_from_gens(amb, gens);
        CHECK(sub.group.order().has_value());
        CHECK(*sub.group.order() == static_cast<i64>(closure.size()));
        // membership agrees
        for (const auto& x : all_elems(amb)) {
            bool in_oracle = closure.count(x) > 0;
            CHECK(subgroup_contains(amb, gens, x) == in_oracle);
        }
        // inclusion lands on the right set
        std::set<std::vector<i64>> image_set;
        enumerate_elements(sub.group, [&](const std::vector<i64>& z) { image_set.insert(sub.incl.apply(z)); });
        CHECK(image_set == closure);

        Quotient q = quotient_by_subgroup(amb, gens);
        CHECK(*q.group.order() * static_cast<i64>(closure.size()) == *amb.order());
        // proj kills exactly the subgroup
        for (const auto& x : all_elems(amb)) {
            bool killed = q.group.is_zero_elem(q.proj.apply(x));
            CHECK(killed == (closure.count(x) > 0));
        }
    }
}

TEST_CASE("ab_kernel and ab_solve vs brute force") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 120; ++iter) {
        AbGroup a = random_group(rng), b = random_group(rng);
        if (!a.is_finite() || !b.is_finite()) continue;
        if (*a.order() > 200 || *b.order() > 200) continue;
        // build a random well-defined map via hom_group
        HomGroup h = hom_group(a, b);
        std::vector<i64> coords(h.gen_mats.size());
        for (size_t i = 0; i < coords.size(); ++i) coords[i] = static_cast<i64>(rng() % 6);
        AbMap f = h.realize_map(h.group.reduce(coords));
        REQUIRE(f.well_defined());

        Subgroup ker = ab_kernel(f);
        i64 nker = 0;
        for (const auto& x : all_elems(a)) {
            bool z = b.is_zero_elem(f.apply(x));
            if (z) ++nker;
            CHECK(subgroup_contains(a, ker.incl.m, x) == z);
        }
        CHECK(*ker.group.order() == nker);

        // image order * kernel order = group order
        Subgroup im = ab_image(f);
        CHECK(checked_mul(*im.group.order(), nker) == *a.order());

        // solving
        for (int k = 0; k < 5; ++k) {
            std::vector<i64> x(a.rank());
            for (int i = 0; i < a.rank(); ++i) x[i] = static_cast<i64>(rng() % 12);
            auto y = f.apply(x);
            auto sol = ab_solve(f, y);
            REQUIRE(sol.has_value());
            auto y2 = f.apply(*sol);
            CHECK(b.reduce(y2) == b.reduce(y));
        }
    }
}

TEST_CASE("hom groups match brute-force homomorphism counts") {
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 60; ++iter) {
        AbGroup a = random_group(rng), b = random_group(rng);
        if (!a.is_finite() || !b.is_finite()) continue;
        if (*a.order() > 40 || *b.order() > 40) continue;
        HomGroup h = hom_group(a, b);
        REQUIRE(h.group.order().has_value());
        // oracle: count matrices that define homs
        i64 count = 0;
        AbGroup matspace(std::vector<i64>(static_cast<size_t>(a.rank() * b.rank()), 0));
        // enumerate candidate matrices with entries mod ord_b
        std::vector<i64> entry_bounds;
        for (int i = 0; i < b.rank(); ++i)
            for (int j = 0; j < a.rank(); ++j) entry_bounds.push_back(b.ord[i]);
        std::vector<i64> e(entry_bounds.size(), 0);
        std::function<void(size_t)> rec = [&](size_t pos) {
            if (pos == e.size()) {
                IMat m(b.rank(), a.rank());
                size_t k = 0;
                for (int i = 0; i < b.rank(); ++i)
                    for (int j = 0; j < a.rank(); ++j) m.at(i, j) = e[k++];
                AbMap f(a, b, m);
                if (f.well_defined()) {
                    ++count;
                    CHECK(h.coords_of(m).has_value());
                }
                return;
            }
            for (i64 v = 0; v < entry_bounds[pos]; ++v) {
                e[pos] = v;
                rec(pos + 1);
            }
        };
        if (!entry_bounds.empty() && *matspace.order() == 1) {}
        i64 total = 1;
        for (i64 bnd : entry_bounds) total = checked_mul(total, bnd);
        if (total > 5000) continue;
        rec(0);
        if (a.rank() == 0 || b.rank() == 0) count = 1;
        CHECK(*h.group.order() == count);
    }
}

TEST_CASE("cokernel sizes") {
    // Z/4 --*2--> Z/4 : cokernel Z/2
    AbGroup z4({4});
    AbMap f(z4, z4, mat(1, 1, {2}));
    Quotient q = ab_cokernel(f);
    CHECK(q.group.invariants() == std::vector<i64>{2});
    // cokernel of Z --*6--> Z is Z/6
    AbGroup z({0});
    AbMap g(z, z, mat(1, 1, {6}));
    CHECK(ab_cokernel(g).group.invariants() == std::vector<i64>{6});
    // kernel of Z --*0--> Z is Z
    AbMap h(z, z, mat(1, 1, {0}));
    CHECK(ab_kernel(h).group.invariants() == std::vector<i64>{0});
}
