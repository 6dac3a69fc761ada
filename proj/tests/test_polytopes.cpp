#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "rootlab/polytopes.hpp"

using namespace rootlab;

TEST_CASE("polar H-representation has one half-space per long root at offset 1") {
    RootSystem rs = build_root_system(Family::B, 3);
    HPolytope p = polar_hrep(rs);
    CHECK(p.halfspaces.size() == 12);
    for (const auto& h : p.halfspaces) {
        CHECK(h.offset == 1);
        CHECK(rs.norm2(h.normal) == 2);
    }
}

TEST_CASE("polar vertex counts: 2^(n+1) - 2 in type A") {
    for (int n = 1; n <= 5; ++n) {
        RootSystem rs = build_root_system(Family::A, n);
        CHECK(polar_vertices(rs).size() == (std::size_t(1) << (n + 1)) - 2);
    }
    CHECK(polar_vertices(build_root_system(Family::C, 2)).size() == 8);
    CHECK(polar_vertices(build_root_system(Family::B, 3)).size() == 26);
    CHECK(polar_vertices(build_root_system(Family::G, 2)).size() == 12);
}

TEST_CASE("polar points lie on the boundary; in type A all are genuine vertices") {
    const TypeLabel labels[] = {{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::G, 2}};
    for (const auto& label : labels) {
        RootSystem rs = build_root_system(label);
        HPolytope p = polar_hrep(rs);
        for (const auto& v : polar_vertices(rs)) {
            std::vector<QVec> tight;
            for (const auto& h : p.halfspaces) {
                Rational val = rs.ip(h.normal, v);
                CHECK(val <= h.offset);
                if (val == h.offset) tight.push_back(h.normal);
            }
            // Boundary point of the polar polytope: some constraint is tight.
            CHECK_FALSE(tight.empty());
            // Genuine-vertex saturation holds in type A (all 2^{n+1}-2 points);
            // in B/C/G some alcove-vertex orbits land on lower faces (for
            // example o_2 in G_2 sits on an edge midpoint of the hexagon).
            if (label.family == Family::A)
                CHECK(span_rank(tight) == static_cast<std::size_t>(rs.rank));
        }
    }
}

TEST_CASE("polar vertex set is stable under every simple reflection") {
    RootSystem rs = build_root_system(Family::C, 3);
    auto vs = polar_vertices(rs);
    std::set<QVec, LexLess> vset(vs.begin(), vs.end());
    for (int i = 0; i < rs.rank; ++i) {
        QVec e(static_cast<std::size_t>(rs.rank));
        e[static_cast<std::size_t>(i)] = 1;
        for (const auto& v : vs) CHECK(vset.count(reflect(rs, e, v)) == 1);
    }
}

TEST_CASE("standard facet indices match the published facet column") {
    auto idx = [](Family f, int n) { return standard_facet_indices(build_root_system(f, n)); };
    CHECK(idx(Family::A, 3) == std::vector<int>{1, 2, 3});
    CHECK(idx(Family::B, 4) == std::vector<int>{1, 4});
    CHECK(idx(Family::B, 5) == std::vector<int>{1, 5});
    // In type C the level-m_1 set is the single root theta (a vertex of P, not
    // a facet); the facet survives only at the short end of the diagram.
    CHECK(idx(Family::C, 3) == std::vector<int>{3});
    CHECK(idx(Family::C, 4) == std::vector<int>{4});
    CHECK(idx(Family::D, 4) == std::vector<int>{1, 3, 4});
    CHECK(idx(Family::D, 5) == std::vector<int>{1, 4, 5});
    CHECK(idx(Family::E, 6) == std::vector<int>{1, 6});
    CHECK(idx(Family::E, 7) == std::vector<int>{2, 7});
    CHECK(idx(Family::E, 8) == std::vector<int>{1, 2});
    CHECK(idx(Family::F, 4) == std::vector<int>{4});
    CHECK(idx(Family::G, 2) == std::vector<int>{1});
    CHECK(idx(Family::B, 3) == std::vector<int>{1, 3});
}

TEST_CASE("facet vertex roots attain the level m_i exactly and exhaustively") {
    RootSystem rs = build_root_system(Family::D, 4);
    for (int i : standard_facet_indices(rs)) {
        Facet f = standard_facet(rs, i);
        std::set<QVec, LexLess> in_facet(f.vertex_roots.begin(), f.vertex_roots.end());
        for (const auto& alpha : rs.positive_roots()) {
            Rational level = alpha[static_cast<std::size_t>(i - 1)];
            CHECK((level == Rational(rs.m[i - 1])) == (in_facet.count(alpha) == 1));
        }
        CHECK(f.weight_multiple > 0);
        CHECK(f.barycenter == f.weight_multiple * dual_basis_vector(rs, DualKind::Weight, i));
    }
    CHECK_THROWS_AS(standard_facet(rs, 2), NotAFacetIndex);
}

TEST_CASE("standard hyperplane indices are the stored per-type data") {
    auto h = [](Family f, int n) { return standard_hyperplane_indices(build_root_system(f, n)); };
    CHECK(h(Family::A, 4) == std::vector<int>{1});
    CHECK(h(Family::C, 4) == std::vector<int>{1});
    CHECK(h(Family::B, 3) == std::vector<int>{3});
    CHECK(h(Family::B, 5) == std::vector<int>{1, 5});
    CHECK(h(Family::D, 5) == std::vector<int>{1, 4, 5});
    CHECK(h(Family::E, 6) == std::vector<int>{1, 6});
    CHECK(h(Family::E, 7) == std::vector<int>{1, 2});
    CHECK(h(Family::E, 8) == std::vector<int>{2, 8});
    CHECK(h(Family::F, 4) == std::vector<int>{4});
    CHECK(h(Family::G, 2) == std::vector<int>{1});
}

TEST_CASE("arrangement enumeration: canonical normals, rank cap") {
    RootSystem rs = build_root_system(Family::A, 2);
    Arrangement arr = arrangement_normals(rs, standard_hyperplane_indices(rs));
    CHECK(arr.normals.size() == 3);  // three lines through the hexagon's vertices
    for (const auto& v : arr.normals) CHECK(canonical_normal(v) == v);
    CHECK(std::is_sorted(arr.normals.begin(), arr.normals.end(), LexLess{}));

    RootSystem e7 = build_root_system(Family::E, 7);
    CHECK_THROWS_AS(arrangement_normals(e7, standard_hyperplane_indices(e7)),
                    RankTooLargeForFullArrangement);
}

TEST_CASE("zonotope types have no cutting (arrangement normal, facet) pair") {
    const TypeLabel labels[] = {{Family::A, 2}, {Family::A, 3}, {Family::C, 2}, {Family::C, 3},
                                {Family::B, 3}, {Family::G, 2}};
    for (const auto& label : labels) {
        RootSystem rs = build_root_system(label);
        Arrangement arr = arrangement_normals(rs, standard_hyperplane_indices(rs));
        for (int i : standard_facet_indices(rs)) {
            Facet f = standard_facet(rs, i);
            for (const auto& normal : arr.normals)
                CHECK_FALSE(hyperplane_cuts_facet(rs, normal, f).cuts);
        }
    }
}

TEST_CASE("cut witness bookkeeping on a hand-built example") {
    RootSystem rs = build_root_system(Family::B, 4);
    Facet f = standard_facet(rs, 1);
    // The published witness normal for B_n: s_1(omega_1^vee) direction.
    QVec normal = reflect(rs, QVec{1, 0, 0, 0}, dual_basis_vector(rs, DualKind::Coweight, 1));
    CutWitness w = hyperplane_cuts_facet(rs, normal, f);
    CHECK(w.cuts);
    CHECK(w.barycenter_orthogonal);
    CHECK(w.positive > 0);
    CHECK(w.negative > 0);
    CHECK(w.positive + w.negative + w.zero == static_cast<int>(f.vertex_roots.size()));
    REQUIRE(w.positive_example);
    CHECK(rs.ip(*w.positive_example, normal) > 0);
    REQUIRE(w.negative_example);
    CHECK(rs.ip(*w.negative_example, normal) < 0);
    CHECK_THROWS_AS(hyperplane_cuts_facet(rs, QVec{0, 0, 0, 0}, f), ZeroVector);
}
