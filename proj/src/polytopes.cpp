#include "rootlab/polytopes.hpp"

#include <algorithm>
#include <set>

namespace rootlab {

HPolytope polar_hrep(const RootSystem& rs) {
    HPolytope p;
    for (const auto& beta : rs.long_roots()) p.halfspaces.push_back({beta, 1});
    return p;
}

std::vector<QVec> polar_vertices(const RootSystem& rs) {
    std::set<QVec, LexLess> pts;
    for (int i = 1; i <= rs.rank; ++i) {
        Orbit o = full_orbit(rs, alcove_vertex(rs, i));
        pts.insert(o.points.begin(), o.points.end());
    }
    return {pts.begin(), pts.end()};
}

std::vector<int> standard_facet_indices(const RootSystem& rs) {
    const int n = rs.rank;
    // Extended diagram on nodes 0..n; node 0 is attached to the alpha_i with
    // (theta, alpha_i) != 0. Edge multiplicities do not matter for connectivity.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    auto link = [&](int a, int b) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rs.gram[i - 1][j - 1] != 0) link(i, j);
    for (int i = 1; i <= n; ++i) {
        QVec e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(i - 1)] = 1;
        if (rs.ip(rs.theta, e) != 0) link(0, i);
    }

    auto connected_without = [&](int removed) {
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        seen[static_cast<std::size_t>(removed)] = true;
        int start = removed == 0 ? 1 : 0;
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        int visited = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    ++visited;
                    stack.push_back(u);
                }
            }
        }
        return visited == n;  // n nodes remain after the removal
    };

    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (connected_without(i)) out.push_back(i);
    return out;
}

Facet standard_facet(const RootSystem& rs, int i) {
    auto idx = standard_facet_indices(rs);
    if (std::find(idx.begin(), idx.end(), i) == idx.end())
        throw NotAFacetIndex("F_" + std::to_string(i) + " is not a facet of " + rs.label.str());

    Facet f;
    f.index = i;
    // (omega^vee_i, alpha) is just the i-th coordinate of alpha.
    const Rational mi = Rational(rs.m[i - 1]);
    for (const auto& alpha : rs.positive_roots())
        if (alpha[static_cast<std::size_t>(i - 1)] == mi) f.vertex_roots.push_back(alpha);
    if (f.vertex_roots.empty()) throw std::logic_error("facet has no vertex roots");

    QVec sum(static_cast<std::size_t>(rs.rank));
    for (const auto& v : f.vertex_roots) sum += v;
    f.barycenter = Rational(1, static_cast<long>(f.vertex_roots.size())) * sum;

    // The barycenter must be an exact positive multiple of omega_i.
    const QVec& w = dual_basis_vector(rs, DualKind::Weight, i);
    f.weight_multiple = f.barycenter[static_cast<std::size_t>(i - 1)] / w[static_cast<std::size_t>(i - 1)];
    if (f.weight_multiple <= 0 || f.barycenter != f.weight_multiple * w)
        throw std::logic_error("facet barycenter is not a positive multiple of the weight");
    return f;
}

std::vector<int> standard_hyperplane_indices(const RootSystem& rs) {
    const int n = rs.rank;
    switch (rs.label.family) {
        case Family::A: return {1};
        case Family::C: return {1};
        case Family::B: return n == 3 ? std::vector<int>{3} : std::vector<int>{1, n};
        case Family::D: return {1, n - 1, n};
        case Family::E:
            if (n == 6) return {1, 6};
            if (n == 7) return {1, 2};
            return {2, 8};
        case Family::F: return {4};
        case Family::G: return {1};
    }
    throw std::logic_error("unreachable");
}

Arrangement arrangement_normals(const RootSystem& rs, const std::vector<int>& standard_indices) {
    if (rs.rank > 6) throw RankTooLargeForFullArrangement();
    Arrangement a;
    a.standard_indices = standard_indices;
    std::set<QVec, LexLess> normals;
    for (int k : standard_indices) {
        Orbit o = full_orbit(rs, dual_basis_vector(rs, DualKind::Coweight, k));
        for (const auto& v : o.points) normals.insert(canonical_normal(v));
    }
    a.normals.assign(normals.begin(), normals.end());
    return a;
}

CutWitness hyperplane_cuts_facet(const RootSystem& rs, const QVec& normal, const Facet& facet) {
    if (is_zero(normal)) throw ZeroVector();
    CutWitness w;
    w.barycenter_orthogonal = rs.ip(facet.barycenter, normal) == 0;
    for (const auto& v : facet.vertex_roots) {
        Rational p = rs.ip(v, normal);
        if (p > 0) {
            ++w.positive;
            if (!w.positive_example) w.positive_example = v;
        } else if (p < 0) {
            ++w.negative;
            if (!w.negative_example) w.negative_example = v;
        } else {
            ++w.zero;
        }
    }
    w.cuts = w.barycenter_orthogonal && w.positive > 0 && w.negative > 0;
    return w;
}

}  // namespace rootlab
