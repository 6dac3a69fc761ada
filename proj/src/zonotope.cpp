#include "rootlab/zonotope.hpp"

#include <algorithm>

#include "rootlab/simplex.hpp"
#include "rootlab/weyl.hpp"

namespace rootlab {

Zonotope orbit_zonotope(const RootSystem& rs, int j, const Rational& scale) {
    Orbit o = full_orbit(rs, scale * dual_basis_vector(rs, DualKind::Coweight, j));
    Zonotope z;
    z.generators = o.points;
    z.center = QVec(static_cast<std::size_t>(rs.rank));
    return z;
}

Rational zt_support(const RootSystem& rs, const Zonotope& z, const QVec& d) {
    if (!is_zero(z.center)) throw WrongType("zt_support requires ZT form (center 0)");
    Rational s = 0;
    for (const auto& v : z.generators) {
        Rational p = rs.ip(v, d);
        if (p > 0) s += p;
    }
    return s;
}

ContainmentResult contained_in_polar(const RootSystem& rs, const Zonotope& z) {
    for (const auto& beta : rs.long_roots()) {
        if (zt_support(rs, z, beta) > 1) return {false, beta};
    }
    return {true, std::nullopt};
}

namespace {

bool subset_dfs(const std::vector<QVec>& gen, std::size_t i, QVec& acc, const QVec& target,
                std::vector<int>& chosen) {
    if (acc == target) return true;  // earliest match in depth-first order
    if (i == gen.size()) return false;
    chosen.push_back(static_cast<int>(i));
    acc += gen[i];
    if (subset_dfs(gen, i + 1, acc, target, chosen)) return true;
    acc += -gen[i];
    chosen.pop_back();
    return subset_dfs(gen, i + 1, acc, target, chosen);
}

}  // namespace

std::optional<SumCertificate> subset_sum_certificate(const Zonotope& z, const QVec& target) {
    if (z.generators.size() > 20) throw GeneratorSetTooLarge();
    QVec acc(target.size());
    std::vector<int> chosen;
    if (subset_dfs(z.generators, 0, acc, target, chosen))
        return SumCertificate{target, chosen};
    return std::nullopt;
}

bool zt_membership(const Zonotope& z, const QVec& p) {
    // ZT form when center = 0; otherwise ZN_center, rewritten over t in [0, 1]
    // via the substitution t -> t + 1/2.
    QVec b = p;
    if (!is_zero(z.center)) {
        b = p - z.center;
        for (const auto& v : z.generators) b += Rational(1, 2) * v;
    }
    std::vector<Rational> upper(z.generators.size(), 1);
    return box_lp_feasible(z.generators, b, upper);
}

std::vector<QVec> telescoping_certificate(const RootSystem& rs, int k) {
    if (rs.label.family != Family::A && rs.label.family != Family::C)
        throw WrongType("telescoping construction applies to types A and C only");
    if (k < 0 || k >= rs.rank) throw IndexOutOfRange("k = " + std::to_string(k));

    std::vector<QVec> terms;
    QVec sum(static_cast<std::size_t>(rs.rank));
    for (int i = 0; i <= k; ++i) {
        // w_i = s_i ... s_1
        QVec v = alcove_vertex(rs, 1);
        for (int h = 1; h <= i; ++h) v = reflect(rs, rs.roots[rs.simple[h - 1]], v);

        // Step identity w_i(o_1) = -o_i + o_{i+1}, with o_0 = 0.
        QVec expected = alcove_vertex(rs, i + 1);
        if (i > 0) expected = expected - alcove_vertex(rs, i);
        if (v != expected) throw std::logic_error("telescoping step identity failed");

        if (std::find(terms.begin(), terms.end(), v) != terms.end())
            throw std::logic_error("telescoping terms are not distinct");
        terms.push_back(v);
        sum += v;
    }
    if (sum != alcove_vertex(rs, k + 1)) throw std::logic_error("telescoping sum failed");
    return terms;
}

EqualityReport zt_equals_polar(const RootSystem& rs, int j, const Rational& scale) {
    EqualityReport rep;
    rep.j = j;
    rep.scale = scale;

    Zonotope z = orbit_zonotope(rs, j, scale);
    ContainmentResult fwd = contained_in_polar(rs, z);
    rep.forward = fwd.contained;
    rep.violating_root = fwd.violating_root;

    rep.reverse = true;
    for (int i = 1; i <= rs.rank; ++i) {
        VertexInclusion inc;
        inc.vertex = alcove_vertex(rs, i);
        if (z.generators.size() <= 20) inc.certificate = subset_sum_certificate(z, inc.vertex);
        if (!inc.certificate) {
            inc.lp_member = zt_membership(z, inc.vertex);
            if (!inc.lp_member) rep.reverse = false;
        }
        rep.inclusions.push_back(std::move(inc));
    }
    rep.equal = rep.forward && rep.reverse;
    return rep;
}

}  // namespace rootlab
