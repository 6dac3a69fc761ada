#pragma once

#include <optional>
#include <vector>

#include "rootlab/weyl.hpp"

namespace rootlab {

// Half-space (normal, x) <= offset in the root-system bilinear form.
struct HalfSpace {
    QVec normal;
    Rational offset;

    bool operator==(const HalfSpace&) const = default;
};

struct HPolytope {
    std::vector<HalfSpace> halfspaces;
};

// Standard parabolic facet F_i = conv{ alpha in Phi+ : (omega^vee_i, alpha) = m_i }.
struct Facet {
    int index = 0;  // 1-based
    std::vector<QVec> vertex_roots;
    QVec barycenter;
    Rational weight_multiple;  // barycenter = weight_multiple * omega_i, exact
};

// Normals of the arrangement H_P = { w(omega^vee_k)^perp : w in W, k in H_Phi },
// deduplicated in canonical form (one representative per +- pair).
struct Arrangement {
    std::vector<int> standard_indices;  // H_Phi, 1-based
    std::vector<QVec> normals;
};

struct CutWitness {
    bool cuts = false;  // barycenter on the hyperplane AND mixed signs on the vertex roots
    bool barycenter_orthogonal = false;
    int positive = 0, negative = 0, zero = 0;
    std::optional<QVec> positive_example, negative_example;
};

// One half-space (beta, x) <= 1 per long root beta.
HPolytope polar_hrep(const RootSystem& rs);

// Vertices of P^* = union of the W-orbits of the alcove vertices o_i.
std::vector<QVec> polar_vertices(const RootSystem& rs);

// 1-based i such that F_i is a facet of P: the extended Dynkin diagram stays
// connected after removing alpha_i.
std::vector<int> standard_facet_indices(const RootSystem& rs);

Facet standard_facet(const RootSystem& rs, int i);

// H_Phi per type (stored data, not derived).
std::vector<int> standard_hyperplane_indices(const RootSystem& rs);

// Full enumeration is capped at rank 6 (RankTooLargeForFullArrangement).
Arrangement arrangement_normals(const RootSystem& rs, const std::vector<int>& standard_indices);

// The hyperplane normal^perp meets the relative interior of the facet exactly
// when it contains the barycenter and the vertex roots take both signs.
CutWitness hyperplane_cuts_facet(const RootSystem& rs, const QVec& normal, const Facet& facet);

}  // namespace rootlab
