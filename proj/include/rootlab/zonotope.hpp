#pragma once

#include <optional>
#include <vector>

#include "rootlab/root_system.hpp"

namespace rootlab {

// Generator multiset S with center p: ZN_p(S) = p + sum t_i v_i, t_i in [-1/2, 1/2].
// With center 0 and t_i in [0, 1] this is ZT(S); the two coincide when the
// generators sum to zero, which holds for every full W-orbit.
struct Zonotope {
    std::vector<QVec> generators;
    QVec center;
};

// ZT(W . c omega^vee_j), 1-based j; generators in canonical sorted order.
Zonotope orbit_zonotope(const RootSystem& rs, int j, const Rational& scale);

// max of (x, d) over ZT(S) = sum of the positive pairings of the generators.
Rational zt_support(const RootSystem& rs, const Zonotope& z, const QVec& d);

struct ContainmentResult {
    bool contained = false;
    std::optional<QVec> violating_root;  // a long root beta with support > 1
};

// ZT(S) subset of P^* iff zt_support(., beta) <= 1 for every long root beta.
// Checking all long roots keeps the test valid for non-W-stable S.
ContainmentResult contained_in_polar(const RootSystem& rs, const Zonotope& z);

struct SumCertificate {
    QVec target;
    std::vector<int> subset;  // generator indices, increasing
};

// Exhaustive search, |S| <= 20 (GeneratorSetTooLarge otherwise); the first
// subset in canonical depth-first order, or definitive absence.
std::optional<SumCertificate> subset_sum_certificate(const Zonotope& z, const QVec& target);

// Exact feasibility of p = sum t_i v_i with t_i in [0, 1], by rational LP.
bool zt_membership(const Zonotope& z, const QVec& p);

// Types A and C only, 0 <= k < n: returns [w_0(o_1), ..., w_k(o_1)] for
// w_i = s_i ... s_1; pairwise distinct, summing exactly to o_{k+1}, with the
// step identity w_h(o_1) = -o_h + o_{h+1}.
std::vector<QVec> telescoping_certificate(const RootSystem& rs, int k);

struct VertexInclusion {
    QVec vertex;  // o_i
    std::optional<SumCertificate> certificate;
    bool lp_member = false;  // LP fallback result when no certificate exists
};

struct EqualityReport {
    int j = 0;
    Rational scale;
    bool forward = false;  // ZT(S) subset of P^*
    std::optional<QVec> violating_root;
    bool reverse = false;  // every o_i reachable, hence P^* subset of ZT(S)
    std::vector<VertexInclusion> inclusions;
    bool equal = false;
};

EqualityReport zt_equals_polar(const RootSystem& rs, int j, const Rational& scale);

}  // namespace rootlab
