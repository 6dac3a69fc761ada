#pragma once

#include <string>
#include <vector>

#include "rootlab/linalg.hpp"

namespace rootlab {

enum class Family { A, B, C, D, E, F, G };

std::string to_string(Family f);
Family parse_family(const std::string& s);

struct TypeLabel {
    Family family;
    int rank;

    std::string str() const { return to_string(family) + std::to_string(rank); }
    bool operator==(const TypeLabel&) const = default;
};

// Throws InvalidRank unless the rank is admissible for the family
// (A: n>=1, B: n>=2, C: n>=2, D: n>=4, E: 6..8, F: 4, G: 2).
void check_label(const TypeLabel& label);

// Irreducible crystallographic root system in Bourbaki numbering, with all
// geometry in simple-root coordinates. Long roots are normalized to squared
// length 2; the bilinear form is carried explicitly as the Gram matrix.
// Immutable after build_root_system.
struct RootSystem {
    TypeLabel label;
    int rank = 0;
    QMat gram;  // gram[i][j] = (alpha_i, alpha_j)

    // All roots, sorted by height then lexicographically (negatives first).
    std::vector<QVec> roots;
    std::vector<int> positive;  // indices into roots, same sort order
    std::vector<int> simple;    // simple[i] = index of alpha_{i+1} in roots

    QVec theta;
    std::vector<Int> m;  // theta = sum m_i alpha_i

    std::vector<QVec> coweights;       // coweights[i] = omega^vee_{i+1}
    std::vector<QVec> weights;         // weights[i]   = omega_{i+1}
    std::vector<QVec> alcove_vertices; // o_{i+1} = omega^vee_{i+1} / m_{i+1}

    Rational ip(const QVec& x, const QVec& y) const { return bilinear(gram, x, y); }
    Rational norm2(const QVec& x) const { return bilinear(gram, x, x); }
    QVec coroot(const QVec& beta) const;  // 2 beta / (beta, beta)
    bool is_long(const QVec& beta) const { return norm2(beta) == 2; }

    int root_index(const QVec& v) const;  // -1 when v is not a root
    bool is_root(const QVec& v) const { return root_index(v) >= 0; }

    std::vector<QVec> long_roots() const;
    std::vector<QVec> positive_roots() const;
};

RootSystem build_root_system(const TypeLabel& label);
inline RootSystem build_root_system(Family f, int n) { return build_root_system(TypeLabel{f, n}); }

// Deterministic root list (the same order as rs.roots).
const std::vector<QVec>& enumerate_roots(const RootSystem& rs);

// theta with its simple-root coefficients.
std::pair<QVec, std::vector<Int>> highest_root(const RootSystem& rs);

enum class DualKind { Weight, Coweight };

// 1-based index j. Coweight: (x, alpha_i) = delta_ij. Weight: (x, alpha_i^vee) = delta_ij.
const QVec& dual_basis_vector(const RootSystem& rs, DualKind kind, int j);

// o_i = omega^vee_i / m_i, 1-based.
const QVec& alcove_vertex(const RootSystem& rs, int i);

// r_j = |theta|^2 / |alpha_j|^2, 1-based.
Rational length_ratio(const RootSystem& rs, int j);

}  // namespace rootlab
