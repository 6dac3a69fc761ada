#pragma once

#include <vector>

#include "rootlab/root_system.hpp"

namespace rootlab {

// A product of reflections s_{beta_1} ... s_{beta_k}; letters are indices
// into rs.roots. The empty word is the identity. Applied right to left.
struct WeylWord {
    std::vector<int> letters;

    bool operator==(const WeylWord&) const = default;
};

// Word over simple reflections, 1-based simple indices.
WeylWord word_from_simple(const RootSystem& rs, const std::vector<int>& simple_indices);

// Inverse of a product of reflections: the reversed letter list.
WeylWord inverse(const WeylWord& w);

// s_beta(x) = x - (x, beta^vee) beta. Throws NotARoot.
QVec reflect(const RootSystem& rs, const QVec& beta, const QVec& x);

QVec apply_word(const RootSystem& rs, const WeylWord& w, const QVec& x);

// nu_i = s_{beta_1}...s_{beta_{i-1}}(beta_i), eta_i = s_{beta_k}...s_{beta_{i+1}}(beta_i).
// For every x: w(x) = x - sum (x, beta_i^vee) nu_i = x - sum (x, eta_i^vee) beta_i,
// and the suffix w_h(x) = x - sum_{i>=h} (x, eta_i^vee) beta_i.
struct Expansion {
    std::vector<QVec> nu;
    std::vector<QVec> eta;
};
Expansion expansion_nu_eta(const RootSystem& rs, const WeylWord& w);

struct InversionSet {
    std::vector<QVec> n_w;     // N(w), canonically sorted
    std::vector<QVec> n_winv;  // N(w^-1)
    bool reduced = false;      // whether the input word was reduced
};

// Requires simple letters (NonSimpleLetter otherwise). A non-reduced input is
// legal: it is first reduced by deletion, and reduced is reported as false.
InversionSet inversion_set(const RootSystem& rs, const WeylWord& w);

struct Orbit {
    QVec base_point;
    std::vector<int> generators;  // 1-based simple indices
    std::vector<QVec> points;     // canonically sorted, exact dedup
};

// Breadth-first closure of x under the listed simple reflections.
Orbit orbit(const RootSystem& rs, const QVec& x, const std::vector<int>& generators);
Orbit full_orbit(const RootSystem& rs, const QVec& x);

// { beta in Phi+ : (x, beta) = 0 }; generates stab_W(x).
std::vector<QVec> stabilizer_generators(const RootSystem& rs, const QVec& x);

// 1-based simple indices i with (alpha_i, theta) = 0.
std::vector<int> theta_perp_simples(const RootSystem& rs);

// q_j = [W_0 : W_0^j] = size of the W_0-orbit of omega^vee_j, 1-based j.
Int q_index(const RootSystem& rs, int j);

}  // namespace rootlab
