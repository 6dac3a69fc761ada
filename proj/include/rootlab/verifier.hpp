#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootlab/polytopes.hpp"
#include "rootlab/zonotope.hpp"

namespace rootlab {

using json = nlohmann::ordered_json;

json to_json(const QVec& v);
QVec qvec_from_json(const json& j);

// One row of the witness table for the non-zonotope types: the triple
// (facet index i, hyperplane index k, word w) with w(omega_i) perp omega^vee_k.
struct WitnessRow {
    TypeLabel label;
    int facet_index = 0;       // i
    int hyperplane_index = 0;  // k
    std::vector<int> word;     // 1-based simple letters, leftmost factor first
    std::optional<QVec> expected_image;        // alpha-coordinates of w(omega_i)
    std::optional<QVec> stated_weight;         // the table's printed expansion of omega_i
    bool check_e8_intermediate = false;        // inner block sends omega_1 - alpha_1 to omega_1 - theta_6
};

// Throws MissingWitnessRow for types without a row (the zonotope types).
WitnessRow witness_row(const TypeLabel& label);

struct VerificationReport {
    std::string clause;
    bool pass = false;
    json witnesses;
    double elapsed_ms = 0.0;

    bool operator==(const VerificationReport&) const = default;
};

json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);

// Thm 2.2 (1)-(3): runs the zonotope equality with the published generator
// scale (o_1 for A/C, o_3/2 for B_3, o_1/2 for G_2), plus the telescoping
// certificates for types A and C. Throws NotAZonotopeType otherwise.
VerificationReport verify_zonotope_case(Family family, int rank);

// Thm 2.2 (4): validates the witness row, the facet cut, and (rank <= 6) the
// membership of the witness normal in the full arrangement.
VerificationReport verify_nonzonotope_case(Family family, int rank);

// Lemma 3.1 identities on random words, Lemma 4.2 congruences, Lemma 4.3
// orbit counts, Prop 4.4 support values and scale threshold.
VerificationReport verify_structure_lemmas(Family family, int rank);

// Deterministic case list: zonotope cases A_1..A_maxrank, C_2..C_maxrank,
// B_3, G_2; non-zonotope cases B_4.., D_4.., E_6..E_8, F_4 (each when its
// rank fits); one aggregated structure-lemma report.
std::vector<VerificationReport> run_all(int max_rank);

}  // namespace rootlab
