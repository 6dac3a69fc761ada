#include "rootlab/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace rootlab {

json to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v.c) a.push_back(to_string(x));
    return a;
}

QVec qvec_from_json(const json& j) {
    QVec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = parse_rational(j[i].get<std::string>());
    return v;
}

namespace {

QVec make_qvec(std::initializer_list<int> xs) {
    QVec v(xs.size());
    std::size_t i = 0;
    for (int x : xs) v[i++] = x;
    return v;
}

QVec all_ones(int n) {
    QVec v(static_cast<std::size_t>(n));
    for (auto& x : v.c) x = 1;
    return v;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

WitnessRow witness_row(const TypeLabel& label) {
    check_label(label);
    const int n = label.rank;
    WitnessRow row;
    row.label = label;
    switch (label.family) {
        case Family::B:
            if (n <= 3) break;  // B_2 = C_2 and B_3 are zonotope types
            row.facet_index = 1;
            row.hyperplane_index = 1;
            row.word = {1};
            row.stated_weight = all_ones(n);  // omega_1 = alpha_1 + ... + alpha_n
            return row;
        case Family::D:
            row.facet_index = 1;
            row.hyperplane_index = 1;
            row.word = {1};
            // The published expansion of omega_1; it disagrees with the actual
            // coweight coordinates (half coefficients on the fork), which the
            // verifier flags without failing the case.
            row.stated_weight = all_ones(n);
            return row;
        case Family::E:
            if (n == 6) {
                row.facet_index = 1;
                row.hyperplane_index = 2;
                row.word = {2, 4, 3, 1};
                row.expected_image = {Rational(1, 3), 0, Rational(2, 3), 1, Rational(4, 3), Rational(2, 3)};
                row.stated_weight = {Rational(4, 3), 1, Rational(5, 3), 2, Rational(4, 3), Rational(2, 3)};
            } else if (n == 7) {
                row.facet_index = 7;
                row.hyperplane_index = 1;
                row.word = {1, 3, 4, 5, 6, 7};
                row.expected_image = {0, Rational(3, 2), 1, 2, Rational(3, 2), 1, Rational(1, 2)};
                row.stated_weight = {1, Rational(3, 2), 2, 3, Rational(5, 2), 2, Rational(3, 2)};
            } else {
                row.facet_index = 1;
                row.hyperplane_index = 8;
                row.word = {8, 7, 6, 5, 4, 3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1};
                row.expected_image = make_qvec({2, 3, 4, 6, 5, 4, 2, 0});
                row.stated_weight = make_qvec({4, 5, 7, 10, 8, 6, 4, 2});
                row.check_e8_intermediate = true;
            }
            return row;
        case Family::F:
            row.facet_index = 4;
            row.hyperplane_index = 4;
            row.word = {4, 3, 2, 3, 4};
            row.expected_image = make_qvec({1, 1, 1, 0});
            row.stated_weight = make_qvec({1, 2, 3, 2});
            return row;
        default:
            break;
    }
    throw MissingWitnessRow("no witness row for zonotope type " + label.str());
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["clause"] = r.clause;
    j["status"] = r.pass ? "pass" : "fail";
    j["witnesses"] = r.witnesses;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    r.clause = j.at("clause").get<std::string>();
    r.pass = j.at("status").get<std::string>() == "pass";
    r.witnesses = j.at("witnesses");
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

namespace {

json certificate_json(const SumCertificate& c) {
    json j;
    j["target"] = to_json(c.target);
    j["subset"] = c.subset;
    return j;
}

json equality_json(const EqualityReport& rep) {
    json j;
    j["j"] = rep.j;
    j["scale"] = to_string(rep.scale);
    j["forward_inclusion"] = rep.forward;
    if (rep.violating_root) j["violating_root"] = to_json(*rep.violating_root);
    j["reverse_inclusion"] = rep.reverse;
    json incs = json::array();
    for (const auto& inc : rep.inclusions) {
        json ij;
        ij["vertex"] = to_json(inc.vertex);
        if (inc.certificate)
            ij["certificate"] = certificate_json(*inc.certificate);
        else
            ij["lp_member"] = inc.lp_member;
        incs.push_back(std::move(ij));
    }
    j["vertex_inclusions"] = std::move(incs);
    j["equal"] = rep.equal;
    return j;
}

}  // namespace

VerificationReport verify_zonotope_case(Family family, int rank) {
    auto t0 = Clock::now();
    if (family == Family::B && rank == 2) family = Family::C;  // B_2 = C_2
    TypeLabel label{family, rank};
    check_label(label);

    int j = 1;
    Rational scale;
    int item = 1;
    if (family == Family::A) {
        scale = 1;  // o_1 = omega^vee_1
    } else if (family == Family::C) {
        scale = Rational(1, 2);  // o_1 = omega^vee_1 / 2
    } else if (family == Family::B && rank == 3) {
        j = 3;
        scale = Rational(1, 4);  // o_3 / 2
        item = 2;
    } else if (family == Family::G) {
        scale = Rational(1, 6);  // o_1 / 2
        item = 3;
    } else {
        throw NotAZonotopeType(label.str() + " is not one of A_n, C_n, B_3, G_2");
    }

    RootSystem rs = build_root_system(label);
    EqualityReport rep = zt_equals_polar(rs, j, scale);

    VerificationReport out;
    out.clause = "Thm2.2(" + std::to_string(item) + ")/" + label.str();
    out.witnesses["equality"] = equality_json(rep);
    bool pass = rep.equal;

    if (family == Family::A || family == Family::C) {
        bool telescoping_ok = true;
        json steps = json::array();
        for (int k = 0; k < rank; ++k) {
            try {
                auto terms = telescoping_certificate(rs, k);
                json t = json::array();
                for (const auto& v : terms) t.push_back(to_json(v));
                steps.push_back(std::move(t));
            } catch (const std::logic_error&) {
                telescoping_ok = false;
            }
        }
        out.witnesses["telescoping"] = std::move(steps);
        out.witnesses["telescoping_ok"] = telescoping_ok;
        pass = pass && telescoping_ok;
    }

    out.pass = pass;
    out.elapsed_ms = ms_since(t0);
    return out;
}

namespace {

// Highest root of the subsystem generated by alpha_1..alpha_6 inside E_8.
QVec e6_subsystem_highest_root(const RootSystem& rs) {
    QVec best;
    for (const auto& r : rs.roots) {
        if (r[6] != 0 || r[7] != 0) continue;
        if (best.size() == 0 || height(best) < height(r)) best = r;
    }
    return best;
}

}  // namespace

VerificationReport verify_nonzonotope_case(Family family, int rank) {
    auto t0 = Clock::now();
    TypeLabel label{family, rank};
    WitnessRow row = witness_row(label);
    RootSystem rs = build_root_system(label);
    const int i = row.facet_index;
    const int k = row.hyperplane_index;

    VerificationReport out;
    out.clause = "Thm2.2(4)/" + label.str();
    out.witnesses["facet_index"] = i;
    out.witnesses["hyperplane_index"] = k;
    out.witnesses["word"] = row.word;

    auto facets = standard_facet_indices(rs);
    bool facet_ok = std::find(facets.begin(), facets.end(), i) != facets.end();

    WeylWord w = word_from_simple(rs, row.word);
    const QVec& omega_i = dual_basis_vector(rs, DualKind::Weight, i);
    const QVec& cok = dual_basis_vector(rs, DualKind::Coweight, k);
    QVec image = apply_word(rs, w, omega_i);
    out.witnesses["image"] = to_json(image);

    bool orthogonal = rs.ip(image, cok) == 0;

    bool image_ok = true;
    if (row.expected_image) {
        image_ok = image == *row.expected_image;
    } else if (!row.word.empty()) {
        // The B/D rows state s_1(omega_1) = omega_1 - alpha_1 symbolically.
        QVec expected = omega_i;
        expected[0] -= 1;
        image_ok = image == expected;
    }

    if (row.stated_weight) {
        bool matches = omega_i == *row.stated_weight;
        out.witnesses["stated_weight"] = to_json(*row.stated_weight);
        out.witnesses["stated_weight_matches"] = matches;
        if (!matches)
            out.witnesses["note"] =
                "published expansion of the weight differs from its defining-property "
                "coordinates; the witness holds either way";
    }

    bool intermediate_ok = true;
    if (row.check_e8_intermediate) {
        // Inner block (letters 8..17) must send omega_1 - alpha_1 to omega_1 - theta_6.
        std::vector<int> inner(row.word.begin() + 7, row.word.end() - 1);
        QVec x = omega_i;
        x[0] -= 1;
        QVec y = apply_word(rs, word_from_simple(rs, inner), x);
        QVec theta6 = e6_subsystem_highest_root(rs);
        intermediate_ok = y == omega_i - theta6;
        out.witnesses["theta6"] = to_json(theta6);
        out.witnesses["e8_intermediate_ok"] = intermediate_ok;
    }

    QVec normal = apply_word(rs, inverse(w), cok);
    Facet facet = standard_facet(rs, i);
    CutWitness cut = hyperplane_cuts_facet(rs, normal, facet);
    out.witnesses["normal"] = to_json(normal);
    out.witnesses["barycenter"] = to_json(facet.barycenter);
    out.witnesses["cut"] = {{"cuts", cut.cuts},
                            {"barycenter_orthogonal", cut.barycenter_orthogonal},
                            {"positive", cut.positive},
                            {"negative", cut.negative},
                            {"zero", cut.zero}};

    bool arrangement_ok = true;
    if (rank <= 6) {
        auto hphi = standard_hyperplane_indices(rs);
        bool k_standard = std::find(hphi.begin(), hphi.end(), k) != hphi.end();
        out.witnesses["k_in_standard_set"] = k_standard;
        if (k_standard) {
            Arrangement arr = arrangement_normals(rs, hphi);
            QVec cn = canonical_normal(normal);
            arrangement_ok =
                std::binary_search(arr.normals.begin(), arr.normals.end(), cn, LexLess{});
            out.witnesses["normal_in_arrangement"] = arrangement_ok;
        } else {
            // The published row pairs this witness with a hyperplane index
            // outside the stored standard set; recorded, not failed.
            out.witnesses["note_hyperplane"] =
                "witness hyperplane index is not in the stored standard-index set";
        }
    }

    out.witnesses["facet_is_standard"] = facet_ok;
    out.witnesses["orthogonal"] = orthogonal;
    out.witnesses["image_matches"] = image_ok;
    out.pass = facet_ok && orthogonal && image_ok && intermediate_ok && cut.cuts && arrangement_ok;
    out.elapsed_ms = ms_since(t0);
    return out;
}

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> numer(-9, 9);
    std::uniform_int_distribution<int> denom(1, 3);
    return Rational(numer(rng), denom(rng));
}

QVec random_point(std::mt19937& rng, int n) {
    QVec v(static_cast<std::size_t>(n));
    for (auto& x : v.c) x = random_rational(rng);
    return v;
}

// Lemma 3.1: (base), (duale) and every suffix (dualeh) against apply_word.
bool check_expansion_identities(const RootSystem& rs, const WeylWord& w, const QVec& x,
                                long& pair_count) {
    Expansion e = expansion_nu_eta(rs, w);
    const std::size_t k = w.letters.size();

    QVec base = x;
    for (std::size_t t = 0; t < k; ++t) {
        const QVec& beta = rs.roots[w.letters[t]];
        base = base - rs.ip(x, rs.coroot(beta)) * e.nu[t];
    }
    QVec base2 = x;
    for (std::size_t t = 0; t < k; ++t) {
        const QVec& beta = rs.roots[w.letters[t]];
        base2 = base2 - rs.ip(x, beta) * rs.coroot(e.nu[t]);
    }
    QVec wx = apply_word(rs, w, x);
    if (base != wx || base2 != wx) return false;

    for (std::size_t h = 0; h < k; ++h) {
        QVec suffix = x;
        for (std::size_t t = h; t < k; ++t) {
            const QVec& beta = rs.roots[w.letters[t]];
            suffix = suffix - rs.ip(x, rs.coroot(e.eta[t])) * beta;
        }
        WeylWord wh;
        wh.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(h), w.letters.end());
        if (suffix != apply_word(rs, wh, x)) return false;
    }
    ++pair_count;
    return true;
}

}  // namespace

VerificationReport verify_structure_lemmas(Family family, int rank) {
    auto t0 = Clock::now();
    TypeLabel label{family, rank};
    check_label(label);
    if (rank > 6) throw InvalidRank("structure-lemma suite is limited to rank <= 6");

    RootSystem rs = build_root_system(label);
    VerificationReport out;
    out.clause = "Lemmas/" + label.str();

    // Lemma 3.1 on random words and points; fixed seed for reproducibility.
    std::mt19937 rng(20240u + static_cast<unsigned>(family) * 97u + static_cast<unsigned>(rank));
    std::uniform_int_distribution<int> len_dist(1, 8);
    std::uniform_int_distribution<int> simple_dist(0, rank - 1);
    std::uniform_int_distribution<int> root_dist(0, static_cast<int>(rs.roots.size()) - 1);
    long pairs = 0;
    bool expansions_ok = true;
    for (int trial = 0; trial < 30 && expansions_ok; ++trial) {
        WeylWord w;
        int len = len_dist(rng);
        bool simple_only = trial % 2 == 0;
        for (int t = 0; t < len; ++t)
            w.letters.push_back(simple_only ? rs.simple[simple_dist(rng)] : root_dist(rng));
        for (int p = 0; p < 5 && expansions_ok; ++p)
            expansions_ok = check_expansion_identities(rs, w, random_point(rng, rank), pairs);
    }
    out.witnesses["lemma31_pairs"] = pairs;
    out.witnesses["lemma31_ok"] = expansions_ok;

    // Lemma 4.2: (beta, omega^vee_j) = m_j mod r_j for every long root.
    bool congruence_ok = true;
    for (const auto& beta : rs.long_roots()) {
        for (int j = 1; j <= rank && congruence_ok; ++j) {
            Rational r = length_ratio(rs, j);
            Rational diff = beta[static_cast<std::size_t>(j - 1)] - Rational(rs.m[j - 1]);
            congruence_ok = den(diff / r) == 1;
        }
        if (!congruence_ok) break;
    }
    out.witnesses["lemma42_ok"] = congruence_ok;

    // Lemma 4.3: orbit counts at level m_j equal q_j.
    bool orbit_count_ok = true;
    json qs = json::array();
    for (int j = 1; j <= rank; ++j) {
        Orbit o = full_orbit(rs, dual_basis_vector(rs, DualKind::Coweight, j));
        Int at_level = 0;
        for (const auto& x : o.points)
            if (rs.ip(x, rs.theta) == Rational(rs.m[j - 1])) ++at_level;
        Int q = q_index(rs, j);
        qs.push_back({{"j", j},
                      {"q", q.convert_to<long long>()},
                      {"orbit_at_level", at_level.convert_to<long long>()}});
        if (at_level != q) orbit_count_ok = false;
    }
    out.witnesses["lemma43"] = std::move(qs);
    out.witnesses["lemma43_ok"] = orbit_count_ok;

    // Prop 4.4 where its hypothesis r_j = m_j holds: support value, sharp
    // scale threshold, and the sign gap below the top level.
    bool support_ok = true;
    json supports = json::array();
    for (int j = 1; j <= rank; ++j) {
        if (length_ratio(rs, j) != Rational(rs.m[j - 1])) continue;
        Zonotope z = orbit_zonotope(rs, j, 1);
        Rational support = zt_support(rs, z, rs.theta);
        Rational qm = Rational(q_index(rs, j)) * Rational(rs.m[j - 1]);
        bool value_ok = support == qm;

        Rational threshold = 1 / qm;
        bool at_ok = contained_in_polar(rs, orbit_zonotope(rs, j, threshold)).contained;
        bool above_fails =
            !contained_in_polar(rs, orbit_zonotope(rs, j, threshold + Rational(1, 1000))).contained;

        bool gap_ok = true;
        for (const auto& x : z.generators) {
            Rational p = rs.ip(x, rs.theta);
            if (p != Rational(rs.m[j - 1]) && p > 0) gap_ok = false;
        }
        supports.push_back({{"j", j},
                            {"support", to_string(support)},
                            {"expected", to_string(qm)},
                            {"threshold_tight", at_ok && above_fails},
                            {"sign_gap", gap_ok}});
        if (!(value_ok && at_ok && above_fails && gap_ok)) support_ok = false;
    }
    out.witnesses["prop44"] = std::move(supports);
    out.witnesses["prop44_ok"] = support_ok;

    out.pass = expansions_ok && congruence_ok && orbit_count_ok && support_ok;
    out.elapsed_ms = ms_since(t0);
    return out;
}

std::vector<VerificationReport> run_all(int max_rank) {
    if (max_rank < 1) throw InvalidRank("max_rank must be at least 1");
    std::vector<VerificationReport> reports;

    for (int n = 1; n <= max_rank; ++n) reports.push_back(verify_zonotope_case(Family::A, n));
    for (int n = 2; n <= max_rank; ++n) reports.push_back(verify_zonotope_case(Family::C, n));
    if (max_rank >= 3) reports.push_back(verify_zonotope_case(Family::B, 3));
    if (max_rank >= 2) reports.push_back(verify_zonotope_case(Family::G, 2));

    for (int n = 4; n <= max_rank; ++n) reports.push_back(verify_nonzonotope_case(Family::B, n));
    for (int n = 4; n <= max_rank; ++n) reports.push_back(verify_nonzonotope_case(Family::D, n));
    for (int n = 6; n <= std::min(max_rank, 8); ++n)
        reports.push_back(verify_nonzonotope_case(Family::E, n));
    if (max_rank >= 4) reports.push_back(verify_nonzonotope_case(Family::F, 4));

    // One aggregated structure-lemma report over the rank <= 4 types.
    if (max_rank >= 2) {
        auto t0 = Clock::now();
        VerificationReport agg;
        agg.clause = "Lemmas/rank<=4";
        agg.pass = true;
        json subs = json::array();
        std::vector<TypeLabel> lemma_types;
        for (int n = 1; n <= std::min(max_rank, 4); ++n) lemma_types.push_back({Family::A, n});
        for (int n = 3; n <= std::min(max_rank, 4); ++n) lemma_types.push_back({Family::B, n});
        for (int n = 2; n <= std::min(max_rank, 4); ++n) lemma_types.push_back({Family::C, n});
        if (max_rank >= 4) lemma_types.push_back({Family::D, 4});
        if (max_rank >= 4) lemma_types.push_back({Family::F, 4});
        lemma_types.push_back({Family::G, 2});
        for (const auto& t : lemma_types) {
            VerificationReport sub = verify_structure_lemmas(t.family, t.rank);
            agg.pass = agg.pass && sub.pass;
            subs.push_back(report_to_json(sub));
        }
        agg.witnesses["types"] = std::move(subs);
        agg.elapsed_ms = ms_since(t0);
        reports.push_back(std::move(agg));
    }
    return reports;
}

}  // namespace rootlab
