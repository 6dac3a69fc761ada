#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "rootlab/weyl.hpp"

using namespace rootlab;

namespace {

QVec basis_vec(int n, int i) {
    QVec e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

// A group element represented by the images of the basis vectors.
struct Element {
    std::vector<QVec> images;
    std::vector<int> word;  // 1-based simple letters, leftmost factor first

    bool operator<(const Element& o) const {
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (images[i] != o.images[i]) return lex_less(images[i], o.images[i]);
        }
        return false;
    }
};

QVec act(const Element& g, const QVec& x) {
    QVec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) y += x[i] * g.images[i];
    return y;
}

// Breadth-first enumeration of W with one geodesic (hence reduced) word each.
std::vector<Element> enumerate_group(const RootSystem& rs) {
    Element id;
    for (int i = 0; i < rs.rank; ++i) id.images.push_back(basis_vec(rs.rank, i));

    std::map<std::vector<std::vector<Rational>>, bool> seen;
    auto key = [](const Element& g) {
        std::vector<std::vector<Rational>> k;
        for (const auto& v : g.images) k.push_back(v.c);
        return k;
    };
    std::vector<Element> all{id};
    seen[key(id)] = true;
    std::size_t head = 0;
    while (head < all.size()) {
        Element g = all[head++];
        for (int j = 1; j <= rs.rank; ++j) {
            Element h;
            h.word = {j};
            h.word.insert(h.word.end(), g.word.begin(), g.word.end());
            for (const auto& v : g.images)
                h.images.push_back(reflect(rs, basis_vec(rs.rank, j - 1), v));
            if (!seen.count(key(h))) {
                seen[key(h)] = true;
                all.push_back(h);
            }
        }
    }
    return all;
}

}  // namespace

TEST_CASE("reflect is an involution, preserves the form, rejects non-roots") {
    RootSystem rs = build_root_system(Family::F, 4);
    QVec x{1, Rational(1, 2), -2, 3}, y{0, 1, Rational(2, 3), -1};
    for (const auto& beta : rs.roots) {
        QVec rx = reflect(rs, beta, x);
        CHECK(reflect(rs, beta, rx) == x);
        CHECK(rs.ip(rx, reflect(rs, beta, y)) == rs.ip(x, y));
    }
    CHECK_THROWS_AS(reflect(rs, QVec{1, 0, 0, 1}, x), NotARoot);
}

TEST_CASE("word application composes right to left and inverts by reversal") {
    RootSystem rs = build_root_system(Family::B, 3);
    WeylWord w = word_from_simple(rs, {1, 3, 2, 3, 1});
    QVec x{Rational(1, 2), -1, 3};
    // w(x) then w^{-1} returns x
    CHECK(apply_word(rs, inverse(w), apply_word(rs, w, x)) == x);
    // explicit right-to-left composition
    QVec manual = x;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        manual = reflect(rs, rs.roots[static_cast<std::size_t>(*it)], manual);
    CHECK(apply_word(rs, w, x) == manual);
    CHECK_THROWS_AS(word_from_simple(rs, {0}), IndexOutOfRange);
    CHECK_THROWS_AS(word_from_simple(rs, {4}), IndexOutOfRange);
}

TEST_CASE("expansion identities agree with direct application") {
    RootSystem rs = build_root_system(Family::C, 3);
    // Mixed word: simple letters plus the highest root.
    WeylWord w = word_from_simple(rs, {1, 2, 3, 2});
    w.letters.push_back(rs.root_index(rs.theta));
    Expansion e = expansion_nu_eta(rs, w);
    QVec x{2, Rational(-1, 3), 1};
    QVec via_nu = x;
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        via_nu = via_nu - rs.ip(x, rs.coroot(rs.roots[static_cast<std::size_t>(w.letters[i])])) * e.nu[i];
    CHECK(via_nu == apply_word(rs, w, x));
    for (std::size_t h = 0; h < w.letters.size(); ++h) {
        QVec suffix = x;
        for (std::size_t i = h; i < w.letters.size(); ++i)
            suffix = suffix - rs.ip(x, rs.coroot(e.eta[i])) * rs.roots[static_cast<std::size_t>(w.letters[i])];
        WeylWord wh;
        wh.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(h), w.letters.end());
        CHECK(suffix == apply_word(rs, wh, x));
    }
}

TEST_CASE("inversion sets: reduced words, deletion fallback, non-simple rejection") {
    RootSystem rs = build_root_system(Family::A, 2);
    InversionSet full = inversion_set(rs, word_from_simple(rs, {1, 2, 1}));
    CHECK(full.reduced);
    CHECK(full.n_w.size() == 3);  // the longest element inverts all of Phi+
    CHECK(full.n_w == full.n_winv);

    InversionSet square = inversion_set(rs, word_from_simple(rs, {1, 1}));
    CHECK_FALSE(square.reduced);
    CHECK(square.n_w.empty());

    InversionSet sandwich = inversion_set(rs, word_from_simple(rs, {2, 1, 1, 2}));
    CHECK_FALSE(sandwich.reduced);
    CHECK(sandwich.n_w.empty());

    WeylWord bad;
    bad.letters.push_back(rs.root_index(rs.theta));
    CHECK_THROWS_AS(inversion_set(rs, bad), NonSimpleLetter);
}

TEST_CASE("inversion set of a reduced word matches the direct definition") {
    RootSystem rs = build_root_system(Family::B, 3);
    WeylWord w = word_from_simple(rs, {2, 3, 1});
    InversionSet inv = inversion_set(rs, w);
    CHECK(inv.reduced);
    std::vector<QVec> direct;  // positive roots sent negative by w^{-1}
    for (const auto& beta : rs.positive_roots())
        if (height(apply_word(rs, inverse(w), beta)) < 0) direct.push_back(beta);
    std::sort(direct.begin(), direct.end(), LexLess{});
    CHECK(inv.n_w == direct);
}

TEST_CASE("orbits: canonical order, frozen sizes, zero barycenter") {
    RootSystem a3 = build_root_system(Family::A, 3);
    Orbit o = full_orbit(a3, alcove_vertex(a3, 1));
    CHECK(o.points.size() == 4);  // |W.o_1| = n+1 in type A
    CHECK(std::is_sorted(o.points.begin(), o.points.end(), LexLess{}));

    CHECK(full_orbit(build_root_system(Family::C, 3), alcove_vertex(build_root_system(Family::C, 3), 1))
              .points.size() == 6);  // 2n
    RootSystem b3 = build_root_system(Family::B, 3);
    CHECK(full_orbit(b3, alcove_vertex(b3, 3)).points.size() == 8);
    RootSystem g2 = build_root_system(Family::G, 2);
    CHECK(full_orbit(g2, alcove_vertex(g2, 1)).points.size() == 6);

    // Full-orbit barycenter is the zero vector.
    const TypeLabel labels[] = {{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::G, 2}};
    for (const auto& label : labels) {
        RootSystem rs = build_root_system(label);
        for (int j = 1; j <= rs.rank; ++j) {
            Orbit full = full_orbit(rs, dual_basis_vector(rs, DualKind::Coweight, j));
            QVec sum(static_cast<std::size_t>(rs.rank));
            for (const auto& p : full.points) sum += p;
            CHECK(is_zero(sum));
        }
    }
}

TEST_CASE("stabilizer generators and theta-perpendicular simples") {
    RootSystem a3 = build_root_system(Family::A, 3);
    CHECK(theta_perp_simples(a3) == std::vector<int>{2});
    RootSystem b3 = build_root_system(Family::B, 3);
    CHECK(theta_perp_simples(b3) == std::vector<int>{1, 3});

    // stab generators of omega_1^vee in A2: only alpha_2 among positives.
    RootSystem a2 = build_root_system(Family::A, 2);
    auto gens = stabilizer_generators(a2, dual_basis_vector(a2, DualKind::Coweight, 1));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == basis_vec(2, 1));
}

TEST_CASE("q_j indices match independently computed tables") {
    auto q_table = [](Family f, int n) {
        RootSystem rs = build_root_system(f, n);
        std::vector<long long> q;
        for (int j = 1; j <= n; ++j) q.push_back(q_index(rs, j).convert_to<long long>());
        return q;
    };
    CHECK(q_table(Family::A, 3) == std::vector<long long>{1, 2, 1});
    CHECK(q_table(Family::C, 3) == std::vector<long long>{1, 4, 4});
    CHECK(q_table(Family::B, 3) == std::vector<long long>{2, 1, 2});
    CHECK(q_table(Family::G, 2) == std::vector<long long>{2, 1});
    CHECK(q_table(Family::F, 4) == std::vector<long long>{1, 8, 12, 6});
    CHECK(q_table(Family::B, 4) == std::vector<long long>{2, 1, 4, 4});
    CHECK(q_table(Family::D, 4) == std::vector<long long>{2, 1, 2, 2});
}

TEST_CASE("minimal coset representatives: eta positivity, descent, coweight drop") {
    const TypeLabel labels[] = {{Family::A, 3}, {Family::B, 3}, {Family::C, 3}};
    for (const auto& label : labels) {
        RootSystem rs = build_root_system(label);
        auto group = enumerate_group(rs);
        CHECK(group.size() == (label.family == Family::A ? 24u : 48u));

        for (int j = 1; j <= rs.rank; ++j) {
            int found = 0;
            for (const auto& g : group) {
                if (g.word.empty()) continue;
                // unique right descent j: w(alpha_j) < 0, w(alpha_i) > 0 otherwise
                bool minimal = true;
                for (int i = 1; i <= rs.rank; ++i) {
                    Rational h = height(act(g, basis_vec(rs.rank, i - 1)));
                    if ((i == j) != (h < 0)) minimal = false;
                }
                if (!minimal) continue;
                ++found;

                WeylWord w = word_from_simple(rs, g.word);
                Expansion e = expansion_nu_eta(rs, w);
                // every eta has (omega_j^vee, eta) >= 1, i.e. positive alpha_j-coordinate
                for (const auto& eta : e.eta)
                    CHECK(eta[static_cast<std::size_t>(j - 1)] >= 1);

                // w(omega_j^vee) <= omega_j^vee - alpha_j^vee coordinatewise
                const QVec& cw = dual_basis_vector(rs, DualKind::Coweight, j);
                QVec drop = cw - rs.coroot(basis_vec(rs.rank, j - 1)) - apply_word(rs, w, cw);
                for (const auto& coord : drop.c) CHECK(coord >= 0);

                // every reduced expression ends with s_j: alpha_j inverts under w
                InversionSet inv = inversion_set(rs, w);
                CHECK(inv.reduced);
                CHECK(std::binary_search(inv.n_winv.begin(), inv.n_winv.end(),
                                         basis_vec(rs.rank, j - 1), LexLess{}));
            }
            CHECK(found > 0);
        }
    }
}
