#include "rootlab/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rootlab {

std::string to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E: return "E";
        case Family::F: return "F";
        case Family::G: return "G";
    }
    throw std::logic_error("unreachable");
}

Family parse_family(const std::string& s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'A': return Family::A;
            case 'B': return Family::B;
            case 'C': return Family::C;
            case 'D': return Family::D;
            case 'E': return Family::E;
            case 'F': return Family::F;
            case 'G': return Family::G;
        }
    }
    throw std::invalid_argument("unknown family: " + s);
}

void check_label(const TypeLabel& label) {
    const int n = label.rank;
    bool ok = false;
    switch (label.family) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 2; break;
        case Family::D: ok = n >= 4; break;
        case Family::E: ok = n >= 6 && n <= 8; break;
        case Family::F: ok = n == 4; break;
        case Family::G: ok = n == 2; break;
    }
    if (!ok) throw InvalidRank("rank " + std::to_string(n) + " is not admissible for family " +
                               to_string(label.family));
}

namespace {

// Gram matrix per Bourbaki numbering, long roots at squared length 2.
QMat make_gram(const TypeLabel& label) {
    const int n = label.rank;
    std::vector<Rational> d(n, 2);
    std::map<std::pair<int, int>, Rational> bond;  // 0-based
    switch (label.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) bond[{i, i + 1}] = -1;
            break;
        case Family::B:
            d[n - 1] = 1;
            for (int i = 0; i + 1 < n; ++i) bond[{i, i + 1}] = -1;
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) d[i] = 1;
            for (int i = 0; i + 2 < n; ++i) bond[{i, i + 1}] = Rational(-1, 2);
            bond[{n - 2, n - 1}] = -1;
            break;
        case Family::D:
            for (int i = 0; i + 2 < n - 1; ++i) bond[{i, i + 1}] = -1;
            bond[{n - 3, n - 2}] = -1;
            bond[{n - 3, n - 1}] = -1;
            break;
        case Family::E:
            bond[{0, 2}] = -1;
            bond[{1, 3}] = -1;
            for (int i = 2; i + 1 < n; ++i) bond[{i, i + 1}] = -1;
            break;
        case Family::F:
            d = {2, 2, 1, 1};
            bond[{0, 1}] = -1;
            bond[{1, 2}] = -1;
            bond[{2, 3}] = Rational(-1, 2);
            break;
        case Family::G:
            d = {Rational(2, 3), 2};
            bond[{0, 1}] = -1;
            break;
    }
    QMat g(n);
    for (int i = 0; i < n; ++i) g[i][i] = d[i];
    for (const auto& [e, v] : bond) {
        g[e.first][e.second] = v;
        g[e.second][e.first] = v;
    }
    return g;
}

// s_j(x) = x - <x, alpha_j^vee> alpha_j
QVec simple_reflect(const QMat& g, int j, const QVec& x) {
    Rational pairing = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) pairing += x[i] * g[i][j];
    pairing = 2 * pairing / g[j][j];
    QVec y = x;
    y[j] -= pairing;
    return y;
}

struct HeightLexLess {
    bool operator()(const QVec& a, const QVec& b) const {
        Rational ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return lex_less(a, b);
    }
};

}  // namespace

QVec RootSystem::coroot(const QVec& beta) const { return (2 / norm2(beta)) * beta; }

int RootSystem::root_index(const QVec& v) const {
    auto it = std::lower_bound(roots.begin(), roots.end(), v, HeightLexLess{});
    if (it != roots.end() && *it == v) return static_cast<int>(it - roots.begin());
    return -1;
}

std::vector<QVec> RootSystem::long_roots() const {
    std::vector<QVec> out;
    for (const auto& r : roots)
        if (is_long(r)) out.push_back(r);
    return out;
}

std::vector<QVec> RootSystem::positive_roots() const {
    std::vector<QVec> out;
    out.reserve(positive.size());
    for (int i : positive) out.push_back(roots[i]);
    return out;
}

RootSystem build_root_system(const TypeLabel& label) {
    check_label(label);
    const int n = label.rank;
    RootSystem rs;
    rs.label = label;
    rs.rank = n;
    rs.gram = make_gram(label);

    // Closure of the simple roots under the simple reflections.
    std::set<QVec, HeightLexLess> closed;
    std::vector<QVec> frontier;
    for (int i = 0; i < n; ++i) {
        QVec e(static_cast<std::size_t>(n));
        e[i] = 1;
        closed.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& x : frontier) {
            for (int j = 0; j < n; ++j) {
                QVec y = simple_reflect(rs.gram, j, x);
                if (closed.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    rs.roots.assign(closed.begin(), closed.end());

    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        if (height(rs.roots[i]) > 0) rs.positive.push_back(static_cast<int>(i));

    rs.simple.resize(n);
    for (int i = 0; i < n; ++i) {
        QVec e(static_cast<std::size_t>(n));
        e[i] = 1;
        rs.simple[i] = rs.root_index(e);
    }

    // theta is the last root in (height, lex) order; sanity: long and dominant.
    rs.theta = rs.roots.back();
    if (rs.norm2(rs.theta) != 2)
        throw std::logic_error("highest root is not long after normalization");
    for (int i = 0; i < n; ++i) {
        QVec e(static_cast<std::size_t>(n));
        e[i] = 1;
        if (rs.ip(rs.theta, e) < 0) throw std::logic_error("highest root is not dominant");
    }
    rs.m.resize(n);
    for (int i = 0; i < n; ++i) {
        if (den(rs.theta[i]) != 1 || rs.theta[i] <= 0)
            throw std::logic_error("non-positive-integral theta coefficient");
        rs.m[i] = num(rs.theta[i]);
    }

    rs.coweights.resize(n);
    rs.weights.resize(n);
    rs.alcove_vertices.resize(n);
    for (int j = 0; j < n; ++j) {
        QVec ej(static_cast<std::size_t>(n));
        ej[j] = 1;
        rs.coweights[j] = solve_linear(rs.gram, ej);
        ej[j] = rs.gram[j][j] / 2;
        rs.weights[j] = solve_linear(rs.gram, ej);
        rs.alcove_vertices[j] = Rational(1, rs.m[j]) * rs.coweights[j];
    }
    return rs;
}

const std::vector<QVec>& enumerate_roots(const RootSystem& rs) { return rs.roots; }

std::pair<QVec, std::vector<Int>> highest_root(const RootSystem& rs) {
    return {rs.theta, rs.m};
}

const QVec& dual_basis_vector(const RootSystem& rs, DualKind kind, int j) {
    if (j < 1 || j > rs.rank) throw IndexOutOfRange("index " + std::to_string(j));
    return kind == DualKind::Coweight ? rs.coweights[j - 1] : rs.weights[j - 1];
}

const QVec& alcove_vertex(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank) throw IndexOutOfRange("index " + std::to_string(i));
    return rs.alcove_vertices[i - 1];
}

Rational length_ratio(const RootSystem& rs, int j) {
    if (j < 1 || j > rs.rank) throw IndexOutOfRange("index " + std::to_string(j));
    return 2 / rs.gram[j - 1][j - 1];
}

}  // namespace rootlab
