#include "rootlab/weyl.hpp"

#include <algorithm>
#include <set>

namespace rootlab {

WeylWord word_from_simple(const RootSystem& rs, const std::vector<int>& simple_indices) {
    WeylWord w;
    w.letters.reserve(simple_indices.size());
    for (int j : simple_indices) {
        if (j < 1 || j > rs.rank) throw IndexOutOfRange("simple index " + std::to_string(j));
        w.letters.push_back(rs.simple[j - 1]);
    }
    return w;
}

WeylWord inverse(const WeylWord& w) {
    WeylWord r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

namespace {

QVec reflect_unchecked(const RootSystem& rs, const QVec& beta, const QVec& x) {
    Rational pairing = 2 * rs.ip(x, beta) / rs.norm2(beta);
    QVec y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= pairing * beta[i];
    return y;
}

int simple_index_of_letter(const RootSystem& rs, int letter) {
    // 0-based simple index, or -1 when the letter's root is not simple.
    for (int i = 0; i < rs.rank; ++i)
        if (rs.simple[i] == letter) return i;
    return -1;
}

}  // namespace

QVec reflect(const RootSystem& rs, const QVec& beta, const QVec& x) {
    if (!rs.is_root(beta)) throw NotARoot();
    return reflect_unchecked(rs, beta, x);
}

QVec apply_word(const RootSystem& rs, const WeylWord& w, const QVec& x) {
    QVec y = x;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (*it < 0 || *it >= static_cast<int>(rs.roots.size())) throw NotARoot();
        y = reflect_unchecked(rs, rs.roots[*it], y);
    }
    return y;
}

Expansion expansion_nu_eta(const RootSystem& rs, const WeylWord& w) {
    const std::size_t k = w.letters.size();
    Expansion e;
    e.nu.resize(k);
    e.eta.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        int letter = w.letters[i];
        if (letter < 0 || letter >= static_cast<int>(rs.roots.size())) throw NotARoot();
        QVec v = rs.roots[letter];
        for (std::size_t p = i; p-- > 0;) v = reflect_unchecked(rs, rs.roots[w.letters[p]], v);
        e.nu[i] = v;
        v = rs.roots[letter];
        for (std::size_t p = i + 1; p < k; ++p) v = reflect_unchecked(rs, rs.roots[w.letters[p]], v);
        e.eta[i] = v;
    }
    return e;
}

InversionSet inversion_set(const RootSystem& rs, const WeylWord& w) {
    std::vector<int> letters;  // 0-based simple indices of a reduced word
    for (int letter : w.letters) {
        int s = simple_index_of_letter(rs, letter);
        if (s < 0) throw NonSimpleLetter();
        letters.push_back(s);
    }

    // Deletion: append one simple reflection at a time; when the length would
    // drop, the exchange condition names the letter to delete.
    std::vector<int> reduced;
    for (int j : letters) {
        QVec alpha(static_cast<std::size_t>(rs.rank));
        alpha[j] = 1;
        QVec image = alpha;  // u(alpha_j) for the current reduced prefix u
        for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
            QVec s(static_cast<std::size_t>(rs.rank));
            s[*it] = 1;
            image = reflect_unchecked(rs, s, image);
        }
        if (height(image) > 0) {
            reduced.push_back(j);
            continue;
        }
        QVec target = -image;  // in N(u): delete the letter with nu_i = -u(alpha_j)
        QVec running = target;
        bool deleted = false;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            // nu_i = s_{a_1}...s_{a_{i-1}}(alpha_{a_i}); peel prefixes off target instead.
            QVec alpha_i(static_cast<std::size_t>(rs.rank));
            alpha_i[reduced[i]] = 1;
            if (running == alpha_i) {
                reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
                deleted = true;
                break;
            }
            running = reflect_unchecked(rs, alpha_i, running);
        }
        if (!deleted) throw std::logic_error("exchange condition failed");
    }

    WeylWord rw;
    for (int j : reduced) rw.letters.push_back(rs.simple[j]);
    Expansion e = expansion_nu_eta(rs, rw);

    InversionSet out;
    out.reduced = reduced.size() == w.letters.size();
    out.n_w = e.nu;
    out.n_winv = e.eta;
    std::sort(out.n_w.begin(), out.n_w.end(), LexLess{});
    std::sort(out.n_winv.begin(), out.n_winv.end(), LexLess{});
    return out;
}

Orbit orbit(const RootSystem& rs, const QVec& x, const std::vector<int>& generators) {
    for (int j : generators)
        if (j < 1 || j > rs.rank) throw IndexOutOfRange("simple index " + std::to_string(j));
    std::set<QVec, LexLess> seen{x};
    std::vector<QVec> frontier{x};
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& v : frontier) {
            for (int j : generators) {
                QVec y = reflect_unchecked(rs, rs.roots[rs.simple[j - 1]], v);
                if (seen.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    Orbit o;
    o.base_point = x;
    o.generators = generators;
    o.points.assign(seen.begin(), seen.end());
    return o;
}

Orbit full_orbit(const RootSystem& rs, const QVec& x) {
    std::vector<int> gens(static_cast<std::size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i) gens[static_cast<std::size_t>(i)] = i + 1;
    return orbit(rs, x, gens);
}

std::vector<QVec> stabilizer_generators(const RootSystem& rs, const QVec& x) {
    std::vector<QVec> out;
    for (int i : rs.positive)
        if (rs.ip(x, rs.roots[i]) == 0) out.push_back(rs.roots[i]);
    return out;
}

std::vector<int> theta_perp_simples(const RootSystem& rs) {
    std::vector<int> out;
    for (int i = 0; i < rs.rank; ++i) {
        QVec e(static_cast<std::size_t>(rs.rank));
        e[i] = 1;
        if (rs.ip(rs.theta, e) == 0) out.push_back(i + 1);
    }
    return out;
}

Int q_index(const RootSystem& rs, int j) {
    if (j < 1 || j > rs.rank) throw IndexOutOfRange("index " + std::to_string(j));
    Orbit o = orbit(rs, rs.coweights[j - 1], theta_perp_simples(rs));
    return Int(o.points.size());
}

}  // namespace rootlab
