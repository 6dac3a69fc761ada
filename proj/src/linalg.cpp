#include "rootlab/linalg.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <cassert>
#include <sstream>

namespace rootlab {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << num(q);
    if (den(q) != 1) os << '/' << den(q);
    return os.str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(p, q);
}

QVec operator+(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec operator-(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec operator-(const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

QVec operator*(const Rational& s, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

QVec& operator+=(QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

bool is_zero(const QVec& a) {
    for (const auto& x : a.c)
        if (x != 0) return false;
    return true;
}

Rational height(const QVec& a) {
    Rational h = 0;
    for (const auto& x : a.c) h += x;
    return h;
}

bool lex_less(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

Rational bilinear(const QMat& g, const QVec& x, const QVec& y) {
    assert(x.size() == g.size() && y.size() == g.size());
    Rational r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) row += g[i][j] * y[j];
        r += x[i] * row;
    }
    return r;
}

QVec solve_linear(const QMat& g, const QVec& b) {
    const std::size_t n = g.size();
    assert(b.size() == n);

    // Clear denominators row by row; work on the integer augmented matrix.
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) l = boost::integer::lcm(l, den(g[i][j]));
        l = boost::integer::lcm(l, den(b[i]));
        for (std::size_t j = 0; j < n; ++j) m[i][j] = num(g[i][j]) * (l / den(g[i][j]));
        m[i][n] = num(b[i]) * (l / den(b[i]));
    }

    // Bareiss: exact integer division keeps entries as minors of the input.
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) throw SingularMatrix();
        if (piv != k) std::swap(m[piv], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    QVec x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc = m[ii][n];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
        x[ii] = acc / Rational(m[ii][ii]);
    }
    return x;
}

QVec canonical_normal(const QVec& v) {
    if (is_zero(v)) throw ZeroVector();
    Int l = 1;
    for (const auto& x : v.c) l = boost::integer::lcm(l, den(x));
    std::vector<Int> w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = num(v[i]) * (l / den(v[i]));
        g = boost::integer::gcd(g, w[i]);
    }
    bool flip = false;
    for (const auto& x : w) {
        if (x != 0) {
            flip = x < 0;
            break;
        }
    }
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int q = w[i] / g;
        r[i] = Rational(flip ? Int(-q) : q);
    }
    return r;
}

std::size_t span_rank(const std::vector<QVec>& vs) {
    if (vs.empty()) return 0;
    std::vector<QVec> rows = vs;
    const std::size_t n = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace rootlab
