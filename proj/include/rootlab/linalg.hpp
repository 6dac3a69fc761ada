#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rootlab/types.hpp"

namespace rootlab {

// Exact coordinate vector in the simple-root basis.
struct QVec {
    std::vector<Rational> c;

    QVec() = default;
    explicit QVec(std::size_t n) : c(n) {}
    QVec(std::initializer_list<Rational> xs) : c(xs) {}

    std::size_t size() const { return c.size(); }
    Rational& operator[](std::size_t i) { return c[i]; }
    const Rational& operator[](std::size_t i) const { return c[i]; }

    bool operator==(const QVec& o) const { return c == o.c; }
    bool operator!=(const QVec& o) const { return c != o.c; }
};

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Rational& s, const QVec& a);
QVec& operator+=(QVec& a, const QVec& b);

bool is_zero(const QVec& a);
Rational height(const QVec& a);  // sum of coordinates

// Strict total order: componentwise lexicographic. Used for all canonical sorts.
bool lex_less(const QVec& a, const QVec& b);
struct LexLess {
    bool operator()(const QVec& a, const QVec& b) const { return lex_less(a, b); }
};

std::string to_string(const QVec& v);

// Square rational matrix, row major.
struct QMat {
    std::vector<std::vector<Rational>> rows;

    QMat() = default;
    explicit QMat(std::size_t n) : rows(n, std::vector<Rational>(n)) {}

    std::size_t size() const { return rows.size(); }
    std::vector<Rational>& operator[](std::size_t i) { return rows[i]; }
    const std::vector<Rational>& operator[](std::size_t i) const { return rows[i]; }
};

// x^T G y
Rational bilinear(const QMat& g, const QVec& x, const QVec& y);

// Solves G x = b by fraction-free (Bareiss) elimination over the integers
// after clearing denominators. Throws SingularMatrix.
QVec solve_linear(const QMat& g, const QVec& b);

// Unique positive multiple of v that is a primitive integer vector, negated
// when its first nonzero coordinate is negative. Throws ZeroVector.
QVec canonical_normal(const QVec& v);

// Rank of the span of the given vectors (plain coordinate rank).
std::size_t span_rank(const std::vector<QVec>& vs);

}  // namespace rootlab
