#include "rootlab/simplex.hpp"

#include <cassert>

namespace rootlab {

// Standard-form tableau: rows are A x = b plus x_i + s_i = upper_i, one
// artificial variable per row, minimize the sum of artificials. Bland's rule
// (lowest eligible index enters, lowest-index row among minimum ratios
// leaves) guarantees termination with no tolerance decisions.
bool box_lp_feasible(const std::vector<QVec>& columns, const QVec& b,
                     const std::vector<Rational>& upper) {
    const std::size_t k = columns.size();
    const std::size_t n = b.size();
    assert(upper.size() == k);
    const std::size_t rows = n + k;
    const std::size_t structural = 2 * k;      // x_i then s_i
    const std::size_t cols = structural + rows;  // plus artificials

    // tab[r] = coefficients | rhs
    std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(cols + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < k; ++i) tab[r][i] = columns[i][r];
        tab[r][cols] = b[r];
    }
    for (std::size_t i = 0; i < k; ++i) {
        tab[n + i][i] = 1;
        tab[n + i][k + i] = 1;
        tab[n + i][cols] = upper[i];
    }
    for (std::size_t r = 0; r < rows; ++r) {
        if (tab[r][cols] < 0)
            for (auto& v : tab[r]) v = -v;
        tab[r][structural + r] = 1;
    }

    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = structural + r;

    // Reduced objective: minimize sum of artificials; z[j] holds c_j - sum of
    // basic rows through column j (negated convention: entering when z[j] < 0).
    std::vector<Rational> z(cols + 1);
    for (std::size_t j = 0; j <= cols; ++j) {
        Rational s = 0;
        for (std::size_t r = 0; r < rows; ++r) s += tab[r][j];
        z[j] = (j >= structural && j < cols ? Rational(1) : Rational(0)) - s;
    }

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (z[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = rows;
        Rational best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rational ratio = tab[r][cols] / tab[r][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded cannot happen for phase 1; bail out

        Rational piv = tab[leave][enter];
        for (auto& v : tab[leave]) v /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            Rational f = tab[r][enter];
            for (std::size_t j = 0; j <= cols; ++j) tab[r][j] -= f * tab[leave][j];
        }
        Rational fz = z[enter];
        if (fz != 0)
            for (std::size_t j = 0; j <= cols; ++j) z[j] -= fz * tab[leave][j];
        basis[leave] = enter;
    }

    // Feasible iff all artificials are zero.
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= structural && tab[r][cols] != 0) return false;
    return true;
}

}  // namespace rootlab
