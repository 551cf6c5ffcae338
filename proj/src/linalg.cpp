#include "pachner/linalg.hpp"

#include "pachner/errors.hpp"

#include <cstddef>
#include <utility>

namespace pachner {

namespace {

// Least common multiple of all denominators in the matrix.
Integer denominator_lcm(const Matrix& m) {
    Integer l = 1;
    for (const auto& row : m)
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l;
}

} // namespace

int sign_of_det(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw dimension_mismatch("sign_of_det: matrix not square");

    // Clear denominators with one global factor; a positive scale does not
    // change the sign of the determinant.
    const Integer scale = denominator_lcm(m);
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = m[i][j] * Rational(scale);
            a[i][j] = scaled.get_num(); // denominator is 1 after scaling
        }

    // Fraction-free Bareiss elimination.
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    const int s = sgn(a[n - 1][n - 1]);
    return s == 0 ? 0 : s * sign;
}

Matrix rref(Matrix m, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    if (m.empty()) return m;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivots) pivots->push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r, Row(cols, Rational(0)));
    return m;
}

int rank(const Matrix& m) {
    if (m.empty()) return 0;
    std::vector<int> piv;
    rref(m, &piv);
    return static_cast<int>(piv.size());
}

Row primitive_integer(const Row& v) {
    Integer l = 1;
    bool all_zero = true;
    for (const auto& x : v) {
        if (x != 0) all_zero = false;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (all_zero) return Row(v.size(), Rational(0));
    Integer g = 0;
    std::vector<Integer> scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * Rational(l);
        scaled[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
    }
    Row out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), scaled[i].get_mpz_t(), g.get_mpz_t());
        out[i] = Rational(q);
    }
    return out;
}

Matrix kernel_basis(const Matrix& m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    std::vector<int> piv;
    const Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(cols, false);
    for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;

    Matrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Row v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[static_cast<std::size_t>(piv[i])] = -r[i][f];
        basis.push_back(primitive_integer(v));
    }
    return basis;
}

bool lp_feasible_eq_nonneg(const Matrix& a, const Row& b) {
    const std::size_t m = a.size();
    if (m == 0) return true;
    const std::size_t n = a[0].size();
    if (b.size() != m) throw dimension_mismatch("lp: rhs size");

    // Phase-1 tableau: minimize the sum of artificial variables.
    // Columns: n structural + m artificial, then the rhs.
    Matrix t(m, Row(n + m + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const int flip = (sign_of(b[i]) < 0) ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j] * flip;
        t[i][n + i] = 1;
        t[i][n + m] = b[i] * flip;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Objective row for sum of artificials expressed in nonbasic variables.
    Row z(n + m + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n + m; ++j) z[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) z[n + i] = 0;

    for (;;) {
        // Bland's rule: smallest index with negative reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (sign_of(z[j]) < 0) { enter = j; break; }
        if (enter == n + m) break;

        // Ratio test, ties broken by smallest basis index (Bland).
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sign_of(t[i][enter]) <= 0) continue;
            Rational ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break; // unbounded below cannot happen in phase 1

        const Rational pivot = t[leave][enter];
        for (auto& x : t[leave]) x /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        {
            const Rational f = z[enter];
            if (f != 0)
                for (std::size_t j = 0; j <= n + m; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // Feasible iff all artificials are zero, i.e. objective value is zero.
    Rational value(0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) value += t[i][n + m];
    return value == 0;
}

} // namespace pachner
