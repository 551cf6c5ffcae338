#ifndef PACHNER_LINALG_HPP
#define PACHNER_LINALG_HPP

#include "pachner/rational.hpp"

#include <vector>

namespace pachner {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

// Sign of det(m) for a square matrix; exact. Clears denominators globally and
// runs fraction-free Bareiss elimination over integers.
int sign_of_det(const Matrix& m);

// Row rank over the rationals.
int rank(const Matrix& m);

// Reduced row-echelon form; fills pivot column indices if requested.
Matrix rref(Matrix m, std::vector<int>* pivots = nullptr);

// Basis of the right kernel {x : m x = 0}, one vector per row, derived from
// the RREF (canonical for a fixed column order) and scaled to primitive
// integer vectors.
Matrix kernel_basis(const Matrix& m);

// Scales a vector by a positive rational so entries are coprime integers.
// Zero vectors stay zero. Direction is preserved.
Row primitive_integer(const Row& v);

// Feasibility of {x >= 0 : a x = b}, decided exactly by phase-1 simplex with
// Bland's rule.
bool lp_feasible_eq_nonneg(const Matrix& a, const Row& b);

} // namespace pachner

#endif
