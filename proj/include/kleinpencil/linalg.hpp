#pragma once

// Exact dense linear algebra over Q(zeta_n): reduced row echelon form,
// kernels, ranks.  Deterministic pivoting (first nonzero entry scanning
// rows top-down), so echelonized bases are canonical for a given row order.

#include <optional>
#include <vector>

#include "kleinpencil/cyclotomic.hpp"

namespace kleinpencil {

using Vec = std::vector<CycNum>;
using Matrix = std::vector<Vec>;  // row-major, rectangular

// In-place reduced row echelon form; returns the rank.  Pivots are
// normalized to 1 with zeros above and below.
size_t rref_in_place(Matrix& m);

size_t rank(Matrix m);

// Basis of {x : m x = 0}; deterministic order (one vector per free column,
// in column order).
std::vector<Vec> kernel_basis(const Matrix& m, const FieldCtxPtr& ctx);

// One exact solution of a x = b, or nullopt when inconsistent.
std::optional<Vec> solve(Matrix a, Vec b, const FieldCtxPtr& ctx);

// RREF of the span of the given vectors, zero rows dropped: a canonical
// echelonized basis of their span.
Matrix span_rref(std::vector<Vec> vectors);

// True when v lies in the row span of the (already reduced or not) matrix.
bool in_span(const Matrix& basis, const Vec& v);

// Determinant of a square matrix by Gaussian elimination.
CycNum det(Matrix m, const FieldCtxPtr& ctx);

}  // namespace kleinpencil
