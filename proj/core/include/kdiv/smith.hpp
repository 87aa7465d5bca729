#pragma once

#include "kdiv/int_matrix.hpp"

#include <vector>

namespace kdiv::ktheory {

/// Smith decomposition u * m * v = d with u, v unimodular and d diagonal,
/// d_1 | d_2 | ... , every diagonal entry >= 0.
struct SmithForm {
    IntMatrix u, d, v;
};

/// Computes the Smith normal form by integer row/column reduction.
///
/// Deterministic pivot rule: among the nonzero entries of the remaining
/// submatrix, take one of minimal absolute value, breaking ties by lowest
/// (row, col) lexicographically.  Quotients use truncated division, the
/// divisibility chain is enforced by gcd fix-ups in ascending order, and
/// signs are normalized last, so equal inputs always give equal outputs.
SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal entries of d, in order.
std::vector<Int> invariant_factors(const SmithForm& s);

/// Basis of the integer kernel {x : m x = 0}: the columns of v that pair
/// with zero columns of d.  The basis is primitive (each vector's entries
/// are coprime up to the unimodularity of v) and deterministic.
std::vector<std::vector<Int>> int_kernel_basis(const IntMatrix& m);

}  // namespace kdiv::ktheory
