#pragma once

#include "kdiv/abelian.hpp"
#include "kdiv/int_matrix.hpp"

namespace kdiv::ktheory {

/// K^0 of complex projective n-space: free abelian of rank n+1 on the
/// powers {1, b, ..., b^n} of the generator.  This additive presentation
/// is the input to everything else; it is not recomputed.
FgAbGroup k0_cp(std::size_t n);

/// K^1 of complex projective n-space: the zero group.
FgAbGroup k1_cp(std::size_t n);

/// Relations of the reduced K^0 of RP^{2n+1} on the lattice spanned by
/// {b, ..., b^n}: the multiplication-by-(2b - b^2) matrix with the
/// constant row dropped (every column image already lies in the reduced
/// lattice).  Shape n x (n+1); n = 0 gives the empty 0 x 1 matrix.
IntMatrix reduced_euler_relations(std::size_t n);

/// Reduced relations for RP^m, any m >= 1.  Odd m = 2n+1 maps to
/// reduced_euler_relations(n); even m uses m+1 (the restriction map
/// identifies the two groups, and [m/2] = [(m+1)/2]).
IntMatrix rp_reduced_relations(std::size_t m);

/// K^0(RP^m) for m >= 1.  Odd m = 2n+1: a formal Z (the virtual rank)
/// plus the cokernel of the reduced relations, computed by Smith normal
/// form.  Even m: transferred from m+1.
FgAbGroup k0_rp(std::size_t m);

/// K^1(RP^m) for m >= 1: zero for even m; for odd m = 2n+1 the kernel of
/// the multiplication operator on Z^{n+1}, computed exactly (must come
/// out free of rank 1).
FgAbGroup k1_rp(std::size_t m);

/// Order of the reduced generator class in the torsion part of K^0(RP^m),
/// computed through element_order on the reduced relations.  Equals
/// 2^{[m/2]}.
Int generator_order_k0_rp(std::size_t m);

}  // namespace kdiv::ktheory
