#pragma once

#include "kdiv/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kdiv::ktheory {

/// Finitely generated abelian group in canonical form
/// Z^free_rank + Z/t_1 + ... + Z/t_k with t_i >= 2 and t_i | t_{i+1}.
/// The canonical form is unique, so equality is structural equality.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    /// "0", "Z", "Z^2 + Z/4", ...
    std::string str() const;

    friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) = default;
};

/// Structure of Z^rows / column-span(m), read off the Smith form: torsion
/// from diagonal entries > 1, free rank = rows - (number of nonzero
/// diagonal entries).
FgAbGroup cokernel_structure(const IntMatrix& m);

/// Order of the image of `element` in Z^rows / column-span(relations):
/// with w = U * element in the Smith basis, each torsion coordinate
/// contributes d_i / gcd(w_i, d_i) and the order is their lcm.  Returns
/// std::nullopt (infinite order) when a free coordinate is nonzero.
std::optional<Int> element_order(const IntMatrix& relations, const std::vector<Int>& element);

}  // namespace kdiv::ktheory
