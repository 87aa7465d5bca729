#include "kdiv/abelian.hpp"

#include "kdiv/smith.hpp"

namespace kdiv::ktheory {

std::string FgAbGroup::str() const {
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank == 1) {
        s = "Z";
    } else if (free_rank > 1) {
        s = "Z^" + std::to_string(free_rank);
    }
    for (const Int& t : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + t.get_str();
    }
    return s;
}

FgAbGroup cokernel_structure(const IntMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    const std::vector<Int> factors = invariant_factors(s);

    FgAbGroup g;
    g.free_rank = m.rows() - factors.size();
    for (const Int& d : factors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

std::optional<Int> element_order(const IntMatrix& relations, const std::vector<Int>& element) {
    if (element.size() != relations.rows())
        throw std::invalid_argument("element_order: element length must match row count");
    const SmithForm s = smith_normal_form(relations);
    const std::size_t rank = invariant_factors(s).size();

    const std::vector<Int> w = s.u.apply(element);
    Int order = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < rank) {
            const Int d = s.d(i, i);
            order = lcm(order, Int(d / gcd(w[i], d)));
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return order;
}

}  // namespace kdiv::ktheory
