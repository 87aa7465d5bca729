#include "kdiv/projective_k.hpp"

#include "kdiv/smith.hpp"
#include "kdiv/truncated_poly.hpp"

#include <stdexcept>

namespace kdiv::ktheory {

FgAbGroup k0_cp(std::size_t n) {
    return FgAbGroup{n + 1, {}};
}

FgAbGroup k1_cp(std::size_t) {
    return FgAbGroup{};
}

IntMatrix reduced_euler_relations(std::size_t n) {
    if (n == 0) return IntMatrix(0, 1);
    const IntMatrix full = mult_operator_matrix(euler_class_eta2(n), n);
    IntMatrix reduced(n, n + 1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) reduced(i - 1, j) = full(i, j);
    return reduced;
}

IntMatrix rp_reduced_relations(std::size_t m) {
    if (m == 0) throw std::invalid_argument("rp_reduced_relations: requires m >= 1");
    if (m % 2 == 0) return rp_reduced_relations(m + 1);
    return reduced_euler_relations((m - 1) / 2);
}

FgAbGroup k0_rp(std::size_t m) {
    if (m == 0) throw std::invalid_argument("k0_rp: requires m >= 1");
    if (m % 2 == 0) return k0_rp(m + 1);
    FgAbGroup g = cokernel_structure(reduced_euler_relations((m - 1) / 2));
    g.free_rank += 1;  // the virtual-rank summand, adjoined formally
    return g;
}

FgAbGroup k1_rp(std::size_t m) {
    if (m == 0) throw std::invalid_argument("k1_rp: requires m >= 1");
    if (m % 2 == 0) return FgAbGroup{};
    const std::size_t n = (m - 1) / 2;
    // At n = 0 the operator is zero on Z^1 (the class 2b - b^2 dies with b).
    const IntMatrix op =
        n == 0 ? IntMatrix(1, 1) : mult_operator_matrix(euler_class_eta2(n), n);
    const std::size_t kernel_rank = int_kernel_basis(op).size();
    return FgAbGroup{kernel_rank, {}};
}

Int generator_order_k0_rp(std::size_t m) {
    if (m == 0) throw std::invalid_argument("generator_order_k0_rp: requires m >= 1");
    const IntMatrix relations = rp_reduced_relations(m);
    // -b's class; the sign does not affect the order.
    std::vector<Int> element(relations.rows());
    if (!element.empty()) element[0] = -1;
    const std::optional<Int> order = element_order(relations, element);
    if (!order) throw std::logic_error("generator_order_k0_rp: generator has infinite order");
    return *order;
}

}  // namespace kdiv::ktheory
