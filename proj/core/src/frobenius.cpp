#include "kdiv/frobenius.hpp"

#include "kdiv/abelian.hpp"
#include "kdiv/cayley_dickson.hpp"
#include "kdiv/multiplication_table.hpp"
#include "kdiv/projective_k.hpp"
#include "kdiv/rng.hpp"
#include "kdiv/sphere.hpp"

#include <bit>
#include <stdexcept>

namespace kdiv::frobenius {

using exact::Mcg64;
using exact::Rational;

Int required_order(std::size_t n) {
    if (n == 0) throw std::invalid_argument("required_order: requires n >= 1");
    return exact::pow2((n - 1) / 2);
}

bool dimension_admissible(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension_admissible: requires n >= 1");
    const std::size_t e = (n - 1) / 2;
    if (e >= std::bit_width(n)) return false;  // 2^e > n, cannot divide
    const std::size_t mask = (std::size_t(1) << e) - 1;
    return (n & mask) == 0;
}

std::vector<std::size_t> admissible_dimensions(std::size_t upper) {
    if (upper == 0) throw std::invalid_argument("admissible_dimensions: requires N >= 1");
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n <= upper; ++n)
        if (dimension_admissible(n)) out.push_back(n);
    return out;
}

bool factorization_argument_check(std::size_t upper) {
    if (upper == 0) throw std::invalid_argument("factorization_argument_check: requires N >= 1");
    for (std::size_t n = 1; n <= upper; ++n) {
        const unsigned k = static_cast<unsigned>(std::countr_zero(n));
        const std::size_t odd = n >> k;  // n = odd * 2^k, odd = 2m + 1
        const std::size_t m = (odd - 1) / 2;

        bool predicted;
        if (k == 0) {
            predicted = (n == 1);
        } else {
            predicted = (m == 0) && ((std::size_t(1) << (k - 1)) <= k + 1);
            if (m > 0) {
                // (n-1)/2 = (2m+1) 2^{k-1} - 1, and that exponent exceeds k.
                const std::size_t exponent = (odd << (k - 1)) - 1;
                if ((n - 1) / 2 != exponent || exponent <= k) return false;
            }
        }
        if (predicted != dimension_admissible(n)) return false;
    }
    return true;
}

StabilizationClass hom_stabilization_class(std::size_t n) {
    if (n < 2) throw std::invalid_argument("hom_stabilization_class: requires n >= 2");
    const std::size_t m = n - 1;
    const Int modulus = ktheory::generator_order_k0_rp(m);
    const Int residue = Int(n) % modulus;

    // Cross-check: n * generator vanishes in the cokernel iff its order is 1.
    const ktheory::IntMatrix relations = ktheory::rp_reduced_relations(m);
    std::vector<Int> element(relations.rows());
    if (!element.empty()) element[0] = Int(n);
    const std::optional<Int> order = ktheory::element_order(relations, element);
    if (!order) throw std::logic_error("hom_stabilization_class: unexpected infinite order");
    const bool vanishes = (*order == 1);
    if (vanishes != (residue == 0))
        throw std::logic_error("hom_stabilization_class: residue disagrees with element order");

    return StabilizationClass{modulus, residue, vanishes};
}

namespace {

AlgebraWitness build_algebra_witness(unsigned level, std::size_t samples, std::uint64_t seed) {
    AlgebraWitness w;
    w.level = level;

    const cd::CDAlgebra alg(level);
    const std::size_t dim = alg.dim();
    w.zero_divisor_free = true;

    // The complete signed basis-pair family first, then random pairs.
    const auto scan = cd::find_zero_divisors(alg, cd::ZeroDivisorSearch::kBasisPairs);
    const std::size_t side = dim < 2 ? 0 : dim * (dim - 1);  // 2 * C(dim, 2)
    w.basis_pairs_scanned = side * side;
    if (!scan.empty()) w.zero_divisor_free = false;

    Mcg64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Rational> ca(dim), cb(dim);
        for (Rational& x : ca) x = exact::random_rational(rng);
        for (Rational& x : cb) x = exact::random_rational(rng);
        cd::CDElement a(alg, std::move(ca)), b(alg, std::move(cb));
        if (a.is_zero() || b.is_zero()) continue;
        ++w.random_pairs_checked;
        if (cd::cd_multiply(a, b).is_zero()) w.zero_divisor_free = false;
    }

    const auto table = stiefel::normalize_right_identity(stiefel::MultiplicationTable::from_cd_level(level));
    const auto frames = stiefel::verify_sections(table, samples, seed);
    w.frame_points_checked = frames.samples;
    w.frames_nonsingular = frames.all_passed();
    return w;
}

}  // namespace

DimensionVerdict full_pipeline_report(std::size_t n, std::size_t samples, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("full_pipeline_report: requires n >= 1");

    DimensionVerdict v;
    v.n = n;
    v.required_order = required_order(n);
    v.divisible = dimension_admissible(n);
    v.admissible = v.divisible;
    if (n >= 2) {
        v.stabilization = hom_stabilization_class(n);
    } else {
        v.stabilization = StabilizationClass{1, 0, true};
    }

    if (n == 1 || n == 2 || n == 4 || n == 8) {
        unsigned level = 0;
        while ((std::size_t(1) << level) < n) ++level;
        v.algebra_witness = build_algebra_witness(level, samples, seed);
    }
    if (n == 16) {
        const cd::CDAlgebra alg(4);
        const auto pairs = cd::find_zero_divisors(alg, cd::ZeroDivisorSearch::kBasisPairs, 1);
        if (!pairs.empty())
            v.obstruction_witness =
                ZeroDivisorWitness{pairs.front().left.str(), pairs.front().right.str()};
    }
    return v;
}

}  // namespace kdiv::frobenius
