#pragma once

#include "kdiv/matrix.hpp"
#include "kdiv/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace kdiv::cd {

using exact::RatMatrix;
using exact::Rational;

/// Doubling tower over the rationals.  Level k has dimension 2^k:
/// 1 scalars, 2 complex, 3 octonion-like, 4 first level with zero divisors.
///
/// The doubling product and conjugation are fixed once and for all as
///
///   (a, b) (c, d) = (a c - conj(d) b,  d a + b conj(c))
///   conj((a, b))  = (conj(a), -b)
///
/// with rational multiplication at level 0.  All derived tables, searches
/// and checks depend on this convention; do not change it.
class CDAlgebra {
public:
    static constexpr unsigned kDefaultLevelCap = 5;

    /// Levels above the cap are refused unless allow_large is set; the
    /// dimension (and the cost of every product) doubles per level.
    explicit CDAlgebra(unsigned level, bool allow_large = false);

    unsigned level() const { return level_; }
    std::size_t dim() const { return std::size_t(1) << level_; }

    friend bool operator==(const CDAlgebra& a, const CDAlgebra& b) { return a.level_ == b.level_; }

private:
    unsigned level_;
};

/// Element of a fixed-level algebra: a coefficient vector over the basis
/// e_0 (the unit), e_1, ..., e_{2^k - 1}.
class CDElement {
public:
    CDElement(const CDAlgebra& alg, std::vector<Rational> coeffs);

    static CDElement zero(const CDAlgebra& alg);
    static CDElement basis(const CDAlgebra& alg, std::size_t i);

    const CDAlgebra& algebra() const { return alg_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const;

    /// "(c0, c1, ...)" with canonical rational entries.
    std::string str() const;

    friend CDElement operator+(const CDElement& a, const CDElement& b);
    friend CDElement operator-(const CDElement& a, const CDElement& b);
    friend CDElement operator*(const Rational& s, const CDElement& a);
    friend bool operator==(const CDElement& a, const CDElement& b);

private:
    CDAlgebra alg_;
    std::vector<Rational> c_;
};

/// Product under the doubling recursion.  Operands must share a level.
CDElement cd_multiply(const CDElement& a, const CDElement& b);

CDElement conjugate(const CDElement& a);

/// Sum of squared coefficients; equals the scalar part of a * conj(a).
Rational norm(const CDElement& a);

/// True iff a != 0, b != 0 and a b = 0 exactly.
bool is_zero_divisor_pair(const CDElement& a, const CDElement& b);

/// Matrix of x |-> a x in the basis e_0, ..., e_{2^k-1} (columns a e_j).
RatMatrix left_mult_matrix(const CDElement& a);

enum class ZeroDivisorSearch {
    /// Exhaustive scan over (e_i + s e_j, e_k + t e_l) with i < j, k < l,
    /// s, t in {+1, -1}, iterated in lexicographic (i, j, s, k, l, t) order
    /// with +1 before -1.  Complete for this candidate family.
    kBasisPairs,
    /// Seeded random small-rational pairs; a probe, not a decision procedure.
    kRandom,
};

struct ZeroDivisorPair {
    CDElement left, right;
};

/// Searches for exact zero-divisor pairs.  limit == 0 means unbounded;
/// samples and seed only matter for the random strategy.  The basis-pair
/// scan returns every hit in scan order, so results are reproducible.
std::vector<ZeroDivisorPair> find_zero_divisors(const CDAlgebra& alg,
                                                ZeroDivisorSearch strategy,
                                                std::size_t limit = 0,
                                                std::size_t samples = 1000,
                                                std::uint64_t seed = 1);

struct NormCheckCounterexample {
    CDElement a, b;
    Rational norm_a, norm_b, norm_product;
};

struct NormCheckReport {
    unsigned level = 0;
    std::size_t samples_requested = 0;
    std::size_t samples_run = 0;
    bool multiplicative = false;
    /// Set when the random phase found nothing but the basis-pair scan did.
    bool counterexample_from_scan = false;
    std::optional<NormCheckCounterexample> counterexample;
};

/// Tests norm(a b) = norm(a) norm(b) on seeded random pairs.  At levels
/// with zero divisors a random counterexample is overwhelmingly likely; if
/// the whole sample budget passes anyway, the basis-pair scan supplies an
/// exact counterexample so the verdict never depends on luck.
NormCheckReport norm_multiplicativity_check(const CDAlgebra& alg,
                                            std::size_t samples,
                                            std::uint64_t seed);

}  // namespace kdiv::cd
