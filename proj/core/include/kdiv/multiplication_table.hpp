#pragma once

#include "kdiv/matrix.hpp"
#include "kdiv/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kdiv::stiefel {

using exact::RatMatrix;
using exact::Rational;

/// Bilinear multiplication p on R^n given by structure constants:
/// c(i, j, k) is the k-th coordinate of p(e_i, e_j).  The table defines a
/// bilinear map by construction; whether it has zero divisors is a
/// property to be checked, never assumed.
class MultiplicationTable {
public:
    explicit MultiplicationTable(std::size_t n);

    /// Structure constants of the level-k doubling algebra (dimension 2^k).
    static MultiplicationTable from_cd_level(unsigned level);

    std::size_t n() const { return n_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const;
    void set(std::size_t i, std::size_t j, std::size_t k, Rational v);

    /// p(a, b) by bilinear expansion.
    std::vector<Rational> product(const std::vector<Rational>& a,
                                  const std::vector<Rational>& b) const;

    /// p(a, e_j); cheaper than product() with a basis vector.
    std::vector<Rational> product_with_basis(const std::vector<Rational>& a, std::size_t j) const;

    friend bool operator==(const MultiplicationTable& a, const MultiplicationTable& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

private:
    std::size_t n_;
    std::vector<Rational> c_;  // row-major [i][j][k]
};

/// Parses {"n": <int>, "c": [[[ "p/q", ... ]]]} with exact rational
/// entries; any shape or parse violation throws std::invalid_argument.
MultiplicationTable table_from_json_text(std::string_view text);

/// Serializes back to the same JSON shape (compact, keys sorted).
std::string table_to_json_text(const MultiplicationTable& t);

/// Thrown when the normalization map a |-> p(a, e_1) is singular.  The
/// witness is a nonzero a with p(a, e_1) = 0, i.e. a zero-divisor pair
/// (a, e_1).
class NormalizationError : public std::runtime_error {
public:
    explicit NormalizationError(std::vector<Rational> witness);
    const std::vector<Rational>& witness() const { return witness_; }

private:
    std::vector<Rational> witness_;
};

/// Precomposes with the inverse of A: a |-> p(a, e_1), yielding a table
/// p'(a, b) = p(A^{-1} a, b) with p'(a, e_1) = a for every a.  Zero
/// divisors are preserved in both directions (A is a linear isomorphism in
/// the first slot).  Throws NormalizationError when A is singular.
MultiplicationTable normalize_right_identity(const MultiplicationTable& p);

/// Pointwise trivialization data at a unit x: columns
/// (x, p'(x, e_2), ..., p'(x, e_n)) and their exact determinant.  A
/// nonzero determinant certifies that the frame is a basis at x.
struct Frame {
    std::vector<Rational> point;
    RatMatrix columns;
    Rational determinant;
};

/// Requires a normalized table and an exact unit vector x.
Frame frame_at(const MultiplicationTable& pn, const std::vector<Rational>& x);

/// v_i(x) = p'(x, e_i) - <p'(x, e_i), x> x for i = 2..n: the component of
/// each frame column orthogonal to x.  Exactly tangent at x; independent
/// (rank n-1) whenever the table has no zero divisors.
std::vector<std::vector<Rational>> tangent_sections_at(const MultiplicationTable& pn,
                                                       const std::vector<Rational>& x);

/// Exact check that v_i(-x) = -v_i(x) for every section; bilinearity
/// forces this, so a failure means an implementation bug.
bool homogeneity_check(const MultiplicationTable& pn, const std::vector<Rational>& x);

struct SectionBatchReport {
    std::size_t samples = 0;
    std::size_t nonzero_determinants = 0;
    std::size_t full_rank_sections = 0;
    std::size_t tangent_sections = 0;
    std::size_t homogeneous = 0;
    std::optional<std::string> first_failure;

    bool all_passed() const;
};

/// Runs frame_at / tangent_sections_at / homogeneity_check at seeded
/// stereographic rational sphere points.
SectionBatchReport verify_sections(const MultiplicationTable& pn, std::size_t samples,
                                   std::uint64_t seed);

/// Matrix of x |-> p(a, x) read directly off the table.
RatMatrix table_left_mult_matrix(const MultiplicationTable& p, const std::vector<Rational>& a);

struct TableZeroDivisorWitness {
    std::vector<Rational> left, right;
};

/// Exhaustive signed basis-pair scan (e_i + s e_j, e_k + t e_l), i < j,
/// k < l, evaluated through the table.  Returns the first zero product
/// found, if any.  Division-algebra tables come back empty.
std::optional<TableZeroDivisorWitness> table_zero_divisor_scan(const MultiplicationTable& p);

}  // namespace kdiv::stiefel
