#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "kdiv/cayley_dickson.hpp"
#include "kdiv/matrix.hpp"
#include "kdiv/rng.hpp"
#include "oracles.hpp"

using namespace kdiv::cd;
using kdiv::exact::Mcg64;
using kdiv::exact::Rational;
using kdiv::exact::det_exact;
using kdiv::exact::random_rational;

namespace {

// Frozen basis product tables, recorded before the recursive product was
// written.  Entry at (i, j) is s * (k + 1) meaning e_i e_j = s e_k.
constexpr int kLevel2Table[4][4] = {
    {1, 2, 3, 4},
    {2, -1, 4, -3},
    {3, -4, -1, 2},
    {4, 3, -2, -1},
};

constexpr int kLevel3Table[8][8] = {
    {1, 2, 3, 4, 5, 6, 7, 8},
    {2, -1, 4, -3, 6, -5, -8, 7},
    {3, -4, -1, 2, 7, 8, -5, -6},
    {4, 3, -2, -1, 8, -7, 6, -5},
    {5, -6, -7, -8, -1, 2, 3, 4},
    {6, 5, -8, 7, -2, -1, -4, 3},
    {7, 8, 5, -6, -3, 4, -1, -2},
    {8, -7, 6, 5, -4, -3, 2, -1},
};

CDElement random_element(const CDAlgebra& alg, Mcg64& rng, long bound = 5) {
    std::vector<Rational> c(alg.dim());
    for (auto& v : c) v = random_rational(rng, bound, bound);
    return CDElement(alg, std::move(c));
}

CDElement random_nonzero_element(const CDAlgebra& alg, Mcg64& rng) {
    for (;;) {
        CDElement e = random_element(alg, rng);
        if (!e.is_zero()) return e;
    }
}

void check_basis_product(const CDAlgebra& alg, std::size_t i, std::size_t j, int sign,
                         std::size_t index) {
    CDElement p = cd_multiply(CDElement::basis(alg, i), CDElement::basis(alg, j));
    for (std::size_t k = 0; k < alg.dim(); ++k) {
        if (k == index)
            CHECK(p[k] == Rational(sign));
        else
            CHECK(p[k].is_zero());
    }
}

}  // namespace

TEST_CASE("level 2 basis products match the frozen fixture") {
    CDAlgebra alg(2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            int entry = kLevel2Table[i][j];
            check_basis_product(alg, i, j, entry > 0 ? 1 : -1,
                                static_cast<std::size_t>(std::abs(entry)) - 1);
        }
}

TEST_CASE("level 3 basis products match the frozen fixture") {
    CDAlgebra alg(3);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            int entry = kLevel3Table[i][j];
            check_basis_product(alg, i, j, entry > 0 ? 1 : -1,
                                static_cast<std::size_t>(std::abs(entry)) - 1);
        }
}

TEST_CASE("basis products match the signed-table oracle up to level 4") {
    for (unsigned level = 0; level <= 4; ++level) {
        CDAlgebra alg(level);
        auto table = oracles::signed_table_level(level);
        REQUIRE(table.n == alg.dim());
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j)
                check_basis_product(alg, i, j, table.s(i, j), table.idx(i, j));
    }
}

TEST_CASE("level cap") {
    CHECK_NOTHROW(CDAlgebra(5));
    CHECK_THROWS_AS(CDAlgebra(6), std::invalid_argument);
    CHECK_NOTHROW(CDAlgebra(6, true));
    CHECK(CDAlgebra(3).dim() == 8);
}

TEST_CASE("unit element") {
    Mcg64 rng(12);
    for (unsigned level = 0; level <= 4; ++level) {
        CDAlgebra alg(level);
        CDElement one = CDElement::basis(alg, 0);
        for (int k = 0; k < 50; ++k) {
            CDElement a = random_element(alg, rng);
            CHECK(cd_multiply(one, a) == a);
            CHECK(cd_multiply(a, one) == a);
        }
    }
}

TEST_CASE("product is bilinear") {
    Mcg64 rng(34);
    for (unsigned level = 0; level <= 4; ++level) {
        CDAlgebra alg(level);
        const int samples = level == 4 ? 250 : 1000;
        for (int k = 0; k < samples; ++k) {
            CDElement a = random_element(alg, rng, 3);
            CDElement b = random_element(alg, rng, 3);
            CDElement c = random_element(alg, rng, 3);
            Rational s = random_rational(rng, 3, 3);
            CHECK(cd_multiply(a + b, c) == cd_multiply(a, c) + cd_multiply(b, c));
            CHECK(cd_multiply(a, b + c) == cd_multiply(a, b) + cd_multiply(a, c));
            CHECK(cd_multiply(s * a, b) == s * cd_multiply(a, b));
            CHECK(cd_multiply(a, s * b) == s * cd_multiply(a, b));
        }
    }
}

TEST_CASE("conjugation") {
    Mcg64 rng(56);
    for (unsigned level = 0; level <= 4; ++level) {
        CDAlgebra alg(level);
        for (int k = 0; k < 100; ++k) {
            CDElement a = random_element(alg, rng);
            CDElement b = random_element(alg, rng);
            CHECK(conjugate(conjugate(a)) == a);
            // Anti-automorphism: conj(ab) = conj(b) conj(a).
            CHECK(conjugate(cd_multiply(a, b)) ==
                  cd_multiply(conjugate(b), conjugate(a)));
            // a + conj(a) is scalar; a conj(a) is norm(a) times the unit.
            CDElement sym = a + conjugate(a);
            for (std::size_t i = 1; i < alg.dim(); ++i) CHECK(sym[i].is_zero());
            CDElement n = cd_multiply(a, conjugate(a));
            CHECK(n[0] == norm(a));
            for (std::size_t i = 1; i < alg.dim(); ++i) CHECK(n[i].is_zero());
        }
    }
}

TEST_CASE("norm is multiplicative up to level 3 and not at level 4") {
    Mcg64 rng(78);
    for (unsigned level = 0; level <= 3; ++level) {
        CDAlgebra alg(level);
        auto report = norm_multiplicativity_check(alg, 200, 9);
        CHECK(report.multiplicative);
        CHECK(report.samples_run == 200);
        CHECK(!report.counterexample.has_value());
    }

    CDAlgebra sedenions(4);
    auto report = norm_multiplicativity_check(sedenions, 200, 9);
    CHECK(!report.multiplicative);
    REQUIRE(report.counterexample.has_value());
    const auto& ce = *report.counterexample;
    CHECK(norm(cd_multiply(ce.a, ce.b)) == ce.norm_product);
    CHECK(ce.norm_a * ce.norm_b != ce.norm_product);
}

TEST_CASE("no zero divisors up to level 3") {
    Mcg64 rng(90);
    for (unsigned level = 0; level <= 3; ++level) {
        CDAlgebra alg(level);
        for (int k = 0; k < 1000; ++k) {
            CDElement a = random_nonzero_element(alg, rng);
            CDElement b = random_nonzero_element(alg, rng);
            CHECK(!cd_multiply(a, b).is_zero());
            CHECK(!is_zero_divisor_pair(a, b));
        }
        for (int k = 0; k < 100; ++k) {
            CDElement a = random_nonzero_element(alg, rng);
            CHECK(!det_exact(left_mult_matrix(a)).is_zero());
        }
        CHECK(find_zero_divisors(alg, ZeroDivisorSearch::kBasisPairs).empty());
        CHECK(find_zero_divisors(alg, ZeroDivisorSearch::kRandom, 0, 500, 3).empty());
    }
}

TEST_CASE("left multiplication matrix") {
    CDAlgebra alg(2);
    CHECK(left_mult_matrix(CDElement::basis(alg, 0)) ==
          kdiv::exact::RatMatrix::identity(4));
    Mcg64 rng(13);
    // Columns of the matrix are the products with basis vectors.
    for (int k = 0; k < 50; ++k) {
        CDElement a = random_element(alg, rng);
        auto m = left_mult_matrix(a);
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            CDElement col = cd_multiply(a, CDElement::basis(alg, j));
            for (std::size_t i = 0; i < alg.dim(); ++i) CHECK(m(i, j) == col[i]);
        }
    }
}

TEST_CASE("sedenion zero divisors exist and are exact") {
    CDAlgebra alg(4);

    auto first = find_zero_divisors(alg, ZeroDivisorSearch::kBasisPairs, 1);
    REQUIRE(first.size() == 1);
    CHECK(is_zero_divisor_pair(first[0].left, first[0].right));
    CHECK(cd_multiply(first[0].left, first[0].right).is_zero());
    CHECK(!first[0].left.is_zero());
    CHECK(!first[0].right.is_zero());

    // The scan is deterministic: asking again returns the same pair.
    auto again = find_zero_divisors(alg, ZeroDivisorSearch::kBasisPairs, 1);
    CHECK(again[0].left == first[0].left);
    CHECK(again[0].right == first[0].right);

    // A zero divisor kills the left-multiplication determinant.
    CHECK(det_exact(left_mult_matrix(first[0].left)).is_zero());

    // Norm multiplicativity fails on the witness: norms are positive on
    // nonzero elements but the product norm is zero.
    CHECK(norm(first[0].left) > Rational(0));
    CHECK(norm(first[0].right) > Rational(0));
    CHECK(norm(cd_multiply(first[0].left, first[0].right)) == Rational(0));
}

TEST_CASE("element formatting") {
    CDAlgebra alg(1);
    CDElement a(alg, {Rational(1, 2), Rational(-3)});
    CHECK(a.str() == "(1/2, -3)");
    CHECK(CDElement::zero(alg).is_zero());
    CHECK_THROWS_AS(CDElement(alg, {Rational(1)}), std::invalid_argument);
}
