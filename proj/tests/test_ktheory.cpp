#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "kdiv/abelian.hpp"
#include "kdiv/projective_k.hpp"
#include "kdiv/rational.hpp"
#include "kdiv/rng.hpp"
#include "kdiv/smith.hpp"
#include "kdiv/truncated_poly.hpp"
#include "test_util.hpp"

using namespace kdiv::ktheory;
using kdiv::exact::Int;
using kdiv::exact::Mcg64;
using kdiv::exact::pow2;

TEST_CASE("truncated polynomial ring") {
    TruncatedPoly b(3, {Int(0), Int(1), Int(0), Int(0)});
    auto b2 = b * b;
    CHECK(b2.coeff(2) == 1);
    auto b4 = b2 * b2;  // b^4 vanishes above the truncation bound
    for (std::size_t j = 0; j <= 3; ++j) CHECK(b4.coeff(j) == 0);

    auto e = euler_class_eta2(3);
    CHECK(e.coeff(0) == 0);
    CHECK(e.coeff(1) == 2);
    CHECK(e.coeff(2) == -1);
    CHECK(e.coeff(3) == 0);
    CHECK(euler_class_eta2(1).coeffs() == std::vector<Int>{Int(0), Int(2)});
    CHECK_THROWS_AS(euler_class_eta2(0), std::invalid_argument);
}

TEST_CASE("multiplication operator matrix") {
    // f = b at bound 1: 1 -> b, b -> b^2 = 0.
    auto m = mult_operator_matrix(TruncatedPoly(1, {Int(0), Int(1)}), 1);
    CHECK(m == testutil::int_matrix({{0, 0}, {1, 0}}));

    // f = 1 acts as the identity.
    auto one = mult_operator_matrix(TruncatedPoly(2, {Int(1), Int(0), Int(0)}), 2);
    CHECK(one == IntMatrix::identity(3));

    // The matrix really represents multiplication: M(f) applied to the
    // coefficients of g equals the coefficients of f * g.
    Mcg64 rng(88);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 1 + rng.below(6);
        std::vector<Int> fc(n + 1), gc(n + 1);
        for (auto& v : fc) v = rng.range(-9, 9);
        for (auto& v : gc) v = rng.range(-9, 9);
        TruncatedPoly f(n, fc), g(n, gc);
        auto mf = mult_operator_matrix(f, n);
        std::vector<Int> image(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) image[i] += mf(i, j) * gc[j];
        CHECK(image == (f * g).coeffs());
    }
}

TEST_CASE("powers reduce to multiples of the generator") {
    // In Z[b]/(b^{n+1}) with b^2 = 2b (the relation the reduction imposes
    // backwards), every power b^k collapses to 2^{k-1} b.  Checked by
    // repeatedly substituting b^2 = 2b - (2b - b^2) along the relation
    // vector, i.e. folding the top coefficient down one slot doubled.
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<Int> c(n + 1);
            c[k] = 1;
            for (std::size_t j = n; j >= 2; --j) {
                // 2b - b^2 maps to zero in the quotient, so b^j = 2 b^{j-1}.
                c[j - 1] += 2 * c[j];
                c[j] = 0;
            }
            CHECK(c[1] == pow2(static_cast<unsigned long>(k - 1)));
            CHECK(c[0] == 0);
        }
    }
}

TEST_CASE("complex projective K groups") {
    CHECK(k0_cp(0) == FgAbGroup{1, {}});
    CHECK(k0_cp(1) == FgAbGroup{2, {}});
    CHECK(k0_cp(3) == FgAbGroup{4, {}});
    CHECK(k1_cp(0) == FgAbGroup{0, {}});
    CHECK(k1_cp(5) == FgAbGroup{0, {}});
}

TEST_CASE("reduced relation matrices") {
    CHECK(reduced_euler_relations(0) == IntMatrix(0, 1));

    auto r1 = reduced_euler_relations(1);
    CHECK(r1 == testutil::int_matrix({{2, 0}}));

    auto r2 = reduced_euler_relations(2);
    CHECK(r2 == testutil::int_matrix({{2, 0, 0}, {-1, 2, 0}}));

    CHECK(rp_reduced_relations(5) == reduced_euler_relations(2));
    CHECK(rp_reduced_relations(6) == reduced_euler_relations(3));
    CHECK_THROWS_AS(rp_reduced_relations(0), std::invalid_argument);
}

TEST_CASE("K0 of real projective spaces") {
    CHECK(k0_rp(1) == FgAbGroup{1, {}});
    CHECK(k0_rp(2) == FgAbGroup{1, {Int(2)}});
    CHECK(k0_rp(5) == FgAbGroup{1, {Int(4)}});
    CHECK(k0_rp(7) == FgAbGroup{1, {Int(8)}});

    for (std::size_t m = 1; m <= 25; ++m) {
        FgAbGroup expected{1, {}};
        if (m >= 2) expected.torsion.push_back(pow2(m / 2));
        CHECK(k0_rp(m) == expected);
    }
    CHECK_THROWS_AS(k0_rp(0), std::invalid_argument);
}

TEST_CASE("K1 of real projective spaces") {
    CHECK(k1_rp(3) == FgAbGroup{1, {}});
    CHECK(k1_rp(2) == FgAbGroup{0, {}});
    for (std::size_t m = 2; m <= 24; m += 2) CHECK(k1_rp(m) == FgAbGroup{0, {}});
    for (std::size_t m = 1; m <= 25; m += 2) CHECK(k1_rp(m) == FgAbGroup{1, {}});
}

TEST_CASE("K1 kernel is generated by the top power") {
    // The kernel of multiplication by 2b - b^2 on Z[b]/(b^{n+1}) is spanned
    // by b^n: (2b - b^2) b^n = 2 b^{n+1} - b^{n+2} = 0.
    for (std::size_t n = 1; n <= 12; ++n) {
        auto op = mult_operator_matrix(euler_class_eta2(n), n);
        auto basis = int_kernel_basis(op);
        REQUIRE(basis.size() == 1);
        const auto& v = basis[0];
        for (std::size_t j = 0; j < n; ++j) CHECK(v[j] == 0);
        CHECK((v[n] == 1 || v[n] == -1));
    }
}

TEST_CASE("generator order in reduced K0") {
    CHECK(generator_order_k0_rp(1) == 1);
    CHECK(generator_order_k0_rp(6) == 8);
    CHECK(generator_order_k0_rp(7) == 8);
    for (std::size_t m = 1; m <= 25; ++m)
        CHECK(generator_order_k0_rp(m) == pow2(m / 2));
}

TEST_CASE("element orders on the euler relations") {
    // On RP^7 (n = 3): the reduced lattice is spanned by b, b^2, b^3 (one
    // coordinate per relation row) and the generator has order 8.
    auto reduced = reduced_euler_relations(3);
    CHECK(element_order(reduced, {Int(-1), Int(0), Int(0)}) == Int(8));
    CHECK(element_order(reduced, {Int(4), Int(0), Int(0)}) == Int(2));
    CHECK(element_order(reduced, {Int(8), Int(0), Int(0)}) == Int(1));

    // Scaling by the order really kills the element; half the order does not.
    for (std::size_t m = 3; m <= 25; m += 2) {
        auto rel = rp_reduced_relations(m);
        Int order = generator_order_k0_rp(m);
        std::vector<Int> v(rel.rows());
        v[0] = order;
        CHECK(element_order(rel, v) == Int(1));
        v[0] = order / 2;
        CHECK(element_order(rel, v) == Int(2));
    }
}
