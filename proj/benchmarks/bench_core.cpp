#include "kdiv/cayley_dickson.hpp"
#include "kdiv/hopf.hpp"
#include "kdiv/matrix.hpp"
#include "kdiv/multiplication_table.hpp"
#include "kdiv/projective_k.hpp"
#include "kdiv/rng.hpp"
#include "kdiv/smith.hpp"
#include "kdiv/sphere.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using kdiv::exact::Mcg64;
using kdiv::exact::Rational;

kdiv::ktheory::IntMatrix random_int_matrix(Mcg64& rng, std::size_t n, long bound) {
    kdiv::ktheory::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = kdiv::exact::Int(long(rng.below(2 * bound + 1)) - bound);
    return m;
}

kdiv::exact::RatMatrix random_rat_matrix(Mcg64& rng, std::size_t n) {
    kdiv::exact::RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = kdiv::exact::random_rational(rng);
    return m;
}

void bm_smith_6x6(benchmark::State& state) {
    Mcg64 rng(7);
    auto m = random_int_matrix(rng, 6, 20);
    for (auto _ : state) {
        auto snf = kdiv::ktheory::smith_normal_form(m);
        benchmark::DoNotOptimize(snf.d);
    }
}
BENCHMARK(bm_smith_6x6);

void bm_det_exact_8x8(benchmark::State& state) {
    Mcg64 rng(11);
    auto m = random_rat_matrix(rng, 8);
    for (auto _ : state) {
        auto d = kdiv::exact::det_exact(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_det_exact_8x8);

void bm_cd_multiply(benchmark::State& state) {
    const unsigned level = unsigned(state.range(0));
    kdiv::cd::CDAlgebra alg(level);
    Mcg64 rng(13);
    std::vector<Rational> ca(alg.dim()), cb(alg.dim());
    for (auto& c : ca) c = kdiv::exact::random_rational(rng);
    for (auto& c : cb) c = kdiv::exact::random_rational(rng);
    kdiv::cd::CDElement a(alg, ca), b(alg, cb);
    for (auto _ : state) {
        auto p = kdiv::cd::cd_multiply(a, b);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bm_cd_multiply)->DenseRange(1, 4);

void bm_octonion_frame(benchmark::State& state) {
    auto table = kdiv::stiefel::MultiplicationTable::from_cd_level(3);
    auto pn = kdiv::stiefel::normalize_right_identity(table);
    auto x = kdiv::exact::rational_sphere_point(
        {Rational(1), Rational(2), Rational(1, 3), Rational(-1), Rational(1, 2), Rational(2), Rational(3)});
    for (auto _ : state) {
        auto f = kdiv::stiefel::frame_at(pn, x);
        benchmark::DoNotOptimize(f.determinant);
    }
}
BENCHMARK(bm_octonion_frame);

void bm_k0_rp_25(benchmark::State& state) {
    for (auto _ : state) {
        auto g = kdiv::ktheory::k0_rp(25);
        benchmark::DoNotOptimize(g.torsion);
    }
}
BENCHMARK(bm_k0_rp_25);

void bm_hopf_batch(benchmark::State& state) {
    for (auto _ : state) {
        auto report = kdiv::hopf::run_batch_checks(2, 20, 5);
        benchmark::DoNotOptimize(report.exponent);
    }
}
BENCHMARK(bm_hopf_batch);

}  // namespace

BENCHMARK_MAIN();
