#pragma once

#include "kdiv/gaussian.hpp"
#include "kdiv/rational.hpp"
#include "kdiv/rng.hpp"

#include <cstddef>
#include <vector>

namespace kdiv::exact {

/// Rational point on the unit circle from the tangent half-angle map:
///
///   t  |->  ( (1 - t^2) / (1 + t^2),  2t / (1 + t^2) )
///
/// The image misses only (-1, 0); the squared modulus is exactly 1.
GaussianRational unit_circle_rational(const Rational& t);

/// Rational point on the unit sphere S^{n-1} in R^n from the inverse
/// stereographic projection of t in Q^{n-1}:
///
///   x = ( 2 t_1, ..., 2 t_{n-1}, |t|^2 - 1 ) / ( |t|^2 + 1 )
///
/// Sum of squares is exactly 1; the north pole is the only missed point.
std::vector<Rational> rational_sphere_point(const std::vector<Rational>& t);

/// Seeded unit-sphere point in R^n (n >= 1), via rational_sphere_point on a
/// random parameter vector.
std::vector<Rational> random_sphere_point(Mcg64& rng, std::size_t n);

/// Seeded exact unit complex scalar.
GaussianRational random_unit_complex(Mcg64& rng);

}  // namespace kdiv::exact
