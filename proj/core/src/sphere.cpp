#include "kdiv/sphere.hpp"

#include <stdexcept>

namespace kdiv::exact {

GaussianRational unit_circle_rational(const Rational& t) {
    const Rational t2 = t * t;
    const Rational d = Rational(1) + t2;
    return {(Rational(1) - t2) / d, (Rational(2) * t) / d};
}

std::vector<Rational> rational_sphere_point(const std::vector<Rational>& t) {
    const std::size_t n = t.size() + 1;
    Rational norm2(0);
    for (const Rational& ti : t) norm2 += ti * ti;
    const Rational d = norm2 + Rational(1);

    std::vector<Rational> x(n);
    for (std::size_t i = 0; i + 1 < n; ++i) x[i] = Rational(2) * t[i] / d;
    x[n - 1] = (norm2 - Rational(1)) / d;
    return x;
}

std::vector<Rational> random_sphere_point(Mcg64& rng, std::size_t n) {
    if (n == 0) throw std::invalid_argument("random_sphere_point: n must be >= 1");
    std::vector<Rational> t(n - 1);
    for (Rational& ti : t) ti = random_rational(rng);
    return rational_sphere_point(t);
}

GaussianRational random_unit_complex(Mcg64& rng) {
    return unit_circle_rational(random_rational(rng));
}

}  // namespace kdiv::exact
