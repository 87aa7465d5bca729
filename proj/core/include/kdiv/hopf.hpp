#pragma once

#include "kdiv/gaussian.hpp"
#include "kdiv/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kdiv::hopf {

using exact::GaussianRational;
using exact::Rational;

/// Point of a real projective space: homogeneous rational coordinates,
/// not all zero.  Equality is exact proportionality.
class ProjectivePointR {
public:
    explicit ProjectivePointR(std::vector<Rational> coords);

    const std::vector<Rational>& coords() const { return coords_; }

    /// Representative scaled so the first nonzero coordinate is positive
    /// and the whole vector is integral with content 1.
    ProjectivePointR sign_canonical() const;

    friend bool operator==(const ProjectivePointR& a, const ProjectivePointR& b);

private:
    std::vector<Rational> coords_;
};

/// Pairs consecutive real coordinates into complex ones:
/// z_j = x_{2j-1} + i x_{2j} (1-based), halving the length.
std::vector<GaussianRational> complexify(const std::vector<Rational>& x);

/// Inverse of complexify.
std::vector<Rational> realify(const std::vector<GaussianRational>& z);

/// Point of the associated circle bundle: unit vector z and unit fiber
/// coordinate v, considered modulo (z, v) ~ (z * conj(u), u^2 v) for
/// unit u.  Construct through make_bundle_point, which checks the norms.
struct AssocBundlePoint {
    std::vector<GaussianRational> z;
    GaussianRational v;
};

AssocBundlePoint make_bundle_point(std::vector<GaussianRational> z, GaussianRational v);

/// True iff a unit u relates the two points.  u is forced by the first
/// nonzero coordinate of p.z, then every coordinate and the fiber
/// condition q.v = u^2 p.v are checked exactly.
bool rho_equivalent(const AssocBundlePoint& p, const AssocBundlePoint& q);

/// The bundle map on a unit representative x of a projective point:
/// (conj(w) z(x), w^2) for a unit w.  Rejects non-unit inputs.
AssocBundlePoint g_map(const std::vector<Rational>& x, const GaussianRational& w);

/// Image classes agree for different choices of w.
bool w_independence_check(const std::vector<Rational>& x, const GaussianRational& w1,
                          const GaussianRational& w2);

/// x and -x have rho-equivalent images (u = -1), so the map descends to
/// the projective space.
bool antipodal_invariance_check(const std::vector<Rational>& x, const GaussianRational& w);

/// Which fiber exponents are consistent with the circle action: compares
/// g(lambda x, w) against (g(x, w).z, lambda^e g(x, w).v) for e = +2, -2.
/// At least one must hold; under the fixed conventions the generic answer
/// is e = +2 (both hold exactly when lambda^4 = 1).
struct EquivarianceExponents {
    bool plus_two = false;
    bool minus_two = false;

    bool consistent() const { return plus_two || minus_two; }
};

EquivarianceExponents equivariance_check(const std::vector<Rational>& x,
                                         const GaussianRational& w,
                                         const GaussianRational& lambda);

/// The complex line through g(x, w).z equals the line through z(x):
/// projecting the image recovers the underlying point of CP^n.
bool base_compatibility_check(const std::vector<Rational>& x, const GaussianRational& w);

/// Fiber points lambda_t * z0 over a fixed unit base z0, with the
/// lambda_t unit and pairwise distinct up to sign (validated), must have
/// pairwise rho-inequivalent images.
bool fiber_injectivity_check(const std::vector<GaussianRational>& z0,
                             const std::vector<GaussianRational>& lambdas);

/// Proportion-class identification of the complexified line bundle:
/// (x : u : v) and (-x : -u : -v) give the same class (z(x) : lambda),
/// and multiplying lambda = u + iv by i matches (u, v) |-> (-v, u) on the
/// real coordinates.  x != 0 required; lambda may be zero.
bool pullback_proportion_check(const std::vector<Rational>& x, const GaussianRational& lambda);

struct CheckStats {
    std::size_t run = 0;
    std::size_t passed = 0;
    std::optional<std::string> first_failure;

    void tally(bool ok, const std::string& witness);
    bool clean() const { return passed == run; }
};

struct HopfBatchReport {
    std::size_t n = 0;
    std::size_t samples = 0;
    CheckStats w_independence, antipodal, equivariance, base_compatibility, injectivity, pullback;
    /// +2 or -2 when a single exponent fits every sample; 0 on conflict.
    int exponent = 0;
    bool exponent_uniform = false;

    bool all_passed() const;
};

/// Seeded batch of every check at exact random configurations on
/// S^{2n+1}.  Deterministic for fixed (n, samples, seed).
HopfBatchReport run_batch_checks(std::size_t n, std::size_t samples, std::uint64_t seed);

}  // namespace kdiv::hopf
