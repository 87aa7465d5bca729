#include "kdiv/hopf.hpp"

#include "kdiv/rng.hpp"
#include "kdiv/sphere.hpp"

#include <stdexcept>

namespace kdiv::hopf {

using exact::Int;
using exact::Mcg64;

ProjectivePointR::ProjectivePointR(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (const Rational& c : coords_)
        if (!c.is_zero()) return;
    throw std::invalid_argument("ProjectivePointR: coordinates must not all vanish");
}

ProjectivePointR ProjectivePointR::sign_canonical() const {
    // Clear denominators, divide by the content, flip sign if needed.
    Int l = 1;
    for (const Rational& c : coords_) l = lcm(l, c.den());
    std::vector<Int> ints;
    ints.reserve(coords_.size());
    Int g = 0;
    for (const Rational& c : coords_) {
        ints.push_back((c * Rational(l)).num());
        g = gcd(g, ints.back());
    }
    int lead = 0;
    for (const Int& v : ints)
        if (v != 0) {
            lead = sgn(v);
            break;
        }
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (const Int& v : ints) out.emplace_back(lead < 0 ? Int(-v) : v, g);
    return ProjectivePointR(std::move(out));
}

bool operator==(const ProjectivePointR& a, const ProjectivePointR& b) {
    if (a.coords_.size() != b.coords_.size()) return false;
    return a.sign_canonical().coords_ == b.sign_canonical().coords_;
}

std::vector<GaussianRational> complexify(const std::vector<Rational>& x) {
    if (x.size() % 2 != 0) throw std::invalid_argument("complexify: odd-length input");
    std::vector<GaussianRational> z;
    z.reserve(x.size() / 2);
    for (std::size_t j = 0; j + 1 < x.size(); j += 2) z.emplace_back(x[j], x[j + 1]);
    return z;
}

std::vector<Rational> realify(const std::vector<GaussianRational>& z) {
    std::vector<Rational> x;
    x.reserve(2 * z.size());
    for (const GaussianRational& c : z) {
        x.push_back(c.re());
        x.push_back(c.im());
    }
    return x;
}

namespace {

Rational norm2_sum(const std::vector<GaussianRational>& z) {
    Rational s(0);
    for (const GaussianRational& c : z) s += c.norm2();
    return s;
}

std::string gauss_vec_str(const std::vector<GaussianRational>& z) {
    std::string s = "(";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) s += ", ";
        s += z[i].str();
    }
    return s + ")";
}

std::string rat_vec_str(const std::vector<Rational>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += x[i].str();
    }
    return s + ")";
}

// First-nonzero-coordinate proportionality: q = mu * p for complex mu.
bool proportional(const std::vector<GaussianRational>& p, const std::vector<GaussianRational>& q) {
    if (p.size() != q.size()) return false;
    std::size_t lead = p.size();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == p.size()) return false;
    if (q[lead].is_zero()) return false;
    const GaussianRational mu = q[lead] / p[lead];
    for (std::size_t i = 0; i < p.size(); ++i)
        if (q[i] != mu * p[i]) return false;
    return true;
}

}  // namespace

AssocBundlePoint make_bundle_point(std::vector<GaussianRational> z, GaussianRational v) {
    if (norm2_sum(z) != Rational(1))
        throw std::invalid_argument("AssocBundlePoint: z must be an exact unit vector");
    if (!v.is_unit()) throw std::invalid_argument("AssocBundlePoint: v must be an exact unit");
    return AssocBundlePoint{std::move(z), std::move(v)};
}

bool rho_equivalent(const AssocBundlePoint& p, const AssocBundlePoint& q) {
    if (p.z.size() != q.z.size())
        throw std::invalid_argument("rho_equivalent: mixed bundle dimensions");
    std::size_t lead = p.z.size();
    for (std::size_t i = 0; i < p.z.size(); ++i)
        if (!p.z[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == p.z.size()) return false;  // unreachable for valid points
    if (q.z[lead].is_zero()) return false;

    const GaussianRational ubar = q.z[lead] / p.z[lead];
    const GaussianRational u = ubar.conj();
    if (!u.is_unit()) return false;
    for (std::size_t i = 0; i < p.z.size(); ++i)
        if (q.z[i] != p.z[i] * ubar) return false;
    return q.v == u * u * p.v;
}

AssocBundlePoint g_map(const std::vector<Rational>& x, const GaussianRational& w) {
    Rational n2(0);
    for (const Rational& c : x) n2 += c * c;
    if (n2 != Rational(1)) throw std::invalid_argument("g_map: x must be an exact unit vector");
    if (!w.is_unit()) throw std::invalid_argument("g_map: w must be an exact unit");

    std::vector<GaussianRational> z = complexify(x);
    const GaussianRational wbar = w.conj();
    for (GaussianRational& c : z) c = wbar * c;
    return AssocBundlePoint{std::move(z), w * w};
}

bool w_independence_check(const std::vector<Rational>& x, const GaussianRational& w1,
                          const GaussianRational& w2) {
    return rho_equivalent(g_map(x, w1), g_map(x, w2));
}

bool antipodal_invariance_check(const std::vector<Rational>& x, const GaussianRational& w) {
    std::vector<Rational> neg(x);
    for (Rational& c : neg) c = -c;
    return rho_equivalent(g_map(x, w), g_map(neg, w));
}

EquivarianceExponents equivariance_check(const std::vector<Rational>& x,
                                         const GaussianRational& w,
                                         const GaussianRational& lambda) {
    if (!lambda.is_unit())
        throw std::invalid_argument("equivariance_check: lambda must be an exact unit");
    std::vector<GaussianRational> z = complexify(x);
    for (GaussianRational& c : z) c = lambda * c;
    const AssocBundlePoint moved = g_map(realify(z), w);

    const AssocBundlePoint base = g_map(x, w);
    const GaussianRational l2 = lambda * lambda;

    EquivarianceExponents e;
    e.plus_two = rho_equivalent(moved, AssocBundlePoint{base.z, l2 * base.v});
    e.minus_two = rho_equivalent(moved, AssocBundlePoint{base.z, base.v / l2});
    return e;
}

bool base_compatibility_check(const std::vector<Rational>& x, const GaussianRational& w) {
    const AssocBundlePoint image = g_map(x, w);
    return proportional(complexify(x), image.z);
}

bool fiber_injectivity_check(const std::vector<GaussianRational>& z0,
                             const std::vector<GaussianRational>& lambdas) {
    if (norm2_sum(z0) != Rational(1))
        throw std::invalid_argument("fiber_injectivity_check: base must be an exact unit vector");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!lambdas[i].is_unit())
            throw std::invalid_argument("fiber_injectivity_check: fiber scalars must be units");
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j] || lambdas[i] == -lambdas[j])
                throw std::invalid_argument(
                    "fiber_injectivity_check: fiber scalars must be distinct up to sign");
    }

    const GaussianRational w(Rational(1), Rational(0));
    std::vector<AssocBundlePoint> images;
    images.reserve(lambdas.size());
    for (const GaussianRational& l : lambdas) {
        std::vector<GaussianRational> z(z0);
        for (GaussianRational& c : z) c = l * c;
        images.push_back(g_map(realify(z), w));
    }
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (rho_equivalent(images[i], images[j])) return false;
    return true;
}

bool pullback_proportion_check(const std::vector<Rational>& x, const GaussianRational& lambda) {
    bool nonzero = false;
    for (const Rational& c : x)
        if (!c.is_zero()) nonzero = true;
    if (!nonzero) throw std::invalid_argument("pullback_proportion_check: x must be nonzero");

    std::vector<GaussianRational> p = complexify(x);
    p.push_back(lambda);
    std::vector<GaussianRational> q;
    q.reserve(p.size());
    for (const GaussianRational& c : p) q.push_back(-c);
    if (!proportional(p, q)) return false;

    // Multiplying the fiber coordinate by i must be the same as the real
    // substitution (u, v) |-> (-v, u) appended to x.
    std::vector<Rational> rotated(x);
    rotated.push_back(-lambda.im());
    rotated.push_back(lambda.re());
    const std::vector<GaussianRational> lhs = complexify(rotated);
    std::vector<GaussianRational> rhs = complexify(x);
    rhs.push_back(GaussianRational::i() * lambda);
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] != rhs[i]) return false;
    return true;
}

void CheckStats::tally(bool ok, const std::string& witness) {
    ++run;
    if (ok) {
        ++passed;
    } else if (!first_failure) {
        first_failure = witness;
    }
}

bool HopfBatchReport::all_passed() const {
    return w_independence.clean() && antipodal.clean() && equivariance.clean() &&
           base_compatibility.clean() && injectivity.clean() && pullback.clean() &&
           exponent_uniform;
}

HopfBatchReport run_batch_checks(std::size_t n, std::size_t samples, std::uint64_t seed) {
    HopfBatchReport report;
    report.n = n;
    report.samples = samples;

    Mcg64 rng(seed);
    const std::size_t real_dim = 2 * n + 2;

    bool plus_two_all = true, minus_two_all = true;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::vector<Rational> x = exact::random_sphere_point(rng, real_dim);
        const GaussianRational w1 = exact::random_unit_complex(rng);
        const GaussianRational w2 = exact::random_unit_complex(rng);
        const GaussianRational lambda = exact::random_unit_complex(rng);

        const std::string witness = "x=" + rat_vec_str(x) + " w1=" + w1.str() +
                                    " w2=" + w2.str() + " lambda=" + lambda.str();

        report.w_independence.tally(w_independence_check(x, w1, w2), witness);
        report.antipodal.tally(antipodal_invariance_check(x, w1), witness);
        report.base_compatibility.tally(base_compatibility_check(x, w1), witness);

        const EquivarianceExponents e = equivariance_check(x, w1, lambda);
        report.equivariance.tally(e.consistent(), witness);
        plus_two_all = plus_two_all && e.plus_two;
        minus_two_all = minus_two_all && e.minus_two;

        // Fiber pair over a fresh base: two units distinct up to sign.
        const std::vector<GaussianRational> z0 =
            complexify(exact::random_sphere_point(rng, real_dim));
        const GaussianRational l1 = exact::random_unit_complex(rng);
        GaussianRational l2 = exact::random_unit_complex(rng);
        while (l2 == l1 || l2 == -l1) l2 = exact::random_unit_complex(rng);
        report.injectivity.tally(fiber_injectivity_check(z0, {l1, l2}),
                                 "z0=" + gauss_vec_str(z0) + " l1=" + l1.str() +
                                     " l2=" + l2.str());

        std::vector<Rational> y(real_dim);
        bool all_zero = true;
        for (Rational& c : y) {
            c = exact::random_rational(rng);
            if (!c.is_zero()) all_zero = false;
        }
        if (all_zero) y[0] = Rational(1);
        const GaussianRational mu(exact::random_rational(rng), exact::random_rational(rng));
        report.pullback.tally(pullback_proportion_check(y, mu),
                              "x=" + rat_vec_str(y) + " lambda=" + mu.str());
    }

    report.exponent_uniform = plus_two_all || minus_two_all;
    if (plus_two_all) {
        report.exponent = +2;
    } else if (minus_two_all) {
        report.exponent = -2;
    }
    return report;
}

}  // namespace kdiv::hopf
