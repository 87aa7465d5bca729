#include "kdiv/cayley_dickson.hpp"

#include "kdiv/rng.hpp"

#include <span>
#include <stdexcept>
#include <string>

namespace kdiv::cd {

using exact::Mcg64;
using exact::random_rational;

CDAlgebra::CDAlgebra(unsigned level, bool allow_large) : level_(level) {
    if (level > kDefaultLevelCap && !allow_large)
        throw std::invalid_argument("CDAlgebra: level " + std::to_string(level) +
                                    " exceeds the default cap of " +
                                    std::to_string(kDefaultLevelCap));
}

CDElement::CDElement(const CDAlgebra& alg, std::vector<Rational> coeffs)
    : alg_(alg), c_(std::move(coeffs)) {
    if (c_.size() != alg_.dim())
        throw std::invalid_argument("CDElement: coefficient count does not match dimension");
}

CDElement CDElement::zero(const CDAlgebra& alg) {
    return CDElement(alg, std::vector<Rational>(alg.dim()));
}

CDElement CDElement::basis(const CDAlgebra& alg, std::size_t i) {
    if (i >= alg.dim()) throw std::out_of_range("CDElement::basis");
    std::vector<Rational> c(alg.dim());
    c[i] = Rational(1);
    return CDElement(alg, std::move(c));
}

bool CDElement::is_zero() const {
    for (const Rational& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::string CDElement::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += c_[i].str();
    }
    return s + ")";
}

static void require_same_algebra(const CDElement& a, const CDElement& b) {
    if (!(a.algebra() == b.algebra()))
        throw std::invalid_argument("CDElement: operands from different levels");
}

CDElement operator+(const CDElement& a, const CDElement& b) {
    require_same_algebra(a, b);
    std::vector<Rational> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return CDElement(a.algebra(), std::move(c));
}

CDElement operator-(const CDElement& a, const CDElement& b) {
    require_same_algebra(a, b);
    std::vector<Rational> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return CDElement(a.algebra(), std::move(c));
}

CDElement operator*(const Rational& s, const CDElement& a) {
    std::vector<Rational> c(a.coeffs());
    for (Rational& x : c) x *= s;
    return CDElement(a.algebra(), std::move(c));
}

bool operator==(const CDElement& a, const CDElement& b) {
    return a.algebra() == b.algebra() && a.coeffs() == b.coeffs();
}

namespace {

using Span = std::span<const Rational>;

std::vector<Rational> conj_rec(Span x) {
    std::vector<Rational> r(x.begin(), x.end());
    for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
}

// One doubling step of the product; out1/out2 follow the convention in the
// header: (a, b)(c, d) = (a c - conj(d) b, d a + b conj(c)).
std::vector<Rational> mul_rec(Span x, Span y) {
    const std::size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const std::size_t h = n / 2;
    const Span a = x.first(h), b = x.last(h);
    const Span c = y.first(h), d = y.last(h);

    const std::vector<Rational> dc = conj_rec(d);
    const std::vector<Rational> cc = conj_rec(c);
    const std::vector<Rational> t1 = mul_rec(a, c);
    const std::vector<Rational> t2 = mul_rec(dc, b);
    const std::vector<Rational> t3 = mul_rec(d, a);
    const std::vector<Rational> t4 = mul_rec(b, cc);

    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = t1[i] - t2[i];
        out[h + i] = t3[i] + t4[i];
    }
    return out;
}

}  // namespace

CDElement cd_multiply(const CDElement& a, const CDElement& b) {
    require_same_algebra(a, b);
    return CDElement(a.algebra(), mul_rec(a.coeffs(), b.coeffs()));
}

CDElement conjugate(const CDElement& a) {
    return CDElement(a.algebra(), conj_rec(a.coeffs()));
}

Rational norm(const CDElement& a) {
    Rational n(0);
    for (const Rational& x : a.coeffs()) n += x * x;
    return n;
}

bool is_zero_divisor_pair(const CDElement& a, const CDElement& b) {
    if (a.is_zero() || b.is_zero()) return false;
    return cd_multiply(a, b).is_zero();
}

RatMatrix left_mult_matrix(const CDElement& a) {
    const std::size_t n = a.algebra().dim();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const CDElement col = cd_multiply(a, CDElement::basis(a.algebra(), j));
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

namespace {

CDElement signed_basis_sum(const CDAlgebra& alg, std::size_t i, std::size_t j, int sign) {
    std::vector<Rational> c(alg.dim());
    c[i] = Rational(1);
    c[j] = Rational(sign);
    return CDElement(alg, std::move(c));
}

std::vector<ZeroDivisorPair> scan_basis_pairs(const CDAlgebra& alg, std::size_t limit) {
    const std::size_t n = alg.dim();
    std::vector<ZeroDivisorPair> found;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int s : {+1, -1}) {
                const CDElement left = signed_basis_sum(alg, i, j, s);
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = k + 1; l < n; ++l)
                        for (int t : {+1, -1}) {
                            const CDElement right = signed_basis_sum(alg, k, l, t);
                            if (cd_multiply(left, right).is_zero()) {
                                found.push_back({left, right});
                                if (limit && found.size() >= limit) return found;
                            }
                        }
            }
    return found;
}

std::vector<ZeroDivisorPair> scan_random(const CDAlgebra& alg, std::size_t limit,
                                         std::size_t samples, std::uint64_t seed) {
    Mcg64 rng(seed);
    std::vector<ZeroDivisorPair> found;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Rational> ca(alg.dim()), cb(alg.dim());
        for (Rational& x : ca) x = random_rational(rng, 3, 3);
        for (Rational& x : cb) x = random_rational(rng, 3, 3);
        CDElement a(alg, std::move(ca)), b(alg, std::move(cb));
        if (is_zero_divisor_pair(a, b)) {
            found.push_back({std::move(a), std::move(b)});
            if (limit && found.size() >= limit) return found;
        }
    }
    return found;
}

}  // namespace

std::vector<ZeroDivisorPair> find_zero_divisors(const CDAlgebra& alg,
                                                ZeroDivisorSearch strategy,
                                                std::size_t limit,
                                                std::size_t samples,
                                                std::uint64_t seed) {
    switch (strategy) {
        case ZeroDivisorSearch::kBasisPairs:
            return scan_basis_pairs(alg, limit);
        case ZeroDivisorSearch::kRandom:
            return scan_random(alg, limit, samples, seed);
    }
    throw std::logic_error("find_zero_divisors: unknown strategy");
}

NormCheckReport norm_multiplicativity_check(const CDAlgebra& alg,
                                            std::size_t samples,
                                            std::uint64_t seed) {
    NormCheckReport report;
    report.level = alg.level();
    report.samples_requested = samples;

    Mcg64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Rational> ca(alg.dim()), cb(alg.dim());
        for (Rational& x : ca) x = random_rational(rng, 5, 5);
        for (Rational& x : cb) x = random_rational(rng, 5, 5);
        const CDElement a(alg, std::move(ca)), b(alg, std::move(cb));
        ++report.samples_run;
        const Rational na = norm(a), nb = norm(b);
        const Rational np = norm(cd_multiply(a, b));
        if (np != na * nb) {
            report.multiplicative = false;
            report.counterexample = NormCheckCounterexample{a, b, na, nb, np};
            return report;
        }
    }

    // Random sampling cannot certify failure at levels >= 4 by itself; the
    // exhaustive basis-pair scan supplies an exact counterexample if one
    // exists in that family.
    if (alg.level() >= 4) {
        const auto pairs = scan_basis_pairs(alg, 1);
        if (!pairs.empty()) {
            const CDElement& a = pairs.front().left;
            const CDElement& b = pairs.front().right;
            report.multiplicative = false;
            report.counterexample_from_scan = true;
            report.counterexample =
                NormCheckCounterexample{a, b, norm(a), norm(b), norm(cd_multiply(a, b))};
            return report;
        }
    }

    report.multiplicative = true;
    return report;
}

}  // namespace kdiv::cd
