#include "kdiv/multiplication_table.hpp"

#include "kdiv/cayley_dickson.hpp"
#include "kdiv/rng.hpp"
#include "kdiv/sphere.hpp"

#include <json.hpp>

#include <utility>

namespace kdiv::stiefel {

using exact::Mcg64;

MultiplicationTable::MultiplicationTable(std::size_t n) : n_(n), c_(n * n * n) {
    if (n == 0) throw std::invalid_argument("MultiplicationTable: n must be positive");
}

const Rational& MultiplicationTable::c(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= n_ || j >= n_ || k >= n_) throw std::out_of_range("MultiplicationTable::c");
    return c_[(i * n_ + j) * n_ + k];
}

void MultiplicationTable::set(std::size_t i, std::size_t j, std::size_t k, Rational v) {
    if (i >= n_ || j >= n_ || k >= n_) throw std::out_of_range("MultiplicationTable::set");
    c_[(i * n_ + j) * n_ + k] = std::move(v);
}

MultiplicationTable MultiplicationTable::from_cd_level(unsigned level) {
    const cd::CDAlgebra alg(level);
    const std::size_t n = alg.dim();
    MultiplicationTable t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cd::CDElement prod =
                cd::cd_multiply(cd::CDElement::basis(alg, i), cd::CDElement::basis(alg, j));
            for (std::size_t k = 0; k < n; ++k) t.set(i, j, k, prod[k]);
        }
    return t;
}

std::vector<Rational> MultiplicationTable::product(const std::vector<Rational>& a,
                                                   const std::vector<Rational>& b) const {
    if (a.size() != n_ || b.size() != n_)
        throw std::invalid_argument("MultiplicationTable: operand length mismatch");
    std::vector<Rational> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (b[j].is_zero()) continue;
            const Rational f = a[i] * b[j];
            for (std::size_t k = 0; k < n_; ++k) {
                const Rational& cijk = c(i, j, k);
                if (!cijk.is_zero()) out[k] += f * cijk;
            }
        }
    }
    return out;
}

std::vector<Rational> MultiplicationTable::product_with_basis(const std::vector<Rational>& a,
                                                              std::size_t j) const {
    if (a.size() != n_) throw std::invalid_argument("MultiplicationTable: operand length mismatch");
    if (j >= n_) throw std::out_of_range("MultiplicationTable: basis index");
    std::vector<Rational> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t k = 0; k < n_; ++k) {
            const Rational& cijk = c(i, j, k);
            if (!cijk.is_zero()) out[k] += a[i] * cijk;
        }
    }
    return out;
}

MultiplicationTable table_from_json_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("table: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("c"))
        throw std::invalid_argument("table: expected an object with keys \"n\" and \"c\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
        throw std::invalid_argument("table: \"n\" must be a positive integer");
    const std::size_t n = doc["n"].get<std::size_t>();

    const nlohmann::json& c = doc["c"];
    if (!c.is_array() || c.size() != n)
        throw std::invalid_argument("table: \"c\" must be an n-element array");
    MultiplicationTable t(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!c[i].is_array() || c[i].size() != n)
            throw std::invalid_argument("table: \"c\" rows must be n-element arrays");
        for (std::size_t j = 0; j < n; ++j) {
            if (!c[i][j].is_array() || c[i][j].size() != n)
                throw std::invalid_argument("table: \"c\" cells must be n-element arrays");
            for (std::size_t k = 0; k < n; ++k) {
                if (!c[i][j][k].is_string())
                    throw std::invalid_argument("table: entries must be rational strings");
                t.set(i, j, k, Rational::from_string(c[i][j][k].get<std::string>()));
            }
        }
    }
    return t;
}

std::string table_to_json_text(const MultiplicationTable& t) {
    const std::size_t n = t.n();
    nlohmann::json c = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < n; ++j) {
            nlohmann::json cell = nlohmann::json::array();
            for (std::size_t k = 0; k < n; ++k) cell.push_back(t.c(i, j, k).str());
            row.push_back(std::move(cell));
        }
        c.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["n"] = n;
    doc["c"] = std::move(c);
    return doc.dump();
}

NormalizationError::NormalizationError(std::vector<Rational> witness)
    : std::runtime_error("normalize_right_identity: the map a -> p(a, e_1) is singular"),
      witness_(std::move(witness)) {}

MultiplicationTable normalize_right_identity(const MultiplicationTable& p) {
    const std::size_t n = p.n();
    RatMatrix a(n, n);  // column i is p(e_i, e_1)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) a(k, i) = p.c(i, 0, k);

    const std::optional<RatMatrix> inv = exact::inverse_exact(a);
    if (!inv) {
        const auto kernel = exact::kernel_basis_exact(a);
        if (kernel.empty())
            throw std::logic_error("normalize_right_identity: singular map with empty kernel");
        throw NormalizationError(kernel.front());
    }

    MultiplicationTable out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational s(0);
                for (std::size_t l = 0; l < n; ++l) {
                    const Rational& w = (*inv)(l, i);  // (A^{-1} e_i)_l
                    if (!w.is_zero()) s += w * p.c(l, j, k);
                }
                out.set(i, j, k, std::move(s));
            }
    return out;
}

namespace {

Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void require_unit(const std::vector<Rational>& x, std::size_t n) {
    if (x.size() != n) throw std::invalid_argument("stiefel: point has wrong dimension");
    if (inner(x, x) != Rational(1))
        throw std::invalid_argument("stiefel: point is not an exact unit vector");
}

std::string point_str(const std::vector<Rational>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += x[i].str();
    }
    return s + ")";
}

}  // namespace

Frame frame_at(const MultiplicationTable& pn, const std::vector<Rational>& x) {
    const std::size_t n = pn.n();
    require_unit(x, n);

    RatMatrix cols(n, n);
    for (std::size_t k = 0; k < n; ++k) cols(k, 0) = x[k];
    for (std::size_t j = 1; j < n; ++j) {
        const std::vector<Rational> w = pn.product_with_basis(x, j);
        for (std::size_t k = 0; k < n; ++k) cols(k, j) = w[k];
    }
    Rational det = exact::det_exact(cols);
    return Frame{x, std::move(cols), std::move(det)};
}

std::vector<std::vector<Rational>> tangent_sections_at(const MultiplicationTable& pn,
                                                       const std::vector<Rational>& x) {
    const std::size_t n = pn.n();
    require_unit(x, n);

    std::vector<std::vector<Rational>> sections;
    sections.reserve(n - 1);
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<Rational> w = pn.product_with_basis(x, j);
        const Rational proj = inner(w, x);
        for (std::size_t k = 0; k < n; ++k) w[k] -= proj * x[k];
        sections.push_back(std::move(w));
    }
    return sections;
}

bool homogeneity_check(const MultiplicationTable& pn, const std::vector<Rational>& x) {
    std::vector<Rational> neg(x);
    for (Rational& v : neg) v = -v;
    const auto vx = tangent_sections_at(pn, x);
    const auto vn = tangent_sections_at(pn, neg);
    for (std::size_t i = 0; i < vx.size(); ++i)
        for (std::size_t k = 0; k < vx[i].size(); ++k)
            if (vn[i][k] != -vx[i][k]) return false;
    return true;
}

bool SectionBatchReport::all_passed() const {
    return nonzero_determinants == samples && full_rank_sections == samples &&
           tangent_sections == samples && homogeneous == samples;
}

SectionBatchReport verify_sections(const MultiplicationTable& pn, std::size_t samples,
                                   std::uint64_t seed) {
    const std::size_t n = pn.n();
    SectionBatchReport report;
    report.samples = samples;
    Mcg64 rng(seed);

    for (std::size_t s = 0; s < samples; ++s) {
        const std::vector<Rational> x = exact::random_sphere_point(rng, n);

        bool ok = true;
        const Frame f = frame_at(pn, x);
        if (!f.determinant.is_zero()) {
            ++report.nonzero_determinants;
        } else {
            ok = false;
        }

        const auto sections = tangent_sections_at(pn, x);
        bool tangent = true;
        for (const auto& v : sections)
            if (!inner(v, x).is_zero()) tangent = false;
        if (tangent) ++report.tangent_sections; else ok = false;

        RatMatrix sm(sections.size(), n);
        for (std::size_t i = 0; i < sections.size(); ++i)
            for (std::size_t k = 0; k < n; ++k) sm(i, k) = sections[i][k];
        if (exact::rank_exact(sm) == sections.size()) {
            ++report.full_rank_sections;
        } else {
            ok = false;
        }

        if (homogeneity_check(pn, x)) ++report.homogeneous; else ok = false;

        if (!ok && !report.first_failure) report.first_failure = point_str(x);
    }
    return report;
}

RatMatrix table_left_mult_matrix(const MultiplicationTable& p, const std::vector<Rational>& a) {
    const std::size_t n = p.n();
    if (a.size() != n) throw std::invalid_argument("table_left_mult_matrix: wrong dimension");
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<Rational> col = p.product_with_basis(a, j);
        for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
    }
    return m;
}

std::optional<TableZeroDivisorWitness> table_zero_divisor_scan(const MultiplicationTable& p) {
    const std::size_t n = p.n();
    auto signed_sum = [&](std::size_t i, std::size_t j, int sign) {
        std::vector<Rational> v(n);
        v[i] = Rational(1);
        v[j] = Rational(sign);
        return v;
    };
    auto is_zero_vec = [](const std::vector<Rational>& v) {
        for (const Rational& x : v)
            if (!x.is_zero()) return false;
        return true;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int s : {+1, -1}) {
                const std::vector<Rational> left = signed_sum(i, j, s);
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = k + 1; l < n; ++l)
                        for (int t : {+1, -1}) {
                            const std::vector<Rational> right = signed_sum(k, l, t);
                            if (is_zero_vec(p.product(left, right)))
                                return TableZeroDivisorWitness{left, right};
                        }
            }
    return std::nullopt;
}

}  // namespace kdiv::stiefel
