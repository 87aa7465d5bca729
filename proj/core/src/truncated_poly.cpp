#include "kdiv/truncated_poly.hpp"

#include <stdexcept>

namespace kdiv::ktheory {

TruncatedPoly::TruncatedPoly(std::size_t n, std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    if (c_.size() > n + 1) throw std::invalid_argument("TruncatedPoly: too many coefficients");
    c_.resize(n + 1);
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
    if (a.bound() != b.bound())
        throw std::invalid_argument("TruncatedPoly: mixed truncation degrees");
    const std::size_t n = a.bound();
    TruncatedPoly p(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return p;
}

TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b) {
    if (a.bound() != b.bound())
        throw std::invalid_argument("TruncatedPoly: mixed truncation degrees");
    TruncatedPoly s(a.bound());
    for (std::size_t i = 0; i <= a.bound(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
}

IntMatrix mult_operator_matrix(const TruncatedPoly& f, std::size_t n) {
    if (f.bound() != n)
        throw std::invalid_argument("mult_operator_matrix: polynomial truncated at a different degree");
    IntMatrix m(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = j; i <= n; ++i) m(i, j) = f.coeff(i - j);
    return m;
}

TruncatedPoly euler_class_eta2(std::size_t n) {
    if (n < 1) throw std::invalid_argument("euler_class_eta2: requires n >= 1");
    TruncatedPoly f(n);
    f.set_coeff(1, 2);
    if (n >= 2) f.set_coeff(2, -1);
    return f;
}

}  // namespace kdiv::ktheory
