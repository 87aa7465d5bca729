#include "kdiv/matrix.hpp"

#include <utility>

namespace kdiv::exact {

namespace {

// Row-reduce m in place to reduced row echelon form.  Returns the list of
// pivot columns.  Pivot choice is the first row with a nonzero entry in the
// current column, so the result is deterministic.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Rational det_exact(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    // Clear denominators per row; track the combined scale.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, m(i, j).den());
        for (std::size_t j = 0; j < n; ++j) {
            const Rational s = m(i, j) * Rational(l);
            a[i][j] = s.num();  // integral by construction
        }
        scale *= l;
    }

    // Bareiss fraction-free elimination; every division below is exact.
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Int d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return Rational(d, scale);
}

std::vector<std::vector<Rational>> kernel_basis_exact(const RatMatrix& m) {
    RatMatrix r = m;
    const std::vector<std::size_t> pivots = rref(r);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = Rational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank_exact(const RatMatrix& m) {
    RatMatrix r = m;
    return rref(r).size();
}

std::optional<RatMatrix> inverse_exact(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse_exact: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    const std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace kdiv::exact
