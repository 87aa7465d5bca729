#include "kdiv/int_matrix.hpp"

#include <utility>

namespace kdiv::ktheory {

Int det_int(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_int: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
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
    return sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

}  // namespace kdiv::ktheory
