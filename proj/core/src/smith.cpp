#include "kdiv/smith.hpp"

#include <cstddef>
#include <utility>

namespace kdiv::ktheory {

namespace {

// Row/column operations applied in lockstep to d and to u (rows) or v
// (columns) keep the invariant u * m * v = d at every step.
struct Worker {
    IntMatrix& d;
    IntMatrix& u;
    IntMatrix& v;

    std::size_t rows() const { return d.rows(); }
    std::size_t cols() const { return d.cols(); }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols(); ++j) std::swap(d(a, j), d(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows(); ++i) std::swap(d(i, a), d(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
    }
    // row[dst] -= q * row[src]
    void row_sub(std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols(); ++j) d(dst, j) -= q * d(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) -= q * u(src, j);
    }
    // col[dst] -= q * col[src]
    void col_sub(std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows(); ++i) d(i, dst) -= q * d(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) -= q * v(i, src);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols(); ++j) d(a, j) = -d(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
    }

    // Clears row t and column t down to a single pivot at (t, t).  Pivot
    // rule: minimal |entry| over the submatrix [t..)x[t..), ties broken by
    // lowest (row, col).  Returns false when the submatrix is zero.
    bool reduce_at(std::size_t t) {
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows(); ++i)
            for (std::size_t j = t; j < cols(); ++j) {
                if (d(i, j) == 0) continue;
                if (!found || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) return false;
        swap_rows(t, pi);
        swap_cols(t, pj);

        // Truncated division leaves remainders strictly smaller than the
        // pivot, so each swap shrinks |pivot| and the loop terminates.
        for (;;) {
            bool restart = false;
            for (std::size_t i = t + 1; i < rows(); ++i) {
                if (d(i, t) == 0) continue;
                row_sub(i, t, Int(d(i, t) / d(t, t)));
                if (d(i, t) != 0) {
                    swap_rows(t, i);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            for (std::size_t j = t + 1; j < cols(); ++j) {
                if (d(t, j) == 0) continue;
                col_sub(j, t, Int(d(t, j) / d(t, t)));
                if (d(t, j) != 0) {
                    swap_cols(t, j);
                    restart = true;
                    break;
                }
            }
            if (!restart) break;
        }
        return true;
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    Worker w{s.d, s.u, s.v};

    const std::size_t dmax = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    while (rank < dmax && w.reduce_at(rank)) ++rank;

    // Enforce d_i | d_{i+1}.  Folding column i+1 into column i and
    // re-diagonalizing from stage i replaces d_i by a proper divisor, so
    // the loop terminates.
    for (;;) {
        std::size_t bad = rank;
        for (std::size_t i = 0; i + 1 < rank; ++i)
            if (s.d(i + 1, i + 1) % s.d(i, i) != 0) {
                bad = i;
                break;
            }
        if (bad == rank) break;
        w.col_sub(bad, bad + 1, Int(-1));
        rank = bad;
        while (rank < dmax && w.reduce_at(rank)) ++rank;
    }

    for (std::size_t i = 0; i < dmax; ++i)
        if (s.d(i, i) < 0) w.negate_row(i);

    return s;
}

std::vector<Int> invariant_factors(const SmithForm& s) {
    std::vector<Int> f;
    const std::size_t dmax = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i < dmax; ++i) {
        if (s.d(i, i) == 0) break;
        f.push_back(s.d(i, i));
    }
    return f;
}

std::vector<std::vector<Int>> int_kernel_basis(const IntMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    const std::size_t rank = invariant_factors(s).size();
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = rank; j < m.cols(); ++j) {
        std::vector<Int> x(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) x[i] = s.v(i, j);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace kdiv::ktheory
