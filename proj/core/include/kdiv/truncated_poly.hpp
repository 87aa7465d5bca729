#pragma once

#include "kdiv/int_matrix.hpp"

#include <vector>

namespace kdiv::ktheory {

/// Element of Z[b] / (b^{n+1}): integer coefficients c_0..c_n of
/// c_0 + c_1 b + ... + c_n b^n.  Products drop every power above n.
class TruncatedPoly {
public:
    explicit TruncatedPoly(std::size_t n) : c_(n + 1) {}
    TruncatedPoly(std::size_t n, std::vector<Int> coeffs);

    /// Truncation degree n (the ring kills b^{n+1}).
    std::size_t bound() const { return c_.size() - 1; }

    const Int& coeff(std::size_t j) const { return c_.at(j); }
    void set_coeff(std::size_t j, Int v) { c_.at(j) = std::move(v); }
    const std::vector<Int>& coeffs() const { return c_; }

    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);
    friend TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b);
    friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) { return a.c_ == b.c_; }

private:
    std::vector<Int> c_;
};

/// Matrix of g |-> f * g in the basis {1, b, ..., b^n}: entry (i, j) is the
/// b^i coefficient of f * b^j, i.e. f_{i-j} for i >= j and 0 otherwise.
IntMatrix mult_operator_matrix(const TruncatedPoly& f, std::size_t n);

/// The multiplication operator class 2b - b^2, truncated at b^{n+1}.
/// Requires n >= 1 (at n = 0 the class has no home).
TruncatedPoly euler_class_eta2(std::size_t n);

}  // namespace kdiv::ktheory
