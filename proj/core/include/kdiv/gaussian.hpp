#pragma once

#include "kdiv/rational.hpp"

#include <string>

namespace kdiv::exact {

/// Complex number with exact rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re) {}  // NOLINT: rationals/integers embed
    GaussianRational(Rational re) : re_(std::move(re)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    /// Squared modulus re^2 + im^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    bool is_unit() const { return norm2() == Rational(1); }

    /// "a+bi" with both parts in canonical rational form, e.g. "3/5-4/5i".
    std::string str() const;

    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_, im_;
};

inline GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

inline GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    // a/b = a * conj(b) / |b|^2; Rational division throws on |b|^2 == 0.
    const Rational n2 = o.norm2();
    *this *= o.conj();
    re_ /= n2;
    im_ /= n2;
    return *this;
}

inline std::string GaussianRational::str() const {
    std::string s = re_.str();
    s += (im_.sign() < 0) ? "-" : "+";
    s += im_.abs().str();
    s += "i";
    return s;
}

}  // namespace kdiv::exact
