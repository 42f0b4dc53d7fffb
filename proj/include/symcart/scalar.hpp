#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "error.hpp"

namespace symcart {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Gaussian rational re + im*i. Every computation in the library happens in Q(i).
class Scalar {
  public:
    Scalar() = default;
    Scalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar fraction(long num, long den) { return Scalar(Rational(num, den)); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2, always a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar inverse() const {
        if (is_zero()) throw Error("division by zero scalar");
        Rational n = norm();
        return Scalar(re_ / n, -im_ / n);
    }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Total order used only for canonical sorting, not a field order.
    friend bool lexicographic_less(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Canonical text: "3/2", "(2i)", "(3/2 + 1i)", "(-1 - 1/2i)".
    std::string str() const {
        if (is_real()) return re_.get_str();
        Rational abs_im = abs(im_);
        if (sgn(re_) == 0) return "(" + im_.get_str() + "i)";
        return "(" + re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + abs_im.get_str() + "i)";
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

  private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace symcart

template <>
struct std::hash<symcart::Scalar> {
    std::size_t operator()(const symcart::Scalar& s) const noexcept {
        std::hash<std::string> h;
        return h(s.re().get_str()) ^ (h(s.im().get_str()) * 1000003u);
    }
};
