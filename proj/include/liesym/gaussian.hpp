#pragma once

#include <string>

#include "liesym/rational.hpp"

namespace liesym {

// Element of Q(i): re + im*i with exact rational components.  The scalar
// field for every polynomial in this library.  Values are immutable in
// spirit: all operations return fresh canonical values.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(const BigRational& re) : re_(re) {}
    GaussianRational(const BigRational& re, const BigRational& im) : re_(re), im_(im) {}
    GaussianRational(long n, long d) : re_(n, d) {}

    static GaussianRational i() { return GaussianRational(BigRational(0), BigRational(1)); }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_integer() const { return re_.is_integer() && im_.is_zero(); }
    bool is_rational() const { return im_.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    // |a|^2 = a * conj(a), a rational number.
    BigRational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational operator+(const GaussianRational& o) const {
        return GaussianRational(re_ + o.re_, im_ + o.im_);
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return GaussianRational(re_ - o.re_, im_ - o.im_);
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return GaussianRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero()) throw division_by_zero();
        BigRational n = o.norm();
        GaussianRational num = *this * o.conj();
        return GaussianRational(num.re_ / n, num.im_ / n);
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    // Total order for canonical sorting only (no arithmetic meaning).
    bool operator<(const GaussianRational& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    // sqrt over Q(i) when it exists: solves (x + y i)^2 = re + im i exactly.
    bool sqrt(GaussianRational& out) const {
        if (is_zero()) { out = GaussianRational(); return true; }
        BigRational n = norm(), r;
        if (!n.sqrt(r)) return false;  // |a| must be rational
        // x^2 = (re + |a|)/2, y = im/(2x); fall back to pure-imaginary root.
        BigRational half(1, 2);
        BigRational x2 = (re_ + r) * half;
        BigRational x;
        if (x2.sqrt(x) && !x.is_zero()) {
            BigRational y = im_ / (x + x);
            out = GaussianRational(x, y);
            return out * out == *this;
        }
        BigRational y2 = (r - re_) * half;
        BigRational y;
        if (y2.sqrt(y) && !y.is_zero()) {
            out = GaussianRational(BigRational(0), y);
            if (out * out == *this) return true;
            out = GaussianRational(BigRational(0), -y);
            return out * out == *this;
        }
        return false;
    }

    // Canonical rendering: "a/b + c/d*i" with zero parts omitted; see the
    // expression frontend for the full grammar this round-trips through.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (!re_.is_zero()) out = re_.str();
        if (!im_.is_zero()) {
            std::string imag;
            BigRational a = liesym::abs(im_);
            if (a.is_one()) imag = "i";
            else imag = a.str() + "*i";
            if (out.empty()) {
                out = (im_.sign() < 0 ? "-" : "") + imag;
            } else {
                out += (im_.sign() < 0 ? " - " : " + ") + imag;
            }
        }
        return out;
    }

  private:
    BigRational re_;
    BigRational im_;
};

inline GaussianRational conj(const GaussianRational& a) { return a.conj(); }

}  // namespace liesym
