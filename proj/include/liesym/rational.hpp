#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "liesym/errors.hpp"

namespace liesym {

// Exact rational number with arbitrary-precision numerator and denominator.
// Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.  GMP's mpq
// maintains exactly this canonical form, so the wrapper only has to keep every
// mutation behind mpq_canonicalize.
class BigRational {
  public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}
    BigRational(long n, long d) {
        if (d == 0) throw division_by_zero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit BigRational(const mpz_class& n) : v_(n) {}

    // Parses "a" or "a/b" in base 10.
    static BigRational from_string(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw error("bad rational literal: " + text);
        q.canonicalize();
        return BigRational(q);
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational operator+(const BigRational& o) const { return BigRational(mpq_class(v_ + o.v_)); }
    BigRational operator-(const BigRational& o) const { return BigRational(mpq_class(v_ - o.v_)); }
    BigRational operator*(const BigRational& o) const { return BigRational(mpq_class(v_ * o.v_)); }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero()) throw division_by_zero();
        return BigRational(mpq_class(v_ / o.v_));
    }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw division_by_zero();
        v_ /= o.v_;
        return *this;
    }

    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    bool operator!=(const BigRational& o) const { return v_ != o.v_; }
    bool operator<(const BigRational& o) const { return v_ < o.v_; }
    bool operator<=(const BigRational& o) const { return v_ <= o.v_; }
    bool operator>(const BigRational& o) const { return v_ > o.v_; }
    bool operator>=(const BigRational& o) const { return v_ >= o.v_; }

    // Canonical decimal text: "a" when the denominator is 1, else "a/b".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    // Exact square root when it exists.
    bool sqrt(BigRational& out) const {
        if (sign() < 0) return false;
        mpz_class num = v_.get_num(), den = v_.get_den();
        mpz_class rn, rd;
        if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2)) {
            mpz_class check = rn * rn;
            if (check != num) return false;
        }
        if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2)) {
            mpz_class check = rd * rd;
            if (check != den) return false;
        }
        if (rn * rn != num || rd * rd != den) return false;
        out = BigRational(mpq_class(rn, rd));
        return true;
    }

  private:
    mpq_class v_;
};

inline BigRational abs(const BigRational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace liesym
