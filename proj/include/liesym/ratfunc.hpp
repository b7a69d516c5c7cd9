#pragma once

#include <string>

#include "liesym/poly.hpp"

namespace liesym {

// Normalized quotient of MultiPolys: gcd(num, den) = 1 and den monic under
// graded-lex, so equal values have equal representations.
class RationalFunction {
  public:
    RationalFunction() : num_(MultiPoly::zero()), den_(MultiPoly::one()) {}
    RationalFunction(const MultiPoly& num, const MultiPoly& den) { assign(num, den); }
    explicit RationalFunction(const MultiPoly& num) : num_(num), den_(MultiPoly::one()) {}
    explicit RationalFunction(const GaussianRational& c)
        : num_(MultiPoly(c)), den_(MultiPoly::one()) {}
    RationalFunction(long n) : num_(MultiPoly(GaussianRational(n))), den_(MultiPoly::one()) {}

    static RationalFunction variable(Var v) {
        return RationalFunction(MultiPoly::variable(v));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == MultiPoly::one(); }
    bool is_constant() const { return num_.is_constant() && den_ == MultiPoly::one(); }

    GaussianRational constant_value() const { return num_.constant_value(); }

    RationalFunction operator-() const { return make_normalized(-num_, den_); }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw division_by_zero();
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    bool less_canonical(const RationalFunction& o) const {
        if (num_ != o.num_) return num_.less_canonical(o.num_);
        return den_.less_canonical(o.den_);
    }

    // Formal partial derivative (quotient rule, re-normalized).
    RationalFunction diff(Var v) const {
        return RationalFunction(num_.diff(v) * den_ - num_ * den_.diff(v), den_ * den_);
    }

    RationalFunction subst(Var v, const GaussianRational& value) const {
        MultiPoly d = den_.subst(v, value);
        if (d.is_zero()) throw zero_denominator();
        return RationalFunction(num_.subst(v, value), d);
    }

    RationalFunction rename(const std::array<Var, kNumVars>& to) const {
        return RationalFunction(num_.rename(to), den_.rename(to));
    }

    bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }

    GaussianRational eval(const std::array<GaussianRational, kNumVars>& pt) const {
        GaussianRational d = den_.eval(pt);
        if (d.is_zero()) throw division_by_zero();
        return num_.eval(pt) / d;
    }

  private:
    static RationalFunction make_normalized(MultiPoly n, MultiPoly d) {
        RationalFunction r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void assign(const MultiPoly& num, const MultiPoly& den) {
        if (den.is_zero()) throw zero_denominator();
        if (num.is_zero()) {
            num_ = MultiPoly::zero();
            den_ = MultiPoly::one();
            return;
        }
        MultiPoly g = poly_gcd(num, den);
        MultiPoly n = g.is_constant() ? num : exact_div(num, g);
        MultiPoly d = g.is_constant() ? den : exact_div(den, g);
        GaussianRational lc = d.leading_coeff();
        num_ = n.scaled(lc.inverse());
        den_ = d.scaled(lc.inverse());
    }

    MultiPoly num_;
    MultiPoly den_;
};

inline RationalFunction rat_normalize(const MultiPoly& num, const MultiPoly& den) {
    return RationalFunction(num, den);
}

}  // namespace liesym
