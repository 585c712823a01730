#pragma once

#include "vermacrit/poly.hpp"

namespace vermacrit {

// Element of the local ring Q[x]_(x): a fraction num/den with den(0) != 0,
// kept normalized (gcd 1, den monic). Supports the x-adic valuation and
// evaluation at x = 0, which is all the deformation arguments need.
class LocalRat {
 public:
  LocalRat() : num_(), den_(Rat(1)) {}
  explicit LocalRat(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
  explicit LocalRat(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
  LocalRat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::runtime_error("LocalRat: zero denominator");
    normalize();
    if (!num_.is_zero() && den_.valuation() != 0)
      throw std::runtime_error("LocalRat: denominator not a unit at x=0");
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int valuation() const { return num_.valuation(); }

  Rat eval_at_zero() const { return num_[0] / den_[0]; }

  // True when invertible in Q[x]_(x).
  bool is_unit() const { return !num_.is_zero() && num_.valuation() == 0; }

  LocalRat operator-() const {
    LocalRat r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend LocalRat operator+(const LocalRat& a, const LocalRat& b) {
    return LocalRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LocalRat operator-(const LocalRat& a, const LocalRat& b) {
    return LocalRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LocalRat operator*(const LocalRat& a, const LocalRat& b) {
    return LocalRat(a.num_ * b.num_, a.den_ * b.den_);
  }
  // Defined whenever the quotient lies back in the local ring, i.e. the
  // x-valuation of a dominates that of b.
  friend LocalRat operator/(const LocalRat& a, const LocalRat& b) {
    if (b.is_zero()) throw std::runtime_error("LocalRat: division by zero");
    return LocalRat(a.num_ * b.den_, a.den_ * b.num_);
  }
  LocalRat& operator+=(const LocalRat& o) { return *this = *this + o; }
  LocalRat& operator-=(const LocalRat& o) { return *this = *this - o; }
  LocalRat& operator*=(const LocalRat& o) { return *this = *this * o; }

  bool operator==(const LocalRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const LocalRat& o) const { return !(*this == o); }

  std::string str() const {
    if (den_ == Poly(Rat(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(Rat(1));
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divexact(num_, g);
      den_ = Poly::divexact(den_, g);
    }
    Rat lead = den_.coeffs().back();
    if (lead != 1) {
      num_ *= Rat(1) / lead;
      den_ *= Rat(1) / lead;
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace vermacrit
