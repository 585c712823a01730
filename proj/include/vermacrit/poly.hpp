#pragma once

#include "vermacrit/rational.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace vermacrit {

// Dense univariate polynomial over Q. Coefficients are stored low degree
// first and trailing zeros are always stripped, so deg(0) = -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c) {
    if (!vermacrit::is_zero(c)) coef_.push_back(std::move(c));
  }
  Poly(std::initializer_list<Rat> cs) : coef_(cs) { trim(); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  bool is_zero() const { return coef_.empty(); }
  const std::vector<Rat>& coeffs() const { return coef_; }

  const Rat& operator[](std::size_t i) const {
    static const Rat zero(0);
    return i < coef_.size() ? coef_[i] : zero;
  }

  // Order of vanishing at 0; INT_MAX for the zero polynomial.
  int valuation() const {
    if (coef_.empty()) return std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < coef_.size(); ++i)
      if (!vermacrit::is_zero(coef_[i])) return static_cast<int>(i);
    return std::numeric_limits<int>::max();
  }

  Rat eval(const Rat& t) const {
    Rat acc(0);
    for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * t + coef_[i];
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
      if (vermacrit::is_zero(a.coef_[i])) continue;
      for (std::size_t j = 0; j < b.coef_.size(); ++j)
        r.coef_[i + j] += a.coef_[i] * b.coef_[j];
    }
    r.trim();
    return r;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& s) {
    if (vermacrit::is_zero(s)) {
      coef_.clear();
      return *this;
    }
    for (auto& c : coef_) c *= s;
    return *this;
  }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

  bool operator==(const Poly& o) const { return coef_ == o.coef_; }
  bool operator!=(const Poly& o) const { return coef_ != o.coef_; }

  // Multiply by x^k (k >= 0) or divide exactly by x^{-k} (k < 0).
  Poly shifted(int k) const {
    if (is_zero()) return Poly();
    Poly r;
    if (k >= 0) {
      r.coef_.assign(coef_.size() + k, Rat(0));
      for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i + k] = coef_[i];
    } else {
      if (valuation() < -k) throw std::runtime_error("Poly::shifted: inexact division by x^k");
      r.coef_.assign(coef_.begin() - k, coef_.end());
    }
    r.trim();
    return r;
  }

  Poly truncated(int order) const {
    Poly r = *this;
    if (static_cast<int>(r.coef_.size()) > order) r.coef_.resize(order);
    r.trim();
    return r;
  }

  // Euclidean division; remainder discarded by divmod users that know it is 0.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::runtime_error("Poly::divmod: division by zero");
    q = Poly();
    r = a;
    const int db = b.degree();
    const Rat& lead = b.coef_.back();
    while (!r.is_zero() && r.degree() >= db) {
      int k = r.degree() - db;
      Rat c = r.coef_.back() / lead;
      if (q.coef_.size() < static_cast<std::size_t>(k + 1)) q.coef_.resize(k + 1, Rat(0));
      q.coef_[k] += c;
      for (int i = 0; i <= db; ++i) r.coef_[i + k] -= c * b.coef_[i];
      r.trim();
    }
    q.trim();
  }

  // Exact quotient; throws when the division leaves a remainder.
  static Poly divexact(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::runtime_error("Poly::divexact: inexact division");
    return q;
  }

  // Monic gcd.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero()) {
      Rat lead = a.coef_.back();
      for (auto& c : a.coef_) c /= lead;
    }
    return a;
  }

  // Inverse of a unit (nonzero constant term) in Q[[x]] mod x^order.
  Poly unit_inverse(int order) const {
    if (valuation() != 0) throw std::runtime_error("Poly::unit_inverse: not a unit");
    std::vector<Rat> inv(order, Rat(0));
    inv[0] = Rat(1) / coef_[0];
    for (int n = 1; n < order; ++n) {
      Rat s(0);
      for (int k = 1; k <= n && k <= degree(); ++k) s += coef_[k] * inv[n - k];
      inv[n] = -s / coef_[0];
    }
    Poly r;
    r.coef_ = std::move(inv);
    r.trim();
    return r;
  }

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coef_.empty() && vermacrit::is_zero(coef_.back())) coef_.pop_back();
  }
  std::vector<Rat> coef_;
};

inline std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (vermacrit::is_zero(coef_[i])) continue;
    if (!out.empty()) out += sgn(coef_[i]) > 0 ? " + " : " - ";
    Rat a = out.empty() ? coef_[i] : abs(coef_[i]);
    if (i == 0)
      out += a.get_str();
    else {
      if (a != 1) out += a.get_str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline std::size_t hash_poly(const Poly& p) {
  std::size_t h = 0x517cc1b727220a95ULL;
  for (const auto& c : p.coeffs()) h ^= hash_rat(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace vermacrit
