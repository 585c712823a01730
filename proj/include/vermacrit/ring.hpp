#pragma once

#include "vermacrit/local_ring.hpp"
#include "vermacrit/poly.hpp"
#include "vermacrit/rational.hpp"

namespace vermacrit {

// Uniform interface over the three coefficient rings the modules run in:
// plain rationals, Q[x] (deformation lines), and the localization Q[x]_(x)
// (intertwiner solves, which need division by units).
template <typename R>
struct RingOps;

template <>
struct RingOps<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_rat(const Rat& q) { return q; }
  static bool is_zero(const Rat& a) { return vermacrit::is_zero(a); }
  static std::string str(const Rat& a) { return a.get_str(); }
};

template <>
struct RingOps<Poly> {
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rat(1)); }
  static Poly from_rat(const Rat& q) { return Poly(q); }
  static bool is_zero(const Poly& a) { return a.is_zero(); }
  static std::string str(const Poly& a) { return a.str(); }
};

template <>
struct RingOps<LocalRat> {
  static LocalRat zero() { return LocalRat(); }
  static LocalRat one() { return LocalRat(Rat(1)); }
  static LocalRat from_rat(const Rat& q) { return LocalRat(q); }
  static bool is_zero(const LocalRat& a) { return a.is_zero(); }
  static std::string str(const LocalRat& a) { return a.str(); }
};

}  // namespace vermacrit
