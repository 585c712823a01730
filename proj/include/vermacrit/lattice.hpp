#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vermacrit {

// Element of the root lattice written on the affine simple roots
// (alpha_0, alpha_1, ..., alpha_r). For the non-twisted catalog delta has
// alpha_0-coefficient 1, so delta_degree() is just c[0].
struct NuVec {
  std::vector<int> c;

  NuVec() = default;
  explicit NuVec(std::size_t n) : c(n, 0) {}
  explicit NuVec(std::vector<int> v) : c(std::move(v)) {}

  std::size_t size() const { return c.size(); }
  int operator[](std::size_t i) const { return c[i]; }
  int& operator[](std::size_t i) { return c[i]; }

  int height() const {
    int h = 0;
    for (int x : c) h += x;
    return h;
  }
  int delta_degree() const { return c.empty() ? 0 : c[0]; }

  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }
  bool nonneg() const {
    for (int x : c)
      if (x < 0) return false;
    return true;
  }
  // True when this - o has all coordinates >= 0.
  bool dominates(const NuVec& o) const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] < o.c[i]) return false;
    return true;
  }

  friend NuVec operator+(NuVec a, const NuVec& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend NuVec operator-(NuVec a, const NuVec& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend NuVec operator*(int k, NuVec a) {
    for (auto& x : a.c) x *= k;
    return a;
  }
  NuVec& operator+=(const NuVec& b) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c[i];
    return *this;
  }

  bool operator==(const NuVec& o) const { return c == o.c; }
  bool operator!=(const NuVec& o) const { return c != o.c; }
  bool operator<(const NuVec& o) const { return c < o.c; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
};

struct NuVecHash {
  std::size_t operator()(const NuVec& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v.c) h = (h ^ static_cast<std::size_t>(x + 0x7fff)) * 0x100000001b3ULL;
    return h;
  }
};

// Truncation window for every materialized weight drop nu.
struct TruncationWindow {
  int max_delta_degree = 0;
  int max_height = 0;

  bool contains(const NuVec& nu) const {
    return nu.nonneg() && nu.delta_degree() <= max_delta_degree && nu.height() <= max_height;
  }
};

}  // namespace vermacrit
