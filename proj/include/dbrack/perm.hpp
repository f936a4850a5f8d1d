#pragma once

#include <array>
#include <string>
#include <string_view>

#include "dbrack/tensor.hpp"

namespace dbrack {

// Permutation of {1,2,3}, stored 0-based. Composition (s*r)(i) = s(r(i)).
class Perm3 {
 public:
  constexpr Perm3() : img_{0, 1, 2} {}
  constexpr Perm3(int a, int b, int c) : img_{a, b, c} {}

  // Accepts "id", "12", "(12)", "123", "(132)", ...
  static Perm3 parse(std::string_view s);
  static Perm3 id() { return {}; }
  static Perm3 t12() { return {1, 0, 2}; }
  static Perm3 t13() { return {2, 1, 0}; }
  static Perm3 t23() { return {0, 2, 1}; }
  static Perm3 c123() { return {1, 2, 0}; }
  static Perm3 c132() { return {2, 0, 1}; }

  int operator()(int i) const { return img_[i]; }
  Perm3 operator*(const Perm3& r) const {
    return {img_[r.img_[0]], img_[r.img_[1]], img_[r.img_[2]]};
  }
  Perm3 inverse() const {
    Perm3 p;
    for (int i = 0; i < 3; ++i) p.img_[img_[i]] = i;
    return p;
  }
  bool is_transposition() const;
  std::string name() const;

  friend bool operator==(const Perm3&, const Perm3&) = default;

  // tau_s(a1, a2, a3) = (a_{s^-1(1)}, a_{s^-1(2)}, a_{s^-1(3)})
  template <class T>
  std::array<T, 3> act(const std::array<T, 3>& in) const {
    Perm3 inv = inverse();
    return {in[inv.img_[0]], in[inv.img_[1]], in[inv.img_[2]]};
  }

 private:
  std::array<int, 3> img_;
};

Tensor3 tensor3_perm(const Perm3& s, const Tensor3& t);

}  // namespace dbrack
