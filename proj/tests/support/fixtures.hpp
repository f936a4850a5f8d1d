#pragma once

#include <string>
#include <vector>

#include "dbrack/dbracket.hpp"

namespace dbrack::fixtures {

inline Tensor2 t2(const Algebra& a, const char* s) { return parse_tensor<2>(a, s); }

inline Algebra xy() { return Algebra({"x", "y"}); }

// <x,x> = x (x) 1 - 1 (x) x, <y,y> = y (x) 1 - 1 (x) y, <x,y> = 0 on the outer bimodule.
inline DoubleBracket van_den_bergh() {
  Algebra A = xy();
  return DoubleBracket(A, Bimodule::untwisted(BimodKind::Outer, 2),
                       {{{0, 0}, t2(A, "x (x) 1 - 1 (x) x")}, {{1, 1}, t2(A, "y (x) 1 - 1 (x) y")}});
}

inline AlgEndo xy_swap() { return AlgEndo({gen(1), gen(0)}); }

// The image of van_den_bergh() under alpha (x) alpha with alpha: x <-> y.
inline DoubleBracket twisted_van_den_bergh() {
  Algebra A = xy();
  AlgEndo a = xy_swap();
  return DoubleBracket(A, Bimodule(BimodKind::Outer, a, a),
                       {{{0, 0}, t2(A, "y (x) 1 - 1 (x) y")}, {{1, 1}, t2(A, "x (x) 1 - 1 (x) x")}});
}

// <x,y> = lambda 1 (x) 1 on the right bimodule.
inline DoubleBracket right_constant(const Rational& lambda = 1) {
  Algebra A = xy();
  return DoubleBracket(A, Bimodule::untwisted(BimodKind::Right, 2),
                       {{{0, 1}, Tensor2::monomial({Word(), Word()}, lambda)}});
}

// Gradient bracket of f = x1*x2 + x2*x1 written out by hand.
inline DoubleBracket quad_gradient() {
  Algebra A = Algebra::numbered(3);
  return DoubleBracket(A, Bimodule::untwisted(BimodKind::Outer, 3),
                       {{{1, 2}, t2(A, "1 (x) x2 + x2 (x) 1")},
                        {{2, 0}, t2(A, "1 (x) x1 + x1 (x) 1")}});
}

struct Fixture {
  std::string name;
  DoubleBracket db;
};

// A mixed corpus over all four kinds, twisted and untwisted.
inline std::vector<Fixture> corpus() {
  Algebra A = xy();
  std::vector<Fixture> out;
  out.push_back({"vdb-outer", van_den_bergh()});
  out.push_back({"vdb-inner", swap_equivalent(van_den_bergh())});
  out.push_back({"vdb-twisted", twisted_van_den_bergh()});
  out.push_back({"right-const", right_constant()});
  out.push_back({"left-const", swap_equivalent(right_constant())});
  out.push_back({"outer-mixed",
                 DoubleBracket(A, Bimodule::untwisted(BimodKind::Outer, 2),
                               {{{0, 0}, t2(A, "x (x) 1 - 1 (x) x")},
                                {{0, 1}, t2(A, "x (x) y + 2 (x) x^2 - 1/2*y (x) 1")}})});
  out.push_back({"right-quad",
                 DoubleBracket(A, Bimodule::untwisted(BimodKind::Right, 2),
                               {{{0, 0}, t2(A, "x (x) 1 - 1 (x) x")},
                                {{0, 1}, t2(A, "y (x) x + 1 (x) 1")}})});
  AlgEndo sw = xy_swap();
  out.push_back({"left-twisted",
                 DoubleBracket(A, Bimodule(BimodKind::Left, sw, sw),
                               {{{0, 1}, t2(A, "x (x) y - 1 (x) 1")},
                                {{1, 1}, t2(A, "x (x) 1 - 1 (x) x")}})});
  out.push_back({"inner-twisted",
                 DoubleBracket(A, Bimodule(BimodKind::Inner, sw, AlgEndo::identity(2)),
                               {{{0, 1}, t2(A, "y (x) x")}})});
  out.push_back({"quad-gradient", quad_gradient()});
  return out;
}

}  // namespace dbrack::fixtures
