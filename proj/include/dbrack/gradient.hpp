#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "dbrack/dbracket.hpp"

namespace dbrack {

// The double derivation with d_j(x_k) = delta_jk 1 (x) 1 for the outer bimodule:
// on a word, the sum of prefix (x) suffix over the occurrences of x_j.
Tensor2 double_derivation(const Algebra& alg, Gen j, const NCPoly& p);

// Coefficients constant on the words of each letter multiset, in every degree.
bool is_fully_noncommutative(const Algebra& alg, const NCPoly& f);
// d_i(f) = d_i(f)° for every generator.
bool derivations_swap_symmetric(const Algebra& alg, const NCPoly& f);

// <x_i, x_j>_f = sum_k eps^{ijk} d_k(f) with eps^{123} = 1, outer untwisted.
// Needs three generators and a fully non-commutative f.
DoubleBracket gradient_bracket(const Algebra& alg, const NCPoly& f);

constexpr std::size_t kSymmetrizeBound = 7;

// Sum over all permutations of the letters of w, with multiplicity.
NCPoly symmetrize(const Word& w, std::size_t bound = kSymmetrizeBound);

// x1^d for j = 0 stands for x_{j+1}^d.
struct MonomialFamily {
  Gen j;
  unsigned d;
};
// (x1 + x2 + x3)^d
struct SumPowerFamily {
  unsigned d;
};
// z1 x1 + z2 x2 + z3 x3 + z0
struct LinearFamily {
  std::array<Rational, 4> zeta;  // z0, z1, z2, z3
};
struct CustomFamily {
  NCPoly f;
};
using Family = std::variant<MonomialFamily, SumPowerFamily, LinearFamily, CustomFamily>;

// Generators x1, x2, x3.
Algebra gradient_algebra();
NCPoly family_polynomial(const Family& fam);
std::string family_name(const Family& fam);

struct Classification {
  NCPoly f;
  JacVerdict verdict;
  bool casimir = true;  // <f, x_k>_f = 0 for all k
  std::vector<Tensor2> casimir_values;
};

Classification classify(const Family& fam, int degree_bound = kDefaultDegreeBound);

// Top-degree homogeneous part.
NCPoly leading_part(const NCPoly& f);
// Verdict for the gradient bracket of the leading part of f.
JacVerdict leading_part_poisson(const Algebra& alg, const NCPoly& f,
                                int degree_bound = kDefaultDegreeBound);

}  // namespace dbrack
