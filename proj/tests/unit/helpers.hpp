#pragma once

#include <random>

#include "dbrack/freealg.hpp"
#include "doctest.h"

namespace dbrack::testing {

inline NCPoly P(const Algebra& a, const char* s) { return parse_tensor<1>(a, s); }
inline Tensor2 T2(const Algebra& a, const char* s) { return parse_tensor<2>(a, s); }
inline Tensor3 T3(const Algebra& a, const char* s) { return parse_tensor<3>(a, s); }

// Random sparse polynomial with small rational coefficients.
inline NCPoly random_poly(std::mt19937& rng, std::size_t rank, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_deg),
      letter(0, static_cast<int>(rank) - 1), num(-3, 3), den(1, 3);
  NCPoly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Word w;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) w *= Word::letter(static_cast<Gen>(letter(rng)));
    p.add({w}, rat(num(rng), den(rng)));
  }
  return p;
}

}  // namespace dbrack::testing
