#pragma once

#include <string>
#include <string_view>

#include "dbrack/algebra.hpp"

namespace dbrack {

std::string format_word(const Algebra& alg, const Word& w);

// Canonical rendering: `3/2*x*y - 1`, `x1*x2 (x) 1 - 1 (x) x2`.
template <std::size_t N>
std::string to_string(const Algebra& alg, const Tensor<N>& t);

// Parses the same grammar. Each term of a tensor needs exactly N-1 `(x)`
// separators. `line`/`col` locate the text for error messages.
template <std::size_t N>
Tensor<N> parse_tensor(const Algebra& alg, std::string_view text, int line = 1, int col = 1);

inline NCPoly parse_poly(const Algebra& alg, std::string_view text) {
  return parse_tensor<1>(alg, text);
}

}  // namespace dbrack
