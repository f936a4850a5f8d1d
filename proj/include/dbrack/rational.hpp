#pragma once

#include <gmpxx.h>

#include <string>

namespace dbrack {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace dbrack
