#pragma once

#include "dbrack/tensor.hpp"

namespace dbrack {

// Class of a word modulo cyclic rotation, represented by its minimal rotation.
// The empty word is the class of the unit.
class Necklace {
 public:
  Necklace() = default;
  static Necklace of(const Word& w);
  const Word& rep() const { return rep_; }
  friend auto operator<=>(const Necklace&, const Necklace&) = default;

 private:
  Word rep_;
};

Word min_rotation(const Word& w);

// Projection A -> A/[A,A]; the result is keyed by canonical rotations.
NCPoly necklace_project(const NCPoly& p);

// Project every slot of a tensor.
template <std::size_t N>
Tensor<N> necklace_project_slots(const Tensor<N>& t) {
  Tensor<N> r;
  for (const auto& [k, c] : t) {
    Key<N> nk;
    for (std::size_t i = 0; i < N; ++i) nk[i] = min_rotation(k[i]);
    r.add(std::move(nk), c);
  }
  return r;
}

}  // namespace dbrack
