#pragma once

#include <vector>

#include "dbrack/algebra.hpp"

namespace dbrack {

// Unital algebra map determined by the images of generators. Used both for
// twists (source = target) and for morphisms between algebras.
class AlgEndo {
 public:
  AlgEndo() = default;
  explicit AlgEndo(std::vector<NCPoly> images);
  static AlgEndo identity(std::size_t rank);

  std::size_t source_rank() const { return images_.size(); }
  const NCPoly& image(Gen g) const { return images_.at(g); }
  const std::vector<NCPoly>& images() const { return images_; }
  bool is_identity() const { return identity_; }

  NCPoly apply(const Word& w) const;
  NCPoly apply(const NCPoly& p) const;
  template <std::size_t N>
  Tensor<N> apply_all(const Tensor<N>& t) const {
    if (identity_) return t;
    Tensor<N> r = t;
    for (std::size_t i = 0; i < N; ++i)
      r = map_slot(r, i, [&](const Word& w) { return apply(w); });
    return r;
  }
  template <std::size_t N>
  Tensor<N> apply_slot(const Tensor<N>& t, std::size_t slot) const {
    if (identity_) return t;
    return map_slot(t, slot, [&](const Word& w) { return apply(w); });
  }

  // (*this) o inner
  AlgEndo after(const AlgEndo& inner) const;

  // Images must be valid in `target`, and the map must cover `source`.
  void check(const Algebra& source, const Algebra& target) const;

  friend bool operator==(const AlgEndo& a, const AlgEndo& b) { return a.images_ == b.images_; }

 private:
  std::vector<NCPoly> images_;
  bool identity_ = true;
};

inline NCPoly apply_endo(const AlgEndo& e, const NCPoly& p) { return e.apply(p); }

}  // namespace dbrack
