#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dbrack/errors.hpp"
#include "dbrack/tensor.hpp"

namespace dbrack {

// Generator table of a free algebra K<x_1..x_r>. With commutative = true it
// stands for the polynomial ring K[x_1..x_r]: every word is kept sorted.
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::vector<std::string> names, bool commutative = false);
  static Algebra numbered(std::size_t r, const std::string& stem = "x");

  std::size_t rank() const { return names_.size(); }
  bool commutative() const { return commutative_; }
  const std::string& name(Gen g) const { return names_.at(g); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Gen> find(const std::string& name) const;
  Gen at(const std::string& name) const;

  // Same generator names, commutative.
  Algebra abelianization() const { return Algebra(names_, true); }

  // Throws AlgebraMismatch if a letter is out of range.
  void check(const Word& w) const;
  template <std::size_t N>
  void check(const Tensor<N>& t) const {
    for (const auto& [k, c] : t)
      for (const auto& w : k) check(w);
  }

  Word normal(const Word& w) const { return commutative_ ? w.sorted() : w; }
  template <std::size_t N>
  Tensor<N> normal(const Tensor<N>& t) const {
    if (!commutative_) return t;
    Tensor<N> r;
    for (const auto& [k, c] : t) {
      Key<N> nk;
      for (std::size_t i = 0; i < N; ++i) nk[i] = k[i].sorted();
      r.add(std::move(nk), c);
    }
    return r;
  }

  NCPoly x(Gen g) const {
    check(Word::letter(g));
    return gen(g);
  }

  // All words (normal forms) with min_deg <= length <= max_deg in deglex order.
  std::vector<Word> words(std::size_t min_deg, std::size_t max_deg) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::vector<std::string> names_;
  bool commutative_ = false;
};

}  // namespace dbrack
