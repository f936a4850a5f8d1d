#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "dbrack/freealg.hpp"

namespace dbrack {

enum class BimodKind { Left, Right, Outer, Inner };

std::string kind_name(BimodKind k);
BimodKind parse_kind(std::string_view s);
BimodKind swap_kind(BimodKind k);

// One of the four A-bimodule structures on A (x) A, twisted by (alpha, beta):
//   Left:  a.d.b = alpha(a) d' beta(b) (x) d''
//   Right: a.d.b = d' (x) alpha(a) d'' beta(b)
//   Outer: a.d.b = alpha(a) d' (x) d'' beta(b)
//   Inner: a.d.b = d' beta(b) (x) alpha(a) d''
class Bimodule {
 public:
  Bimodule(BimodKind kind, AlgEndo alpha, AlgEndo beta);
  static Bimodule untwisted(BimodKind kind, std::size_t rank) {
    return Bimodule(kind, AlgEndo::identity(rank), AlgEndo::identity(rank));
  }

  BimodKind kind() const { return kind_; }
  const AlgEndo& alpha() const { return alpha_; }
  const AlgEndo& beta() const { return beta_; }
  bool untwisted() const { return alpha_.is_identity() && beta_.is_identity(); }
  bool equal_twists() const { return alpha_ == beta_; }

  Tensor2 act(const NCPoly& a, const Tensor2& d, const NCPoly& b) const;
  // Action with a and b already twisted.
  Tensor2 act_raw(const NCPoly& ta, const Tensor2& d, const NCPoly& tb) const;

  void check(const Algebra& alg) const;

  friend bool operator==(const Bimodule&, const Bimodule&) = default;

 private:
  BimodKind kind_;
  AlgEndo alpha_, beta_;
};

// Untwisted kind action on already twisted factors.
Tensor2 kind_act(BimodKind k, const NCPoly& ta, const Tensor2& d, const NCPoly& tb);

inline Tensor2 act(const Bimodule& m, const NCPoly& a, const Tensor2& d, const NCPoly& b) {
  return m.act(a, d, b);
}

// a * d * b = (a . d° . b)°: swaps Outer<->Inner, Left<->Right, keeps twists.
Bimodule swap_bimodule(const Bimodule& m);

using Action = std::function<Tensor2(const NCPoly&, const Tensor2&, const NCPoly&)>;

Action as_action(const Bimodule& m);
Action swap_action(Action a);
// a.d.b = a d' (x) nu(b) d'' with nu the word-reversal anti-automorphism.
Action reversal_action();

struct SwapCommutingWitness {
  NCPoly a1, a2, b1, b2;
  Tensor2 d, lhs, rhs;
};

struct SwapCommutingReport {
  bool holds = true;
  int degree_bound = 0;
  std::size_t tuples_checked = 0;
  std::size_t random_trials = 0;
  std::optional<SwapCommutingWitness> witness;
};

// Checks a1.(a2*d*b2).b1 = a2*(a1.d.b1)*b2 for a1, a2, b1, b2 in {1, x_i} and
// d = w (x) w' with |w|+|w'| <= degree_bound, then `random_trials` random
// polynomial tuples from a fixed seed. The first failing tuple is returned.
SwapCommutingReport check_swap_commuting(const Algebra& alg, const Action& act, int degree_bound,
                                         std::size_t random_trials = 64,
                                         unsigned seed = 20240601);
SwapCommutingReport check_swap_commuting(const Algebra& alg, const Bimodule& m, int degree_bound,
                                         std::size_t random_trials = 64);

}  // namespace dbrack
