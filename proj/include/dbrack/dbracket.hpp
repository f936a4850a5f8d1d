#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbrack/bimodule.hpp"

namespace dbrack {

// Double bracket on a free algebra: a bimodule plus the values on generator
// pairs, extended to all of A by the two Leibniz rules.
class DoubleBracket {
 public:
  using Entries = std::map<std::pair<Gen, Gen>, Tensor2>;

  // Missing entries (j,i) are filled with -swap(entry(i,j)); unspecified pairs
  // are zero. Throws InvariantViolation if the table is not antisymmetric.
  DoubleBracket(Algebra alg, Bimodule m, const Entries& entries);
  static DoubleBracket zero(Algebra alg, Bimodule m) { return {std::move(alg), std::move(m), {}}; }
  // Takes the table as given, without auto-fill or antisymmetry check.
  // Only meant for reproducing broken examples.
  static DoubleBracket unchecked(Algebra alg, Bimodule m, const Entries& entries);

  const Algebra& algebra() const { return alg_; }
  const Bimodule& bimodule() const { return m_; }
  BimodKind kind() const { return m_.kind(); }
  const Tensor2& on_gens(Gen i, Gen j) const { return table_[i * alg_.rank() + j]; }
  bool is_zero() const;
  Entries entries() const;

  Tensor2 operator()(const NCPoly& a, const NCPoly& b) const;
  Tensor2 on_words(const Word& a, const Word& b) const;

 private:
  DoubleBracket(Algebra alg, Bimodule m) : alg_(std::move(alg)), m_(std::move(m)) {}
  void fill(const Entries& entries, bool checked);

  Algebra alg_;
  Bimodule m_;
  std::vector<Tensor2> table_;
};

inline Tensor2 eval(const DoubleBracket& db, const NCPoly& a, const NCPoly& b) { return db(a, b); }

// <a, b1 (x) b2>_L = <a,b1> (x) b2
Tensor3 bracket_L(const DoubleBracket& db, const NCPoly& a, const Tensor2& d);
// <a, b1 (x) b2>_R = b1 (x) <a,b2>
Tensor3 bracket_R(const DoubleBracket& db, const NCPoly& a, const Tensor2& d);
// <a1 (x) a2, b>_L = <a1,b>' (x) a2 (x) <a1,b>''
Tensor3 bracket_L(const DoubleBracket& db, const Tensor2& d, const NCPoly& b);
// <a1 (x) a2, b>_R = a1 (x) <a2,b>
Tensor3 bracket_R(const DoubleBracket& db, const Tensor2& d, const NCPoly& b);

enum class JacobiatorForm { Standard, DSKV, Right, InnerRight };

Tensor3 jacobiator(const DoubleBracket& db, const NCPoly& a, const NCPoly& b, const NCPoly& c,
                   JacobiatorForm form = JacobiatorForm::Standard);

// J(a,b,c) - tau_sigma^{-1} J(tau_sigma'(a,b,c)), sigma and sigma' transpositions.
Tensor3 weak_jacobiator(const DoubleBracket& db, const Perm3& sigma, const Perm3& sigma_prime,
                        const NCPoly& a, const NCPoly& b, const NCPoly& c);

struct AntisymmetryReport {
  bool holds = true;
  int degree_bound = 0;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<Word, Word>> witness;
  Tensor2 ab, ba;
};

AntisymmetryReport check_antisymmetry(const DoubleBracket& db, int degree_bound);

// Applied to a monomial triple: a Jacobiator-type map.
using TripleMap = std::function<Tensor3(const NCPoly&, const NCPoly&, const NCPoly&)>;

struct JacVerdict {
  enum class Status { Poisson, WeakPoisson, NotPoisson, VerifiedUpToDegree };
  Status status = Status::Poisson;
  Perm3 sigma, sigma_prime;
  bool weak = false;        // verdict concerns a weak Jacobiator
  bool generator_check = false;
  int degree_bound = 0;     // total degree bound of the sweep, 1 for generator checks
  std::size_t triples_checked = 0;
  std::optional<std::array<Word, 3>> witness;
  Tensor3 defect;

  bool passed() const { return status != Status::NotPoisson; }
};

std::string status_name(const JacVerdict& v);
std::string describe(const Algebra& alg, const JacVerdict& v);

constexpr int kDefaultDegreeBound = 4;

JacVerdict is_poisson(const DoubleBracket& db, int degree_bound = kDefaultDegreeBound);
JacVerdict is_weak_poisson(const DoubleBracket& db, const Perm3& sigma, const Perm3& sigma_prime,
                           int degree_bound = kDefaultDegreeBound);

// Sweep order used by the verdicts: triples of nonempty words by increasing
// total degree up to `degree_bound`; within one degree, reverse lexicographic
// on (a, b, c) with words in deglex order. With `cyclic` set (maps with the
// cyclic symmetry) one evaluation is done per rotation class and the witness
// reported is the least rotation of the first failing class.
struct SweepResult {
  std::size_t checked = 0;
  std::optional<std::array<Word, 3>> witness;
  Tensor3 defect;
};
SweepResult sweep_triples(const Algebra& alg, int degree_bound, bool cyclic, const TripleMap& f);
// Generator triples only.
SweepResult sweep_generator_triples(const Algebra& alg, bool cyclic, const TripleMap& f);

// Swap-equivalent bracket <-,->° over the swap bimodule.
DoubleBracket swap_equivalent(const DoubleBracket& db);

// Automorphism of A (x) A commuting with the swap: the swap itself, alpha (x) alpha
// (with a verified inverse), or a composite applied left to right.
class Tensor2Auto {
 public:
  static Tensor2Auto swap();
  static Tensor2Auto twist(AlgEndo alpha, AlgEndo alpha_inverse);
  Tensor2Auto then(const Tensor2Auto& next) const;

  Tensor2 apply(const Tensor2& d) const;
  DoubleBracket apply(const DoubleBracket& db) const;

 private:
  struct Step {
    bool is_swap;
    AlgEndo alpha;
    AlgEndo inverse;
  };
  std::vector<Step> steps_;
};

inline DoubleBracket apply_equivalence(const DoubleBracket& db, const Tensor2Auto& psi) {
  return psi.apply(db);
}

// <phi(x_i), phi(x_j)>_2 == (phi (x) phi)<x_i, x_j>_1 on all generator pairs.
bool check_morphism(const AlgEndo& phi, const DoubleBracket& db1, const DoubleBracket& db2);

// The bracket induced on the commutative algebra A^ab (Right/Left kinds).
DoubleBracket abelianize(const DoubleBracket& db);

NCPoly mult_bracket(const DoubleBracket& db, const NCPoly& a, const NCPoly& b);

enum class Side { Left, Right };

NCPoly loday_defect(const DoubleBracket& db, Side side, const NCPoly& a, const NCPoly& b,
                    const NCPoly& c);
Tensor3 twisted_jacobiator(const DoubleBracket& db, Side side, const AlgEndo& alpha,
                           const NCPoly& a, const NCPoly& b, const NCPoly& c);

// Lie bracket on A/[A,A] induced by an outer or inner bracket with alpha = beta.
NCPoly lie_on_necklaces(const DoubleBracket& db, const Necklace& a, const Necklace& b);

// Bracket A/[A,A] x A/[A,A] -> A/[A,A] (x) A/[A,A] induced by a right bracket with
// alpha = beta, slots keyed by canonical rotations.
Tensor2 bullet_bracket(const DoubleBracket& db, const Necklace& a, const Necklace& b);

// Elements of Sym(A/[A,A]): sorted lists of necklace representatives. The
// empty list is the unit of Sym, the list {1} the class of the unit of A.
using SymMonomial = std::vector<Word>;
using SymPoly = std::map<SymMonomial, Rational>;

SymPoly sym_of(const Necklace& n);
// Poisson bracket on Sym(A/[A,A]) extending the bullet bracket.
SymPoly sym_bracket(const DoubleBracket& db, const SymPoly& f, const SymPoly& g);
SymPoly sym_jacobi(const DoubleBracket& db, const Necklace& a, const Necklace& b,
                   const Necklace& c);

}  // namespace dbrack
