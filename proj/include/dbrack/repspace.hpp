#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbrack/dbracket.hpp"

namespace dbrack {

// Entry (row, col) of the generic matrix of generator `gen`; 0-based.
struct EntryVar {
  Gen gen = 0;
  unsigned row = 0, col = 0;
  friend auto operator<=>(const EntryVar&, const EntryVar&) = default;
};

// Variables are numbered gen*n*n + row*n + col for a fixed dimension n.
using VarId = std::uint32_t;

inline VarId var_id(const EntryVar& v, unsigned n) { return (v.gen * n + v.row) * n + v.col; }
inline EntryVar entry_var(VarId id, unsigned n) {
  return {static_cast<Gen>(id / (n * n)), (id / n) % n, id % n};
}

// Sorted (variable, exponent) pairs, exponents positive.
using Monomial = std::vector<std::pair<VarId, unsigned>>;

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

unsigned total_degree(const Monomial& m);

// Commutative polynomial with rational coefficients, zero terms pruned.
class CPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  CPoly() = default;
  static CPoly constant(const Rational& c);
  static CPoly var(VarId v, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Monomial& m, const Rational& c);
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const Rational& c);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator-(CPoly a) { return a *= Rational(-1); }
  friend CPoly operator*(CPoly a, const Rational& c) { return a *= c; }
  friend CPoly operator*(const Rational& c, CPoly a) { return a *= c; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend bool operator==(const CPoly& a, const CPoly& b) { return a.terms_ == b.terms_; }

  // Variables occurring in some term, ascending.
  std::vector<VarId> variables() const;
  CPoly derivative(VarId v) const;
  // Substitutes every variable by its image.
  template <class F>
  CPoly substitute(F&& image) const {
    CPoly r;
    for (const auto& [m, c] : terms_) {
      CPoly t = constant(c);
      for (const auto& [v, e] : m)
        for (unsigned k = 0; k < e; ++k) t = t * image(v);
      r += t;
    }
    return r;
  }

 private:
  Terms terms_;
};

// Text for an entry variable: generator name followed by 1-based indices, e.g. x_12.
std::string var_name(const Algebra& alg, unsigned n, VarId v);
std::string to_string(const Algebra& alg, unsigned n, const CPoly& p);

// n x n matrix of commutative polynomials.
class MatPoly {
 public:
  explicit MatPoly(unsigned n = 1) : n_(n), e_(static_cast<std::size_t>(n) * n) {}
  static MatPoly identity(unsigned n);
  static MatPoly generic(Gen g, unsigned n);

  unsigned dim() const { return n_; }
  CPoly& operator()(unsigned i, unsigned j) { return e_[i * n_ + j]; }
  const CPoly& operator()(unsigned i, unsigned j) const { return e_[i * n_ + j]; }
  CPoly trace() const;

  MatPoly& operator+=(const MatPoly& o);
  friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator*(const Rational& c, MatPoly a);
  friend bool operator==(const MatPoly&, const MatPoly&) = default;

 private:
  unsigned n_;
  std::vector<CPoly> e_;
};

// The homomorphism A -> Mat_n(K[Rep(A,n)]), x_g -> generic matrix X(x_g).
MatPoly eval_nc(const NCPoly& p, unsigned n);
MatPoly eval_nc(const Word& w, unsigned n);

// Biderivation on K[Rep(A,n)] fixed by its values on generator entries. With a
// twist alpha it is the alpha_n-twisted biderivation
//   {f, gh} = alpha_n(g){f,h} + {f,g}alpha_n(h).
class PoissonStructure {
 public:
  PoissonStructure(Algebra alg, unsigned n, BimodKind kind, AlgEndo twist);

  const Algebra& algebra() const { return alg_; }
  unsigned dim() const { return n_; }
  BimodKind kind() const { return kind_; }
  const AlgEndo& twist() const { return twist_; }
  bool untwisted() const { return twist_.is_identity(); }
  std::size_t num_vars() const { return nv_; }

  const CPoly& on_vars(VarId v, VarId w) const { return table_[v * nv_ + w]; }
  void set(VarId v, VarId w, CPoly value) { table_[v * nv_ + w] = std::move(value); }
  bool is_zero() const;

  // alpha_n applied to a polynomial.
  CPoly twist_apply(const CPoly& p) const;

 private:
  Algebra alg_;
  unsigned n_;
  BimodKind kind_;
  AlgEndo twist_;
  std::size_t nv_;
  std::vector<CPoly> table_;
  std::vector<CPoly> twist_images_;
};

// {a_ij, b_kl} from <a,b> with the index arrangement of the bimodule kind:
//   Outer <a,b>_{kj,il}, Inner <a,b>_{il,kj}, Right <a,b>_{ij,kl}, Left <a,b>_{kl,ij}
// where d_{ij,kl} = X(d')_ij X(d'')_kl. Requires alpha = beta.
PoissonStructure induce(const DoubleBracket& db, unsigned n);

CPoly poisson_eval(const PoissonStructure& ps, const CPoly& f, const CPoly& g);
CPoly jacobi_defect(const PoissonStructure& ps, const CPoly& f, const CPoly& g, const CPoly& h);

struct RepJacobiReport {
  bool holds = true;
  unsigned n = 0;
  std::size_t tuples_checked = 0;
  std::optional<std::array<VarId, 3>> witness;
  CPoly defect;
};

// Jacobi defect over generator-entry triples v <= w <= u (the defect is
// alternating once the table is antisymmetric). Refuses twisted structures.
RepJacobiReport check_rep_jacobi(const PoissonStructure& ps);

CPoly trace_bracket(const PoissonStructure& ps, const NCPoly& a, const NCPoly& b);

enum class MatConvention { VdB, Tensor };

// Coefficients c_{pqrs} of sum c_{pqrs} E_pq (x) E_rs:
//   VdB:    sum {X_ij, Y_kl} E_kj (x) E_il
//   Tensor: sum {X_ij, Y_kl} E_ij (x) E_kl
using MatTensorPoly = std::map<std::array<unsigned, 4>, CPoly>;
MatTensorPoly matrix_tensor_bracket(const PoissonStructure& ps, MatConvention conv,
                                    const NCPoly& a, const NCPoly& b);
// X(d') (x) X(d'') summed over the terms of d.
MatTensorPoly matrix_tensor(const Tensor2& d, unsigned n);

// phi_n(x_ij) = X(phi(x))_ij as a map of polynomial rings.
CPoly rep_map(const AlgEndo& phi, unsigned n, const CPoly& f);

// {phi_n(v), phi_n(w)}_2 == phi_n({v, w}_1) on all generator-entry pairs of the
// source. Both brackets must share an untwisted Outer or Right kind.
bool check_rep_morphism(const AlgEndo& phi, const DoubleBracket& db1, const DoubleBracket& db2,
                        unsigned n);

// induce(db, 1) for Right/Left brackets: the Poisson bracket on K[x_1..x_r].
PoissonStructure abelianized_bracket(const DoubleBracket& db);

// Trace monomials: products of tr X(w) over necklace representatives.
using TraceMonomial = std::vector<Word>;

CPoly trace_poly(const TraceMonomial& m, unsigned n);

struct TraceExpansion {
  bool in_span = false;
  std::vector<std::pair<TraceMonomial, Rational>> terms;
};

// Writes f as a combination of trace monomials built from necklaces of length
// <= max_len, working one multidegree at a time. in_span is false when the
// linear system has no solution.
TraceExpansion expand_in_traces(const Algebra& alg, unsigned n, const CPoly& f,
                                std::size_t max_len = 3);

}  // namespace dbrack
