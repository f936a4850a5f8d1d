#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "dbrack/repspace.hpp"

namespace dbrack {

// sum r_{ij,kl} e_ij (x) e_kl in Mat_N (x) Mat_N; indices 0-based, zeros pruned.
struct MatTensor2 {
  unsigned N = 1;
  std::map<std::array<unsigned, 4>, Rational> entries;

  Rational at(unsigned i, unsigned j, unsigned k, unsigned l) const;
  void add(const std::array<unsigned, 4>& idx, const Rational& c);
  bool is_zero() const { return entries.empty(); }
  friend bool operator==(const MatTensor2&, const MatTensor2&) = default;
};

struct MatTensor3 {
  unsigned N = 1;
  std::map<std::array<unsigned, 6>, Rational> entries;

  void add(const std::array<unsigned, 6>& idx, const Rational& c);
  bool is_zero() const { return entries.empty(); }
  friend bool operator==(const MatTensor3&, const MatTensor3&) = default;
};

MatTensor2 operator+(const MatTensor2& a, const MatTensor2& b);
MatTensor2 operator*(const Rational& c, const MatTensor2& a);
MatTensor2 swap(const MatTensor2& r);

MatTensor2 elementary(unsigned N, unsigned i, unsigned j, unsigned k, unsigned l,
                      const Rational& c = 1);
// sum_{i<j} e_ij (x) e_ji + 1/2 sum_i e_ii (x) e_ii
MatTensor2 standard_r(unsigned N);
// sum_{i,j} e_ij (x) e_ji
MatTensor2 casimir(unsigned N);

MatTensor3 operator+(const MatTensor3& a, const MatTensor3& b);
MatTensor3 operator*(const MatTensor3& a, const MatTensor3& b);
MatTensor3 commutator(const MatTensor3& a, const MatTensor3& b);
// r_st: r' in slot s, r'' in slot t (0-based), identity in the remaining slot.
// embed(r, 2, 1) = (r°)_23.
MatTensor3 embed(const MatTensor2& r, int s, int t);

// [r12, r13] + [r12, r23] + [r32, r13] with r32 = (r°)_23.
MatTensor3 cybe_defect(const MatTensor2& r);

// Lines "i j k l coeff" with 1-based indices; '#' starts a comment. An optional
// first line "dim N" fixes N, otherwise N is the largest index seen.
MatTensor2 read_mat_tensor(std::istream& in);
MatTensor2 parse_mat_tensor(const std::string& text);
std::string to_string(const MatTensor2& r);
std::string to_string(const MatTensor3& t);

// {v_ij, v_kl}: the (ij, kl) coefficient of [r, V (x) 1] - [r°, 1 (x) V] for the
// generic N x N matrix V, stored as a structure on K[v_ab] (one generator, n = N).
struct EntryBracket {
  unsigned N;
  PoissonStructure ps;

  const CPoly& operator()(unsigned i, unsigned j, unsigned k, unsigned l) const {
    return ps.on_vars(var_id({0, i, j}, N), var_id({0, k, l}, N));
  }
};

EntryBracket entry_bracket(const MatTensor2& r);

struct EntryJacobiReport {
  bool holds = true;
  bool antisymmetric = true;
  std::size_t triples_checked = 0;
  // entry pairs (row, col) of the first failing ordered triple
  std::optional<std::array<std::pair<unsigned, unsigned>, 3>> witness;
  CPoly defect;
};

// Jacobi defect over all ordered triples of entry variables.
EntryJacobiReport check_entry_jacobi(const EntryBracket& eb);

}  // namespace dbrack
