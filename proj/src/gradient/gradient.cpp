#include <algorithm>
#include <map>
#include <numeric>

#include "dbrack/gradient.hpp"
#include "dbrack/text.hpp"

namespace dbrack {

Tensor2 double_derivation(const Algebra& alg, Gen j, const NCPoly& p) {
  if (j >= alg.rank()) throw AlgebraMismatch("no generator with index " + std::to_string(j + 1));
  alg.check(p);
  Tensor2 r;
  for (const auto& [k, c] : p) {
    const Word& w = k[0];
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == j) r.add({w.slice(0, i), w.slice(i + 1)}, c);
  }
  return r;
}

namespace {

mpz_class arrangements(const Word& sorted) {
  mpz_class r = 1;
  std::size_t n = 0, run = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    ++n;
    run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
    r *= n;
    r /= run;
  }
  return r;
}

}  // namespace

bool is_fully_noncommutative(const Algebra& alg, const NCPoly& f) {
  alg.check(f);
  struct Class {
    Rational coeff;
    std::size_t count = 0;
    bool constant = true;
  };
  std::map<Word, Class> classes;
  for (const auto& [k, c] : f) {
    auto [it, fresh] = classes.try_emplace(k[0].sorted());
    if (fresh) it->second.coeff = c;
    else if (it->second.coeff != c) it->second.constant = false;
    ++it->second.count;
  }
  return std::all_of(classes.begin(), classes.end(), [](const auto& kv) {
    return kv.second.constant && arrangements(kv.first) == kv.second.count;
  });
}

bool derivations_swap_symmetric(const Algebra& alg, const NCPoly& f) {
  for (Gen i = 0; i < alg.rank(); ++i) {
    Tensor2 d = double_derivation(alg, i, f);
    if (!(d == tensor_swap(d))) return false;
  }
  return true;
}

DoubleBracket gradient_bracket(const Algebra& alg, const NCPoly& f) {
  if (alg.rank() != 3) throw ArgumentError("gradient brackets need exactly three generators");
  if (!is_fully_noncommutative(alg, f))
    throw InvariantViolation("potential " + to_string(alg, f) +
                             " is not fully non-commutative; its gradient bracket is not "
                             "cyclically antisymmetric");
  Tensor2 d0 = double_derivation(alg, 0, f), d1 = double_derivation(alg, 1, f),
          d2 = double_derivation(alg, 2, f);
  return DoubleBracket(alg, Bimodule::untwisted(BimodKind::Outer, 3),
                       {{{0, 1}, d2}, {{0, 2}, -d1}, {{1, 2}, d0}});
}

NCPoly symmetrize(const Word& w, std::size_t bound) {
  if (w.size() > bound)
    throw ArgumentError("symmetrization of a word of length " + std::to_string(w.size()) +
                        " exceeds the bound " + std::to_string(bound));
  std::vector<std::size_t> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  NCPoly r;
  do {
    Word p;
    for (std::size_t i : idx) p *= Word::letter(w[i]);
    r.add({p}, 1);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return r;
}

Algebra gradient_algebra() { return Algebra::numbered(3); }

NCPoly family_polynomial(const Family& fam) {
  struct {
    NCPoly operator()(const MonomialFamily& m) const {
      if (m.j > 2) throw ArgumentError("monomial family needs j in 1..3");
      return poly(Word::power(m.j, m.d));
    }
    NCPoly operator()(const SumPowerFamily& s) const {
      return pow(gen(0) + gen(1) + gen(2), s.d);
    }
    NCPoly operator()(const LinearFamily& l) const {
      return constant(l.zeta[0]) + l.zeta[1] * gen(0) + l.zeta[2] * gen(1) + l.zeta[3] * gen(2);
    }
    NCPoly operator()(const CustomFamily& c) const { return c.f; }
  } visit;
  return std::visit(visit, fam);
}

std::string family_name(const Family& fam) {
  Algebra A = gradient_algebra();
  struct {
    const Algebra& A;
    std::string operator()(const MonomialFamily& m) const {
      return "monomial(x" + std::to_string(m.j + 1) + ", " + std::to_string(m.d) + ")";
    }
    std::string operator()(const SumPowerFamily& s) const {
      return "sum-power(" + std::to_string(s.d) + ")";
    }
    std::string operator()(const LinearFamily& l) const {
      return "linear(" + to_string(A, family_polynomial(l)) + ")";
    }
    std::string operator()(const CustomFamily& c) const { return "custom(" + to_string(A, c.f) + ")"; }
  } visit{A};
  return std::visit(visit, fam);
}

Classification classify(const Family& fam, int degree_bound) {
  Algebra A = gradient_algebra();
  Classification out;
  out.f = family_polynomial(fam);
  DoubleBracket db = gradient_bracket(A, out.f);
  out.verdict = is_poisson(db, degree_bound);
  for (Gen k = 0; k < 3; ++k) {
    Tensor2 v = db(out.f, gen(k));
    if (!v.is_zero()) out.casimir = false;
    out.casimir_values.push_back(std::move(v));
  }
  return out;
}

NCPoly leading_part(const NCPoly& f) {
  NCPoly r;
  int d = f.degree();
  for (const auto& [k, c] : f)
    if (static_cast<int>(k[0].size()) == d) r.add(k, c);
  return r;
}

JacVerdict leading_part_poisson(const Algebra& alg, const NCPoly& f, int degree_bound) {
  if (f.is_zero()) throw ArgumentError("leading part of the zero polynomial");
  return is_poisson(gradient_bracket(alg, leading_part(f)), degree_bound);
}

}  // namespace dbrack
