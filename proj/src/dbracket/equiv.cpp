#include "dbrack/dbracket.hpp"

namespace dbrack {

DoubleBracket swap_equivalent(const DoubleBracket& db) {
  DoubleBracket::Entries e;
  for (const auto& [ij, t] : db.entries()) e[ij] = tensor_swap(t);
  return DoubleBracket::unchecked(db.algebra(), swap_bimodule(db.bimodule()), e);
}

Tensor2Auto Tensor2Auto::swap() {
  Tensor2Auto a;
  a.steps_.push_back({true, {}, {}});
  return a;
}

Tensor2Auto Tensor2Auto::twist(AlgEndo alpha, AlgEndo alpha_inverse) {
  if (alpha.source_rank() != alpha_inverse.source_rank())
    throw ArgumentError("twist and inverse have different ranks");
  for (std::size_t i = 0; i < alpha.source_rank(); ++i) {
    NCPoly x = gen(Gen(i));
    if (!(alpha.apply(alpha_inverse.apply(x)) == x) || !(alpha_inverse.apply(alpha.apply(x)) == x))
      throw ArgumentError("supplied inverse does not invert the twist on generator " +
                          std::to_string(i + 1));
  }
  Tensor2Auto a;
  a.steps_.push_back({false, std::move(alpha), std::move(alpha_inverse)});
  return a;
}

Tensor2Auto Tensor2Auto::then(const Tensor2Auto& next) const {
  Tensor2Auto a = *this;
  a.steps_.insert(a.steps_.end(), next.steps_.begin(), next.steps_.end());
  return a;
}

Tensor2 Tensor2Auto::apply(const Tensor2& d) const {
  Tensor2 r = d;
  for (const auto& s : steps_) r = s.is_swap ? tensor_swap(r) : s.alpha.apply_all(r);
  return r;
}

// alpha (x) alpha transports a.d.b to alpha(a) d' alpha(...) etc: twists
// become (alpha o alpha_1, alpha o beta_1) and the kind is kept.
DoubleBracket Tensor2Auto::apply(const DoubleBracket& db) const {
  DoubleBracket cur = db;
  for (const auto& s : steps_) {
    if (s.is_swap) {
      cur = swap_equivalent(cur);
      continue;
    }
    const Algebra& alg = cur.algebra();
    s.alpha.check(alg, alg);
    DoubleBracket::Entries e;
    for (const auto& [ij, t] : cur.entries()) e[ij] = alg.normal(s.alpha.apply_all(t));
    Bimodule m(cur.kind(), s.alpha.after(cur.bimodule().alpha()),
               s.alpha.after(cur.bimodule().beta()));
    cur = DoubleBracket::unchecked(alg, std::move(m), e);
  }
  return cur;
}

bool check_morphism(const AlgEndo& phi, const DoubleBracket& db1, const DoubleBracket& db2) {
  if (db1.kind() != db2.kind() || !db1.bimodule().untwisted() || !db2.bimodule().untwisted())
    throw KindError("morphism check needs brackets of the same untwisted kind");
  const Algebra &a1 = db1.algebra(), &a2 = db2.algebra();
  phi.check(a1, a2);
  for (std::size_t i = 0; i < a1.rank(); ++i)
    for (std::size_t j = 0; j < a1.rank(); ++j) {
      Tensor2 lhs = db2(phi.image(Gen(i)), phi.image(Gen(j)));
      Tensor2 rhs = a2.normal(phi.apply_all(db1.on_gens(Gen(i), Gen(j))));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

DoubleBracket abelianize(const DoubleBracket& db) {
  BimodKind k = db.kind();
  if ((k != BimodKind::Right && k != BimodKind::Left) || !db.bimodule().equal_twists())
    throw KindError("only right or left brackets with alpha = beta descend to A^ab");
  Algebra ab = db.algebra().abelianization();
  std::vector<NCPoly> imgs;
  for (const auto& p : db.bimodule().alpha().images()) imgs.push_back(ab.normal(p));
  AlgEndo alpha(imgs);
  return DoubleBracket(ab, Bimodule(k, alpha, alpha), db.entries());
}

}  // namespace dbrack
