#include "dbrack/dbracket.hpp"

namespace dbrack {

namespace {

// key[sa] = L * key[sa], key[sb] = key[sb] * R for the untwisted kind k.
inline void place(BimodKind k, const Word& L, Key<2>& key, const Word& R) {
  std::size_t sa = (k == BimodKind::Left || k == BimodKind::Outer) ? 0 : 1;
  std::size_t sb = (k == BimodKind::Left || k == BimodKind::Inner) ? 0 : 1;
  if (!L.empty()) key[sa] = L * key[sa];
  if (!R.empty()) key[sb] *= R;
}

}  // namespace

DoubleBracket::DoubleBracket(Algebra alg, Bimodule m, const Entries& entries)
    : alg_(std::move(alg)), m_(std::move(m)) {
  fill(entries, true);
}

DoubleBracket DoubleBracket::unchecked(Algebra alg, Bimodule m, const Entries& entries) {
  DoubleBracket db(std::move(alg), std::move(m));
  db.fill(entries, false);
  return db;
}

void DoubleBracket::fill(const Entries& entries, bool checked) {
  const std::size_t r = alg_.rank();
  if (m_.alpha().source_rank() != r) throw AlgebraMismatch("twist rank differs from algebra rank");
  m_.check(alg_);
  if (alg_.commutative() && kind() != BimodKind::Right && kind() != BimodKind::Left)
    throw KindError("over a commutative algebra only right and left brackets are defined");
  table_.assign(r * r, Tensor2());
  for (const auto& [ij, t] : entries) {
    if (ij.first >= r || ij.second >= r) throw AlgebraMismatch("bracket entry on undeclared generator");
    alg_.check(t);
    table_[ij.first * r + ij.second] = alg_.normal(t);
  }
  if (!checked) return;
  for (const auto& [ij, t] : entries) {
    auto [i, j] = ij;
    const Tensor2& v = table_[i * r + j];
    Tensor2 mirror = -alg_.normal(tensor_swap(v));
    if (i == j) {
      if (!(v == mirror))
        throw InvariantViolation("<" + alg_.name(i) + "," + alg_.name(i) + "> = " +
                                 to_string(alg_, v) + " is not swap-antisymmetric");
    } else if (entries.count({j, i})) {
      if (!(table_[j * r + i] == mirror))
        throw InvariantViolation("<" + alg_.name(i) + "," + alg_.name(j) + "> and <" +
                                 alg_.name(j) + "," + alg_.name(i) + "> conflict");
    } else {
      table_[j * r + i] = mirror;
    }
  }
}

bool DoubleBracket::is_zero() const {
  for (const auto& t : table_)
    if (!t.is_zero()) return false;
  return true;
}

DoubleBracket::Entries DoubleBracket::entries() const {
  Entries out;
  const std::size_t r = alg_.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (!table_[i * r + j].is_zero()) out[{Gen(i), Gen(j)}] = table_[i * r + j];
  return out;
}

// <a,b> = sum_{p,q} a_{<p} * (b_{<q} . <a_p, b_q> . b_{>q}) * a_{>p}
Tensor2 DoubleBracket::on_words(const Word& a, const Word& b) const {
  Tensor2 r;
  const BimodKind k = kind(), ks = swap_kind(k);
  const bool twisted = !m_.untwisted();
  for (std::size_t p = 0; p < a.size(); ++p) {
    Word al = a.slice(0, p), ar = a.slice(p + 1);
    for (std::size_t q = 0; q < b.size(); ++q) {
      const Tensor2& g = on_gens(a[p], b[q]);
      if (g.is_zero()) continue;
      Word bl = b.slice(0, q), br = b.slice(q + 1);
      if (!twisted) {
        for (const auto& [key, c] : g) {
          Key<2> kk = key;
          place(k, bl, kk, br);
          place(ks, al, kk, ar);
          r.add(std::move(kk), c);
        }
      } else {
        Tensor2 inner = kind_act(k, m_.alpha().apply(bl), g, m_.beta().apply(br));
        r += kind_act(ks, m_.alpha().apply(al), inner, m_.beta().apply(ar));
      }
    }
  }
  return alg_.normal(r);
}

Tensor2 DoubleBracket::operator()(const NCPoly& a, const NCPoly& b) const {
  Tensor2 r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) r.axpy(ca * cb, on_words(ka[0], kb[0]));
  return r;
}

}  // namespace dbrack
