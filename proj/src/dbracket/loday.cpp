#include "dbrack/dbracket.hpp"

namespace dbrack {

NCPoly mult_bracket(const DoubleBracket& db, const NCPoly& a, const NCPoly& b) {
  return db.algebra().normal(multiply_slots(db(a, b)));
}

NCPoly loday_defect(const DoubleBracket& db, Side side, const NCPoly& a, const NCPoly& b,
                    const NCPoly& c) {
  auto m = [&db](const NCPoly& p, const NCPoly& q) { return mult_bracket(db, p, q); };
  if (side == Side::Left) return m(a, m(b, c)) - m(m(a, b), c) - m(b, m(a, c));
  return m(m(a, b), c) - m(a, m(b, c)) - m(m(a, c), b);
}

Tensor3 twisted_jacobiator(const DoubleBracket& db, Side side, const AlgEndo& alpha,
                           const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  const Perm3 c123 = Perm3::c123(), c132 = Perm3::c132();
  const Algebra& alg = db.algebra();
  if (side == Side::Left) {
    auto L = [&](const NCPoly& p, const NCPoly& q, const NCPoly& r) {
      return alg.normal(alpha.apply_slot(bracket_L(db, p, db(q, r)), 2));
    };
    return L(a, b, c) + tensor3_perm(c123, L(b, c, a)) + tensor3_perm(c132, L(c, a, b));
  }
  auto R = [&](const NCPoly& p, const NCPoly& q, const NCPoly& r) {
    return alg.normal(alpha.apply_slot(bracket_R(db, db(p, q), r), 0));
  };
  return R(a, b, c) + tensor3_perm(c123, R(b, c, a)) + tensor3_perm(c132, R(c, a, b));
}

NCPoly lie_on_necklaces(const DoubleBracket& db, const Necklace& a, const Necklace& b) {
  BimodKind k = db.kind();
  if ((k != BimodKind::Outer && k != BimodKind::Inner) || !db.bimodule().equal_twists())
    throw KindError("necklace Lie bracket needs an outer or inner bracket with alpha = beta");
  return necklace_project(mult_bracket(db, poly(a.rep()), poly(b.rep())));
}

Tensor2 bullet_bracket(const DoubleBracket& db, const Necklace& a, const Necklace& b) {
  BimodKind k = db.kind();
  if ((k != BimodKind::Right && k != BimodKind::Left) || !db.bimodule().equal_twists())
    throw KindError("bullet bracket needs a right or left bracket with alpha = beta");
  return necklace_project_slots(db(poly(a.rep()), poly(b.rep())));
}

SymPoly sym_of(const Necklace& n) { return {{SymMonomial{n.rep()}, Rational(1)}}; }

namespace {

SymMonomial sym_mul(SymMonomial u, const SymMonomial& v) {
  u.insert(u.end(), v.begin(), v.end());
  std::sort(u.begin(), u.end());
  return u;
}

void sym_add(SymPoly& p, const SymMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

}  // namespace

SymPoly sym_bracket(const DoubleBracket& db, const SymPoly& f, const SymPoly& g) {
  SymPoly r;
  for (const auto& [u, cu] : f)
    for (const auto& [v, cv] : g)
      for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
          Tensor2 br = bullet_bracket(db, Necklace::of(u[i]), Necklace::of(v[j]));
          if (br.is_zero()) continue;
          SymMonomial rest = u;
          rest.erase(rest.begin() + i);
          SymMonomial vr = v;
          vr.erase(vr.begin() + j);
          rest = sym_mul(rest, vr);
          for (const auto& [k, c] : br) sym_add(r, sym_mul(rest, {k[0], k[1]}), cu * cv * c);
        }
  return r;
}

SymPoly sym_jacobi(const DoubleBracket& db, const Necklace& a, const Necklace& b,
                   const Necklace& c) {
  SymPoly A = sym_of(a), B = sym_of(b), C = sym_of(c), r;
  for (const auto& t : {sym_bracket(db, A, sym_bracket(db, B, C)),
                        sym_bracket(db, B, sym_bracket(db, C, A)),
                        sym_bracket(db, C, sym_bracket(db, A, B))})
    for (const auto& [m, k] : t) sym_add(r, m, k);
  return r;
}

}  // namespace dbrack
