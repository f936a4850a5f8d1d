#include <random>

#include "dbrack/bimodule.hpp"

namespace dbrack {

std::string kind_name(BimodKind k) {
  switch (k) {
    case BimodKind::Left: return "left";
    case BimodKind::Right: return "right";
    case BimodKind::Outer: return "outer";
    case BimodKind::Inner: return "inner";
  }
  return "?";
}

BimodKind parse_kind(std::string_view s) {
  if (s == "left") return BimodKind::Left;
  if (s == "right") return BimodKind::Right;
  if (s == "outer") return BimodKind::Outer;
  if (s == "inner") return BimodKind::Inner;
  throw ArgumentError("unknown bimodule kind '" + std::string(s) + "'");
}

BimodKind swap_kind(BimodKind k) {
  switch (k) {
    case BimodKind::Left: return BimodKind::Right;
    case BimodKind::Right: return BimodKind::Left;
    case BimodKind::Outer: return BimodKind::Inner;
    case BimodKind::Inner: return BimodKind::Outer;
  }
  return k;
}

Bimodule::Bimodule(BimodKind kind, AlgEndo alpha, AlgEndo beta)
    : kind_(kind), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.source_rank() != beta_.source_rank())
    throw AlgebraMismatch("twists defined on different generator tables");
}

void Bimodule::check(const Algebra& alg) const {
  alpha_.check(alg, alg);
  beta_.check(alg, alg);
}

Tensor2 kind_act(BimodKind k, const NCPoly& ta, const Tensor2& d, const NCPoly& tb) {
  // slot receiving a on the left, slot receiving b on the right
  std::size_t sa = (k == BimodKind::Left || k == BimodKind::Outer) ? 0 : 1;
  std::size_t sb = (k == BimodKind::Left || k == BimodKind::Inner) ? 0 : 1;
  Tensor2 r;
  for (const auto& [ka, ca] : ta)
    for (const auto& [kd, cd] : d)
      for (const auto& [kb, cb] : tb) {
        Key<2> k2 = kd;
        k2[sa] = ka[0] * k2[sa];
        k2[sb] *= kb[0];
        r.add(std::move(k2), ca * cd * cb);
      }
  return r;
}

Tensor2 Bimodule::act_raw(const NCPoly& ta, const Tensor2& d, const NCPoly& tb) const {
  return kind_act(kind_, ta, d, tb);
}

Tensor2 Bimodule::act(const NCPoly& a, const Tensor2& d, const NCPoly& b) const {
  return kind_act(kind_, alpha_.apply(a), d, beta_.apply(b));
}

Bimodule swap_bimodule(const Bimodule& m) {
  return Bimodule(swap_kind(m.kind()), m.alpha(), m.beta());
}

Action as_action(const Bimodule& m) {
  return [m](const NCPoly& a, const Tensor2& d, const NCPoly& b) { return m.act(a, d, b); };
}

Action swap_action(Action a) {
  return [a = std::move(a)](const NCPoly& x, const Tensor2& d, const NCPoly& y) {
    return tensor_swap(a(x, tensor_swap(d), y));
  };
}

Action reversal_action() {
  return [](const NCPoly& a, const Tensor2& d, const NCPoly& b) {
    NCPoly nb;
    for (const auto& [k, c] : b) nb.add({k[0].reversed()}, c);
    Tensor2 r;
    for (const auto& [ka, ca] : a)
      for (const auto& [kd, cd] : d)
        for (const auto& [kb, cb] : nb) r.add({ka[0] * kd[0], kb[0] * kd[1]}, ca * cd * cb);
    return r;
  };
}

namespace {

NCPoly random_poly(std::mt19937& rng, std::size_t rank) {
  std::uniform_int_distribution<int> nterms(1, 3), deg(0, 3), num(-4, 4), den(1, 3);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(rank) - 1);
  NCPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    Word w;
    for (int i = deg(rng); i > 0; --i) w *= Word::letter(static_cast<Gen>(letter(rng)));
    p.add({w}, rat(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

SwapCommutingReport check_swap_commuting(const Algebra& alg, const Action& act, int degree_bound,
                                         std::size_t random_trials, unsigned seed) {
  if (degree_bound < 1) throw ArgumentError("degree bound must be at least 1");
  SwapCommutingReport rep;
  rep.degree_bound = degree_bound;
  Action star = swap_action(act);

  auto test = [&](const NCPoly& a1, const NCPoly& a2, const NCPoly& b1, const NCPoly& b2,
                  const Tensor2& d) {
    Tensor2 lhs = act(a1, star(a2, d, b2), b1);
    Tensor2 rhs = star(a2, act(a1, d, b1), b2);
    if (lhs == rhs) return true;
    rep.holds = false;
    rep.witness = SwapCommutingWitness{a1, a2, b1, b2, d, lhs, rhs};
    return false;
  };

  std::vector<NCPoly> small{constant(1)};
  for (std::size_t g = 0; g < alg.rank(); ++g) small.push_back(gen(static_cast<Gen>(g)));
  auto words = alg.words(0, static_cast<std::size_t>(degree_bound));
  std::vector<Tensor2> ds;
  for (const auto& w : words)
    for (const auto& v : words)
      if (w.size() + v.size() <= static_cast<std::size_t>(degree_bound)) ds.push_back(tensor(w, v));

  for (const auto& d : ds)
    for (const auto& a1 : small)
      for (const auto& a2 : small)
        for (const auto& b1 : small)
          for (const auto& b2 : small) {
            ++rep.tuples_checked;
            if (!test(a1, a2, b1, b2, d)) return rep;
          }

  if (alg.rank() == 0) return rep;
  std::mt19937 rng(seed);
  for (std::size_t t = 0; t < random_trials; ++t) {
    NCPoly a1 = random_poly(rng, alg.rank()), a2 = random_poly(rng, alg.rank()),
           b1 = random_poly(rng, alg.rank()), b2 = random_poly(rng, alg.rank());
    Tensor2 d = tensor(random_poly(rng, alg.rank()), random_poly(rng, alg.rank()));
    ++rep.random_trials;
    if (!test(a1, a2, b1, b2, d)) return rep;
  }
  return rep;
}

SwapCommutingReport check_swap_commuting(const Algebra& alg, const Bimodule& m, int degree_bound,
                                         std::size_t random_trials) {
  m.check(alg);
  return check_swap_commuting(alg, as_action(m), degree_bound, random_trials);
}

}  // namespace dbrack
