#include "dbrack/dbracket.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "properties.hpp"

using namespace dbrack;
using dbrack::testing::P;
using dbrack::testing::T2;
using dbrack::testing::T3;
namespace fx = dbrack::fixtures;
using namespace dbrack::props;

namespace {

const Perm3 kTranspositions[] = {Perm3::t12(), Perm3::t13(), Perm3::t23()};

}  // namespace

TEST_CASE("eval examples") {
  DoubleBracket vdb = fx::van_den_bergh();
  const Algebra& A = vdb.algebra();
  CHECK(vdb(P(A, "x"), P(A, "y^2")).is_zero());
  CHECK(vdb(P(A, "x"), P(A, "x")) == T2(A, "x (x) 1 - 1 (x) x"));
  CHECK(vdb(P(A, "y"), P(A, "x")).is_zero());
  DoubleBracket r = fx::right_constant();
  CHECK(r(P(A, "x"), P(A, "y^2")) == T2(A, "2 (x) y"));
  CHECK(r(P(A, "y"), P(A, "x")) == T2(A, "-1 (x) 1"));
  for (const auto& f : fx::corpus())
    for (const auto& w : f.db.algebra().words(0, 2)) {
      CHECK(f.db(constant(1), poly(w)).is_zero());
      CHECK(f.db(poly(w), constant(3)).is_zero());
    }
}

TEST_CASE("construction auto-fills and validates the generator table") {
  Algebra A = fx::xy();
  auto outer = Bimodule::untwisted(BimodKind::Outer, 2);
  DoubleBracket db(A, outer, {{{0, 1}, T2(A, "x (x) y^2")}});
  CHECK(db.on_gens(1, 0) == T2(A, "-y^2 (x) x"));
  CHECK_THROWS_AS(DoubleBracket(A, outer, {{{0, 0}, T2(A, "x (x) 1")}}), InvariantViolation);
  CHECK_THROWS_AS(DoubleBracket(A, outer, {{{0, 1}, T2(A, "1 (x) 1")}, {{1, 0}, T2(A, "1 (x) 1")}}),
                  InvariantViolation);
  CHECK_NOTHROW(DoubleBracket(A, outer, {{{0, 1}, T2(A, "1 (x) 1")}, {{1, 0}, T2(A, "-1 (x) 1")}}));
  CHECK_THROWS_AS(DoubleBracket(A, outer, {{{0, 2}, T2(A, "1 (x) 1")}}), AlgebraMismatch);
  CHECK_THROWS_AS(DoubleBracket(A, Bimodule::untwisted(BimodKind::Outer, 3), {}), AlgebraMismatch);
  CHECK(DoubleBracket::zero(A, outer).is_zero());
}

TEST_CASE("Leibniz expansion does not depend on the order of peeling") {
  for (const auto& f : fx::corpus()) {
    CAPTURE(f.name);
    auto ws = f.db.algebra().words(1, 3);
    for (const auto& a : ws)
      for (const auto& b : ws) {
        if (a.size() + b.size() > 4) continue;
        Tensor2 direct = f.db.on_words(a, b);
        CHECK(direct == ref_eval(f.db, a, b, true));
        CHECK(direct == ref_eval(f.db, a, b, false));
      }
  }
}

TEST_CASE("Leibniz rules on polynomials") {
  std::mt19937 rng(7);
  for (const auto& f : fx::corpus()) {
    CAPTURE(f.name);
    const Bimodule& m = f.db.bimodule();
    const Bimodule ms = swap_bimodule(m);
    std::size_t r = f.db.algebra().rank();
    NCPoly one = constant(1);
    for (int t = 0; t < 10; ++t) {
      NCPoly a = testing::random_poly(rng, r, 2, 3), b = testing::random_poly(rng, r, 2, 3),
             c = testing::random_poly(rng, r, 2, 2);
      CHECK(f.db(a, b * c) == m.act(b, f.db(a, c), one) + m.act(one, f.db(a, b), c));
      CHECK(f.db(a * b, c) == ms.act(a, f.db(b, c), one) + ms.act(one, f.db(a, c), b));
    }
  }
}

TEST_CASE("antisymmetry") {
  for (const auto& f : fx::corpus()) {
    CAPTURE(f.name);
    auto rep = check_antisymmetry(f.db, 3);
    CHECK(rep.holds);
    CHECK(rep.degree_bound == 3);
  }
  CHECK(check_antisymmetry(DoubleBracket::zero(fx::xy(), Bimodule::untwisted(BimodKind::Left, 2)),
                           3)
            .holds);

  // Gradient table of x1*x2, which is not fully non-commutative.
  Algebra A = Algebra::numbered(3);
  DoubleBracket bad = DoubleBracket::unchecked(
      A, Bimodule::untwisted(BimodKind::Outer, 3),
      {{{1, 2}, T2(A, "1 (x) x2")}, {{2, 1}, T2(A, "-1 (x) x2")},
       {{0, 2}, T2(A, "-x1 (x) 1")}, {{2, 0}, T2(A, "x1 (x) 1")}});
  CHECK(bad.on_gens(1, 2) == T2(A, "1 (x) x2"));
  CHECK(bad.on_gens(2, 1) == T2(A, "-1 (x) x2"));
  auto rep = check_antisymmetry(bad, 2);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness);
  CHECK(rep.witness->first == Word{0});
  CHECK(rep.witness->second == Word{2});
  CHECK(rep.ab == T2(A, "-x1 (x) 1"));
}

TEST_CASE("jacobiator examples") {
  DoubleBracket tw = fx::twisted_van_den_bergh();
  const Algebra& A = tw.algebra();
  CHECK(jacobiator(tw, P(A, "x"), P(A, "y"), P(A, "y")) == T3(A, "y (x) 1 (x) 1 - 1 (x) y (x) 1"));
  CHECK(jacobiator(fx::van_den_bergh(), P(A, "x"), P(A, "y"), P(A, "y")).is_zero());
  DoubleBracket r = fx::right_constant();
  CHECK(jacobiator(r, P(A, "x"), P(A, "x"), P(A, "y^2")) == T3(A, "-2 (x) 1 (x) 1"));
  CHECK(weak_jacobiator(r, Perm3::t12(), Perm3::t12(), P(A, "x"), P(A, "x"), P(A, "y^2"))
            .is_zero());
  CHECK_THROWS_AS(weak_jacobiator(r, Perm3::c123(), Perm3::t12(), P(A, "x"), P(A, "x"), P(A, "x")),
                  ArgumentError);
  DoubleBracket q = fx::quad_gradient();
  const Algebra& B = q.algebra();
  CHECK(jacobiator(q, P(B, "x3"), P(B, "x2"), P(B, "x3")) ==
        T3(B, "1 (x) 1 (x) x2 - 1 (x) x2 (x) 1"));
}

TEST_CASE("jacobiator is cyclically symmetric") {
  for (const auto& f : fx::corpus()) {
    CAPTURE(f.name);
    for_word_triples(f.db.algebra(), 2, [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
      Tensor3 j = jacobiator(f.db, a, b, c);
      CHECK(j == tensor3_perm(Perm3::c123(), jacobiator(f.db, b, c, a)));
      CHECK(j == tensor3_perm(Perm3::c132(), jacobiator(f.db, c, a, b)));
    });
  }
}

TEST_CASE("weak jacobiators are cyclically symmetric") {
  for (const auto& f : fx::corpus()) {
    CAPTURE(f.name);
    for (const auto& s : kTranspositions)
      for (const auto& sp : kTranspositions)
        for_word_triples(f.db.algebra(), 1, [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
          Tensor3 w = weak_jacobiator(f.db, s, sp, a, b, c);
          CHECK(w == tensor3_perm(Perm3::c123(), weak_jacobiator(f.db, s, sp, b, c, a)));
          CHECK(w == tensor3_perm(Perm3::c132(), weak_jacobiator(f.db, s, sp, c, a, b)));
        });
  }
  DoubleBracket r = fx::right_constant();
  const Algebra& A = r.algebra();
  NCPoly x = P(A, "x"), y2 = P(A, "y^2");
  CHECK(weak_jacobiator(r, Perm3::t12(), Perm3::t12(), x, x, y2) ==
        jacobiator(r, x, x, y2) - tensor3_perm(Perm3::t12(), jacobiator(r, x, x, y2)));
}

TEST_CASE("the four jacobiator forms agree") {
  for (const auto& f : fx::corpus()) {
    CAPTURE(f.name);
    for_word_triples(f.db.algebra(), 2, [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
      Tensor3 j = jacobiator(f.db, a, b, c);
      CHECK(j == jacobiator(f.db, a, b, c, JacobiatorForm::DSKV));
      CHECK(j == jacobiator(f.db, a, b, c, JacobiatorForm::Right));
      CHECK(j == jacobiator(f.db, a, b, c, JacobiatorForm::InnerRight));
    });
  }
}

TEST_CASE("outer and inner jacobiators are derivations") {
  for (const auto& name : {"vdb-outer", "outer-mixed", "quad-gradient"}) {
    CAPTURE(name);
    for (const auto& f : fx::corpus()) {
      if (f.name != name) continue;
      DoubleBracket in = swap_equivalent(f.db);
      auto ws = f.db.algebra().words(1, 2);
      for (const auto& a : ws)
        for (const auto& b : ws)
          for (const auto& u : ws)
            for (const auto& v : ws) {
              NCPoly pa = poly(a), pb = poly(b), c1 = poly(u), c2 = poly(v);
              CHECK(jacobiator(f.db, pa, pb, c1 * c2) ==
                    lmul(c1, 0, jacobiator(f.db, pa, pb, c2)) +
                        rmul(jacobiator(f.db, pa, pb, c1), 2, c2));
              // second slot for the inner swap
              CHECK(jacobiator(in, pa, c1 * c2, pb) ==
                    lmul(c1, 1, jacobiator(in, pa, c2, pb)) +
                        rmul(jacobiator(in, pa, c1, pb), 2, c2));
            }
    }
  }
}

TEST_CASE("right jacobiator: extra terms and weak derivation rule") {
  for (const auto& name : {"right-const", "right-quad"}) {
    CAPTURE(name);
    for (const auto& f : fx::corpus()) {
      if (f.name != name) continue;
      const DoubleBracket& db = f.db;
      DoubleBracket left = swap_equivalent(db);
      auto ws = db.algebra().words(1, 2);
      for (const auto& a : ws)
        for (const auto& b : ws)
          for (const auto& u : ws)
            for (const auto& v : ws) {
              if (a.size() + b.size() + u.size() + v.size() > 6) continue;
              NCPoly pa = poly(a), pb = poly(b), c1 = poly(u), c2 = poly(v);
              Tensor3 extra;
              for (const auto& [k1, e1] : db(c2, pa))
                for (const auto& [k2, e2] : db(pb, c1))
                  extra.add({k1[1], k2[0], k2[1] * k1[0]}, e1 * e2);
              for (const auto& [k1, e1] : db(c1, pa))
                for (const auto& [k2, e2] : db(pb, c2))
                  extra.add({k1[1], k2[0], k1[0] * k2[1]}, e1 * e2);
              CHECK(jacobiator(db, pa, pb, c1 * c2) ==
                    lmul(c1, 2, jacobiator(db, pa, pb, c2)) +
                        rmul(jacobiator(db, pa, pb, c1), 2, c2) + extra);

              auto wk = [&](const NCPoly& c) {
                return weak_jacobiator(db, Perm3::t12(), Perm3::t12(), pa, pb, c);
              };
              CHECK(wk(c1 * c2) == lmul(c1, 2, wk(c2)) + rmul(wk(c1), 2, c2));

              auto lwk = [&](const NCPoly& c) {
                return weak_jacobiator(left, Perm3::t12(), Perm3::t13(), pa, pb, c);
              };
              CHECK(lwk(c1 * c2) == lmul(c1, 0, lwk(c2)) + rmul(lwk(c1), 0, c2));
            }
    }
  }
}

TEST_CASE("poisson verdicts") {
  auto vdb = fx::van_den_bergh();
  JacVerdict v = is_poisson(vdb);
  CHECK(v.status == JacVerdict::Status::Poisson);
  CHECK(v.generator_check);

  auto tw = fx::twisted_van_den_bergh();
  const Algebra& A = tw.algebra();
  v = is_poisson(tw);
  CHECK(v.status == JacVerdict::Status::NotPoisson);
  REQUIRE(v.witness);
  CHECK(*v.witness == std::array<Word, 3>{Word{0}, Word{1}, Word{1}});
  CHECK(v.defect == T3(A, "y (x) 1 (x) 1 - 1 (x) y (x) 1"));
  CHECK(v.defect == jacobiator(tw, poly((*v.witness)[0]), poly((*v.witness)[1]),
                               poly((*v.witness)[2])));

  DoubleBracket consts(Algebra::numbered(3), Bimodule::untwisted(BimodKind::Outer, 3),
                       {{{0, 1}, Tensor2::monomial({Word(), Word()}, rat(2, 3))},
                        {{1, 2}, Tensor2::monomial({Word(), Word()}, -5)}});
  CHECK(is_poisson(consts).status == JacVerdict::Status::Poisson);

  auto r = fx::right_constant();
  v = is_poisson(r, 4);
  CHECK(v.status == JacVerdict::Status::NotPoisson);
  REQUIRE(v.witness);
  CHECK(*v.witness == std::array<Word, 3>{Word{0}, Word{0}, Word{1, 1}});
  CHECK(v.defect == T3(A, "-2 (x) 1 (x) 1"));
  CHECK(is_poisson(r, 3).status == JacVerdict::Status::VerifiedUpToDegree);
  CHECK(status_name(is_poisson(r, 3)) == "VerifiedUpToDegree(3)");

  v = is_weak_poisson(r, Perm3::t12(), Perm3::t12());
  CHECK(v.status == JacVerdict::Status::WeakPoisson);
  CHECK(v.generator_check);
  CHECK(status_name(v) == "WeakPoisson((12),(12))");
  v = is_weak_poisson(swap_equivalent(r), Perm3::t12(), Perm3::t13());
  CHECK(v.status == JacVerdict::Status::WeakPoisson);
  CHECK(v.generator_check);

  auto zero = DoubleBracket::zero(A, Bimodule::untwisted(BimodKind::Right, 2));
  for (const auto& s : kTranspositions)
    for (const auto& sp : kTranspositions)
      CHECK(is_weak_poisson(zero, s, sp).status == JacVerdict::Status::WeakPoisson);
  CHECK(is_poisson(zero).status == JacVerdict::Status::Poisson);

  // weak checks outside the proven configurations are bounded
  v = is_weak_poisson(r, Perm3::t13(), Perm3::t13(), 4);
  CHECK_FALSE(v.generator_check);
  CHECK(v.weak);
}

TEST_CASE("sweep order and cyclic reduction") {
  Algebra A = fx::xy();
  std::vector<std::array<Word, 3>> seen;
  TripleMap rec = [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    seen.push_back({a.begin()->first[0], b.begin()->first[0], c.begin()->first[0]});
    return Tensor3();
  };
  auto res = sweep_triples(A, 4, false, rec);
  CHECK(res.checked == seen.size());
  CHECK(seen.size() == 8 + 3 * 4 * 2 * 2);
  CHECK(seen.front() == std::array<Word, 3>{Word{1}, Word{1}, Word{1}});
  CHECK(seen[7] == std::array<Word, 3>{Word{0}, Word{0}, Word{0}});
  seen.clear();
  res = sweep_triples(A, 3, true, rec);
  CHECK(seen.size() == 4);  // necklaces of length 3 on two letters
}

TEST_CASE("swap equivalence") {
  for (const auto& f : fx::corpus()) {
    CAPTURE(f.name);
    DoubleBracket s = swap_equivalent(f.db);
    CHECK(s.bimodule() == swap_bimodule(f.db.bimodule()));
    DoubleBracket ss = swap_equivalent(s);
    CHECK(ss.bimodule() == f.db.bimodule());
    CHECK(ss.entries() == f.db.entries());
    CHECK(Tensor2Auto::swap().apply(f.db).entries() == s.entries());
    for_word_triples(f.db.algebra(), 2, [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
      CHECK(jacobiator(s, a, b, c) == -tensor3_perm(Perm3::t12(), jacobiator(f.db, a, c, b)));
      CHECK(weak_jacobiator(s, Perm3::t12(), Perm3::t13(), a, b, c) ==
            -tensor3_perm(Perm3::t12(),
                          weak_jacobiator(f.db, Perm3::t12(), Perm3::t12(), a, c, b)));
      CHECK(weak_jacobiator(s, Perm3::t12(), Perm3::t23(), a, b, c) ==
            weak_jacobiator(f.db, Perm3::t12(), Perm3::t23(), a, b, c));
    });
  }
  CHECK(is_poisson(swap_equivalent(fx::van_den_bergh())).status == JacVerdict::Status::Poisson);
}

TEST_CASE("twist equivalence") {
  DoubleBracket vdb = fx::van_den_bergh();
  const Algebra& A = vdb.algebra();
  AlgEndo a = fx::xy_swap();
  DoubleBracket tw = Tensor2Auto::twist(a, a).apply(vdb);
  DoubleBracket expected = fx::twisted_van_den_bergh();
  CHECK(tw.bimodule() == expected.bimodule());
  CHECK(tw.entries() == expected.entries());
  for (const auto& u : A.words(1, 2))
    for (const auto& v : A.words(1, 2))
      CHECK(tw.on_words(u, v) == a.apply_all(vdb.on_words(u, v)));

  auto id = AlgEndo::identity(2);
  DoubleBracket same = Tensor2Auto::twist(id, id).apply(vdb);
  CHECK(same.entries() == vdb.entries());
  CHECK(same.bimodule() == vdb.bimodule());
  CHECK_THROWS_AS(Tensor2Auto::twist(AlgEndo({P(A, "x + 1"), P(A, "y")}), id), ArgumentError);
  auto shift = AlgEndo({P(A, "x + 1"), P(A, "y")});
  auto unshift = AlgEndo({P(A, "x - 1"), P(A, "y")});
  Tensor2Auto psi = Tensor2Auto::twist(shift, unshift).then(Tensor2Auto::swap());
  Tensor2 d = T2(A, "x (x) y^2");
  CHECK(psi.apply(d) == T2(A, "y^2 (x) x + y^2 (x) 1"));
  CHECK(tensor_swap(psi.apply(tensor_swap(d))) == psi.apply(d));
}

TEST_CASE("morphisms") {
  DoubleBracket vdb = fx::van_den_bergh();
  const Algebra& A = vdb.algebra();
  CHECK(check_morphism(AlgEndo::identity(2), vdb, vdb));
  DoubleBracket r = fx::right_constant();
  DoubleBracket zero = DoubleBracket::zero(A, Bimodule::untwisted(BimodKind::Right, 2));
  CHECK_FALSE(check_morphism(AlgEndo({P(A, "x"), P(A, "x")}), r, zero));
  CHECK_THROWS_AS(check_morphism(AlgEndo::identity(2), vdb, r), KindError);

  // abelianization projection
  DoubleBracket rab = abelianize(r);
  CHECK(rab.algebra().commutative());
  CHECK(check_morphism(AlgEndo::identity(2), r, rab));
  AlgEndo proj = AlgEndo::identity(2);
  for_word_triples(A, 2, [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    const Algebra& B = rab.algebra();
    CHECK(jacobiator(rab, B.normal(a), B.normal(b), B.normal(c)) ==
          B.normal(jacobiator(r, a, b, c)));
  });
  CHECK(is_weak_poisson(rab, Perm3::t12(), Perm3::t12(), 4).passed());
  CHECK(is_weak_poisson(abelianize(swap_equivalent(r)), Perm3::t12(), Perm3::t13(), 4).passed());
  CHECK_THROWS_AS(abelianize(vdb), KindError);
  CHECK_THROWS_AS(DoubleBracket(A.abelianization(), Bimodule::untwisted(BimodKind::Outer, 2), {}),
                  KindError);

  // a morphism between different algebras: x, y -> x1, x2 inside K<x1,x2,x3>
  Algebra B = Algebra::numbered(3);
  DoubleBracket big(B, Bimodule::untwisted(BimodKind::Right, 3),
                    {{{0, 1}, T2(B, "1 (x) 1")}, {{1, 2}, T2(B, "x3 (x) x1")}});
  AlgEndo incl({P(B, "x1"), P(B, "x2")});
  CHECK(check_morphism(incl, r, big));
  for_word_triples(A, 2, [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    CHECK(jacobiator(big, incl.apply(a), incl.apply(b), incl.apply(c)) ==
          incl.apply_all(jacobiator(r, a, b, c)));
  });
}

TEST_CASE("multiplied bracket and Loday identities") {
  DoubleBracket vdb = fx::van_den_bergh();
  const Algebra& A = vdb.algebra();
  CHECK(mult_bracket(vdb, P(A, "x"), P(A, "x")).is_zero());
  CHECK(mult_bracket(fx::right_constant(), P(A, "x"), P(A, "y")) == P(A, "1"));
  DoubleBracket in = swap_equivalent(vdb);
  auto ws = A.words(1, 3);
  DoubleBracket zero = DoubleBracket::zero(A, Bimodule::untwisted(BimodKind::Outer, 2));
  for (const auto& a : ws)
    for (const auto& b : ws)
      for (const auto& c : ws) {
        if (a.size() + b.size() + c.size() > 5) continue;
        NCPoly pa = poly(a), pb = poly(b), pc = poly(c);
        CHECK(loday_defect(vdb, Side::Left, pa, pb, pc).is_zero());
        CHECK(loday_defect(in, Side::Right, pa, pb, pc).is_zero());
        CHECK(loday_defect(zero, Side::Left, pa, pb, pc).is_zero());
      }
  for (const auto& f : fx::corpus()) {
    DoubleBracket s = swap_equivalent(f.db);
    for (const auto& a : ws)
      for (const auto& b : ws)
        CHECK(mult_bracket(f.db, poly(a), poly(b)) == -mult_bracket(s, poly(b), poly(a)));
  }
  // commutators go to [A,A]
  DoubleBracket om = fx::corpus()[5].db;
  for (const auto& a : ws)
    for (const auto& b : A.words(1, 2))
      for (const auto& c : A.words(1, 2)) {
        NCPoly comm = poly(b) * poly(c) - poly(c) * poly(b);
        CHECK(necklace_project(mult_bracket(om, poly(a), comm)).is_zero());
      }
}

TEST_CASE("twisted jacobiators") {
  auto id = AlgEndo::identity(2);
  for (const auto& f : fx::corpus()) {
    CAPTURE(f.name);
    if (f.db.algebra().rank() != 2) continue;
    for_word_triples(f.db.algebra(), 2, [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
      Tensor3 j = jacobiator(f.db, a, b, c);
      CHECK(twisted_jacobiator(f.db, Side::Left, id, a, b, c) == j);
      CHECK(tensor3_perm(Perm3::t12(), twisted_jacobiator(f.db, Side::Right, id, b, a, c)) == j);
    });
  }
  DoubleBracket zero = DoubleBracket::zero(fx::xy(), Bimodule::untwisted(BimodKind::Outer, 2));
  CHECK(twisted_jacobiator(zero, Side::Right, fx::xy_swap(), gen(0), gen(1), gen(0)).is_zero());
}

TEST_CASE("Lie bracket on necklaces") {
  std::mt19937 rng(3);
  DoubleBracket vdb = fx::van_den_bergh();
  const Algebra& A = vdb.algebra();
  Necklace nx = Necklace::of(Word{0}), ny = Necklace::of(Word{1});
  CHECK(lie_on_necklaces(vdb, nx, ny).is_zero());
  DoubleBracket c(A, Bimodule::untwisted(BimodKind::Outer, 2), {{{0, 1}, T2(A, "1 (x) 1")}});
  CHECK(lie_on_necklaces(c, nx, ny) == P(A, "1"));
  CHECK_THROWS_AS(lie_on_necklaces(fx::right_constant(), nx, ny), KindError);
  for (const auto& f : fx::corpus()) {
    BimodKind k = f.db.kind();
    if ((k != BimodKind::Outer && k != BimodKind::Inner) || !f.db.bimodule().equal_twists())
      continue;
    CAPTURE(f.name);
    auto ws = f.db.algebra().words(1, 3);
    for (const auto& u : ws)
      for (const auto& v : ws) {
        NCPoly br = lie_on_necklaces(f.db, Necklace::of(u), Necklace::of(v));
        CHECK(br == -lie_on_necklaces(f.db, Necklace::of(v), Necklace::of(u)));
        // any rotation of the lifts gives the same class
        for (std::size_t s = 0; s < u.size(); ++s)
          CHECK(necklace_project(mult_bracket(f.db, poly(u.rotated(s)), poly(v))) == br);
      }
  }
}

TEST_CASE("bullet bracket and Sym Poisson structure") {
  DoubleBracket r = fx::right_constant();
  const Algebra& A = r.algebra();
  Necklace nx = Necklace::of(Word{0}), ny = Necklace::of(Word{1});
  CHECK(bullet_bracket(r, nx, ny) == T2(A, "1 (x) 1"));
  CHECK_THROWS_AS(bullet_bracket(fx::van_den_bergh(), nx, ny), KindError);
  for (const auto& name : {"right-const", "right-quad", "left-const"}) {
    for (const auto& f : fx::corpus()) {
      if (f.name != name) continue;
      CAPTURE(name);
      auto ws = A.words(1, 3);
      for (const auto& u : ws)
        for (const auto& v : ws) {
          Tensor2 br = bullet_bracket(f.db, Necklace::of(u), Necklace::of(v));
          CHECK(br == -tensor_swap(bullet_bracket(f.db, Necklace::of(v), Necklace::of(u))));
          for (std::size_t s = 0; s < u.size(); ++s)
            CHECK(necklace_project_slots(f.db(poly(u.rotated(s)), poly(v))) == br);
        }
    }
  }
  // Jacobi on Sym for (12)-weak Poisson right brackets
  std::vector<Necklace> ns;
  for (const auto& w : A.words(1, 3))
    if (min_rotation(w) == w) ns.push_back(Necklace::of(w));
  for (const auto& a : ns)
    for (const auto& b : ns)
      for (const auto& c : ns) CHECK(sym_jacobi(r, a, b, c).empty());
  SymPoly xy2 = sym_bracket(r, sym_of(nx), sym_of(Necklace::of(Word{1, 1})));
  CHECK(xy2 == SymPoly{{SymMonomial{Word(), Word{1}}, Rational(2)}});
}
