#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

#include "dbrack/dbracket.hpp"

namespace dbrack {

namespace {

using Idx = std::array<std::size_t, 3>;

// The scan meets the largest rotation of a class first.
bool cyclic_rep(const Idx& t) {
  Idx r1{t[1], t[2], t[0]}, r2{t[2], t[0], t[1]};
  return t >= r1 && t >= r2;
}

Idx least_rotation(const Idx& t) {
  return std::min({t, Idx{t[1], t[2], t[0]}, Idx{t[2], t[0], t[1]}});
}

// Evaluates f on the listed triples and returns the first nonzero one in list
// order. Work is split into contiguous chunks; a chunk stops early once an
// earlier failure is known, so the answer does not depend on scheduling.
SweepResult run_sweep(const std::vector<Word>& words, const std::vector<Idx>& todo,
                      bool cyclic, const TripleMap& f) {
  SweepResult res;
  const std::size_t n = todo.size();
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<std::size_t>(workers, std::max<std::size_t>(1, n / 64));
  std::atomic<std::size_t> first_bad{n};
  std::vector<Tensor3> defects(workers);
  std::vector<std::size_t> bad_at(workers, n), done(workers, 0);

  auto work = [&](std::size_t w) {
    std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) {
      if (i > first_bad.load()) return;
      const Idx& t = todo[i];
      Tensor3 d = f(poly(words[t[0]]), poly(words[t[1]]), poly(words[t[2]]));
      ++done[w];
      if (!d.is_zero()) {
        bad_at[w] = i;
        defects[w] = std::move(d);
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> fs;
    for (std::size_t w = 0; w < workers; ++w) fs.push_back(std::async(std::launch::async, work, w));
    for (auto& fu : fs) fu.get();
  }
  std::size_t best = n;
  for (std::size_t w = 0; w < workers; ++w) {
    if (bad_at[w] < best) {
      best = bad_at[w];
      res.defect = defects[w];
    }
  }
  if (best < n) {
    Idx t = todo[best];
    if (cyclic && least_rotation(t) != t) {
      t = least_rotation(t);
      res.defect = f(poly(words[t[0]]), poly(words[t[1]]), poly(words[t[2]]));
    }
    res.witness = std::array<Word, 3>{words[t[0]], words[t[1]], words[t[2]]};
    res.checked = best + 1;
  } else {
    res.checked = n;
  }
  return res;
}

}  // namespace

SweepResult sweep_triples(const Algebra& alg, int degree_bound, bool cyclic, const TripleMap& f) {
  std::vector<Word> words = alg.words(1, static_cast<std::size_t>(std::max(degree_bound - 2, 0)));
  std::vector<Idx> todo;
  const std::size_t n = words.size();
  for (std::size_t deg = 3; deg <= static_cast<std::size_t>(std::max(degree_bound, 0)); ++deg)
    for (std::size_t i = n; i-- > 0;)
      for (std::size_t j = n; j-- > 0;)
        for (std::size_t k = n; k-- > 0;) {
          if (words[i].size() + words[j].size() + words[k].size() != deg) continue;
          Idx t{i, j, k};
          if (cyclic && !cyclic_rep(t)) continue;
          todo.push_back(t);
        }
  return run_sweep(words, todo, cyclic, f);
}

SweepResult sweep_generator_triples(const Algebra& alg, bool cyclic, const TripleMap& f) {
  return sweep_triples(alg, 3, cyclic, f);
}

std::string status_name(const JacVerdict& v) {
  using S = JacVerdict::Status;
  switch (v.status) {
    case S::Poisson: return "Poisson";
    case S::WeakPoisson: return "WeakPoisson(" + v.sigma.name() + "," + v.sigma_prime.name() + ")";
    case S::NotPoisson: return "NotPoisson";
    case S::VerifiedUpToDegree: return "VerifiedUpToDegree(" + std::to_string(v.degree_bound) + ")";
  }
  return "?";
}

std::string describe(const Algebra& alg, const JacVerdict& v) {
  std::string s = status_name(v);
  if (v.witness) {
    const auto& w = *v.witness;
    s += " witness (" + format_word(alg, w[0]) + "," + format_word(alg, w[1]) + "," +
         format_word(alg, w[2]) + ") defect " + to_string(alg, v.defect);
  }
  return s;
}

namespace {

JacVerdict verdict_from(const SweepResult& r, bool generator_check, int bound) {
  JacVerdict v;
  v.generator_check = generator_check;
  v.degree_bound = bound;
  v.triples_checked = r.checked;
  if (r.witness) {
    v.status = JacVerdict::Status::NotPoisson;
    v.witness = r.witness;
    v.defect = r.defect;
  } else {
    v.status = generator_check ? JacVerdict::Status::Poisson
                               : JacVerdict::Status::VerifiedUpToDegree;
  }
  return v;
}

}  // namespace

JacVerdict is_poisson(const DoubleBracket& db, int degree_bound) {
  if (db.is_zero()) {
    JacVerdict v;
    v.generator_check = true;
    v.degree_bound = 1;
    return v;
  }
  TripleMap J = [&db](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    return jacobiator(db, a, b, c);
  };
  BimodKind k = db.kind();
  if (db.bimodule().untwisted() && (k == BimodKind::Outer || k == BimodKind::Inner))
    return verdict_from(sweep_generator_triples(db.algebra(), true, J), true, 1);
  return verdict_from(sweep_triples(db.algebra(), degree_bound, true, J), false, degree_bound);
}

JacVerdict is_weak_poisson(const DoubleBracket& db, const Perm3& sigma, const Perm3& sigma_prime,
                           int degree_bound) {
  if (!sigma.is_transposition() || !sigma_prime.is_transposition())
    throw ArgumentError("weak Poisson check needs transpositions");
  auto weak = [&](JacVerdict v) {
    v.weak = true;
    v.sigma = sigma;
    v.sigma_prime = sigma_prime;
    if (v.status == JacVerdict::Status::Poisson) v.status = JacVerdict::Status::WeakPoisson;
    return v;
  };
  if (db.is_zero()) return weak(is_poisson(db, degree_bound));

  TripleMap W = [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    return weak_jacobiator(db, sigma, sigma_prime, a, b, c);
  };
  const bool untwisted = db.bimodule().untwisted();
  const BimodKind k = db.kind();
  bool sound = untwisted && ((k == BimodKind::Right && sigma == Perm3::t12() &&
                              sigma_prime == Perm3::t12()) ||
                             (k == BimodKind::Left && sigma == Perm3::t12() &&
                              sigma_prime == Perm3::t13()));
  if (sound) return weak(verdict_from(sweep_generator_triples(db.algebra(), true, W), true, 1));
  if (untwisted && (k == BimodKind::Outer || k == BimodKind::Inner)) {
    JacVerdict full = is_poisson(db, degree_bound);
    if (full.status == JacVerdict::Status::Poisson) return weak(full);
  }
  return weak(verdict_from(sweep_triples(db.algebra(), degree_bound, true, W), false, degree_bound));
}

}  // namespace dbrack
