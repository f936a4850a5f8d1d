#include <algorithm>

#include "dbrack/repspace.hpp"

namespace dbrack {

PoissonStructure::PoissonStructure(Algebra alg, unsigned n, BimodKind kind, AlgEndo twist)
    : alg_(std::move(alg)), n_(n), kind_(kind), twist_(std::move(twist)) {
  if (n == 0) throw ArgumentError("representation dimension must be at least 1");
  nv_ = alg_.rank() * n * n;
  table_.assign(nv_ * nv_, CPoly());
  if (!twist_.is_identity()) {
    twist_.check(alg_, alg_);
    for (Gen g = 0; g < alg_.rank(); ++g) {
      MatPoly m = eval_nc(twist_.image(g), n);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) twist_images_.push_back(m(i, j));
    }
  }
}

bool PoissonStructure::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const CPoly& p) { return p.is_zero(); });
}

CPoly PoissonStructure::twist_apply(const CPoly& p) const {
  if (twist_.is_identity()) return p;
  return p.substitute([this](VarId v) { return twist_images_[v]; });
}

PoissonStructure induce(const DoubleBracket& db, unsigned n) {
  const Bimodule& m = db.bimodule();
  if (!m.equal_twists()) throw KindError("induced bracket needs alpha = beta");
  const Algebra& alg = db.algebra();
  PoissonStructure ps(alg, n, db.kind(), m.alpha());
  const BimodKind k = db.kind();
  for (Gen a = 0; a < alg.rank(); ++a)
    for (Gen b = 0; b < alg.rank(); ++b) {
      const Tensor2& d = db.on_gens(a, b);
      if (d.is_zero()) continue;
      MatTensorPoly mt = matrix_tensor(d, n);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
          for (unsigned kk = 0; kk < n; ++kk)
            for (unsigned l = 0; l < n; ++l) {
              std::array<unsigned, 4> idx;
              switch (k) {
                case BimodKind::Outer: idx = {kk, j, i, l}; break;
                case BimodKind::Inner: idx = {i, l, kk, j}; break;
                case BimodKind::Right: idx = {i, j, kk, l}; break;
                case BimodKind::Left: idx = {kk, l, i, j}; break;
              }
              auto it = mt.find(idx);
              if (it == mt.end()) continue;
              ps.set(var_id({a, i, j}, n), var_id({b, kk, l}, n), it->second);
            }
    }
  return ps;
}

MatTensorPoly matrix_tensor(const Tensor2& d, unsigned n) {
  MatTensorPoly out;
  for (const auto& [key, c] : d) {
    MatPoly m1 = eval_nc(key[0], n), m2 = eval_nc(key[1], n);
    for (unsigned p = 0; p < n; ++p)
      for (unsigned q = 0; q < n; ++q) {
        if (m1(p, q).is_zero()) continue;
        for (unsigned r = 0; r < n; ++r)
          for (unsigned s = 0; s < n; ++s) {
            if (m2(r, s).is_zero()) continue;
            CPoly& slot = out[{p, q, r, s}];
            slot += c * (m1(p, q) * m2(r, s));
          }
      }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// {f,g} = sum_{v,w} alpha_n(df/dv) alpha_n(dg/dw) {v,w}
CPoly poisson_eval(const PoissonStructure& ps, const CPoly& f, const CPoly& g) {
  CPoly r;
  std::vector<VarId> fv = f.variables(), gv = g.variables();
  std::vector<CPoly> dg;
  dg.reserve(gv.size());
  for (VarId w : gv) dg.push_back(ps.twist_apply(g.derivative(w)));
  for (VarId v : fv) {
    CPoly df;
    for (std::size_t j = 0; j < gv.size(); ++j) {
      const CPoly& t = ps.on_vars(v, gv[j]);
      if (t.is_zero()) continue;
      if (df.is_zero()) df = ps.twist_apply(f.derivative(v));
      r += df * dg[j] * t;
    }
  }
  return r;
}

CPoly jacobi_defect(const PoissonStructure& ps, const CPoly& f, const CPoly& g, const CPoly& h) {
  return poisson_eval(ps, f, poisson_eval(ps, g, h)) + poisson_eval(ps, g, poisson_eval(ps, h, f)) +
         poisson_eval(ps, h, poisson_eval(ps, f, g));
}

RepJacobiReport check_rep_jacobi(const PoissonStructure& ps) {
  if (!ps.untwisted())
    throw ArgumentError("Jacobi sweep is only defined for untwisted structures");
  RepJacobiReport rep;
  rep.n = ps.dim();
  const VarId nv = static_cast<VarId>(ps.num_vars());
  for (VarId v = 0; v < nv; ++v)
    for (VarId w = v; w < nv; ++w)
      for (VarId u = w; u < nv; ++u) {
        ++rep.tuples_checked;
        CPoly d = jacobi_defect(ps, CPoly::var(v), CPoly::var(w), CPoly::var(u));
        if (!d.is_zero()) {
          rep.holds = false;
          rep.witness = std::array<VarId, 3>{v, w, u};
          rep.defect = std::move(d);
          return rep;
        }
      }
  return rep;
}

CPoly trace_bracket(const PoissonStructure& ps, const NCPoly& a, const NCPoly& b) {
  unsigned n = ps.dim();
  return poisson_eval(ps, eval_nc(a, n).trace(), eval_nc(b, n).trace());
}

MatTensorPoly matrix_tensor_bracket(const PoissonStructure& ps, MatConvention conv,
                                    const NCPoly& a, const NCPoly& b) {
  unsigned n = ps.dim();
  MatPoly X = eval_nc(a, n), Y = eval_nc(b, n);
  MatTensorPoly out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k)
        for (unsigned l = 0; l < n; ++l) {
          CPoly v = poisson_eval(ps, X(i, j), Y(k, l));
          if (v.is_zero()) continue;
          std::array<unsigned, 4> idx =
              conv == MatConvention::VdB ? std::array<unsigned, 4>{k, j, i, l}
                                         : std::array<unsigned, 4>{i, j, k, l};
          out[idx] += v;
        }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

CPoly rep_map(const AlgEndo& phi, unsigned n, const CPoly& f) {
  std::vector<MatPoly> imgs;
  for (const auto& p : phi.images()) imgs.push_back(eval_nc(p, n));
  return f.substitute([&](VarId v) {
    EntryVar e = entry_var(v, n);
    return imgs.at(e.gen)(e.row, e.col);
  });
}

bool check_rep_morphism(const AlgEndo& phi, const DoubleBracket& db1, const DoubleBracket& db2,
                        unsigned n) {
  BimodKind k = db1.kind();
  if (k != db2.kind() || (k != BimodKind::Outer && k != BimodKind::Right) ||
      !db1.bimodule().untwisted() || !db2.bimodule().untwisted())
    throw KindError("representation morphism check needs a shared untwisted outer or right kind");
  phi.check(db1.algebra(), db2.algebra());
  PoissonStructure p1 = induce(db1, n), p2 = induce(db2, n);
  const VarId nv = static_cast<VarId>(p1.num_vars());
  std::vector<CPoly> img(nv);
  for (VarId v = 0; v < nv; ++v) img[v] = rep_map(phi, n, CPoly::var(v));
  for (VarId v = 0; v < nv; ++v)
    for (VarId w = 0; w < nv; ++w)
      if (!(poisson_eval(p2, img[v], img[w]) == rep_map(phi, n, p1.on_vars(v, w)))) return false;
  return true;
}

PoissonStructure abelianized_bracket(const DoubleBracket& db) {
  if (db.kind() != BimodKind::Right && db.kind() != BimodKind::Left)
    throw KindError("abelianized bracket needs a right or left bracket");
  return induce(db, 1);
}

}  // namespace dbrack
