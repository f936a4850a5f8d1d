#include <algorithm>

#include "dbrack/repspace.hpp"

namespace dbrack {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

// Higher degree first, then lexicographic on (var, exp) pairs.
bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a < b;
}

CPoly CPoly::constant(const Rational& c) {
  CPoly p;
  p.add({}, c);
  return p;
}

CPoly CPoly::var(VarId v, const Rational& c) {
  CPoly p;
  p.add({{v, 1}}, c);
  return p;
}

void CPoly::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

CPoly& CPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, k] : terms_) k *= c;
  return *this;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return r;
}

}  // namespace

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add(mono_mul(ma, mb), ca * cb);
  return r;
}

std::vector<VarId> CPoly::variables() const {
  std::vector<VarId> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

CPoly CPoly::derivative(VarId v) const {
  CPoly r;
  for (const auto& [m, c] : terms_) {
    auto it = std::find_if(m.begin(), m.end(), [v](const auto& p) { return p.first == v; });
    if (it == m.end()) continue;
    Monomial d = m;
    auto& [dv, de] = d[it - m.begin()];
    Rational k = c * de;
    if (--de == 0) d.erase(d.begin() + (it - m.begin()));
    r.add(d, k);
  }
  return r;
}

std::string var_name(const Algebra& alg, unsigned n, VarId v) {
  EntryVar e = entry_var(v, n);
  std::string s = alg.name(e.gen) + "_";
  if (n < 10) return s + std::to_string(e.row + 1) + std::to_string(e.col + 1);
  return s + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1);
}

std::string to_string(const Algebra& alg, unsigned n, const CPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const auto& [v, e] : m) {
      if (!body.empty()) body += "*";
      body += var_name(alg, n, v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += body;
    }
  }
  return out;
}

MatPoly MatPoly::identity(unsigned n) {
  MatPoly m(n);
  for (unsigned i = 0; i < n; ++i) m(i, i) = CPoly::constant(1);
  return m;
}

MatPoly MatPoly::generic(Gen g, unsigned n) {
  MatPoly m(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m(i, j) = CPoly::var(var_id({g, i, j}, n));
  return m;
}

CPoly MatPoly::trace() const {
  CPoly t;
  for (unsigned i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

MatPoly& MatPoly::operator+=(const MatPoly& o) {
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  unsigned n = a.n_;
  MatPoly r(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (unsigned j = 0; j < n; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

MatPoly operator*(const Rational& c, MatPoly a) {
  for (auto& e : a.e_) e *= c;
  return a;
}

MatPoly eval_nc(const Word& w, unsigned n) {
  if (w.empty()) return MatPoly::identity(n);
  MatPoly m = MatPoly::generic(w[0], n);
  for (std::size_t i = 1; i < w.size(); ++i) m = m * MatPoly::generic(w[i], n);
  return m;
}

MatPoly eval_nc(const NCPoly& p, unsigned n) {
  MatPoly r(n);
  for (const auto& [k, c] : p) r += c * eval_nc(k[0], n);
  return r;
}

}  // namespace dbrack
