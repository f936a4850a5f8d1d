#pragma once

#include <array>
#include <map>
#include <utility>

#include "dbrack/rational.hpp"
#include "dbrack/word.hpp"

namespace dbrack {

template <std::size_t N>
using Key = std::array<Word, N>;

// Canonical term order, also the printing order: higher total degree first,
// then slot by slot (longer slot first, then letter order).
template <std::size_t N>
struct KeyOrder {
  bool operator()(const Key<N>& a, const Key<N>& b) const {
    std::size_t da = 0, db = 0;
    for (std::size_t i = 0; i < N; ++i) {
      da += a[i].size();
      db += b[i].size();
    }
    if (da != db) return da > db;
    for (std::size_t i = 0; i < N; ++i) {
      if (a[i].size() != b[i].size()) return a[i].size() > b[i].size();
      int c = a[i].bytes().compare(b[i].bytes());
      if (c != 0) return c < 0;
    }
    return false;
  }
};

// Sparse element of the N-fold tensor power of the free algebra.
// Zero coefficients are never stored, so == is mathematical equality.
template <std::size_t N>
class Tensor {
 public:
  using key_type = Key<N>;
  using map_type = std::map<key_type, Rational, KeyOrder<N>>;

  Tensor() = default;

  static Tensor monomial(key_type k, const Rational& c = 1) {
    Tensor t;
    t.add(std::move(k), c);
    return t;
  }
  static Tensor unit(const Rational& c = 1) { return monomial(key_type{}, c); }

  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const key_type& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(key_type k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(k), c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Tensor& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  // add s * o
  void axpy(const Rational& s, const Tensor& o) {
    if (sgn(s) == 0) return;
    for (const auto& [k, c] : o.terms_) add(k, s * c);
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator-(Tensor a) { return a *= Rational(-1); }
  friend Tensor operator*(Tensor a, const Rational& s) { return a *= s; }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }

  // Slotwise product (a1 (x) b1)(a2 (x) b2) = a1 a2 (x) b1 b2.
  friend Tensor operator*(const Tensor& p, const Tensor& q) {
    Tensor r;
    for (const auto& [kp, cp] : p.terms_)
      for (const auto& [kq, cq] : q.terms_) {
        key_type k;
        for (std::size_t i = 0; i < N; ++i) k[i] = kp[i] * kq[i];
        r.add(std::move(k), cp * cq);
      }
    return r;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }

  // Largest total degree of a term, -1 for zero.
  int degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& w : terms_.begin()->first) d += static_cast<int>(w.size());
    return d;
  }

 private:
  map_type terms_;
};

using NCPoly = Tensor<1>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

inline NCPoly poly(const Word& w, const Rational& c = 1) { return NCPoly::monomial({w}, c); }
inline NCPoly gen(Gen g) { return poly(Word::letter(g)); }
inline NCPoly constant(const Rational& c) { return NCPoly::unit(c); }

inline NCPoly poly_mul(const NCPoly& p, const NCPoly& q) { return p * q; }
inline Tensor2 tensor2_alg_mul(const Tensor2& d, const Tensor2& e) { return d * e; }

inline NCPoly pow(const NCPoly& p, unsigned e) {
  NCPoly r = constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

// Juxtaposition of tensor factors.
template <std::size_t N, std::size_t M>
Tensor<N + M> outer(const Tensor<N>& a, const Tensor<M>& b) {
  Tensor<N + M> r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Key<N + M> k;
      for (std::size_t i = 0; i < N; ++i) k[i] = ka[i];
      for (std::size_t i = 0; i < M; ++i) k[N + i] = kb[i];
      r.add(std::move(k), ca * cb);
    }
  return r;
}

inline Tensor2 tensor(const NCPoly& a, const NCPoly& b) { return outer(a, b); }
inline Tensor2 tensor(const Word& a, const Word& b, const Rational& c = 1) {
  return Tensor2::monomial({a, b}, c);
}
inline Tensor3 tensor(const Word& a, const Word& b, const Word& c, const Rational& k = 1) {
  return Tensor3::monomial({a, b, c}, k);
}

Tensor2 tensor_swap(const Tensor2& d);

// Multiplication map A^{(x)N} -> A.
template <std::size_t N>
NCPoly multiply_slots(const Tensor<N>& t) {
  NCPoly r;
  for (const auto& [k, c] : t) {
    Word w;
    for (const auto& s : k) w *= s;
    r.add({std::move(w)}, c);
  }
  return r;
}

// Apply a linear map Word -> NCPoly to slot I of every term.
template <std::size_t N, class F>
Tensor<N> map_slot(const Tensor<N>& t, std::size_t slot, F&& f) {
  Tensor<N> r;
  for (const auto& [k, c] : t) {
    NCPoly img = f(k[slot]);
    for (const auto& [kw, cw] : img) {
      Key<N> nk = k;
      nk[slot] = kw[0];
      r.add(std::move(nk), c * cw);
    }
  }
  return r;
}

// The words of p with coefficients, as a convenience for range-for.
inline const Word& word_of(const Key<1>& k) { return k[0]; }

}  // namespace dbrack
