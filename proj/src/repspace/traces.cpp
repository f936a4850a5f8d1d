#include <algorithm>
#include <functional>
#include <set>

#include "dbrack/repspace.hpp"

namespace dbrack {

CPoly trace_poly(const TraceMonomial& m, unsigned n) {
  CPoly r = CPoly::constant(1);
  for (const auto& w : m) r = r * eval_nc(w, n).trace();
  return r;
}

namespace {

using MultiDeg = std::vector<unsigned>;

MultiDeg multideg(const Word& w, std::size_t rank) {
  MultiDeg d(rank, 0);
  for (std::size_t i = 0; i < w.size(); ++i) ++d[w[i]];
  return d;
}

MultiDeg multideg(const Monomial& m, unsigned n, std::size_t rank) {
  MultiDeg d(rank, 0);
  for (const auto& [v, e] : m) d[entry_var(v, n).gen] += e;
  return d;
}

// Solves sum_j x_j cols[j] = target over Q; nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const std::vector<CPoly>& cols, const CPoly& target) {
  std::map<Monomial, std::size_t, MonomialOrder> rows;
  for (const auto& c : cols)
    for (const auto& [m, k] : c) rows.emplace(m, 0);
  for (const auto& [m, k] : target) rows.emplace(m, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  const std::size_t nc = cols.size();
  std::vector<std::vector<Rational>> M(r, std::vector<Rational>(nc + 1));
  for (std::size_t j = 0; j < nc; ++j)
    for (const auto& [m, k] : cols[j]) M[rows[m]][j] = k;
  for (const auto& [m, k] : target) M[rows[m]][nc] = k;

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < r; ++col) {
    std::size_t p = row;
    while (p < r && M[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(M[p], M[row]);
    Rational inv = 1 / M[row][col];
    for (auto& x : M[row]) x *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rational f = M[i][col];
      for (std::size_t j = col; j <= nc; ++j) M[i][j] -= f * M[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (M[i][nc] != 0) return std::nullopt;
  std::vector<Rational> x(nc);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = M[i][nc];
  return x;
}

}  // namespace

TraceExpansion expand_in_traces(const Algebra& alg, unsigned n, const CPoly& f,
                                std::size_t max_len) {
  const std::size_t rank = alg.rank();
  std::vector<Word> necks;
  for (const auto& w : alg.words(1, max_len))
    if (min_rotation(w) == w) necks.push_back(w);
  std::vector<MultiDeg> neck_deg;
  for (const auto& w : necks) neck_deg.push_back(multideg(w, rank));

  std::map<MultiDeg, CPoly> parts;
  for (const auto& [m, c] : f) parts[multideg(m, n, rank)].add(m, c);

  TraceExpansion out;
  out.in_span = true;
  for (const auto& [md, part] : parts) {
    std::vector<TraceMonomial> basis;
    TraceMonomial cur;
    MultiDeg rest = md;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (std::all_of(rest.begin(), rest.end(), [](unsigned d) { return d == 0; })) {
        basis.push_back(cur);
        return;
      }
      for (std::size_t i = from; i < necks.size(); ++i) {
        bool fits = true;
        for (std::size_t g = 0; g < rank; ++g) fits = fits && neck_deg[i][g] <= rest[g];
        if (!fits) continue;
        for (std::size_t g = 0; g < rank; ++g) rest[g] -= neck_deg[i][g];
        cur.push_back(necks[i]);
        rec(i);
        cur.pop_back();
        for (std::size_t g = 0; g < rank; ++g) rest[g] += neck_deg[i][g];
      }
    };
    rec(0);
    std::vector<CPoly> cols;
    for (const auto& b : basis) cols.push_back(trace_poly(b, n));
    auto x = solve(cols, part);
    if (!x) {
      out.in_span = false;
      out.terms.clear();
      return out;
    }
    for (std::size_t j = 0; j < basis.size(); ++j)
      if ((*x)[j] != 0) out.terms.emplace_back(basis[j], (*x)[j]);
  }
  return out;
}

}  // namespace dbrack
