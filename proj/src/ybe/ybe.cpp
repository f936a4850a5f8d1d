#include <istream>
#include <sstream>

#include "dbrack/ybe.hpp"

namespace dbrack {

namespace {

template <class Map, class Key>
void add_to(Map& m, const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = m.try_emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) m.erase(it);
}

unsigned parse_index(const std::string& tok, int line, int col) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used == tok.size() && v >= 1) return static_cast<unsigned>(v - 1);
  } catch (const std::exception&) {
  }
  throw ParseError("expected a positive index, got '" + tok + "'", line, col);
}

}  // namespace

Rational MatTensor2::at(unsigned i, unsigned j, unsigned k, unsigned l) const {
  auto it = entries.find({i, j, k, l});
  return it == entries.end() ? Rational(0) : it->second;
}

void MatTensor2::add(const std::array<unsigned, 4>& idx, const Rational& c) {
  add_to(entries, idx, c);
}

void MatTensor3::add(const std::array<unsigned, 6>& idx, const Rational& c) {
  add_to(entries, idx, c);
}

MatTensor2 operator+(const MatTensor2& a, const MatTensor2& b) {
  MatTensor2 r = a;
  r.N = std::max(a.N, b.N);
  for (const auto& [k, c] : b.entries) r.add(k, c);
  return r;
}

MatTensor2 operator*(const Rational& c, const MatTensor2& a) {
  MatTensor2 r;
  r.N = a.N;
  for (const auto& [k, v] : a.entries) r.add(k, c * v);
  return r;
}

MatTensor2 swap(const MatTensor2& r) {
  MatTensor2 out;
  out.N = r.N;
  for (const auto& [k, c] : r.entries) out.add({k[2], k[3], k[0], k[1]}, c);
  return out;
}

MatTensor2 elementary(unsigned N, unsigned i, unsigned j, unsigned k, unsigned l,
                      const Rational& c) {
  if (i >= N || j >= N || k >= N || l >= N) throw ArgumentError("matrix index out of range");
  MatTensor2 r;
  r.N = N;
  r.add({i, j, k, l}, c);
  return r;
}

MatTensor2 standard_r(unsigned N) {
  if (N == 0) throw ArgumentError("matrix dimension must be at least 1");
  MatTensor2 r;
  r.N = N;
  for (unsigned i = 0; i < N; ++i) {
    r.add({i, i, i, i}, rat(1, 2));
    for (unsigned j = i + 1; j < N; ++j) r.add({i, j, j, i}, 1);
  }
  return r;
}

MatTensor2 casimir(unsigned N) {
  if (N == 0) throw ArgumentError("matrix dimension must be at least 1");
  MatTensor2 r;
  r.N = N;
  for (unsigned i = 0; i < N; ++i)
    for (unsigned j = 0; j < N; ++j) r.add({i, j, j, i}, 1);
  return r;
}

MatTensor3 operator+(const MatTensor3& a, const MatTensor3& b) {
  MatTensor3 r = a;
  r.N = std::max(a.N, b.N);
  for (const auto& [k, c] : b.entries) r.add(k, c);
  return r;
}

// products of elementary tensors: e_ab e_cd = delta_bc e_ad in each slot
MatTensor3 operator*(const MatTensor3& a, const MatTensor3& b) {
  using Idx6 = std::array<unsigned, 6>;
  std::map<std::array<unsigned, 3>, std::vector<std::pair<Idx6, Rational>>> by_rows;
  for (const auto& [y, c] : b.entries) by_rows[{y[0], y[2], y[4]}].emplace_back(y, c);
  MatTensor3 out;
  out.N = std::max(a.N, b.N);
  for (const auto& [x, c] : a.entries) {
    auto it = by_rows.find({x[1], x[3], x[5]});
    if (it == by_rows.end()) continue;
    for (const auto& [y, d] : it->second) out.add({x[0], y[1], x[2], y[3], x[4], y[5]}, c * d);
  }
  return out;
}

MatTensor3 commutator(const MatTensor3& a, const MatTensor3& b) {
  MatTensor3 r = a * b;
  for (const auto& [k, c] : (b * a).entries) r.add(k, -c);
  return r;
}

MatTensor3 embed(const MatTensor2& r, int s, int t) {
  if (s < 0 || t < 0 || s > 2 || t > 2 || s == t) throw ArgumentError("bad slot pair");
  int u = 3 - s - t;
  MatTensor3 out;
  out.N = r.N;
  for (const auto& [idx, c] : r.entries)
    for (unsigned m = 0; m < r.N; ++m) {
      std::array<unsigned, 6> k{};
      k[2 * s] = idx[0];
      k[2 * s + 1] = idx[1];
      k[2 * t] = idx[2];
      k[2 * t + 1] = idx[3];
      k[2 * u] = m;
      k[2 * u + 1] = m;
      out.add(k, c);
    }
  return out;
}

MatTensor3 cybe_defect(const MatTensor2& r) {
  MatTensor3 r12 = embed(r, 0, 1), r13 = embed(r, 0, 2), r23 = embed(r, 1, 2),
             r32 = embed(r, 2, 1);
  return commutator(r12, r13) + commutator(r12, r23) + commutator(r32, r13);
}

MatTensor2 read_mat_tensor(std::istream& in) {
  MatTensor2 r;
  r.N = 0;
  std::optional<unsigned> dim;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw.substr(0, raw.find('#'));
    std::istringstream ls(text);
    std::vector<std::pair<std::string, int>> toks;
    std::string tok;
    while (ls >> tok) {
      std::size_t from = toks.empty() ? 0 : toks.back().second - 1 + toks.back().first.size();
      int col = static_cast<int>(text.find(tok, from)) + 1;
      toks.emplace_back(tok, col);
    }
    if (toks.empty()) continue;
    if (toks[0].first == "dim") {
      if (toks.size() != 2 || dim || r.N != 0)
        throw ParseError("'dim N' must be the first entry and appear once", line, toks[0].second);
      dim = parse_index(toks[1].first, line, toks[1].second) + 1;
      continue;
    }
    if (toks.size() != 5)
      throw ParseError("expected 'i j k l coeff'", line, toks[0].second);
    std::array<unsigned, 4> idx;
    for (int s = 0; s < 4; ++s) {
      idx[s] = parse_index(toks[s].first, line, toks[s].second);
      if (dim && idx[s] >= *dim) throw ParseError("index exceeds dim", line, toks[s].second);
      r.N = std::max(r.N, idx[s] + 1);
    }
    Rational c;
    if (c.set_str(toks[4].first, 10) != 0 || c.get_den() == 0)
      throw ParseError("bad coefficient '" + toks[4].first + "'", line, toks[4].second);
    c.canonicalize();
    r.add(idx, c);
  }
  if (dim) r.N = *dim;
  if (r.N == 0) throw ParseError("empty tensor listing without 'dim'", line, 1);
  return r;
}

MatTensor2 parse_mat_tensor(const std::string& text) {
  std::istringstream in(text);
  return read_mat_tensor(in);
}

std::string to_string(const MatTensor2& r) {
  std::string out = "dim " + std::to_string(r.N) + "\n";
  for (const auto& [k, c] : r.entries) {
    for (unsigned i : k) out += std::to_string(i + 1) + " ";
    out += to_string(c) + "\n";
  }
  return out;
}

std::string to_string(const MatTensor3& t) {
  std::string out = "dim " + std::to_string(t.N) + "\n";
  for (const auto& [k, c] : t.entries) {
    for (unsigned i : k) out += std::to_string(i + 1) + " ";
    out += to_string(c) + "\n";
  }
  return out;
}

EntryBracket entry_bracket(const MatTensor2& r) {
  const unsigned N = r.N;
  EntryBracket eb{N, PoissonStructure(Algebra({"v"}), N, BimodKind::Right, AlgEndo::identity(1))};
  MatTensor2 ro = swap(r);
  auto v = [N](unsigned a, unsigned b) { return CPoly::var(var_id({0, a, b}, N)); };
  for (unsigned i = 0; i < N; ++i)
    for (unsigned j = 0; j < N; ++j)
      for (unsigned k = 0; k < N; ++k)
        for (unsigned l = 0; l < N; ++l) {
          CPoly p;
          for (unsigned a = 0; a < N; ++a) {
            p += r.at(i, a, k, l) * v(a, j);
            p -= r.at(a, j, k, l) * v(i, a);
            p -= ro.at(i, j, k, a) * v(a, l);
            p += ro.at(i, j, a, l) * v(k, a);
          }
          eb.ps.set(var_id({0, i, j}, N), var_id({0, k, l}, N), std::move(p));
        }
  return eb;
}

EntryJacobiReport check_entry_jacobi(const EntryBracket& eb) {
  EntryJacobiReport rep;
  const PoissonStructure& ps = eb.ps;
  const VarId nv = static_cast<VarId>(ps.num_vars());
  for (VarId v = 0; v < nv; ++v)
    for (VarId w = 0; w < nv; ++w)
      if (!(ps.on_vars(v, w) == -ps.on_vars(w, v))) rep.antisymmetric = false;
  auto pair_of = [&](VarId v) {
    EntryVar e = entry_var(v, eb.N);
    return std::pair{e.row, e.col};
  };
  for (VarId a = 0; a < nv; ++a)
    for (VarId b = 0; b < nv; ++b)
      for (VarId c = 0; c < nv; ++c) {
        ++rep.triples_checked;
        CPoly d = jacobi_defect(ps, CPoly::var(a), CPoly::var(b), CPoly::var(c));
        if (d.is_zero()) continue;
        rep.holds = false;
        rep.witness = std::array{pair_of(a), pair_of(b), pair_of(c)};
        rep.defect = std::move(d);
        return rep;
      }
  return rep;
}

}  // namespace dbrack
