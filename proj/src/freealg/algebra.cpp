#include <set>

#include "dbrack/algebra.hpp"
#include "dbrack/endo.hpp"

namespace dbrack {

Algebra::Algebra(std::vector<std::string> names, bool commutative)
    : names_(std::move(names)), commutative_(commutative) {
  if (names_.size() > 255) throw ArgumentError("at most 255 generators");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ArgumentError("empty generator name");
    if (!seen.insert(n).second) throw ArgumentError("duplicate generator " + n);
  }
}

Algebra Algebra::numbered(std::size_t r, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= r; ++i) names.push_back(stem + std::to_string(i));
  return Algebra(std::move(names));
}

std::optional<Gen> Algebra::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Gen>(i);
  return std::nullopt;
}

Gen Algebra::at(const std::string& name) const {
  auto g = find(name);
  if (!g) throw AlgebraMismatch("undeclared generator " + name);
  return *g;
}

void Algebra::check(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= names_.size())
      throw AlgebraMismatch("letter " + std::to_string(w[i]) + " outside generator table of rank " +
                            std::to_string(names_.size()));
}

std::vector<Word> Algebra::words(std::size_t min_deg, std::size_t max_deg) const {
  std::vector<Word> out;
  const std::size_t r = rank();
  for (std::size_t len = min_deg; len <= max_deg; ++len) {
    if (len > 0 && r == 0) break;
    std::vector<Gen> idx(len, 0);
    while (true) {
      bool keep = true;
      if (commutative_)
        for (std::size_t i = 1; i < len; ++i)
          if (idx[i] < idx[i - 1]) keep = false;
      if (keep) {
        Word w;
        for (Gen g : idx) w *= Word::letter(g);
        out.push_back(std::move(w));
      }
      std::size_t p = len;
      while (p > 0 && idx[p - 1] + 1u == r) idx[--p] = 0;
      if (p == 0) break;
      ++idx[p - 1];
    }
  }
  return out;
}

AlgEndo::AlgEndo(std::vector<NCPoly> images) : images_(std::move(images)) {
  identity_ = true;
  for (std::size_t g = 0; g < images_.size(); ++g)
    if (!(images_[g] == gen(static_cast<Gen>(g)))) identity_ = false;
}

AlgEndo AlgEndo::identity(std::size_t rank) {
  std::vector<NCPoly> imgs;
  for (std::size_t g = 0; g < rank; ++g) imgs.push_back(gen(static_cast<Gen>(g)));
  return AlgEndo(std::move(imgs));
}

NCPoly AlgEndo::apply(const Word& w) const {
  if (identity_) return poly(w);
  NCPoly r = constant(1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= images_.size())
      throw AlgebraMismatch("endomorphism has no image for letter " + std::to_string(w[i]));
    r = r * images_[w[i]];
  }
  return r;
}

NCPoly AlgEndo::apply(const NCPoly& p) const {
  if (identity_) return p;
  NCPoly r;
  for (const auto& [k, c] : p) r.axpy(c, apply(k[0]));
  return r;
}

AlgEndo AlgEndo::after(const AlgEndo& inner) const {
  std::vector<NCPoly> imgs;
  for (const auto& p : inner.images_) imgs.push_back(apply(p));
  return AlgEndo(std::move(imgs));
}

void AlgEndo::check(const Algebra& source, const Algebra& target) const {
  if (images_.size() != source.rank())
    throw AlgebraMismatch("map gives " + std::to_string(images_.size()) + " images for " +
                          std::to_string(source.rank()) + " generators");
  for (const auto& p : images_) target.check(p);
}

}  // namespace dbrack
