#include "dbrack/necklace.hpp"

namespace dbrack {

Word min_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word r = w.rotated(k);
    if (r.bytes() < best.bytes()) best = std::move(r);
  }
  return best;
}

Necklace Necklace::of(const Word& w) {
  Necklace n;
  n.rep_ = min_rotation(w);
  return n;
}

NCPoly necklace_project(const NCPoly& p) {
  NCPoly r;
  for (const auto& [k, c] : p) r.add({min_rotation(k[0])}, c);
  return r;
}

}  // namespace dbrack
