#include <algorithm>

#include "dbrack/perm.hpp"
#include "dbrack/errors.hpp"

namespace dbrack {

Word::Word(std::initializer_list<Gen> letters) {
  for (Gen g : letters) s_.push_back(static_cast<char>(g));
}

Word Word::sorted() const {
  std::string s = s_;
  std::sort(s.begin(), s.end(), [](char a, char b) {
    return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
  });
  return Word(std::move(s));
}

Tensor2 tensor_swap(const Tensor2& d) {
  Tensor2 r;
  for (const auto& [k, c] : d) r.add({k[1], k[0]}, c);
  return r;
}

Tensor3 tensor3_perm(const Perm3& s, const Tensor3& t) {
  if (s == Perm3::id()) return t;
  Tensor3 r;
  for (const auto& [k, c] : t) r.add(s.act(k), c);
  return r;
}

Perm3 Perm3::parse(std::string_view s) {
  std::string t;
  for (char ch : s)
    if (ch != '(' && ch != ')' && ch != ' ') t.push_back(ch);
  if (t == "id" || t == "e" || t.empty()) return id();
  if (t == "12" || t == "21") return t12();
  if (t == "13" || t == "31") return t13();
  if (t == "23" || t == "32") return t23();
  if (t == "123" || t == "231" || t == "312") return c123();
  if (t == "132" || t == "321" || t == "213") return c132();
  throw ArgumentError("not a permutation of {1,2,3}: " + std::string(s));
}

bool Perm3::is_transposition() const {
  return *this == t12() || *this == t13() || *this == t23();
}

std::string Perm3::name() const {
  if (*this == id()) return "id";
  if (*this == t12()) return "(12)";
  if (*this == t13()) return "(13)";
  if (*this == t23()) return "(23)";
  if (*this == c123()) return "(123)";
  return "(132)";
}

}  // namespace dbrack
