#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

namespace dbrack {

using Gen = std::uint8_t;

// A monomial in the free algebra. The empty word is the unit.
// Letters are stored as bytes so short words stay inline.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Gen> letters);
  static Word letter(Gen g) { return Word(std::string(1, static_cast<char>(g))); }
  static Word power(Gen g, std::size_t e) { return Word(std::string(e, static_cast<char>(g))); }

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  Gen operator[](std::size_t i) const { return static_cast<Gen>(s_[i]); }

  Word slice(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(s_.substr(pos, len));
  }
  Word reversed() const { return Word(std::string(s_.rbegin(), s_.rend())); }
  Word rotated(std::size_t k) const { return Word(s_.substr(k) + s_.substr(0, k)); }
  Word sorted() const;

  Word& operator*=(const Word& o) {
    s_ += o.s_;
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  // Degree-lexicographic order: shorter words first, then letter by letter.
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    int c = a.s_.compare(b.s_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const std::string& bytes() const { return s_; }
  std::size_t hash() const { return std::hash<std::string>{}(s_); }

 private:
  explicit Word(std::string s) : s_(std::move(s)) {}
  std::string s_;
};

}  // namespace dbrack
