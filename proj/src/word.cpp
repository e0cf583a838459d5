#include "sadic/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace sadic {

Letter letter_from_char(char c) {
  switch (c) {
    case '1':
      return Letter::one;
    case '2':
      return Letter::two;
    default:
      throw std::invalid_argument(std::string("not a letter of {1,2}: '") + c + "'");
  }
}

Letter letter_from_int(int value) {
  if (value == 1) return Letter::one;
  if (value == 2) return Letter::two;
  throw std::invalid_argument("not a letter of {1,2}: " + std::to_string(value));
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(letter_from_char(c));
  return Word(std::move(letters));
}

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) throw std::out_of_range("Word::substr position past end");
  len = std::min(len, letters_.size() - pos);
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(len)));
}

bool Word::starts_with(const Word& p) const {
  return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter a : letters_) out.push_back(to_char(a));
  return out;
}

Vec2i abelianize(const Word& w) {
  std::int64_t ones = std::count(w.begin(), w.end(), Letter::one);
  return {ones, static_cast<std::int64_t>(w.size()) - ones};
}

}  // namespace sadic
