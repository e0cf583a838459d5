#include "sadic/substitution.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

namespace sadic {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Substitution::Substitution(Word image1, Word image2) : images_{std::move(image1), std::move(image2)} {
  if (images_[0].empty() || images_[1].empty())
    throw std::invalid_argument("substitution images must be non-empty");
}

Substitution Substitution::identity() { return {Word({Letter::one}), Word({Letter::two})}; }

Substitution Substitution::parse(std::string_view rule) {
  const std::string text = strip_spaces(rule);
  std::optional<Word> images[2];
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string_view part(text.data() + pos, comma - pos);
    std::size_t arrow = part.find("->");
    if (arrow != 1) throw std::invalid_argument("malformed rule '" + std::string(part) + "', expected i->word");
    Letter from = letter_from_char(part[0]);
    if (images[slot(from)]) throw std::invalid_argument("letter " + std::string(1, part[0]) + " mapped twice");
    images[slot(from)] = Word::parse(part.substr(3));
    pos = comma + 1;
  }
  if (!images[0] || !images[1]) throw std::invalid_argument("substitution must map both letters 1 and 2");
  return {std::move(*images[0]), std::move(*images[1])};
}

Word Substitution::apply(const Word& w) const {
  Word out;
  std::size_t n = 0;
  for (Letter a : w) n += image(a).size();
  out.reserve(n);
  for (Letter a : w) out += image(a);
  return out;
}

Mat2 Substitution::incidence() const {
  Vec2i c1 = abelianize(images_[0]);
  Vec2i c2 = abelianize(images_[1]);
  return {c1.x, c2.x, c1.y, c2.y};
}

bool Substitution::is_unimodular() const {
  BigInt d = incidence().det();
  return d == 1 || d == -1;
}

std::string Substitution::str() const { return "1->" + images_[0].str() + ", 2->" + images_[1].str(); }

Substitution compose(const Substitution& sigma, const Substitution& tau) {
  return {sigma.apply(tau.image(Letter::one)), sigma.apply(tau.image(Letter::two))};
}

NamedSubstitution parse_named_substitution(std::string_view line) {
  std::size_t colon = line.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("expected 'name: 1->.., 2->..'");
  std::string name = strip_spaces(line.substr(0, colon));
  if (name.empty()) throw std::invalid_argument("substitution name is empty");
  return {std::move(name), Substitution::parse(line.substr(colon + 1))};
}

}  // namespace sadic
