#pragma once

#include <string>
#include <string_view>

#include "sadic/matrix.hpp"
#include "sadic/word.hpp"

namespace sadic {

/// Non-erasing endomorphism of the free monoid on {1, 2}.
class Substitution {
 public:
  /// Throws std::invalid_argument if either image is empty.
  Substitution(Word image1, Word image2);

  static Substitution identity();

  /// Parses "1->12, 2->1" (whitespace-insensitive, either rule order).
  static Substitution parse(std::string_view rule);

  const Word& image(Letter a) const noexcept { return images_[slot(a)]; }

  Word apply(const Word& w) const;

  /// M_σ: column j is the abelianization of the image of letter j.
  Mat2 incidence() const;

  bool is_unimodular() const;

  /// Canonical text, "1->12, 2->1".
  std::string str() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Word images_[2];
};

/// (σ∘τ)(i) = σ(τ(i)).
Substitution compose(const Substitution& sigma, const Substitution& tau);

struct NamedSubstitution {
  std::string name;
  Substitution substitution;
};

/// Parses "name: 1->12, 2->1".
NamedSubstitution parse_named_substitution(std::string_view line);

}  // namespace sadic
