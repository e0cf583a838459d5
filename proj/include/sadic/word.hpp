#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sadic {

/// One of the two symbols of the alphabet. Rendered as '1' / '2' in all I/O.
enum class Letter : std::uint8_t { one = 1, two = 2 };

inline constexpr Letter kLetters[2] = {Letter::one, Letter::two};

/// 0 for letter 1, 1 for letter 2.
constexpr int slot(Letter a) noexcept { return a == Letter::one ? 0 : 1; }
constexpr Letter other(Letter a) noexcept { return a == Letter::one ? Letter::two : Letter::one; }
constexpr char to_char(Letter a) noexcept { return a == Letter::one ? '1' : '2'; }

Letter letter_from_char(char c);
Letter letter_from_int(int value);

/// Integer lattice point; also the abelianization of a word.
struct Vec2i {
  std::int64_t x = 0;
  std::int64_t y = 0;

  constexpr Vec2i& operator+=(const Vec2i& o) noexcept {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2i& operator-=(const Vec2i& o) noexcept {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Vec2i operator+(Vec2i a, const Vec2i& b) noexcept { return a += b; }
  friend constexpr Vec2i operator-(Vec2i a, const Vec2i& b) noexcept { return a -= b; }
  friend constexpr auto operator<=>(const Vec2i&, const Vec2i&) = default;
};

/// Unit vector e_i.
constexpr Vec2i unit(Letter a) noexcept { return a == Letter::one ? Vec2i{1, 0} : Vec2i{0, 1}; }

struct Vec2iHash {
  std::size_t operator()(const Vec2i& v) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(v.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(v.y) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Finite word over {1, 2}, possibly empty.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses a string of '1' and '2' characters; whitespace is rejected.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter a) { letters_.push_back(a); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  Word& operator+=(const Word& other);

  /// First min(n, size()) letters.
  Word prefix(std::size_t n) const;
  Word substr(std::size_t pos, std::size_t len) const;
  bool starts_with(const Word& p) const;

  std::string str() const;

  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Letter counts ᵗ(|w|₁, |w|₂).
Vec2i abelianize(const Word& w);

}  // namespace sadic
