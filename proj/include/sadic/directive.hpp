#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sadic/matrix.hpp"
#include "sadic/substitution.hpp"

namespace sadic {

class ProductCache;

/// A directive sequence (σ_n) given as a periodic, eventually periodic, or
/// finite-window description. Immutable; copies share one product cache.
class DirectiveSequence {
 public:
  enum class Mode { periodic, eventually_periodic, finite_window };

  static DirectiveSequence periodic(std::vector<Substitution> cycle);
  static DirectiveSequence eventually_periodic(std::vector<Substitution> preperiod,
                                               std::vector<Substitution> cycle);
  static DirectiveSequence finite_window(std::vector<Substitution> prefix);

  Mode mode() const noexcept { return mode_; }
  bool is_finite() const noexcept { return mode_ == Mode::finite_window; }

  /// Number of known substitutions for finite windows; nullopt when infinite.
  std::optional<std::size_t> horizon() const;

  /// Preperiod and cycle length after normalization (minimal representation).
  std::size_t preperiod_length() const noexcept { return pre_.size(); }
  std::size_t cycle_length() const noexcept { return cycle_.size(); }

  /// σ_n. Throws HorizonExceeded past the end of a finite window.
  const Substitution& at(std::size_t n) const { return distinct_[id(n)]; }
  /// Index of σ_n into distinct(); equal ids mean equal substitutions.
  std::size_t id(std::size_t n) const;
  const std::vector<Substitution>& distinct() const noexcept { return distinct_; }

  /// Throws HorizonExceeded unless every σ_j with j < end is known.
  void require_within(std::size_t end) const;

  /// M_{[k,l)} = M_k ⋯ M_{l−1}, exact. product(k,k) is the identity.
  Mat2 product(std::size_t k, std::size_t l) const;

  /// |σ_{[k,l)}(a)|.
  BigInt image_length(std::size_t k, std::size_t l, Letter a) const;

  /// Streams σ_{[k,l)}(a) letter by letter without materializing it. The
  /// callback returns false to stop early.
  void for_each_image_letter(std::size_t k, std::size_t l, Letter a,
                             const std::function<bool(Letter)>& visit) const;

  /// First min(L, |σ_{[k,l)}(a)|) letters of σ_{[k,l)}(a).
  Word image_prefix(std::size_t k, std::size_t l, Letter a, std::size_t length) const;

  /// Whole image; throws std::length_error when longer than max_length.
  Word image(std::size_t k, std::size_t l, Letter a, std::size_t max_length) const;

  /// Human-readable description such as "periodic [1->12, 2->1]".
  std::string describe() const;

 private:
  DirectiveSequence(Mode mode, std::vector<Substitution> pre, std::vector<Substitution> cycle);

  Mode mode_;
  std::vector<Substitution> distinct_;
  std::vector<std::size_t> pre_;
  std::vector<std::size_t> cycle_;
  std::shared_ptr<ProductCache> cache_;

  friend class ProductCache;
};

/// Pull-style cursor over σ_{[k,l)}(a); lets two images be walked in lockstep.
class ImageCursor {
 public:
  ImageCursor(const DirectiveSequence& seq, std::size_t k, std::size_t l, Letter a);

  /// Next letter, or nullopt once the image is exhausted.
  std::optional<Letter> next();

 private:
  struct Frame {
    std::size_t level;
    const Word* word;
    std::size_t pos;
  };

  const DirectiveSequence* seq_;
  std::size_t k_;
  std::vector<Frame> stack_;
  std::optional<Letter> pending_;
};

struct PrimitivityResult {
  /// Least l with M_{[k,l)} positive, if found before the horizon.
  std::optional<std::size_t> positive_at;
  std::size_t k = 0;
  std::size_t horizon = 0;
  /// Positivity also holds from every k, by periodicity of a positive cycle product.
  bool holds_for_all_k = false;
};

PrimitivityResult is_primitive(const DirectiveSequence& seq, std::size_t k, std::size_t horizon);

enum class WindowVerdict { verified_on_window, refuted, unknown };

struct IrreducibilityResult {
  WindowVerdict verdict = WindowVerdict::unknown;
  std::size_t k = 0;
  std::size_t l_min = 0;
  std::size_t l_max = 0;
  /// Every l in the window with a reducible characteristic polynomial.
  std::vector<std::size_t> reducible_at;
  /// Discriminant at l_max, for reporting.
  BigInt last_discriminant;
};

/// Tests x² − tr·x + det of M_{[k,l)} for each l in [l_min, l_max] with l > k.
IrreducibilityResult is_algebraically_irreducible(const DirectiveSequence& seq, std::size_t k,
                                                  std::size_t l_min, std::size_t l_max);

/// All n ≥ 1 with n + length ≤ horizon where (σ_n,…,σ_{n+length−1}) equals
/// the initial window (σ_0,…,σ_{length−1}).
std::vector<std::size_t> recurrence_windows(const DirectiveSequence& seq, std::size_t length,
                                            std::size_t horizon);

std::string to_string(WindowVerdict v);

}  // namespace sadic
