#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fga {

/// Error raised when words or automorphisms of different ranks are mixed,
/// or a letter refers to a generator outside the ambient rank.
class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator of F_n or its formal inverse.
///
/// Stored as a single signed code: generator i is +(i+1), its inverse -(i+1).
/// Letters are ordered by (index, sign) with the positive letter first, so
/// a < A < b < B < ... under the default alphabet.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t index, bool inverse)
      : code_(inverse ? -static_cast<std::int32_t>(index + 1)
                      : static_cast<std::int32_t>(index + 1)) {}

  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  [[nodiscard]] constexpr std::uint32_t index() const {
    return static_cast<std::uint32_t>((code_ < 0 ? -code_ : code_) - 1);
  }
  [[nodiscard]] constexpr bool is_inverse() const { return code_ < 0; }
  [[nodiscard]] constexpr int sign() const { return code_ < 0 ? -1 : 1; }
  [[nodiscard]] constexpr Letter inverse() const { return from_code(-code_); }
  [[nodiscard]] constexpr std::int32_t code() const { return code_; }
  /// Dense key in [0, 2n): 2*index + (inverse ? 1 : 0). Defines letter order.
  [[nodiscard]] constexpr std::uint32_t key() const {
    return 2 * index() + (is_inverse() ? 1u : 0u);
  }
  static constexpr Letter from_key(std::uint32_t key) {
    return Letter(key / 2, (key & 1u) != 0);
  }

  [[nodiscard]] constexpr bool cancels(Letter other) const {
    return code_ == -other.code_;
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.key() <=> b.key();
  }

 private:
  std::int32_t code_ = 1;
};

/// A freely reduced word in F_rank.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  /// Freely reduces `raw`; throws RankError on an out-of-range letter.
  static Word reduce(std::span<const Letter> raw, std::size_t rank);
  static Word reduce(const std::vector<Letter>& raw, std::size_t rank) {
    return reduce(std::span<const Letter>(raw), rank);
  }
  /// Single generator (or its inverse).
  static Word generator(std::uint32_t index, std::size_t rank,
                        bool inverse = false);

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] std::size_t length() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] std::span<const Letter> letters() const { return letters_; }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] Letter front() const { return letters_.front(); }
  [[nodiscard]] Letter back() const { return letters_.back(); }

  [[nodiscard]] Word inverse() const;
  /// Reduced product this * other.
  [[nodiscard]] Word operator*(const Word& other) const;
  Word& operator*=(const Word& other);
  /// Cyclic length: length of a cyclically reduced conjugate.
  [[nodiscard]] std::size_t cyclic_length() const;
  /// Same word as an element of a larger free group.
  [[nodiscard]] Word promoted(std::size_t new_rank) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }

  /// Appends a letter with cancellation against the current last letter.
  void push_reduced(Letter l) {
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  void reserve(std::size_t n) { letters_.reserve(n); }

 private:
  friend class CyclicWord;
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

/// Commutator [x, y] = x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);

/// A conjugacy class, held as its rotation-minimal cyclically reduced
/// representative.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// Cyclically reduces and canonicalizes `w`.
  explicit CyclicWord(const Word& w);

  [[nodiscard]] std::size_t rank() const { return word_.rank(); }
  [[nodiscard]] std::size_t length() const { return word_.length(); }
  [[nodiscard]] bool empty() const { return word_.empty(); }
  [[nodiscard]] const Word& word() const { return word_; }
  [[nodiscard]] std::span<const Letter> letters() const {
    return word_.letters();
  }
  /// Class of the inverse element.
  [[nodiscard]] CyclicWord inverse() const { return CyclicWord(word_.inverse()); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.word_ == b.word_;
  }
  /// Shortlex order on canonical representatives.
  friend std::strong_ordering operator<=>(const CyclicWord& a,
                                          const CyclicWord& b);

 private:
  Word word_;
};

CyclicWord cyclic_reduce(const Word& w);

/// Strips conjugating prefix/suffix pairs in place; returns the new length.
std::size_t cyclically_reduce_in_place(std::vector<Letter>& letters);

/// Index of the lexicographically least rotation (by Letter key).
std::size_t least_rotation(std::span<const Letter> letters);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace fga
