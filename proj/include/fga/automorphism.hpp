#pragma once

#include <optional>
#include <vector>

#include "fga/bigint.hpp"
#include "fga/word.hpp"

namespace fga {

/// Raised when images do not define a basis of F_n.
class InvalidAutomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An endomorphism of F_n given by the images of the generators, checked to
/// be a plausible automorphism: every image reduced and nonempty, and the
/// abelianized matrix unimodular. An inverse may be attached; it is verified
/// on attachment.
class Automorphism {
 public:
  Automorphism() = default;
  explicit Automorphism(std::vector<Word> images);
  Automorphism(std::vector<Word> images, std::vector<Word> inverse_images);

  static Automorphism identity(std::size_t rank);

  [[nodiscard]] std::size_t rank() const { return images_.size(); }
  [[nodiscard]] const Word& image(std::size_t i) const { return images_[i]; }
  [[nodiscard]] const std::vector<Word>& images() const { return images_; }
  [[nodiscard]] std::span<const Letter> image_of(Letter l) const {
    return l.is_inverse() ? inv_letter_images_[l.index()].letters()
                          : images_[l.index()].letters();
  }

  [[nodiscard]] Word apply(const Word& w) const;
  [[nodiscard]] CyclicWord apply(const CyclicWord& c) const;
  /// Appends the image of `letters` to `out` with free reduction against
  /// whatever `out` already holds.
  void apply_append(std::span<const Letter> letters,
                    std::vector<Letter>& out) const;

  [[nodiscard]] bool has_inverse() const { return inverse_.has_value(); }
  /// Attached inverse; throws std::logic_error when none is attached.
  [[nodiscard]] Automorphism inverse() const;
  [[nodiscard]] const std::optional<std::vector<Word>>& inverse_images() const {
    return inverse_;
  }

  /// Signed letter sums: entry (i, j) = exponent sum of generator i in the
  /// image of generator j.
  [[nodiscard]] std::vector<std::vector<long long>> abelianization() const;
  /// Longest generator image (Lipschitz constant for word length).
  [[nodiscard]] std::size_t max_image_length() const;

  /// Extends to F_{rank+1} with the new last generator fixed.
  [[nodiscard]] Automorphism with_fixed_generator() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.images_ == b.images_;
  }

 private:
  void validate() const;
  void cache();

  std::vector<Word> images_;
  std::vector<Word> inv_letter_images_;  // image of generator^-1
  std::optional<std::vector<Word>> inverse_;
};

/// compose(a, b) maps w to a(b(w)). An inverse is attached when both
/// factors carry one.
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism power(const Automorphism& a, unsigned exponent);
/// Inner automorphism g -> x g x^-1.
Automorphism inner(const Word& x);
/// Free product: generators of `b` are shifted past those of `a`.
Automorphism free_product(const Automorphism& a, const Automorphism& b);

/// Determinant of a square integer matrix (fraction-free elimination).
BigInt integer_determinant(const std::vector<std::vector<long long>>& m);

}  // namespace fga
