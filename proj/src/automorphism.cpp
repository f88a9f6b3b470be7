#include "fga/automorphism.hpp"

#include <stdexcept>

namespace fga {

Automorphism::Automorphism(std::vector<Word> images) : images_(std::move(images)) {
  validate();
  cache();
}

Automorphism::Automorphism(std::vector<Word> images,
                           std::vector<Word> inverse_images)
    : images_(std::move(images)) {
  validate();
  cache();
  if (inverse_images.size() != images_.size()) {
    throw InvalidAutomorphism("inverse has the wrong number of images");
  }
  Automorphism inv(std::move(inverse_images));
  for (std::size_t i = 0; i < rank(); ++i) {
    const Word g = Word::generator(static_cast<std::uint32_t>(i), rank());
    if (apply(inv.images_[i]) != g || inv.apply(images_[i]) != g) {
      throw InvalidAutomorphism("attached inverse does not invert generator " +
                                std::to_string(i));
    }
  }
  inverse_ = inv.images_;
}

Automorphism Automorphism::identity(std::size_t rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    images.push_back(Word::generator(static_cast<std::uint32_t>(i), rank));
  }
  std::vector<Word> inv = images;
  return Automorphism(std::move(images), std::move(inv));
}

void Automorphism::validate() const {
  const std::size_t n = images_.size();
  if (n == 0) throw InvalidAutomorphism("rank must be at least 1");
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = images_[i];
    if (w.rank() != n) {
      throw RankError("image " + std::to_string(i) + " has rank " +
                      std::to_string(w.rank()) + ", expected " +
                      std::to_string(n));
    }
    if (w.empty()) {
      throw InvalidAutomorphism("image of generator " + std::to_string(i) +
                                " is trivial");
    }
    if (Word::reduce(w.letters(), n) != w) {
      throw InvalidAutomorphism("image of generator " + std::to_string(i) +
                                " is not reduced");
    }
  }
  const BigInt det = integer_determinant(abelianization());
  if (det != 1 && det != -1) {
    throw InvalidAutomorphism("abelianized determinant is " + det.str() +
                              ", not +-1");
  }
}

void Automorphism::cache() {
  inv_letter_images_.clear();
  inv_letter_images_.reserve(images_.size());
  for (const Word& w : images_) inv_letter_images_.push_back(w.inverse());
}

Automorphism Automorphism::inverse() const {
  if (!inverse_) throw std::logic_error("no inverse attached");
  return Automorphism(*inverse_, images_);
}

void Automorphism::apply_append(std::span<const Letter> letters,
                                std::vector<Letter>& out) const {
  for (Letter x : letters) {
    for (Letter y : image_of(x)) {
      if (!out.empty() && out.back().cancels(y)) {
        out.pop_back();
      } else {
        out.push_back(y);
      }
    }
  }
}

Word Automorphism::apply(const Word& w) const {
  if (w.rank() != rank()) {
    throw RankError("rank mismatch: automorphism of rank " +
                    std::to_string(rank()) + " applied to word of rank " +
                    std::to_string(w.rank()));
  }
  Word out(rank());
  for (Letter x : w.letters()) {
    for (Letter y : image_of(x)) out.push_reduced(y);
  }
  return out;
}

CyclicWord Automorphism::apply(const CyclicWord& c) const {
  return CyclicWord(apply(c.word()));
}

std::vector<std::vector<long long>> Automorphism::abelianization() const {
  const std::size_t n = rank();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (Letter l : images_[j].letters()) m[l.index()][j] += l.sign();
  }
  return m;
}

std::size_t Automorphism::max_image_length() const {
  std::size_t k = 0;
  for (const Word& w : images_) k = std::max(k, w.length());
  return k;
}

Automorphism Automorphism::with_fixed_generator() const {
  const std::size_t n = rank() + 1;
  std::vector<Word> images;
  for (const Word& w : images_) images.push_back(w.promoted(n));
  images.push_back(Word::generator(static_cast<std::uint32_t>(n - 1), n));
  if (!inverse_) return Automorphism(std::move(images));
  std::vector<Word> inv;
  for (const Word& w : *inverse_) inv.push_back(w.promoted(n));
  inv.push_back(images.back());
  return Automorphism(std::move(images), std::move(inv));
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.rank() != b.rank()) throw RankError("rank mismatch in compose");
  std::vector<Word> images;
  images.reserve(a.rank());
  for (const Word& w : b.images()) images.push_back(a.apply(w));
  if (!a.has_inverse() || !b.has_inverse()) return Automorphism(std::move(images));
  const Automorphism ai = a.inverse();
  const Automorphism bi = b.inverse();
  std::vector<Word> inv;
  inv.reserve(a.rank());
  for (const Word& w : ai.images()) inv.push_back(bi.apply(w));
  return Automorphism(std::move(images), std::move(inv));
}

Automorphism power(const Automorphism& a, unsigned exponent) {
  Automorphism result = Automorphism::identity(a.rank());
  Automorphism base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = compose(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = compose(base, base);
  }
  return result;
}

Automorphism inner(const Word& x) {
  const std::size_t n = x.rank();
  std::vector<Word> images;
  std::vector<Word> inv;
  const Word xi = x.inverse();
  for (std::size_t i = 0; i < n; ++i) {
    const Word g = Word::generator(static_cast<std::uint32_t>(i), n);
    images.push_back(x * g * xi);
    inv.push_back(xi * g * x);
  }
  return Automorphism(std::move(images), std::move(inv));
}

namespace {

Word shifted(const Word& w, std::size_t offset, std::size_t rank) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter l : w.letters()) {
    out.emplace_back(static_cast<std::uint32_t>(l.index() + offset),
                     l.is_inverse());
  }
  return Word::reduce(out, rank);
}

}  // namespace

Automorphism free_product(const Automorphism& a, const Automorphism& b) {
  const std::size_t n = a.rank() + b.rank();
  std::vector<Word> images;
  images.reserve(n);
  for (const Word& w : a.images()) images.push_back(shifted(w, 0, n));
  for (const Word& w : b.images()) images.push_back(shifted(w, a.rank(), n));
  if (!a.has_inverse() || !b.has_inverse()) return Automorphism(std::move(images));
  std::vector<Word> inv;
  for (const Word& w : *a.inverse_images()) inv.push_back(shifted(w, 0, n));
  for (const Word& w : *b.inverse_images()) inv.push_back(shifted(w, a.rank(), n));
  return Automorphism(std::move(images), std::move(inv));
}

BigInt integer_determinant(const std::vector<std::vector<long long>>& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = input[i][j];
  }
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace fga
