#include "fga/word.hpp"

#include <algorithm>

namespace fga {

Word Word::reduce(std::span<const Letter> raw, std::size_t rank) {
  Word w(rank);
  w.letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (l.index() >= rank) {
      throw RankError("letter index " + std::to_string(l.index()) +
                      " out of range for rank " + std::to_string(rank));
    }
    w.push_reduced(l);
  }
  return w;
}

Word Word::generator(std::uint32_t index, std::size_t rank, bool inverse) {
  if (index >= rank) {
    throw RankError("generator index out of range");
  }
  Word w(rank);
  w.letters_.push_back(Letter(index, inverse));
  return w;
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.resize(letters_.size());
  std::transform(letters_.rbegin(), letters_.rend(), w.letters_.begin(),
                 [](Letter l) { return l.inverse(); });
  return w;
}

Word Word::operator*(const Word& other) const {
  Word w = *this;
  w *= other;
  return w;
}

Word& Word::operator*=(const Word& other) {
  if (other.rank_ != rank_) {
    throw RankError("rank mismatch in word product");
  }
  letters_.reserve(letters_.size() + other.letters_.size());
  for (Letter l : other.letters_) push_reduced(l);
  return *this;
}

std::size_t Word::cyclic_length() const {
  std::size_t i = 0;
  std::size_t j = letters_.size();
  while (j - i >= 2 && letters_[i].cancels(letters_[j - 1])) {
    ++i;
    --j;
  }
  return j - i;
}

Word Word::promoted(std::size_t new_rank) const {
  if (new_rank < rank_) {
    throw RankError("cannot promote to a smaller rank");
  }
  Word w = *this;
  w.rank_ = new_rank;
  return w;
}

Word commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

std::size_t cyclically_reduce_in_place(std::vector<Letter>& letters) {
  std::size_t i = 0;
  std::size_t j = letters.size();
  while (j - i >= 2 && letters[i].cancels(letters[j - 1])) {
    ++i;
    --j;
  }
  if (i > 0) {
    std::move(letters.begin() + static_cast<std::ptrdiff_t>(i),
              letters.begin() + static_cast<std::ptrdiff_t>(j), letters.begin());
  }
  letters.resize(j - i);
  return letters.size();
}

// Booth's algorithm.
std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return s[i % n].key(); };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && at(j) != at(k + static_cast<std::size_t>(i) + 1)) {
      if (at(j) < at(k + static_cast<std::size_t>(i) + 1)) {
        k = j - static_cast<std::size_t>(i) - 1;
      }
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && at(j) != at(k + static_cast<std::size_t>(i) + 1)) {
      if (at(j) < at(k + static_cast<std::size_t>(i) + 1)) {
        k = j;
      }
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

CyclicWord::CyclicWord(const Word& w) : word_(w.rank()) {
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  cyclically_reduce_in_place(letters);
  const std::size_t r = least_rotation(letters);
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(r),
              letters.end());
  word_.letters_ = std::move(letters);
}

std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
  if (a.length() != b.length()) return a.length() <=> b.length();
  auto la = a.letters();
  auto lb = b.letters();
  return std::lexicographical_compare_three_way(la.begin(), la.end(),
                                                lb.begin(), lb.end());
}

CyclicWord cyclic_reduce(const Word& w) { return CyclicWord(w); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over letter codes.
  std::uint64_t h = 1469598103934665603ull ^ w.rank();
  for (Letter l : w.letters()) {
    h ^= static_cast<std::uint32_t>(l.code());
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace fga
