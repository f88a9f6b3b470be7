#include "fga/enumerate.hpp"

#include <functional>

namespace fga {

std::vector<Word> reduced_words(std::size_t rank, std::size_t length) {
  std::vector<Word> out;
  if (length == 0) {
    out.emplace_back(rank);
    return out;
  }
  std::vector<Letter> cur;
  const std::uint32_t keys = static_cast<std::uint32_t>(2 * rank);
  std::function<void()> rec = [&]() {
    if (cur.size() == length) {
      out.push_back(Word::reduce(cur, rank));
      return;
    }
    for (std::uint32_t k = 0; k < keys; ++k) {
      const Letter l = Letter::from_key(k);
      if (!cur.empty() && cur.back().cancels(l)) continue;
      cur.push_back(l);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<Word> enumerate_classes(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out;
  const std::uint32_t keys = static_cast<std::uint32_t>(2 * rank);
  std::vector<Letter> cur;
  for (std::size_t len = 1; len <= max_len; ++len) {
    // A rotation-minimal word starts with its smallest letter.
    std::function<void()> rec = [&]() {
      if (cur.size() == len) {
        if (len >= 2 && cur.back().cancels(cur.front())) return;
        const Word w = Word::reduce(cur, rank);
        const CyclicWord c(w);
        if (c.word() != w) return;
        if (CyclicWord(w.inverse()) < c) return;
        out.push_back(w);
        return;
      }
      const std::uint32_t lo = cur.empty() ? 0 : cur.front().key();
      for (std::uint32_t k = lo; k < keys; ++k) {
        const Letter l = Letter::from_key(k);
        if (!cur.empty() && cur.back().cancels(l)) continue;
        cur.push_back(l);
        rec();
        cur.pop_back();
      }
    };
    rec();
  }
  return out;
}

std::size_t reduced_word_count(std::size_t rank, std::size_t max_len) {
  std::size_t total = 1;
  std::size_t shell = 2 * rank;
  for (std::size_t len = 1; len <= max_len; ++len) {
    total += shell;
    shell *= (2 * rank - 1);
  }
  return total;
}

}  // namespace fga
