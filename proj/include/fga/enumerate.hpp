#pragma once

#include <cstddef>
#include <vector>

#include "fga/word.hpp"

namespace fga {

/// Every reduced word of exactly `length` letters, lexicographic by key.
std::vector<Word> reduced_words(std::size_t rank, std::size_t length);

/// Conjugacy classes of length 1..max_len, one canonical representative
/// per class, ordered by (length, letters); a class and its inverse are
/// kept once (the smaller representative).
std::vector<Word> enumerate_classes(std::size_t rank, std::size_t max_len);

/// Number of reduced words of length <= max_len (for capacity checks).
std::size_t reduced_word_count(std::size_t rank, std::size_t max_len);

}  // namespace fga
