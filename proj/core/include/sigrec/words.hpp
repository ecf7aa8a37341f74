#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sigrec {

/// A word is a finite sequence of letters from the alphabet {1,...,d}.
/// Words of a fixed length are ordered lexicographically; a word doubles as
/// a mixed-radix index into the corresponding level block of a truncated
/// tensor.
using Word = std::vector<int>;

/// d^n as a size_t.
std::size_t level_size(int d, int n);

/// Throws std::invalid_argument if any letter lies outside {1,...,d}.
void validate_word(const Word& w, int d);

/// Lexicographic rank of w among words of length |w| over {1,...,d}.
std::size_t word_index(const Word& w, int d);

/// Inverse of word_index for words of the given length.
Word word_from_index(std::size_t idx, int len, int d);

/// All d^len words of the given length, in lexicographic order.
std::vector<Word> enumerate_words(int d, int len);

std::string word_to_string(const Word& w);

/// All interleavings of u and v that preserve the internal order of each
/// argument. Returned as a multiset (duplicates kept); size C(|u|+|v|,|u|).
std::vector<Word> shuffle_words(const Word& u, const Word& v);

}  // namespace sigrec
