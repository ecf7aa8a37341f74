#include <doctest.h>

#include <algorithm>
#include <set>

#include "sigrec/words.hpp"

using namespace sigrec;

TEST_CASE("word index round trip is the lexicographic rank") {
  for (int d = 1; d <= 3; ++d) {
    for (int len = 0; len <= 4; ++len) {
      const auto words = enumerate_words(d, len);
      CHECK(words.size() == level_size(d, len));
      for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(word_index(words[i], d) == i);
        CHECK(word_from_index(i, len, d) == words[i]);
        if (i > 0) CHECK(std::lexicographical_compare(words[i - 1].begin(), words[i - 1].end(),
                                                      words[i].begin(), words[i].end()));
      }
    }
  }
}

TEST_CASE("validate_word rejects letters outside the alphabet") {
  CHECK_THROWS_AS(validate_word({1, 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_word({0}, 2), std::invalid_argument);
  CHECK_NOTHROW(validate_word({2, 1, 2}, 2));
}

static std::size_t binom(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / i;
  return r;
}

TEST_CASE("shuffle produces all order-preserving interleavings") {
  const Word u{1, 2}, v{3, 4, 5};
  const auto sh = shuffle_words(u, v);
  CHECK(sh.size() == binom(5, 2));
  std::set<Word> distinct(sh.begin(), sh.end());
  CHECK(distinct.size() == sh.size());  // disjoint letters: all distinct
  for (const auto& w : sh) {
    // u and v appear as subsequences
    Word pu, pv;
    for (int l : w) (l <= 2 ? pu : pv).push_back(l);
    CHECK(pu == u);
    CHECK(pv == v);
  }
}

TEST_CASE("shuffle keeps multiplicities for repeated letters") {
  const auto sh = shuffle_words({1}, {1});
  REQUIRE(sh.size() == 2);
  CHECK(sh[0] == Word{1, 1});
  CHECK(sh[1] == Word{1, 1});
}
