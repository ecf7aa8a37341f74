#include "sigrec/words.hpp"

#include <sstream>
#include <stdexcept>

namespace sigrec {

std::size_t level_size(int d, int n) {
  std::size_t r = 1;
  for (int k = 0; k < n; ++k) r *= static_cast<std::size_t>(d);
  return r;
}

void validate_word(const Word& w, int d) {
  for (int letter : w) {
    if (letter < 1 || letter > d) {
      throw std::invalid_argument("word letter " + std::to_string(letter) +
                                  " outside alphabet {1.." + std::to_string(d) + "}");
    }
  }
}

std::size_t word_index(const Word& w, int d) {
  validate_word(w, d);
  std::size_t idx = 0;
  for (int letter : w) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(letter - 1);
  return idx;
}

Word word_from_index(std::size_t idx, int len, int d) {
  Word w(static_cast<std::size_t>(len));
  for (int k = len - 1; k >= 0; --k) {
    w[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(d)) + 1;
    idx /= static_cast<std::size_t>(d);
  }
  if (idx != 0) throw std::out_of_range("word index out of range for given length");
  return w;
}

std::vector<Word> enumerate_words(int d, int len) {
  std::vector<Word> out;
  out.reserve(level_size(d, len));
  for (std::size_t i = 0; i < level_size(d, len); ++i) out.push_back(word_from_index(i, len, d));
  return out;
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  os << ")";
  return os.str();
}

namespace {
void shuffle_rec(const Word& u, std::size_t iu, const Word& v, std::size_t iv,
                 Word& cur, std::vector<Word>& out) {
  if (iu == u.size() && iv == v.size()) {
    out.push_back(cur);
    return;
  }
  if (iu < u.size()) {
    cur.push_back(u[iu]);
    shuffle_rec(u, iu + 1, v, iv, cur, out);
    cur.pop_back();
  }
  if (iv < v.size()) {
    cur.push_back(v[iv]);
    shuffle_rec(u, iu, v, iv + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Word> shuffle_words(const Word& u, const Word& v) {
  std::vector<Word> out;
  Word cur;
  cur.reserve(u.size() + v.size());
  shuffle_rec(u, 0, v, 0, cur, out);
  return out;
}

}  // namespace sigrec
