#include "hk/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hk/error.hpp"

namespace hk {

void check_rank(int n) {
  if (n < min_cycle_rank) {
    detail::throw_invalid("cycle rank must be at least 3, got " +
                          std::to_string(n));
  }
}

void check_word(word_type const& w, int max_letter) {
  for (letter_type x : w) {
    if (x < 1 || x > max_letter) {
      detail::throw_invalid("letter " + std::to_string(x) +
                            " outside alphabet 1.." +
                            std::to_string(max_letter));
    }
  }
}

letter_type cycle_pred(int n, letter_type i) {
  return i == 1 ? n : i - 1;
}

letter_type cycle_succ(int n, letter_type i) {
  return i == n ? 1 : i + 1;
}

std::strong_ordering deglex_compare(word_type const& u, word_type const& v) {
  if (u.size() != v.size()) {
    return u.size() <=> v.size();
  }
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(),
                                                v.end());
}

std::size_t count_letter(word_type const& w, letter_type q) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), q));
}

word_type q_word(int n, int i) {
  check_rank(n);
  if (i < 0 || i > n - 2) {
    detail::throw_invalid("q_word index " + std::to_string(i) +
                          " outside 0.." + std::to_string(n - 2));
  }
  word_type w;
  w.reserve(static_cast<std::size_t>(n - 1));
  for (letter_type x = 1; x <= i; ++x) {
    w.push_back(x);
  }
  for (letter_type x = n - 1; x >= i + 1; --x) {
    w.push_back(x);
  }
  return w;
}

word_type xnq_word(int n, int i) {
  word_type w = q_word(n, i);
  w.insert(w.begin(), n);
  return w;
}

std::vector<std::size_t> find_factor(word_type const& w,
                                     word_type const& pattern) {
  std::vector<std::size_t> positions;
  if (pattern.size() > w.size()) {
    return positions;
  }
  std::size_t const last = w.size() - pattern.size();
  for (std::size_t p = 0; p <= last; ++p) {
    if (std::equal(pattern.begin(), pattern.end(), w.begin() + p)) {
      positions.push_back(p);
    }
  }
  return positions;
}

bool has_factor(word_type const& w, word_type const& pattern) {
  return std::search(w.begin(), w.end(), pattern.begin(), pattern.end()) !=
         w.end();
}

word_type parse_word(std::string_view text, int max_letter) {
  word_type w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) {
      break;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      detail::throw_invalid("not an integer token: '" + std::string(token) + "'");
    }
    if (value < 1 || value > max_letter) {
      detail::throw_invalid("letter " + std::to_string(value) +
                            " outside alphabet 1.." + std::to_string(max_letter));
    }
    w.push_back(value);
    pos = end;
  }
  return w;
}

std::string format_word(word_type const& w) {
  std::ostringstream out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) {
      out << ' ';
    }
    out << w[k];
  }
  return out.str();
}

word_type concat(word_type const& u, word_type const& v) {
  word_type w;
  w.reserve(u.size() + v.size());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

}  // namespace hk
