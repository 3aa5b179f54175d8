#include <doctest.h>

#include <algorithm>
#include <random>

#include "hk/error.hpp"
#include "hk/word.hpp"

using namespace hk;

namespace {

// Every word of length <= max_len over 1..n, deg-lex order.
std::vector<word_type> all_words(int n, int max_len) {
  std::vector<word_type> out{{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t const level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (letter_type g = 1; g <= n; ++g) {
        word_type w = out[k];
        w.push_back(g);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace

TEST_CASE("deglex compares by length then letters") {
  CHECK(deglex_compare({1}, {1}) == std::strong_ordering::equal);
  CHECK(deglex_compare({1}, {2}) == std::strong_ordering::less);
  CHECK(deglex_compare({3, 2}, {1, 1, 1}) == std::strong_ordering::less);
  CHECK(deglex_compare({2, 1}, {1, 2}) == std::strong_ordering::greater);
  CHECK(deglex_compare({}, {1}) == std::strong_ordering::less);
}

TEST_CASE("deglex is a total order on small word universes") {
  for (int n : {3, 5}) {
    int const max_len = n == 3 ? 6 : 4;
    auto const words = all_words(n, max_len);
    for (auto const& u : words) {
      for (auto const& v : words) {
        auto const uv = deglex_compare(u, v);
        auto const vu = deglex_compare(v, u);
        if (u == v) {
          CHECK(uv == std::strong_ordering::equal);
        } else {
          CHECK(uv != std::strong_ordering::equal);
          CHECK((uv == std::strong_ordering::less) ==
                (vu == std::strong_ordering::greater));
        }
      }
    }
  }
}

TEST_CASE("deglex transitivity and multiplicative monotonicity on samples") {
  std::mt19937_64 rng(42);
  auto const words = all_words(5, 6);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  auto less = [](word_type const& a, word_type const& b) {
    return deglex_compare(a, b) == std::strong_ordering::less;
  };
  for (int t = 0; t < 100000; ++t) {
    auto const& a = words[pick(rng)];
    auto const& b = words[pick(rng)];
    auto const& c = words[pick(rng)];
    if (less(a, b) && less(b, c)) {
      CHECK(less(a, c));
    }
    if (less(a, b)) {
      CHECK(less(concat(c, a), concat(c, b)));
      CHECK(less(concat(a, c), concat(b, c)));
    }
  }
}

TEST_CASE("count_letter") {
  CHECK(count_letter({3, 1, 2, 1}, 1) == 2);
  CHECK(count_letter({}, 5) == 0);
  CHECK(count_letter({4, 1, 3, 2}, 4) == 1);
}

TEST_CASE("q_word shapes") {
  CHECK(q_word(3, 0) == word_type{2, 1});
  CHECK(q_word(4, 1) == word_type{1, 3, 2});
  CHECK(q_word(5, 3) == word_type{1, 2, 3, 4});
  CHECK(xnq_word(4, 1) == word_type{4, 1, 3, 2});
  CHECK(xnq_word(3, 0) == word_type{3, 2, 1});
  CHECK_THROWS_AS(q_word(4, 3), invalid_input);
  CHECK_THROWS_AS(q_word(4, -1), invalid_input);
}

TEST_CASE("find_factor reports all overlapping occurrences") {
  CHECK(find_factor({3, 1, 2, 3, 1, 2}, {3, 1, 2}) ==
        std::vector<std::size_t>{0, 3});
  CHECK(find_factor({1, 2}, {3}).empty());
  CHECK(find_factor({1, 1, 1}, {1, 1}) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("word text round trip") {
  CHECK(parse_word("3 2 1", 3) == word_type{3, 2, 1});
  CHECK(parse_word("", 3) == word_type{});
  CHECK(parse_word("  4  1\t3 2 ", 4) == word_type{4, 1, 3, 2});
  CHECK_THROWS_AS(parse_word("0 1", 3), invalid_input);
  CHECK_THROWS_AS(parse_word("4", 3), invalid_input);
  CHECK_THROWS_AS(parse_word("1 x", 3), invalid_input);
  for (auto const& w : all_words(4, 5)) {
    CHECK(parse_word(format_word(w), 4) == w);
  }
}

TEST_CASE("cycle index wrap helpers") {
  CHECK(cycle_pred(4, 1) == 4);
  CHECK(cycle_pred(4, 3) == 2);
  CHECK(cycle_succ(4, 4) == 1);
  CHECK(cycle_succ(4, 2) == 3);
}
