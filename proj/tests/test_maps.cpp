#include <doctest.h>

#include <map>
#include <random>

#include "hk/error.hpp"
#include "hk/maps.hpp"
#include "hk/rewrite.hpp"

using namespace hk;

namespace {

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

// The closed form of f((x_n q_i)^k): with k = m(n-i-1) + r,
// 1 <= r <= n-i-1, the value at (m_1,...,m_n) is
// (m_{i+r+1}+m repeated i+1 times, m_{i+r+2}+m, ..., m_n+m,
//  m_{i+2}+m+1, ..., m_{i+r+1}+m+1);
// the inductive wrap step fixes the modulus at n-i-1 (r never reaches 0,
// which would make the support one too large).
affine_map closed_form_power(int n, int i, int k) {
  int const m = (k - 1) / (n - i - 1);
  int const r = (k - 1) % (n - i - 1) + 1;
  affine_map out;
  out.src.resize(static_cast<std::size_t>(n));
  out.shift.resize(static_cast<std::size_t>(n));
  int coord = 0;
  for (int t = 0; t < i + 1; ++t, ++coord) {
    out.src[static_cast<std::size_t>(coord)] = i + r + 1;
    out.shift[static_cast<std::size_t>(coord)] = m;
  }
  for (int src = i + r + 2; src <= n; ++src, ++coord) {
    out.src[static_cast<std::size_t>(coord)] = src;
    out.shift[static_cast<std::size_t>(coord)] = m;
  }
  for (int src = i + 2; src <= i + r + 1; ++src, ++coord) {
    out.src[static_cast<std::size_t>(coord)] = src;
    out.shift[static_cast<std::size_t>(coord)] = m + 1;
  }
  REQUIRE(coord == n);
  return out;
}

}  // namespace

TEST_CASE("generator images") {
  {
    auto const m = f_letter(4, 1);
    CHECK(m.src == std::vector<int>{2, 2, 3, 4});
    CHECK(m.shift == std::vector<long long>{0, 0, 0, 0});
  }
  {
    auto const m = f_letter(4, 4);
    CHECK(m.src == std::vector<int>{1, 2, 3, 1});
    CHECK(m.shift == std::vector<long long>{0, 0, 0, 1});
  }
  {
    auto const m = f_letter(3, 2);
    CHECK(m.src == std::vector<int>{1, 3, 3});
  }
}

TEST_CASE("word images and support") {
  {
    auto const m = f_word(4, {4, 1, 3, 2});
    CHECK(m.src == std::vector<int>{3, 3, 4, 3});
    CHECK(m.shift == std::vector<long long>{0, 0, 0, 1});
    CHECK(support(m) == std::vector<int>{3, 4});
  }
  CHECK(f_word(3, {}) == identity_map(3));
  CHECK(support(identity_map(3)) == std::vector<int>{1, 2, 3});
  CHECK(f_word(4, {1, 1}) == f_word(4, {1}));
  {
    // x_3 x_4 x_1 x_2 collapses to one source coordinate
    auto const m = f_word(4, {3, 4, 1, 2});
    CHECK(support(m) == std::vector<int>{3});
  }
}

TEST_CASE("images only depend on the monoid element") {
  for (int n : {3, 4}) {
    for (auto const& w : all_words(n, n == 3 ? 8 : 6)) {
      CHECK(f_word(n, w) == f_word(n, normalize(n, w)));
    }
  }
}

TEST_CASE("support of powers follows the closed form") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 0; i <= n - 2; ++i) {
      word_type const base = xnq_word(n, i);
      word_type power;
      for (int k = 1; k <= 12; ++k) {
        power.insert(power.end(), base.begin(), base.end());
        auto const m = f_word(n, power);
        CHECK(static_cast<int>(support(m).size()) == n - i - 1);
        if (n == 5) {
          CHECK(m == closed_form_power(n, i, k));
        }
      }
    }
  }
}

TEST_CASE("q membership") {
  CHECK_FALSE(q_member(4, {4, 1, 3, 2}, 1));
  CHECK(q_member(4, {3, 4, 1, 2}, 1));
  CHECK_FALSE(q_member(3, {}, 0));
  CHECK_THROWS_AS(q_member(3, {}, 5), invalid_input);
}

TEST_CASE("q membership is closed under products") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> len(0, 7);
  for (int n : {3, 4}) {
    std::uniform_int_distribution<int> letter(1, n);
    auto random_word = [&]() {
      word_type w(static_cast<std::size_t>(len(rng)));
      for (auto& x : w) {
        x = letter(rng);
      }
      return w;
    };
    for (int t = 0; t < 500; ++t) {
      word_type const u = random_word();
      word_type const w = random_word();
      for (int i = 0; i <= n - 2; ++i) {
        if (q_member(n, w, i)) {
          CHECK(q_member(n, multiply(n, u, w), i));
          CHECK(q_member(n, multiply(n, w, u), i));
        }
      }
    }
  }
}

TEST_CASE("tau, sigma and chi on fixed words") {
  CHECK(tau(3, {1, 2}) == word_type{1, 2});
  CHECK(tau(4, {4, 1, 3, 2}) == word_type{2, 1, 3, 4});
  CHECK(sigma(3, {1, 2}, 1) == word_type{2, 3});
  CHECK(sigma(3, {1, 2}, 3) == word_type{1, 2});
  CHECK(chi(3, 1, {1, 2}) == word_type{3, 1});
  // chi fixes the powers of its own generator
  for (int k = 1; k <= 3; ++k) {
    word_type power;
    word_type const base = xnq_word(4, 1);
    for (int t = 0; t < k; ++t) {
      power.insert(power.end(), base.begin(), base.end());
    }
    CHECK(normalize(4, chi(4, 1, power)) == power);
  }
}

TEST_CASE("morphisms respect equality and square to the identity") {
  for (int n : {3, 4}) {
    int const max_len = n == 3 ? 6 : 5;
    std::map<word_type, word_type> tau_of, sigma_of;
    for (auto const& w : all_words(n, max_len)) {
      word_type const nf = normalize(n, w);
      CHECK(normalize(n, tau(n, w)) == normalize(n, tau(n, nf)));
      CHECK(normalize(n, sigma(n, w, 1)) == normalize(n, sigma(n, nf, 1)));
      CHECK(normalize(n, tau(n, tau(n, w))) == nf);
      for (int i = 0; i <= n - 2; ++i) {
        CHECK(normalize(n, chi(n, i, chi(n, i, w))) == nf);
      }
      if (w == nf) {
        auto [it_t, fresh_t] = tau_of.emplace(normalize(n, tau(n, w)), w);
        CHECK((fresh_t || it_t->second == w));
        auto [it_s, fresh_s] = sigma_of.emplace(normalize(n, sigma(n, w, 1)), w);
        CHECK((fresh_s || it_s->second == w));
      }
    }
  }
}

TEST_CASE("embedding maps the smaller cycle into the larger") {
  CHECK(embed(4, {3}) == word_type{4, 1});
  CHECK(embed(4, {1, 2}) == word_type{2, 3});
  CHECK(embed(4, {}) == word_type{});
  CHECK_THROWS_AS(embed(4, {4}), invalid_input);
}

TEST_CASE("embedding preserves equality and reducedness exhaustively") {
  std::map<word_type, word_type> image;
  for (auto const& w : all_words(3, 7)) {
    word_type const nf = normalize(3, w);
    CHECK(normalize(4, embed(4, w)) == normalize(4, embed(4, nf)));
    if (w == nf) {
      CHECK(is_reduced(4, embed(4, w)));
      auto [it, fresh] = image.emplace(normalize(4, embed(4, w)), w);
      CHECK((fresh || it->second == w));
    }
  }
}
