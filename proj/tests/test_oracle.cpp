#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "hk/error.hpp"
#include "hk/graph.hpp"
#include "hk/oracle.hpp"
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

}  // namespace

TEST_CASE("presentation relation counts per graph") {
  {
    presentation const p = presentation_of(cycle_digraph(3));
    CHECK(p.alphabet == 3);
    // 3 idempotents + 6 arrow identifications, no commutations.
    CHECK(p.relations.size() == 9);
  }
  {
    presentation const p = presentation_of(cycle_digraph(4));
    // 4 idempotents + 2 commutations ({1,3}, {2,4}) + 8 identifications.
    CHECK(p.relations.size() == 14);
    int commutations = 0;
    for (auto const& [lhs, rhs] : p.relations) {
      if (lhs.size() == 2 && rhs.size() == 2) {
        ++commutations;
      }
    }
    CHECK(commutations == 2);
  }
  {
    digraph g;
    g.vertices = {"a", "b"};
    presentation const p = presentation_of(g);
    // 2 idempotents + 1 commutation.
    CHECK(p.relations.size() == 3);
  }
}

TEST_CASE("congruent connects the defining relations") {
  presentation const p = presentation_of(cycle_digraph(3));
  CHECK(congruent(p, {1, 2, 1}, {1, 2}).verdict == oracle_verdict::equal);
  CHECK(congruent(p, {1, 2, 1}, {2, 1, 2}).verdict == oracle_verdict::equal);
  CHECK(congruent(p, {1, 2}, {2, 1}).verdict == oracle_verdict::not_found);
  CHECK(congruent(p, {}, {}).verdict == oracle_verdict::equal);
  CHECK(congruent(p, {}, {1}).verdict == oracle_verdict::not_found);
}

TEST_CASE("oracle agrees with normal forms exhaustively at rank 3") {
  presentation const p = presentation_of(cycle_digraph(3));
  int const max_len = 6;
  auto const words = all_words(3, max_len);

  // Group the whole universe by normal form once.
  std::map<word_type, std::vector<word_type>> by_form;
  for (auto const& w : words) {
    by_form[normalize(3, w)].push_back(w);
  }

  // Equal normal forms: the oracle must connect every pair in a class.
  for (auto const& [form, cls] : by_form) {
    for (auto const& w : cls) {
      auto const res = congruent(p, cls.front(), w);
      CHECK(res.verdict == oracle_verdict::equal);
    }
    // and within-class spot pairs beyond the representative
    if (cls.size() >= 3) {
      CHECK(congruent(p, cls[1], cls[2]).verdict == oracle_verdict::equal);
    }
  }

  // Distinct normal forms: the bounded closure must keep them apart. The
  // class partition bounds length by max_len + slack, which dominates the
  // per-pair bound, so separation here implies the oracle's not_found.
  class_enumeration const classes = enumerate_elements(p, max_len);
  REQUIRE(classes.complete);
  CHECK(classes.class_count() == by_form.size());
  std::map<word_type, std::size_t> class_of;
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    for (auto const& w : classes.classes[c]) {
      class_of[w] = c;
    }
  }
  for (auto const& [form, cls] : by_form) {
    std::set<std::size_t> ids;
    for (auto const& w : cls) {
      ids.insert(class_of.at(w));
    }
    CHECK(ids.size() == 1);
  }

  // Direct refutation calls on a random sample of unequal pairs.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  int refuted = 0;
  while (refuted < 60) {
    auto const& u = words[pick(rng)];
    auto const& v = words[pick(rng)];
    if (normalize(3, u) == normalize(3, v)) {
      continue;
    }
    auto const res = congruent(p, u, v);
    CHECK(res.verdict == oracle_verdict::not_found);
    CHECK_FALSE(res.budget_exhausted);
    ++refuted;
  }
}

TEST_CASE("oracle is symmetric in its arguments") {
  presentation const p = presentation_of(cycle_digraph(3));
  std::mt19937_64 rng(17);
  auto const words = all_words(3, 5);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int t = 0; t < 200; ++t) {
    auto const& u = words[pick(rng)];
    auto const& v = words[pick(rng)];
    CHECK(congruent(p, u, v).verdict == congruent(p, v, u).verdict);
  }
}

TEST_CASE("class representatives at rank 3 are the reduced words") {
  presentation const p = presentation_of(cycle_digraph(3));
  class_enumeration const classes = enumerate_elements(p, 5);
  REQUIRE(classes.complete);
  std::set<word_type> reps;
  for (auto const& cls : classes.classes) {
    reps.insert(cls.front());
  }
  std::set<word_type> reduced;
  for (auto const& w : all_words(3, 5)) {
    if (is_reduced(3, w)) {
      reduced.insert(w);
    }
  }
  CHECK(reps == reduced);
}

TEST_CASE("single vertex monoid has two elements") {
  digraph g;
  g.vertices = {"v"};
  class_enumeration const classes = enumerate_elements(presentation_of(g), 3);
  REQUIRE(classes.complete);
  CHECK(classes.class_count() == 2);
}

TEST_CASE("acyclic graphs stabilize at a finite monoid") {
  digraph g;
  g.vertices = {"a", "b"};
  g.arrows = {{0, 1}};
  presentation const p = presentation_of(g);
  auto const at3 = enumerate_elements(p, 3);
  auto const at4 = enumerate_elements(p, 4);
  REQUIRE(at3.complete);
  REQUIRE(at4.complete);
  CHECK(at3.class_count() == at4.class_count());
  CHECK(at4.class_count() == 5);  // 1, a, b, ab, ba
}

TEST_CASE("cycle class count equals the reduced word count") {
  presentation const p = presentation_of(cycle_digraph(3));
  auto const classes = enumerate_elements(p, 4);
  REQUIRE(classes.complete);
  std::size_t reduced = 0;
  for (auto const& w : all_words(3, 4)) {
    if (is_reduced(3, w)) {
      ++reduced;
    }
  }
  CHECK(classes.class_count() == reduced);
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  presentation const p = presentation_of(cycle_digraph(3));
  auto const classes = enumerate_elements(p, 6, 3, 100);
  CHECK_FALSE(classes.complete);
  auto const res = congruent(p, {1, 2, 1, 2, 1, 2}, {2, 1, 2, 1, 2, 1}, 3, 5);
  if (res.verdict == oracle_verdict::not_found) {
    CHECK(res.budget_exhausted);
  }
}

TEST_CASE("the rank-4 product identity verified against the oracle") {
  // The reduced form of (x_4 q_1) x_4 x_3 . (x_4 q_1) stays congruent to
  // the plain concatenation.
  presentation const p = presentation_of(cycle_digraph(4));
  word_type const lhs = {4, 1, 3, 2, 4, 3, 4, 1, 3, 2};
  word_type const rhs = multiply(4, {4, 1, 3, 2, 4, 3}, {4, 1, 3, 2});
  CHECK(congruent(p, lhs, rhs, 3, 4'000'000).verdict ==
        oracle_verdict::equal);
}
