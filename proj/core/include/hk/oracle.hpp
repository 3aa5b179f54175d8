#ifndef HK_ORACLE_HPP_
#define HK_ORACLE_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "hk/graph.hpp"
#include "hk/word.hpp"

namespace hk {

// Defining relations of the monoid of a digraph, both directions
// applicable: one idempotent pair per vertex, a commutation per
// unconnected pair, two identifications per arrow and one per unoriented
// edge. Generator q is vertex q-1 in the graph's declared order.
struct presentation {
  int alphabet = 0;
  std::vector<std::pair<word_type, word_type>> relations;
};

presentation presentation_of(digraph const& g);

enum class oracle_verdict { equal, not_found };

struct oracle_result {
  oracle_verdict verdict = oracle_verdict::not_found;
  std::uint64_t visited = 0;
  bool budget_exhausted = false;
};

// Ground-truth word problem at desk scale: bidirectional breadth-first
// closure under single relation applications, visiting only words of
// length at most max(|u|, |v|) + slack and at most budget nodes. "equal"
// is always sound; "not_found" is inconclusive (the budget_exhausted flag
// tells whether the bounded space was even exhausted).
oracle_result congruent(presentation const& p, word_type const& u,
                        word_type const& v, int slack = 3,
                        std::uint64_t budget = 2'000'000);

// Equivalence classes of all words of length <= max_len, closed through
// intermediate words of length <= max_len + slack. Each class is deg-lex
// sorted, its representative is the front, and classes are ordered by
// representative. complete is false when the budget cut enumeration
// short, in which case the result must not be trusted.
struct class_enumeration {
  std::vector<std::vector<word_type>> classes;
  bool complete = true;
  std::uint64_t visited = 0;

  std::size_t class_count() const { return classes.size(); }
};

class_enumeration enumerate_elements(presentation const& p, int max_len,
                                     int slack = 3,
                                     std::uint64_t budget = 2'000'000);

// One-sided closure: every word reachable from w through single relation
// applications with all intermediates of length <= max_len, sorted
// deg-lex. Membership of v in the closure at bound max(|u|,|v|) + slack
// is exactly what congruent decides, so a precomputed closure answers
// many queries against one fixed word cheaply.
struct closure_result {
  std::vector<word_type> words;
  bool complete = true;
};

closure_result bounded_closure(presentation const& p, word_type const& w,
                               std::size_t max_len,
                               std::uint64_t budget = 2'000'000);

}  // namespace hk

#endif  // HK_ORACLE_HPP_
