#ifndef HK_REWRITE_HPP_
#define HK_REWRITE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hk/word.hpp"

namespace hk {

// The confluent reduction system for the cyclic monoid on n generators.
// Left-hand sides, with all indices 1-based and i-1/i+1 wrapping around
// the cycle:
//
//   r1  x_i x_i                   -> x_i
//   r2  x_j x_i                   -> x_i x_j          (1 < j-i < n-1)
//   r3  x_n (x_1..x_i) x_j        -> x_j x_n (x_1..x_i)  (i+1 < j < n-1)
//   r4  x_i u x_i                 -> x_i u            (u != 1, |u|_i = |u|_{i-1} = 0)
//   r5  x_i v x_i                 -> v x_i            (v != 1, |v|_i = |v|_{i+1} = 0)
//
// Every application strictly decreases the deg-lex rank, so rewriting
// terminates; uniqueness of normal forms is a tested property, not an
// assumption (see normalize_with_strategy).
enum class rule_kind : int { r1 = 1, r2 = 2, r3 = 3, r4 = 4, r5 = 5 };

struct redex {
  rule_kind kind;
  std::size_t pos;  // start of the matched factor
  std::size_t len;  // length of the matched factor

  friend bool operator==(redex const&, redex const&) = default;
};

// If (kind, pos) matches w, returns the full redex with its span; otherwise
// nullopt. For r4/r5 the second occurrence of the boundary letter is the
// nearest one (a farther pair would put the letter itself inside the gap),
// for r3 the ascending run after x_n is maximal.
std::optional<redex> match_at(int n, word_type const& w, rule_kind kind,
                              std::size_t pos);

// Deterministic redex choice: smallest start position, then lowest rule
// number. Absent iff w is reduced.
std::optional<redex> find_redex(int n, word_type const& w);

// Every redex of w, in (position, rule number) order.
std::vector<redex> all_redexes(int n, word_type const& w);

// Applies a redex that must match w at its position; throws invalid_input
// if it does not. The result is strictly deg-lex smaller than w.
word_type apply_rule(int n, word_type const& w, redex const& r);

// One line per step, "r4(i=2)@5: <before> -> <after>".
std::string describe(redex const& r, word_type const& before);

struct trace_step {
  redex applied;
  word_type before;
  word_type after;
};

struct normalization_trace {
  std::vector<trace_step> steps;
};

// Reduced form of w under the deterministic strategy. When trace is
// non-null every step is recorded and checked to be strictly deg-lex
// decreasing (the untraced path relies on the structural argument above
// and stays allocation-light for exhaustive sweeps).
word_type normalize(int n, word_type w, normalization_trace* trace = nullptr);

// Reduced form of w applying a pseudo-randomly chosen matching redex at
// every step. Agreement with normalize for all seeds is the confluence
// property the test suites sweep.
word_type normalize_with_strategy(int n, word_type w, std::uint64_t seed);

bool is_reduced(int n, word_type const& w);

// Product in the monoid: the reduced form of the concatenation. Inputs
// need not be reduced.
word_type multiply(int n, word_type const& u, word_type const& v);

// If w is letter-for-letter (x_n q_i)^k for some k >= 1, returns k.
std::optional<int> power_of_q(int n, int i, word_type const& w);

}  // namespace hk

#endif  // HK_REWRITE_HPP_
