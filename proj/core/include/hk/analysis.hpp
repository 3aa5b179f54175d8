#ifndef HK_ANALYSIS_HPP_
#define HK_ANALYSIS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hk/word.hpp"

namespace hk {

// Exact counts of reduced words per length, from a breadth-first
// enumeration with prefix pruning (valid because reducedness is closed
// under taking prefixes).
struct growth_report {
  int n = 0;
  std::vector<std::uint64_t> counts;      // per exact length 0..L
  std::vector<std::uint64_t> cumulative;  // running totals
  // true when the last two per-length counts repeat the previous two
  // (the tail is eventually periodic with period at most 2)
  bool stabilized = false;
};

growth_report enumerate_reduced(int n, int max_len);

// The reduced words themselves, deg-lex order, lengths 0..max_len.
std::vector<word_type> reduced_words(int n, int max_len);

// True iff appending g keeps the reduced word w reduced; any new redex
// must end at the appended letter, so the check is linear.
bool extends_reduced(int n, word_type const& w, letter_type g);

// Upper cap (inclusive, in letters) on the length of words with no
// x_n q_i factor, from the finiteness bound ceil((n/2+1)n + n(n-1)).
int exceptional_length_bound(int n);

// Every reduced word with no factor x_n q_i for any i, deg-lex order. The
// enumeration terminates on its own; running past the length bound above
// would falsify the finiteness argument and throws internal_error.
std::vector<word_type> exceptional_set(int n);

enum class check_status { pass, fail, skip };

struct suite_check {
  std::string name;
  check_status status = check_status::skip;
  std::string detail;
  std::vector<word_type> counterexample;  // deg-lex least found, when failing
};

struct suite_report {
  int n = 0;
  std::vector<suite_check> checks;

  bool all_passed() const;
  suite_check const* find(std::string const& name) const;
};

// Word-length caps for the individual checks; defaults(n) picks sizes that
// keep the whole suite at desk scale for n <= 6.
struct suite_limits {
  int confluence_len = 0;
  int strategies = 5;
  int oracle_len = 0;          // 0 skips the oracle cross-check
  int roundtrip_len = 0;
  int dichotomy_max_k = 3;
  int periodic_len = 0;
  int ideal_len = 0;
  int morphism_len = 0;
  int embedding_len = 0;       // only used for n == 4 (source rank 3)
  int support_max_k = 12;
  int rees_samples = 2000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;

  static suite_limits defaults(int n);
};

// Runs every structural check that applies to rank n and reports one named
// line per check; paper-scale fixture comparisons run for n = 3, 4 and are
// skipped (not silently passed) elsewhere. Failures carry the deg-lex
// least counterexample found.
suite_report run_suite(int n, suite_limits const& limits);
suite_report run_suite(int n);

// Names of all checks the suite can run, for CLI filtering.
std::vector<std::string> suite_check_names();

// Runs a single named check.
suite_report run_suite_check(int n, suite_limits const& limits,
                             std::string const& name);

}  // namespace hk

#endif  // HK_ANALYSIS_HPP_
