#ifndef HK_STRUCTURE_HPP_
#define HK_STRUCTURE_HPP_

#include <map>
#include <optional>
#include <vector>

#include "hk/polynomial.hpp"
#include "hk/word.hpp"

namespace hk {

// A reduced word with a factor x_n q_i decomposes uniquely as
// a (x_n q_i)^k b with a in A_i, b in B_i, k >= 1; this is that
// decomposition. Plain concatenation recomposes the original word.
struct matrix_element {
  int i = 0;
  word_type a;
  int k = 1;
  word_type b;

  friend bool operator==(matrix_element const&, matrix_element const&) =
      default;
};

// Left/right caps of index i. a_words is deg-lex sorted; b_words[r] is the
// reduced form of chi_i(a_words[r]), which as a set is exactly the right
// cap set and as an ordering makes the sandwich matrix literally symmetric.
struct boundary_sets {
  int n = 0;
  int i = 0;
  std::vector<word_type> a_words;
  std::vector<word_type> b_words;

  bool contains_a(word_type const& a) const;
  bool contains_b(word_type const& b) const;
};

// Operational construction: a left cap is any word free of the factor
// x_n q_i whose concatenation with x_n q_i on the right is reduced, and
// dually for right caps. Both predicates are prefix/suffix closed, so a
// breadth-first letter extension with exact pruning terminates.
boundary_sets compute_boundary_sets(int n, int i);

// Membership predicates usable without materializing the sets.
bool is_left_cap(int n, int i, word_type const& a);
bool is_right_cap(int n, int i, word_type const& b);

// The block-form construction of the caps (suffix closure of descending
// block chains for A, prefix closure of x_n-block chains for B). Serves as
// an independent cross-check of the operational sets; the B side includes
// prefixes of block streams whose trailing chain constraints are still
// unfulfilled, without which e.g. rank 3 underproduces.
struct parametric_sets {
  std::vector<word_type> a_words;  // deg-lex sorted
  std::vector<word_type> b_words;  // deg-lex sorted
};
parametric_sets parametric_boundary_sets(int n, int i);

// Decomposition of a reduced word: nullopt means exceptional (no factor
// x_n q_j for any j). Throws invalid_input if w is not reduced and
// internal_error if the decomposition contract fails, which would signal
// a bug rather than bad input.
std::optional<matrix_element> classify(int n, word_type const& w);

// Concatenation a (x_n q_i)^k b after checking the memberships; the result
// is verified reduced.
word_type compose_element(int n, int i, word_type const& a, int k,
                          word_type const& b);
word_type compose_element(int n, matrix_element const& e);

// Sandwich matrix of index i: rows are right caps, columns left caps, and
// the (b, a) entry is e >= 0 when (x_n q_i) b a (x_n q_i) reduces to the
// literal power (x_n q_i)^{e+2}, absent when the product falls into the
// ideal I_i. Row r is the chi_i image of column r, so the matrix is
// square and symmetric in this ordering.
struct sandwich_matrix {
  int n = 0;
  int i = 0;
  std::vector<word_type> cols;  // A_i, deg-lex sorted
  std::vector<word_type> rows;  // chi_i images, aligned with cols
  std::vector<std::vector<std::optional<int>>> entries;  // [row][col]

  std::size_t size() const { return cols.size(); }
  std::optional<std::size_t> row_index(word_type const& b) const;
  std::optional<std::size_t> col_index(word_type const& a) const;
  // Entry by cap words; throws invalid_input if either is not a cap.
  std::optional<int> entry(word_type const& b, word_type const& a) const;

 private:
  friend sandwich_matrix compute_sandwich(int n, int i);
  std::map<word_type, std::size_t, deglex_less> row_of_;
  std::map<word_type, std::size_t, deglex_less> col_of_;
};

sandwich_matrix compute_sandwich(int n, int i);

// A single cell, computed directly from the defining product.
std::optional<int> sandwich_entry(int n, int i, word_type const& b,
                                  word_type const& a);

// Exact determinant of the sandwich matrix as a polynomial in s, where
// s^e stands for the entry exponent e and absent entries are 0. The sign
// depends on the row/column order; the overload taking explicit label
// orders computes the determinant of that arrangement.
int_polynomial sandwich_det(sandwich_matrix const& p);
int_polynomial sandwich_det(int n, int i, std::vector<word_type> const& rows,
                            std::vector<word_type> const& cols);

// Product in the semigroup of matrix type: zero (nullopt) when the
// sandwich entry at (b_1, a_2) is absent, otherwise the exponents add
// through the entry.
std::optional<matrix_element> m_mult(sandwich_matrix const& p,
                                     matrix_element const& e1,
                                     matrix_element const& e2);

enum class ideal_verdict { yes, no, unknown };

// Membership of a reduced word in the ideal I_i. Decomposable words are
// decided exactly through the chain position of their index; exceptional
// words get a bounded two-sided search for a bracketing that lands in the
// cyclic semigroup (found refutes membership, exhaustion is inconclusive
// and never bluffed into a yes).
ideal_verdict ideal_member(int n, word_type const& w, int i,
                           int search_len = 4);

enum class cap_side { left, right };

struct completion_limits {
  int max_len = 0;           // 0 picks n*n
  std::uint64_t budget = 2'000'000;
};

// Smallest (deg-lex) word w such that w.x (left caps) or x.w (right caps)
// reduces to a power of x_n q_i. Existence is part of the structure
// theory; the search is a breadth-first walk over reduced forms with the
// given caps, and exhaustion returns nullopt for the caller to report.
std::optional<word_type> find_completion(int n, int i, cap_side side,
                                         word_type const& x,
                                         completion_limits limits = {});

}  // namespace hk

#endif  // HK_STRUCTURE_HPP_
