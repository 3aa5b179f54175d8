#ifndef HK_WORD_HPP_
#define HK_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

// Generators are 1-based: a word over rank n uses letters 1..n. The empty
// word is the monoid identity and is a perfectly ordinary value.
using letter_type = int;
using word_type = std::vector<letter_type>;

// Minimum rank of the cyclic monoid; the cycle structure theory assumes
// cycles of length at least 3.
inline constexpr int min_cycle_rank = 3;

// Throws invalid_input unless n >= 3.
void check_rank(int n);

// Throws invalid_input unless every letter of w lies in 1..max_letter.
void check_word(word_type const& w, int max_letter);

// Index arithmetic on generators of the length-n cycle: pred wraps 1 -> n,
// succ wraps n -> 1.
letter_type cycle_pred(int n, letter_type i);
letter_type cycle_succ(int n, letter_type i);

// Degree-lexicographic comparison: shorter words first, ties broken
// lexicographically by letter index.
std::strong_ordering deglex_compare(word_type const& u, word_type const& v);

struct deglex_less {
  bool operator()(word_type const& u, word_type const& v) const {
    return deglex_compare(u, v) == std::strong_ordering::less;
  }
};

// Number of occurrences of the generator q in w (|w|_q).
std::size_t count_letter(word_type const& w, letter_type q);

// The word q_i: ascending run 1..i followed by the descending run
// (n-1)..(i+1). For i = 0 this is the descending run (n-1)..1, for
// i = n-2 the ascending run 1..(n-1). Requires 0 <= i <= n-2.
word_type q_word(int n, int i);

// x_n q_i, the distinguished length-n word whose powers generate the
// cyclic semigroup underlying the i-th matrix structure.
word_type xnq_word(int n, int i);

// All start positions of contiguous occurrences of pattern in w;
// overlapping occurrences are all reported. An empty pattern matches at
// every position 0..|w|.
std::vector<std::size_t> find_factor(word_type const& w,
                                     word_type const& pattern);

// True iff pattern occurs contiguously in w.
bool has_factor(word_type const& w, word_type const& pattern);

// Text format: whitespace-separated 1-based integers, empty string is the
// identity. Throws invalid_input on a non-integer token or a letter
// outside 1..max_letter.
word_type parse_word(std::string_view text, int max_letter);
std::string format_word(word_type const& w);

// Concatenation in the free monoid.
word_type concat(word_type const& u, word_type const& v);

struct word_hash {
  std::size_t operator()(word_type const& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (letter_type x : w) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace hk

#endif  // HK_WORD_HPP_
