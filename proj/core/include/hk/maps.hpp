#ifndef HK_MAPS_HPP_
#define HK_MAPS_HPP_

#include <vector>

#include "hk/word.hpp"

namespace hk {

// Image of a word under the homomorphism into self-maps of Z^n: coordinate
// j of the output is m_{src[j-1]} + shift[j-1]. Every generator only
// copies a coordinate or copies-and-increments, and that shape is closed
// under composition, so the pair of arrays represents the reachable
// submonoid exactly.
struct affine_map {
  std::vector<int> src;              // values in 1..n
  std::vector<long long> shift;      // nonnegative

  friend bool operator==(affine_map const&, affine_map const&) = default;
};

affine_map identity_map(int n);

// Generator images: for g != n coordinate g reads m_{g+1}; for g = n
// coordinate n becomes m_1 + 1.
affine_map f_letter(int n, letter_type g);

// Composition law for f(uv)(m) = f(u)(f(v)(m)).
affine_map compose(affine_map const& left, affine_map const& right);

affine_map f_word(int n, word_type const& w);

// Sorted set of coordinates the map actually depends on.
std::vector<int> support(affine_map const& map);

// |supp f(w)| <= n - i - 2, the computable ideal-membership certificate.
bool q_member(int n, word_type const& w, int i);

// The order-2 anti-automorphism: reverse the word and send each letter
// g to n-g (fixing n). Preserving the oriented relations forces the
// reversal; see the morphism-respect checks in the test suite.
word_type tau(int n, word_type const& w);

// The cycle shift g -> g + m (mod n), no reversal.
word_type sigma(int n, word_type const& w, int m);

// chi_i = sigma^{i+1} tau, the involution exchanging the two boundary
// sets of index i. Returns a raw word; callers normalize.
word_type chi(int n, int i, word_type const& w);

// Letter-by-letter embedding of the rank n-1 monoid into rank n:
// g -> g+1 for g <= n-2 and the last generator goes to x_n x_1.
word_type embed(int n, word_type const& w);

}  // namespace hk

#endif  // HK_MAPS_HPP_
