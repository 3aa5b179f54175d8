#ifndef HK_SRC_FIXTURES_HPP_
#define HK_SRC_FIXTURES_HPP_

// Known closed-form data for the rank 3 and 4 cyclic monoids: cap sets in
// their classic listing order, the sandwich matrices cell by cell in that
// order (-1 encodes an absent entry), and the exact determinants. The
// verification suite checks the computed structures against these tables.

#include <optional>
#include <vector>

#include "hk/polynomial.hpp"
#include "hk/word.hpp"

namespace hk::fixtures {

struct sandwich_fixture {
  int n;
  int i;
  std::vector<word_type> a_listed;           // column labels
  std::vector<word_type> b_listed;           // row labels of the table
  std::vector<std::vector<int>> entries;     // exponent, -1 = absent
  std::vector<long long> det_coeffs;         // constant term first
  // Row order under which det_coeffs holds; empty means b_listed. The two
  // published row orders of the rank-4 middle structure differ by one
  // transposition, and the stated determinant belongs to the cap-set
  // listing, not to the symmetric table layout.
  std::vector<word_type> det_rows;
};

inline std::vector<sandwich_fixture> const& sandwich_fixtures() {
  static std::vector<sandwich_fixture> const tables = {
      // n = 3, i = 1: A = {1, b, ab}, B = {1, c, ca}, det = -(s-1)^2
      {3,
       1,
       {{}, {2}, {1, 2}},
       {{}, {3}, {3, 1}},
       {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}},
       {-1, 2, -1}},
      // n = 3, i = 0: A = {1, a, ba}, B = {1, c, cb}, det = -s(s+1)
      {3,
       0,
       {{}, {1}, {2, 1}},
       {{}, {3}, {3, 2}},
       {{0, 0, -1}, {0, -1, 1}, {-1, 1, 1}},
       {0, -1, -1}},
      // n = 4, i = 2: A = {1, c, bc, abc}, B = {1, d, da, dab},
      // det = -(s-1)^3
      {4,
       2,
       {{}, {3}, {2, 3}, {1, 2, 3}},
       {{}, {4}, {4, 1}, {4, 1, 2}},
       {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}},
       {1, -3, 3, -1}},
      // n = 4, i = 1: A = {1, b, cb, acb, ab, bacb},
      // B = {1, d, dc, dac, da, dacd}, det = -s^3(s+1)^3
      {4,
       1,
       {{}, {2}, {3, 2}, {1, 3, 2}, {1, 2}, {2, 1, 3, 2}},
       {{}, {4}, {4, 3}, {4, 1, 3}, {4, 1}, {4, 1, 3, 4}},
       {{0, 0, -1, -1, 0, -1},
        {0, 0, -1, 1, -1, 1},
        {-1, -1, -1, 1, 1, 1},
        {-1, 1, 1, 1, 1, -1},
        {0, -1, 1, 1, -1, -1},
        {-1, 1, 1, -1, -1, 2}},
       {0, 0, 0, -1, -3, -3, -1},
       {{}, {4}, {4, 1}, {4, 1, 3}, {4, 3}, {4, 1, 3, 4}}},
      // n = 4, i = 0: A = {1, a, ba, cba}, B = {1, d, dc, dcb},
      // det = -s^2(s-1)
      {4,
       0,
       {{}, {1}, {2, 1}, {3, 2, 1}},
       {{}, {4}, {4, 3}, {4, 3, 2}},
       {{0, 0, -1, -1}, {0, -1, -1, 1}, {-1, -1, 1, 1}, {-1, 1, 1, -1}},
       {0, 0, 1, -1}},
  };
  return tables;
}

inline int_polynomial fixture_det(sandwich_fixture const& f) {
  std::vector<bigint> coeffs;
  coeffs.reserve(f.det_coeffs.size());
  for (long long c : f.det_coeffs) {
    coeffs.emplace_back(c);
  }
  return int_polynomial(std::move(coeffs));
}

}  // namespace hk::fixtures

#endif  // HK_SRC_FIXTURES_HPP_
