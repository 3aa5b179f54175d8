#ifndef HK_TESTS_FIXTURE_TABLES_HPP_
#define HK_TESTS_FIXTURE_TABLES_HPP_

// Closed-form tables for the rank 3 and 4 structures, transcribed
// independently of the copy the library's verification suite carries, in
// the classic listing order (letters a,b,c,d = 1,2,3,4). Entries encode
// s^e as e and the zero as -1.

#include <vector>

#include "hk/word.hpp"

namespace fixture_tables {

struct table {
  int n;
  int i;
  std::vector<hk::word_type> a_listed;
  std::vector<hk::word_type> b_listed;
  std::vector<std::vector<int>> entries;
  std::vector<long long> det_coeffs;  // constant first
  // Row order the determinant belongs to (empty: same as b_listed). The
  // rank-4 middle structure is published with two row orders one
  // transposition apart; its determinant is stated for the cap-set
  // listing while the table itself is printed in the symmetric order.
  std::vector<hk::word_type> det_rows;
};

inline std::vector<table> const& all() {
  static std::vector<table> const tables = {
      {3,
       1,
       {{}, {2}, {1, 2}},
       {{}, {3}, {3, 1}},
       {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}},
       {-1, 2, -1}},  // -(s-1)^2
      {3,
       0,
       {{}, {1}, {2, 1}},
       {{}, {3}, {3, 2}},
       {{0, 0, -1}, {0, -1, 1}, {-1, 1, 1}},
       {0, -1, -1}},  // -s(s+1)
      {4,
       2,
       {{}, {3}, {2, 3}, {1, 2, 3}},
       {{}, {4}, {4, 1}, {4, 1, 2}},
       {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}},
       {1, -3, 3, -1}},  // -(s-1)^3
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
       {0, 0, 0, -1, -3, -3, -1},  // -s^3(s+1)^3
       {{}, {4}, {4, 1}, {4, 1, 3}, {4, 3}, {4, 1, 3, 4}}},
      {4,
       0,
       {{}, {1}, {2, 1}, {3, 2, 1}},
       {{}, {4}, {4, 3}, {4, 3, 2}},
       {{0, 0, -1, -1}, {0, -1, -1, 1}, {-1, -1, 1, 1}, {-1, 1, 1, -1}},
       {0, 0, 1, -1}},  // -s^2(s-1)
  };
  return tables;
}

}  // namespace fixture_tables

#endif  // HK_TESTS_FIXTURE_TABLES_HPP_
