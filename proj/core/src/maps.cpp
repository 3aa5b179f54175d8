#include "hk/maps.hpp"

#include <algorithm>

#include "hk/error.hpp"

namespace hk {

affine_map identity_map(int n) {
  check_rank(n);
  affine_map map;
  map.src.resize(static_cast<std::size_t>(n));
  map.shift.assign(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    map.src[static_cast<std::size_t>(j)] = j + 1;
  }
  return map;
}

affine_map f_letter(int n, letter_type g) {
  check_rank(n);
  if (g < 1 || g > n) {
    detail::throw_invalid("generator " + std::to_string(g) +
                          " outside alphabet 1.." + std::to_string(n));
  }
  affine_map map = identity_map(n);
  if (g != n) {
    map.src[static_cast<std::size_t>(g - 1)] = g + 1;
  } else {
    map.src[static_cast<std::size_t>(n - 1)] = 1;
    map.shift[static_cast<std::size_t>(n - 1)] = 1;
  }
  return map;
}

affine_map compose(affine_map const& left, affine_map const& right) {
  std::size_t const n = left.src.size();
  if (right.src.size() != n) {
    detail::throw_invalid("composing affine maps of different ranks");
  }
  affine_map out;
  out.src.resize(n);
  out.shift.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t const mid = static_cast<std::size_t>(left.src[j] - 1);
    out.src[j] = right.src[mid];
    out.shift[j] = left.shift[j] + right.shift[mid];
  }
  return out;
}

affine_map f_word(int n, word_type const& w) {
  check_rank(n);
  check_word(w, n);
  affine_map acc = identity_map(n);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    acc = compose(f_letter(n, *it), acc);
  }
  return acc;
}

std::vector<int> support(affine_map const& map) {
  std::vector<int> out = map.src;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool q_member(int n, word_type const& w, int i) {
  check_rank(n);
  if (i < 0 || i > n - 2) {
    detail::throw_invalid("ideal index " + std::to_string(i) +
                          " outside 0.." + std::to_string(n - 2));
  }
  return support(f_word(n, w)).size() <=
         static_cast<std::size_t>(n - i - 2);
}

word_type tau(int n, word_type const& w) {
  check_rank(n);
  check_word(w, n);
  word_type out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(*it == n ? n : n - *it);
  }
  return out;
}

word_type sigma(int n, word_type const& w, int m) {
  check_rank(n);
  check_word(w, n);
  int shift = m % n;
  if (shift < 0) {
    shift += n;
  }
  word_type out;
  out.reserve(w.size());
  for (letter_type g : w) {
    out.push_back((g - 1 + shift) % n + 1);
  }
  return out;
}

word_type chi(int n, int i, word_type const& w) {
  if (i < 0 || i > n - 2) {
    detail::throw_invalid("involution index " + std::to_string(i) +
                          " outside 0.." + std::to_string(n - 2));
  }
  return sigma(n, tau(n, w), i + 1);
}

word_type embed(int n, word_type const& w) {
  check_rank(n);
  if (n - 1 < min_cycle_rank) {
    detail::throw_invalid("embedding source rank must be at least 3");
  }
  check_word(w, n - 1);
  word_type out;
  out.reserve(w.size() + count_letter(w, n - 1));
  for (letter_type g : w) {
    if (g == n - 1) {
      out.push_back(n);
      out.push_back(1);
    } else {
      out.push_back(g + 1);
    }
  }
  return out;
}

}  // namespace hk
