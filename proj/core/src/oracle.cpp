#include "hk/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hk/error.hpp"

namespace hk {

presentation presentation_of(digraph const& g) {
  check_graph(g);
  presentation p;
  int const n = g.size();
  p.alphabet = n;

  auto word1 = [](letter_type a) { return word_type{a}; };

  std::set<std::pair<int, int>> connected;
  for (auto const& [u, v] : g.arrows) {
    connected.insert(std::minmax(u, v));
  }
  for (auto const& [u, v] : g.edges) {
    connected.insert(std::minmax(u, v));
  }

  for (int v = 0; v < n; ++v) {
    letter_type const x = v + 1;
    p.relations.emplace_back(word_type{x, x}, word1(x));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!connected.count({u, v})) {
        letter_type const a = u + 1;
        letter_type const b = v + 1;
        p.relations.emplace_back(word_type{a, b}, word_type{b, a});
      }
    }
  }
  for (auto const& [u, v] : g.arrows) {
    letter_type const a = u + 1;
    letter_type const b = v + 1;
    p.relations.emplace_back(word_type{a, b, a}, word_type{a, b});
    p.relations.emplace_back(word_type{b, a, b}, word_type{a, b});
  }
  for (auto const& [u, v] : g.edges) {
    letter_type const a = u + 1;
    letter_type const b = v + 1;
    p.relations.emplace_back(word_type{a, b, a}, word_type{b, a, b});
  }
  return p;
}

namespace {

// All words one relation application away from w, both directions, with
// the length bound applied.
template <typename Emit>
void neighbors(presentation const& p, word_type const& w,
               std::size_t max_len, Emit emit) {
  auto rewrite_all = [&](word_type const& from, word_type const& to) {
    if (w.size() - from.size() + to.size() > max_len ||
        from.size() > w.size()) {
      return;
    }
    std::size_t const last = w.size() - from.size();
    for (std::size_t pos = 0; pos <= last; ++pos) {
      if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
        continue;
      }
      word_type next;
      next.reserve(w.size() - from.size() + to.size());
      next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), to.begin(), to.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + from.size()), w.end());
      emit(std::move(next));
    }
  };
  for (auto const& [lhs, rhs] : p.relations) {
    rewrite_all(lhs, rhs);
    rewrite_all(rhs, lhs);
  }
}

}  // namespace

oracle_result congruent(presentation const& p, word_type const& u,
                        word_type const& v, int slack,
                        std::uint64_t budget) {
  check_word(u, p.alphabet);
  check_word(v, p.alphabet);
  if (slack < 0) {
    detail::throw_invalid("slack must be nonnegative");
  }
  oracle_result result;
  if (u == v) {
    result.verdict = oracle_verdict::equal;
    return result;
  }
  std::size_t const max_len = std::max(u.size(), v.size()) +
                              static_cast<std::size_t>(slack);

  // Two-sided closure; each step expands the smaller frontier, and the
  // sides meet iff the words are congruent within the bound.
  using visited_map = std::unordered_map<word_type, int, word_hash>;
  visited_map seen;  // 1 = side of u, 2 = side of v
  std::deque<word_type> frontier_u{u}, frontier_v{v};
  seen.emplace(u, 1);
  seen.emplace(v, 2);
  result.visited = 2;

  while (!frontier_u.empty() || !frontier_v.empty()) {
    bool expand_u;
    if (frontier_u.empty()) {
      expand_u = false;
    } else if (frontier_v.empty()) {
      expand_u = true;
    } else {
      expand_u = frontier_u.size() <= frontier_v.size();
    }
    auto& frontier = expand_u ? frontier_u : frontier_v;
    int const side = expand_u ? 1 : 2;
    std::size_t level = frontier.size();
    bool met = false;
    while (level-- > 0 && !met) {
      word_type w = std::move(frontier.front());
      frontier.pop_front();
      neighbors(p, w, max_len, [&](word_type next) {
        if (met) {
          return;
        }
        auto [it, inserted] = seen.emplace(std::move(next), side);
        if (!inserted) {
          if (it->second != side) {
            met = true;
          }
          return;
        }
        ++result.visited;
        if (result.visited > budget) {
          return;
        }
        frontier.push_back(it->first);
      });
      if (result.visited > budget) {
        result.budget_exhausted = true;
        return result;
      }
    }
    if (met) {
      result.verdict = oracle_verdict::equal;
      return result;
    }
  }
  return result;
}

closure_result bounded_closure(presentation const& p, word_type const& w,
                               std::size_t max_len, std::uint64_t budget) {
  check_word(w, p.alphabet);
  closure_result out;
  if (w.size() > max_len) {
    detail::throw_invalid("closure seed longer than the length bound");
  }
  std::unordered_set<word_type, word_hash> seen{w};
  std::deque<word_type> frontier{w};
  std::uint64_t visited = 1;
  while (!frontier.empty()) {
    word_type cur = std::move(frontier.front());
    frontier.pop_front();
    neighbors(p, cur, max_len, [&](word_type next) {
      if (visited > budget) {
        return;
      }
      if (seen.insert(next).second) {
        ++visited;
        frontier.push_back(std::move(next));
      }
    });
    if (visited > budget) {
      out.complete = false;
      break;
    }
  }
  out.words.assign(seen.begin(), seen.end());
  std::sort(out.words.begin(), out.words.end(), deglex_less{});
  return out;
}

class_enumeration enumerate_elements(presentation const& p, int max_len,
                                     int slack, std::uint64_t budget) {
  if (max_len < 0 || slack < 0) {
    detail::throw_invalid("lengths must be nonnegative");
  }
  int const m = p.alphabet;
  int const full_len = max_len + slack;

  // Mixed-radix ranking of all words of length <= full_len over 1..m.
  std::vector<std::uint64_t> level_offset(static_cast<std::size_t>(full_len) + 2, 0);
  std::uint64_t power = 1;
  for (int len = 0; len <= full_len; ++len) {
    level_offset[static_cast<std::size_t>(len) + 1] =
        level_offset[static_cast<std::size_t>(len)] + power;
    if (power > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(m)) {
      detail::throw_invalid("word universe too large to enumerate");
    }
    power *= static_cast<std::uint64_t>(m);
  }
  std::uint64_t const total = level_offset[static_cast<std::size_t>(full_len) + 1];

  class_enumeration out;
  out.visited = total;
  if (total > budget) {
    out.complete = false;
    return out;
  }

  auto rank_of = [&](word_type const& w) {
    std::uint64_t r = 0;
    for (letter_type x : w) {
      r = r * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(x - 1);
    }
    return level_offset[w.size()] + r;
  };

  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find =
      [&](std::uint32_t x) -> std::uint32_t {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      // keep the smaller rank as root: ranks grow with deg-lex, so the
      // root is always the deg-lex least member seen so far
      if (a > b) {
        std::swap(a, b);
      }
      parent[b] = a;
    }
  };

  // Enumerate words in deg-lex order and union across one relation step.
  word_type w;
  for (int len = 0; len <= full_len; ++len) {
    w.assign(static_cast<std::size_t>(len), 1);
    while (true) {
      std::uint64_t const r = rank_of(w);
      neighbors(p, w, static_cast<std::size_t>(full_len), [&](word_type next) {
        unite(static_cast<std::uint32_t>(r),
              static_cast<std::uint32_t>(rank_of(next)));
      });
      // odometer step
      int pos = len - 1;
      while (pos >= 0 && w[static_cast<std::size_t>(pos)] == m) {
        w[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++w[static_cast<std::size_t>(pos)];
    }
  }

  // Collect classes restricted to words of length <= max_len.
  std::unordered_map<std::uint32_t, std::size_t> class_index;
  std::uint64_t const short_total = level_offset[static_cast<std::size_t>(max_len) + 1];
  std::vector<std::vector<word_type>> classes;
  word_type cur;
  for (int len = 0; len <= max_len; ++len) {
    cur.assign(static_cast<std::size_t>(len), 1);
    while (true) {
      std::uint64_t const r = rank_of(cur);
      if (r >= short_total) {
        detail::throw_internal("rank out of range during class collection");
      }
      std::uint32_t const root = find(static_cast<std::uint32_t>(r));
      auto [it, inserted] = class_index.emplace(root, classes.size());
      if (inserted) {
        classes.emplace_back();
      }
      classes[it->second].push_back(cur);
      int pos = len - 1;
      while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == m) {
        cur[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++cur[static_cast<std::size_t>(pos)];
    }
  }
  // Words were visited in deg-lex order, so every class is already sorted
  // and the classes are ordered by first member.
  out.classes = std::move(classes);
  return out;
}

}  // namespace hk
