#include "hk/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "hk/error.hpp"
#include "hk/maps.hpp"
#include "hk/rewrite.hpp"

namespace hk {

namespace {

void check_index(int n, int i) {
  check_rank(n);
  if (i < 0 || i > n - 2) {
    detail::throw_invalid("boundary index " + std::to_string(i) +
                          " outside 0.." + std::to_string(n - 2));
  }
}

// Growth stop for the boundary-set search; the sets are finite with
// members of length well under n^2, so hitting this is a bug.
int cap_length_limit(int n) { return 4 * n * n; }

}  // namespace

bool is_left_cap(int n, int i, word_type const& a) {
  check_index(n, i);
  word_type const base = xnq_word(n, i);
  return !has_factor(a, base) && is_reduced(n, concat(a, base));
}

bool is_right_cap(int n, int i, word_type const& b) {
  check_index(n, i);
  word_type const base = xnq_word(n, i);
  return !has_factor(b, base) && is_reduced(n, concat(base, b));
}

bool boundary_sets::contains_a(word_type const& a) const {
  return std::binary_search(a_words.begin(), a_words.end(), a, deglex_less{});
}

bool boundary_sets::contains_b(word_type const& b) const {
  auto it = std::find(b_words.begin(), b_words.end(), b);
  return it != b_words.end();
}

boundary_sets compute_boundary_sets(int n, int i) {
  check_index(n, i);
  word_type const base = xnq_word(n, i);

  // Right caps by prefix extension: both defining conditions (no x_n q_i
  // factor, reduced after the left anchor) are inherited by prefixes, so a
  // word pruned here has no admissible extension either.
  std::vector<word_type> b_set;
  std::deque<word_type> frontier;
  frontier.push_back({});
  b_set.push_back({});
  while (!frontier.empty()) {
    word_type b = std::move(frontier.front());
    frontier.pop_front();
    if (static_cast<int>(b.size()) > cap_length_limit(n)) {
      detail::throw_internal("right cap search exceeded the length cap");
    }
    for (letter_type g = 1; g <= n; ++g) {
      word_type cand = b;
      cand.push_back(g);
      if (is_right_cap(n, i, cand)) {
        b_set.push_back(cand);
        frontier.push_back(std::move(cand));
      }
    }
  }

  // Left caps dually, by letter prepending.
  std::vector<word_type> a_set;
  frontier.push_back({});
  a_set.push_back({});
  while (!frontier.empty()) {
    word_type a = std::move(frontier.front());
    frontier.pop_front();
    if (static_cast<int>(a.size()) > cap_length_limit(n)) {
      detail::throw_internal("left cap search exceeded the length cap");
    }
    for (letter_type g = 1; g <= n; ++g) {
      word_type cand;
      cand.reserve(a.size() + 1);
      cand.push_back(g);
      cand.insert(cand.end(), a.begin(), a.end());
      if (is_left_cap(n, i, cand)) {
        a_set.push_back(cand);
        frontier.push_back(std::move(cand));
      }
    }
  }

  std::sort(a_set.begin(), a_set.end(), deglex_less{});
  boundary_sets out;
  out.n = n;
  out.i = i;
  out.a_words = std::move(a_set);
  out.b_words.reserve(out.a_words.size());
  for (auto const& a : out.a_words) {
    out.b_words.push_back(normalize(n, chi(n, i, a)));
  }

  // The involution must carry the left caps exactly onto the right caps;
  // anything else is a structural bug.
  std::vector<word_type> image = out.b_words;
  std::sort(image.begin(), image.end(), deglex_less{});
  std::sort(b_set.begin(), b_set.end(), deglex_less{});
  if (image != b_set) {
    detail::throw_internal("involution image of the left caps differs from "
                           "the right caps for n=" + std::to_string(n) +
                           ", i=" + std::to_string(i));
  }
  return out;
}

namespace {

// Appends the run x_from .. x_to, ascending or descending as needed.
void append_run(word_type& w, int from, int to) {
  if (from <= to) {
    for (int x = from; x <= to; ++x) {
      w.push_back(x);
    }
  } else {
    for (int x = from; x >= to; --x) {
      w.push_back(x);
    }
  }
}

void collect_suffixes(word_type const& w,
                      std::set<word_type, deglex_less>& out) {
  for (std::size_t k = 0; k <= w.size(); ++k) {
    out.insert(word_type(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
  }
}

void collect_prefixes(word_type const& w,
                      std::set<word_type, deglex_less>& out) {
  for (std::size_t k = 0; k <= w.size(); ++k) {
    out.insert(word_type(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
  }
}

// Strictly increasing sequences of the given length drawn from lo..hi.
void increasing_tuples(int lo, int hi, int len, std::vector<int>& acc,
                       std::vector<std::vector<int>>& out) {
  if (len == 0) {
    out.push_back(acc);
    return;
  }
  for (int v = lo; v <= hi - len + 1; ++v) {
    acc.push_back(v);
    increasing_tuples(v + 1, hi, len - 1, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> increasing_tuples(int lo, int hi, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  if (len >= 0) {
    increasing_tuples(lo, hi, len, acc, out);
  }
  return out;
}

}  // namespace

parametric_sets parametric_boundary_sets(int n, int i) {
  check_index(n, i);

  // Left caps: suffix closure of block chains
  // (x_{k_s}..x_s)(x_{k_{s+1}}..x_{s+1})...(x_{k_{i+1}}..x_{i+1}) with
  // k_{s+1} < ... < k_{i+1} <= n-1, each k_q > q, and a leading ascending
  // block when s >= 1 (k_s <= s).
  std::set<word_type, deglex_less> a_out;
  for (int s = 0; s <= i + 1; ++s) {
    int const tail = i + 1 - s;  // number of descending blocks
    std::vector<std::vector<int>> chains;
    {
      // k_q > q and the chain is strictly increasing; generate increasing
      // tuples and filter the per-position lower bounds.
      for (auto& tuple : increasing_tuples(s + 2, n - 1, tail)) {
        bool ok = true;
        for (int t = 0; t < tail; ++t) {
          if (tuple[static_cast<std::size_t>(t)] <= s + 1 + t) {
            ok = false;
            break;
          }
        }
        if (ok) {
          chains.push_back(std::move(tuple));
        }
      }
      if (tail == 0) {
        chains.push_back({});
      }
    }
    for (auto const& ks : chains) {
      word_type blocks;
      for (int t = 0; t < tail; ++t) {
        append_run(blocks, ks[static_cast<std::size_t>(t)], s + 1 + t);
      }
      if (s == 0) {
        collect_suffixes(blocks, a_out);
      } else {
        for (int k_s = 1; k_s <= s; ++k_s) {
          word_type w;
          append_run(w, k_s, s);
          w.insert(w.end(), blocks.begin(), blocks.end());
          collect_suffixes(w, a_out);
        }
      }
    }
  }

  // Right caps: prefix closure of streams
  // x_n(x_1..x_{i_1} x_{n-1}..x_{j_1}) ... x_n(x_1..x_{i_r} x_{n-1}..x_{j_r})
  // optionally terminated by x_n x_{n-1}..x_{j_{r+1}}, with
  // i_r < ... < i_1 <= i and i+1 < j_1 < ... <= n (a descent to j = n is
  // empty). Streams whose trailing constraints cannot be completed still
  // contribute their prefixes.
  std::set<word_type, deglex_less> b_out;
  b_out.insert({});
  int const max_blocks = std::min(i, n - i - 2) + 1;
  for (int r = 0; r <= max_blocks; ++r) {
    std::vector<std::vector<int>> i_chains;
    for (auto& tuple : increasing_tuples(1, i, r)) {
      // enumerate increasing, use reversed as the strictly decreasing chain
      std::reverse(tuple.begin(), tuple.end());
      i_chains.push_back(std::move(tuple));
    }
    if (r == 0) {
      i_chains.push_back({});
    }
    for (auto const& is : i_chains) {
      for (int terminal = 0; terminal <= 1; ++terminal) {
        for (auto const& js : increasing_tuples(i + 2, n, r + terminal)) {
          word_type w;
          for (int t = 0; t < r; ++t) {
            w.push_back(n);
            append_run(w, 1, is[static_cast<std::size_t>(t)]);
            if (js[static_cast<std::size_t>(t)] <= n - 1) {
              append_run(w, n - 1, js[static_cast<std::size_t>(t)]);
            }
          }
          if (terminal == 1) {
            w.push_back(n);
            if (js[static_cast<std::size_t>(r)] <= n - 1) {
              append_run(w, n - 1, js[static_cast<std::size_t>(r)]);
            }
          }
          collect_prefixes(w, b_out);
        }
      }
    }
  }

  parametric_sets out;
  out.a_words.assign(a_out.begin(), a_out.end());
  out.b_words.assign(b_out.begin(), b_out.end());
  return out;
}

namespace {

// First position p such that w[p..p+n) is x_n q_j for some j, together
// with that j.
std::optional<std::pair<std::size_t, int>> first_q_factor(int n,
                                                          word_type const& w) {
  if (w.size() < static_cast<std::size_t>(n)) {
    return std::nullopt;
  }
  std::vector<word_type> bases;
  bases.reserve(static_cast<std::size_t>(n - 1));
  for (int j = 0; j <= n - 2; ++j) {
    bases.push_back(xnq_word(n, j));
  }
  for (std::size_t p = 0; p + static_cast<std::size_t>(n) <= w.size(); ++p) {
    if (w[p] != n) {
      continue;
    }
    for (int j = 0; j <= n - 2; ++j) {
      auto const& base = bases[static_cast<std::size_t>(j)];
      if (std::equal(base.begin(), base.end(), w.begin() + static_cast<std::ptrdiff_t>(p))) {
        return std::make_pair(p, j);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<matrix_element> classify(int n, word_type const& w) {
  check_rank(n);
  if (!is_reduced(n, w)) {
    detail::throw_invalid("classify requires a reduced word, got '" +
                          format_word(w) + "'");
  }
  auto hit = first_q_factor(n, w);
  if (!hit) {
    return std::nullopt;
  }
  auto const [pos, i] = *hit;
  word_type const base = xnq_word(n, i);
  std::size_t const step = base.size();
  std::size_t end = pos + step;
  int k = 1;
  while (end + step <= w.size() &&
         std::equal(base.begin(), base.end(), w.begin() + static_cast<std::ptrdiff_t>(end))) {
    end += step;
    ++k;
  }
  matrix_element e;
  e.i = i;
  e.a.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  e.k = k;
  e.b.assign(w.begin() + static_cast<std::ptrdiff_t>(end), w.end());
  if (!is_left_cap(n, i, e.a) || !is_right_cap(n, i, e.b)) {
    detail::throw_internal("decomposition caps failed membership for '" +
                           format_word(w) + "'");
  }
  return e;
}

word_type compose_element(int n, int i, word_type const& a, int k,
                          word_type const& b) {
  check_index(n, i);
  if (k < 1) {
    detail::throw_invalid("power must be at least 1");
  }
  if (!is_left_cap(n, i, a)) {
    detail::throw_invalid("'" + format_word(a) + "' is not a left cap of index " +
                          std::to_string(i));
  }
  if (!is_right_cap(n, i, b)) {
    detail::throw_invalid("'" + format_word(b) + "' is not a right cap of index " +
                          std::to_string(i));
  }
  word_type const base = xnq_word(n, i);
  word_type w = a;
  w.reserve(a.size() + base.size() * static_cast<std::size_t>(k) + b.size());
  for (int t = 0; t < k; ++t) {
    w.insert(w.end(), base.begin(), base.end());
  }
  w.insert(w.end(), b.begin(), b.end());
  if (!is_reduced(n, w)) {
    detail::throw_internal("composed element '" + format_word(w) +
                           "' is not reduced");
  }
  return w;
}

word_type compose_element(int n, matrix_element const& e) {
  return compose_element(n, e.i, e.a, e.k, e.b);
}

std::optional<int> sandwich_entry(int n, int i, word_type const& b,
                                  word_type const& a) {
  word_type const base = xnq_word(n, i);
  word_type prod = concat(base, concat(b, concat(a, base)));
  word_type const reduced = normalize(n, prod);
  if (auto alpha = power_of_q(n, i, reduced)) {
    if (*alpha < 2) {
      detail::throw_internal("bracketed product reduced to a power below 2");
    }
    return *alpha - 2;
  }
  return std::nullopt;
}

std::optional<std::size_t> sandwich_matrix::row_index(word_type const& b) const {
  auto it = row_of_.find(b);
  if (it == row_of_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<std::size_t> sandwich_matrix::col_index(word_type const& a) const {
  auto it = col_of_.find(a);
  if (it == col_of_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<int> sandwich_matrix::entry(word_type const& b,
                                          word_type const& a) const {
  auto r = row_index(b);
  auto c = col_index(a);
  if (!r) {
    detail::throw_invalid("'" + format_word(b) + "' is not a row label");
  }
  if (!c) {
    detail::throw_invalid("'" + format_word(a) + "' is not a column label");
  }
  return entries[*r][*c];
}

sandwich_matrix compute_sandwich(int n, int i) {
  boundary_sets sets = compute_boundary_sets(n, i);
  sandwich_matrix p;
  p.n = n;
  p.i = i;
  p.cols = std::move(sets.a_words);
  p.rows = std::move(sets.b_words);
  std::size_t const size = p.cols.size();
  p.entries.assign(size, std::vector<std::optional<int>>(size));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      p.entries[r][c] = sandwich_entry(n, i, p.rows[r], p.cols[c]);
    }
  }
  for (std::size_t r = 0; r < size; ++r) {
    p.row_of_.emplace(p.rows[r], r);
    p.col_of_.emplace(p.cols[r], r);
  }
  return p;
}

int_polynomial sandwich_det(sandwich_matrix const& p) {
  std::size_t const size = p.size();
  std::vector<std::vector<int_polynomial>> m(
      size, std::vector<int_polynomial>(size));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      if (p.entries[r][c]) {
        m[r][c] = int_polynomial::monomial(1, *p.entries[r][c]);
      }
    }
  }
  return determinant(std::move(m));
}

int_polynomial sandwich_det(int n, int i, std::vector<word_type> const& rows,
                            std::vector<word_type> const& cols) {
  if (rows.size() != cols.size()) {
    detail::throw_invalid("determinant of a non-square arrangement");
  }
  std::size_t const size = rows.size();
  std::vector<std::vector<int_polynomial>> m(
      size, std::vector<int_polynomial>(size));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      if (auto e = sandwich_entry(n, i, rows[r], cols[c])) {
        m[r][c] = int_polynomial::monomial(1, *e);
      }
    }
  }
  return determinant(std::move(m));
}

std::optional<matrix_element> m_mult(sandwich_matrix const& p,
                                     matrix_element const& e1,
                                     matrix_element const& e2) {
  if (e1.i != p.i || e2.i != p.i) {
    detail::throw_invalid("matrix elements do not belong to this structure");
  }
  auto const entry = p.entry(e1.b, e2.a);
  if (!entry) {
    return std::nullopt;
  }
  matrix_element out;
  out.i = p.i;
  out.a = e1.a;
  out.k = e1.k + e2.k + *entry;
  out.b = e2.b;
  return out;
}

namespace {

// Distinct reduced forms reachable from `start` by appending (or
// prepending) up to max_len generators; invokes visit on each new state
// with the generator word that produced it. Breadth-first in deg-lex
// order of the generator word, so the first hit is deg-lex least.
template <typename Visit>
void cayley_walk(int n, word_type const& start, bool append, int max_len,
                 std::uint64_t budget, Visit visit) {
  struct node {
    word_type state;
    word_type path;
  };
  std::unordered_set<word_type, word_hash> seen;
  std::deque<node> frontier;
  word_type const first = normalize(n, start);
  seen.insert(first);
  if (!visit(first, word_type{})) {
    return;
  }
  frontier.push_back({first, {}});
  std::uint64_t visited = 1;
  while (!frontier.empty()) {
    node cur = std::move(frontier.front());
    frontier.pop_front();
    if (static_cast<int>(cur.path.size()) >= max_len) {
      continue;
    }
    for (letter_type g = 1; g <= n; ++g) {
      word_type state =
          append ? multiply(n, cur.state, {g}) : multiply(n, {g}, cur.state);
      if (!seen.insert(state).second) {
        continue;
      }
      if (++visited > budget) {
        return;
      }
      word_type path = append ? concat(cur.path, {g}) : concat({g}, cur.path);
      if (!visit(state, path)) {
        return;
      }
      frontier.push_back({std::move(state), std::move(path)});
    }
  }
}

}  // namespace

ideal_verdict ideal_member(int n, word_type const& w, int i, int search_len) {
  check_index(n, i);
  auto const element = classify(n, w);
  if (element) {
    return i < element->i ? ideal_verdict::yes : ideal_verdict::no;
  }
  // Exceptional word: look for u, v with u w v a power of x_n q_i. The
  // walk explores reduced right-products w v first, then left-extends
  // each; a hit refutes membership, exhaustion proves nothing.
  bool found = false;
  std::vector<word_type> right_states;
  cayley_walk(n, w, /*append=*/true, search_len,
              std::uint64_t{1} << 22, [&](word_type const& state, word_type const&) {
                right_states.push_back(state);
                return true;
              });
  for (auto const& state : right_states) {
    cayley_walk(n, state, /*append=*/false, search_len,
                std::uint64_t{1} << 22, [&](word_type const& s, word_type const&) {
                  if (power_of_q(n, i, s)) {
                    found = true;
                    return false;
                  }
                  return true;
                });
    if (found) {
      return ideal_verdict::no;
    }
  }
  return ideal_verdict::unknown;
}

std::optional<word_type> find_completion(int n, int i, cap_side side,
                                         word_type const& x,
                                         completion_limits limits) {
  check_index(n, i);
  if (side == cap_side::left && !is_left_cap(n, i, x)) {
    detail::throw_invalid("'" + format_word(x) + "' is not a left cap of index " +
                          std::to_string(i));
  }
  if (side == cap_side::right && !is_right_cap(n, i, x)) {
    detail::throw_invalid("'" + format_word(x) + "' is not a right cap of index " +
                          std::to_string(i));
  }
  int const max_len = limits.max_len > 0 ? limits.max_len : n * n;
  std::optional<word_type> result;
  // Left caps need w x in the cyclic semigroup, so w grows by prepending;
  // right caps dually.
  bool const append = side == cap_side::right;
  cayley_walk(n, x, append, max_len, limits.budget,
              [&](word_type const& state, word_type const& path) {
                if (!path.empty() && power_of_q(n, i, state)) {
                  result = path;
                  return false;
                }
                return true;
              });
  return result;
}

}  // namespace hk
