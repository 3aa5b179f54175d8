#include "hk/rewrite.hpp"

#include <algorithm>
#include <random>

#include "hk/error.hpp"

namespace hk {

namespace {

// Position of the next occurrence of letter x strictly after pos, or npos.
std::size_t next_occurrence(word_type const& w, std::size_t pos,
                            letter_type x) {
  for (std::size_t q = pos + 1; q < w.size(); ++q) {
    if (w[q] == x) {
      return q;
    }
  }
  return static_cast<std::size_t>(-1);
}

bool contains_between(word_type const& w, std::size_t lo, std::size_t hi,
                      letter_type x) {
  for (std::size_t k = lo; k < hi; ++k) {
    if (w[k] == x) {
      return true;
    }
  }
  return false;
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

std::optional<redex> match_at(int n, word_type const& w, rule_kind kind,
                              std::size_t pos) {
  std::size_t const size = w.size();
  if (pos >= size) {
    return std::nullopt;
  }
  switch (kind) {
    case rule_kind::r1: {
      if (pos + 1 < size && w[pos] == w[pos + 1]) {
        return redex{rule_kind::r1, pos, 2};
      }
      return std::nullopt;
    }
    case rule_kind::r2: {
      if (pos + 1 >= size) {
        return std::nullopt;
      }
      int const d = w[pos] - w[pos + 1];
      if (1 < d && d < n - 1) {
        return redex{rule_kind::r2, pos, 2};
      }
      return std::nullopt;
    }
    case rule_kind::r3: {
      if (w[pos] != n) {
        return std::nullopt;
      }
      // Maximal ascending run 1, 2, ..., i after x_n. A shorter sub-run
      // cannot match: its follower would be i'+1, violating i'+1 < j.
      std::size_t run = 0;
      while (pos + 1 + run < size &&
             w[pos + 1 + run] == static_cast<letter_type>(run + 1)) {
        ++run;
      }
      if (run == 0 || pos + 1 + run >= size) {
        return std::nullopt;
      }
      letter_type const i = static_cast<letter_type>(run);
      letter_type const j = w[pos + 1 + run];
      if (i + 1 < j && j < n - 1) {
        return redex{rule_kind::r3, pos, run + 2};
      }
      return std::nullopt;
    }
    case rule_kind::r4:
    case rule_kind::r5: {
      letter_type const i = w[pos];
      std::size_t const q = next_occurrence(w, pos, i);
      if (q == npos || q < pos + 2) {
        return std::nullopt;
      }
      letter_type const barrier = kind == rule_kind::r4 ? cycle_pred(n, i)
                                                        : cycle_succ(n, i);
      if (contains_between(w, pos + 1, q, barrier)) {
        return std::nullopt;
      }
      return redex{kind, pos, q - pos + 1};
    }
  }
  return std::nullopt;
}

std::optional<redex> find_redex(int n, word_type const& w) {
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
    for (rule_kind kind : {rule_kind::r1, rule_kind::r2, rule_kind::r3,
                           rule_kind::r4, rule_kind::r5}) {
      if (auto r = match_at(n, w, kind, pos)) {
        return r;
      }
    }
  }
  return std::nullopt;
}

std::vector<redex> all_redexes(int n, word_type const& w) {
  std::vector<redex> out;
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
    for (rule_kind kind : {rule_kind::r1, rule_kind::r2, rule_kind::r3,
                           rule_kind::r4, rule_kind::r5}) {
      if (auto r = match_at(n, w, kind, pos)) {
        out.push_back(*r);
      }
    }
  }
  return out;
}

namespace {

// In-place application; the redex is trusted to match.
void apply_in_place(word_type& w, redex const& r) {
  switch (r.kind) {
    case rule_kind::r1:
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(r.pos + 1));
      break;
    case rule_kind::r2:
      std::swap(w[r.pos], w[r.pos + 1]);
      break;
    case rule_kind::r3: {
      // x_n (x_1..x_i) x_j -> x_j x_n (x_1..x_i)
      auto first = w.begin() + static_cast<std::ptrdiff_t>(r.pos);
      auto last = first + static_cast<std::ptrdiff_t>(r.len);
      std::rotate(first, last - 1, last);
      break;
    }
    case rule_kind::r4:
      // x_i u x_i -> x_i u: drop the right occurrence.
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(r.pos + r.len - 1));
      break;
    case rule_kind::r5:
      // x_i v x_i -> v x_i: drop the left occurrence.
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(r.pos));
      break;
  }
}

}  // namespace

word_type apply_rule(int n, word_type const& w, redex const& r) {
  check_rank(n);
  auto found = match_at(n, w, r.kind, r.pos);
  if (!found || found->len != r.len) {
    detail::throw_invalid("rule r" +
                          std::to_string(static_cast<int>(r.kind)) +
                          " does not match '" + format_word(w) +
                          "' at position " + std::to_string(r.pos));
  }
  word_type out = w;
  apply_in_place(out, r);
  return out;
}

std::string describe(redex const& r, word_type const& before) {
  std::string s = "R" + std::to_string(static_cast<int>(r.kind));
  switch (r.kind) {
    case rule_kind::r1:
    case rule_kind::r4:
    case rule_kind::r5:
      s += "(i=" + std::to_string(before[r.pos]) + ")";
      break;
    case rule_kind::r2:
      s += "(j=" + std::to_string(before[r.pos]) +
           ",i=" + std::to_string(before[r.pos + 1]) + ")";
      break;
    case rule_kind::r3:
      s += "(i=" + std::to_string(static_cast<int>(r.len) - 2) +
           ",j=" + std::to_string(before[r.pos + r.len - 1]) + ")";
      break;
  }
  s += "@" + std::to_string(r.pos);
  return s;
}

namespace {

// Ample for desk scale; hitting it means the system lost termination,
// which the deg-lex argument rules out unless there is a bug.
constexpr std::size_t max_steps = 10'000'000;

}  // namespace

word_type normalize(int n, word_type w, normalization_trace* trace) {
  check_rank(n);
  check_word(w, n);
  std::size_t steps = 0;
  while (auto r = find_redex(n, w)) {
    if (++steps > max_steps) {
      detail::throw_internal("normalization exceeded the step budget on '" +
                             format_word(w) + "'");
    }
    if (trace != nullptr) {
      trace_step step;
      step.applied = *r;
      step.before = w;
      apply_in_place(w, *r);
      step.after = w;
      if (deglex_compare(step.after, step.before) !=
          std::strong_ordering::less) {
        detail::throw_internal("rewrite step did not decrease deg-lex: " +
                               describe(*r, step.before));
      }
      trace->steps.push_back(std::move(step));
    } else {
      apply_in_place(w, *r);
    }
  }
  return w;
}

word_type normalize_with_strategy(int n, word_type w, std::uint64_t seed) {
  check_rank(n);
  check_word(w, n);
  std::mt19937_64 rng(seed);
  std::size_t steps = 0;
  while (true) {
    auto redexes = all_redexes(n, w);
    if (redexes.empty()) {
      return w;
    }
    if (++steps > max_steps) {
      detail::throw_internal("random-strategy normalization exceeded the "
                             "step budget");
    }
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    apply_in_place(w, redexes[pick(rng)]);
  }
}

bool is_reduced(int n, word_type const& w) {
  check_rank(n);
  check_word(w, n);
  return !find_redex(n, w).has_value();
}

word_type multiply(int n, word_type const& u, word_type const& v) {
  return normalize(n, concat(normalize(n, u), normalize(n, v)));
}

std::optional<int> power_of_q(int n, int i, word_type const& w) {
  word_type const base = xnq_word(n, i);
  if (w.empty() || w.size() % base.size() != 0) {
    return std::nullopt;
  }
  for (std::size_t p = 0; p < w.size(); p += base.size()) {
    if (!std::equal(base.begin(), base.end(), w.begin() + p)) {
      return std::nullopt;
    }
  }
  return static_cast<int>(w.size() / base.size());
}

}  // namespace hk
