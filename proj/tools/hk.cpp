// hk - a workbench for the monoids of finite simple digraphs, centered on
// the cyclic case: normal forms under the confluent reduction system, the
// matrix-type structures with their sandwich matrices, the affine-map
// homomorphism, a brute-force congruence oracle and the Noetherianity
// classifier. Every subcommand speaks the plain text word format
// ("4 1 3 2", letters optional) and can emit canonical JSON.

#include <cctype>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hk/analysis.hpp"
#include "hk/error.hpp"
#include "hk/graph.hpp"
#include "hk/maps.hpp"
#include "hk/oracle.hpp"
#include "hk/rewrite.hpp"
#include "hk/structure.hpp"

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_invalid = 2;
constexpr int exit_internal = 3;

struct render_options {
  std::string format = "table";
  bool letters = false;

  bool json_mode() const { return format == "json"; }
};

void add_render_flags(CLI::App* cmd, render_options& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  cmd->add_flag("--letters", opts.letters,
                "Render generators as letters a, b, c, ...");
}

// Accepts both "4 1 3 2" and "dacb"; 'y' names the generator max_letter
// where the witness graphs admit one.
hk::word_type parse_word_arg(std::string const& text, int max_letter) {
  bool alphabetic = false;
  for (char ch : text) {
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      alphabetic = true;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      alphabetic = false;
      break;
    }
  }
  if (!alphabetic) {
    return hk::parse_word(text, max_letter);
  }
  hk::word_type w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      continue;
    }
    int letter = 0;
    if (ch == 'y') {
      letter = max_letter;
    } else {
      letter = std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1;
    }
    if (letter < 1 || letter > max_letter) {
      hk::detail::throw_invalid(std::string("letter '") + ch +
                                "' outside the alphabet");
    }
    w.push_back(letter);
  }
  return w;
}

std::string render_word(hk::word_type const& w, render_options const& opts,
                        int y_letter = 0) {
  if (w.empty()) {
    return opts.letters ? "(empty)" : "";
  }
  if (!opts.letters) {
    return hk::format_word(w);
  }
  std::string out;
  for (hk::letter_type g : w) {
    if (g == y_letter) {
      out += 'y';
    } else if (g >= 1 && g <= 26) {
      out += static_cast<char>('a' + g - 1);
    } else {
      out += "<" + std::to_string(g) + ">";
    }
  }
  return out;
}

json word_json(hk::word_type const& w) {
  json out = json::array();
  for (hk::letter_type g : w) {
    out.push_back(g);
  }
  return out;
}

json words_json(std::vector<hk::word_type> const& words) {
  json out = json::array();
  for (auto const& w : words) {
    out.push_back(word_json(w));
  }
  return out;
}

void emit(json const& doc) { std::cout << doc.dump(2) << "\n"; }

std::string entry_text(std::optional<int> const& e) {
  if (!e) {
    return "θ";
  }
  if (*e == 0) {
    return "1";
  }
  if (*e == 1) {
    return "s";
  }
  return "s^" + std::to_string(*e);
}

json det_json(hk::int_polynomial const& det) {
  json out = json::array();
  for (auto const& c : det.coefficients()) {
    if (c > std::numeric_limits<long long>::max() ||
        c < std::numeric_limits<long long>::min()) {
      hk::detail::throw_internal("determinant coefficient exceeds 64 bits");
    }
    out.push_back(static_cast<long long>(c));
  }
  return out;
}

int run_normalize(int n, std::string const& word_text, bool trace,
                  render_options const& opts) {
  hk::word_type const w = parse_word_arg(word_text, n);
  hk::normalization_trace steps;
  hk::word_type const nf = hk::normalize(n, w, trace ? &steps : nullptr);
  if (opts.json_mode()) {
    json doc;
    doc["n"] = n;
    doc["input"] = word_json(w);
    doc["reduced"] = word_json(nf);
    if (trace) {
      json lines = json::array();
      for (auto const& step : steps.steps) {
        lines.push_back(hk::describe(step.applied, step.before) + ": " +
                        hk::format_word(step.before) + " -> " +
                        hk::format_word(step.after));
      }
      doc["steps"] = lines;
    }
    emit(doc);
  } else {
    if (trace) {
      for (auto const& step : steps.steps) {
        std::cout << hk::describe(step.applied, step.before) << ": "
                  << render_word(step.before, opts) << " -> "
                  << render_word(step.after, opts) << "\n";
      }
    }
    std::cout << render_word(nf, opts) << "\n";
  }
  return exit_ok;
}

int run_equal(int n, std::string const& u_text, std::string const& v_text,
              render_options const& opts) {
  hk::word_type const u = hk::normalize(n, parse_word_arg(u_text, n));
  hk::word_type const v = hk::normalize(n, parse_word_arg(v_text, n));
  bool const equal = u == v;
  if (opts.json_mode()) {
    json doc;
    doc["equal"] = equal;
    doc["u_reduced"] = word_json(u);
    doc["v_reduced"] = word_json(v);
    emit(doc);
  } else {
    std::cout << (equal ? "equal" : "distinct") << "\n"
              << "u: " << render_word(u, opts) << "\n"
              << "v: " << render_word(v, opts) << "\n";
  }
  return equal ? exit_ok : exit_false;
}

int run_classify(int n, std::string const& word_text,
                 render_options const& opts) {
  hk::word_type const w =
      hk::normalize(n, parse_word_arg(word_text, n));
  auto const e = hk::classify(n, w);
  if (opts.json_mode()) {
    json doc;
    doc["reduced"] = word_json(w);
    doc["exceptional"] = !e.has_value();
    if (e) {
      doc["i"] = e->i;
      doc["a"] = word_json(e->a);
      doc["k"] = e->k;
      doc["b"] = word_json(e->b);
    }
    emit(doc);
  } else if (e) {
    std::cout << "i = " << e->i << ", a = " << render_word(e->a, opts)
              << ", k = " << e->k << ", b = " << render_word(e->b, opts)
              << "\n";
  } else {
    std::cout << "exceptional\n";
  }
  return exit_ok;
}

int run_sets(int n, int i, render_options const& opts) {
  hk::boundary_sets const sets = hk::compute_boundary_sets(n, i);
  if (opts.json_mode()) {
    json doc;
    doc["n"] = n;
    doc["i"] = i;
    doc["a"] = words_json(sets.a_words);
    doc["b"] = words_json(sets.b_words);
    emit(doc);
  } else {
    std::cout << "A_" << i << " (" << sets.a_words.size() << "):";
    for (auto const& a : sets.a_words) {
      std::cout << "  " << render_word(a, opts);
    }
    std::cout << "\nB_" << i << " (" << sets.b_words.size() << "):";
    for (auto const& b : sets.b_words) {
      std::cout << "  " << render_word(b, opts);
    }
    std::cout << "\n";
  }
  return exit_ok;
}

int run_sandwich(int n, int i, std::string const& rows_text,
                 std::string const& cols_text, render_options const& opts) {
  hk::sandwich_matrix const p = hk::compute_sandwich(n, i);
  auto parse_labels = [&](std::string const& text,
                          std::vector<hk::word_type> const& fallback) {
    if (text.empty()) {
      return fallback;
    }
    std::vector<hk::word_type> labels;
    std::string current;
    for (char ch : text + ",") {
      if (ch == ',') {
        // the customary label "1" names the identity cap
        labels.push_back(current == "1" ? hk::word_type{}
                                        : parse_word_arg(current, n));
        current.clear();
      } else {
        current += ch;
      }
    }
    if (labels.size() != fallback.size()) {
      hk::detail::throw_invalid("label list must name all " +
                                std::to_string(fallback.size()) + " caps");
    }
    return labels;
  };
  auto const rows = parse_labels(rows_text, p.rows);
  auto const cols = parse_labels(cols_text, p.cols);

  std::vector<std::vector<std::optional<int>>> entries(
      rows.size(), std::vector<std::optional<int>>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      entries[r][c] = p.entry(rows[r], cols[c]);
    }
  }
  hk::int_polynomial const det = hk::sandwich_det(n, i, rows, cols);

  if (opts.json_mode()) {
    json doc;
    doc["n"] = n;
    doc["i"] = i;
    doc["rows"] = words_json(rows);
    doc["cols"] = words_json(cols);
    json table = json::array();
    for (auto const& row : entries) {
      json line = json::array();
      for (auto const& e : row) {
        if (e) {
          line.push_back(*e);
        } else {
          line.push_back(nullptr);
        }
      }
      table.push_back(line);
    }
    doc["entries"] = table;
    doc["det"] = det_json(det);
    emit(doc);
  } else {
    // display width: the zero glyph is multibyte but one column wide
    auto width_of = [](std::string const& s) {
      std::size_t w = 0;
      for (char ch : s) {
        if ((ch & 0xc0) != 0x80) {
          ++w;
        }
      }
      return w;
    };
    auto pad = [&](std::string const& s, std::size_t width) {
      std::cout << s << std::string(width - width_of(s) + 2, ' ');
    };
    std::size_t label_width = 1;
    for (auto const& b : rows) {
      label_width = std::max(label_width, width_of(render_word(b, opts)));
    }
    std::vector<std::size_t> col_width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      col_width[c] = width_of(render_word(cols[c], opts));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        col_width[c] = std::max(col_width[c],
                                width_of(entry_text(entries[r][c])));
      }
    }
    pad("", label_width);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      pad(render_word(cols[c], opts), col_width[c]);
    }
    std::cout << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      pad(render_word(rows[r], opts), label_width);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        pad(entry_text(entries[r][c]), col_width[c]);
      }
      std::cout << "\n";
    }
    std::cout << "det = " << det.to_string() << "\n";
  }
  return exit_ok;
}

int run_fmap(int n, std::string const& word_text, render_options const& opts) {
  hk::word_type const w = parse_word_arg(word_text, n);
  hk::affine_map const m = hk::f_word(n, w);
  auto const sup = hk::support(m);
  if (opts.json_mode()) {
    json doc;
    doc["src"] = m.src;
    doc["shift"] = m.shift;
    doc["support"] = sup;
    emit(doc);
  } else {
    std::cout << "src:";
    for (int s : m.src) {
      std::cout << " " << s;
    }
    std::cout << "\nshift:";
    for (long long s : m.shift) {
      std::cout << " " << s;
    }
    std::cout << "\nsupport:";
    for (int s : sup) {
      std::cout << " " << s;
    }
    std::cout << "\n";
  }
  return exit_ok;
}

int run_noetherian(std::string const& path, render_options const& opts) {
  hk::digraph const g = hk::load_digraph(path);
  hk::noetherian_report const report = hk::noetherian(g);
  auto kind_name = [](hk::component_kind kind) {
    switch (kind) {
      case hk::component_kind::acyclic:
        return "acyclic";
      case hk::component_kind::oriented_cycle:
        return "oriented-cycle";
      case hk::component_kind::other:
        return "other";
    }
    return "other";
  };
  char const* verdict =
      report.verdict == hk::noetherian_verdict::yes
          ? "yes"
          : report.verdict == hk::noetherian_verdict::no ? "no"
                                                         : "out-of-scope";
  if (opts.json_mode()) {
    json doc;
    doc["verdict"] = verdict;
    json comps = json::array();
    for (auto const& info : report.components) {
      json c;
      json names = json::array();
      for (int v : info.vertices) {
        names.push_back(g.vertices[static_cast<std::size_t>(v)]);
      }
      c["vertices"] = names;
      c["kind"] = kind_name(info.kind);
      if (info.kind == hk::component_kind::oriented_cycle) {
        c["cycle_length"] = info.cycle_length;
      }
      comps.push_back(c);
    }
    doc["components"] = comps;
    emit(doc);
  } else {
    std::cout << verdict << "\n";
    for (auto const& info : report.components) {
      std::cout << "  component {";
      for (std::size_t k = 0; k < info.vertices.size(); ++k) {
        std::cout << (k ? ", " : "")
                  << g.vertices[static_cast<std::size_t>(info.vertices[k])];
      }
      std::cout << "}: " << kind_name(info.kind) << "\n";
    }
  }
  switch (report.verdict) {
    case hk::noetherian_verdict::yes:
      return exit_ok;
    case hk::noetherian_verdict::no:
      return exit_false;
    case hk::noetherian_verdict::out_of_scope:
      return exit_invalid;
  }
  return exit_internal;
}

int run_witnesses(int n, int k, render_options const& opts) {
  auto const chains = hk::acc_witnesses(n, k);
  if (opts.json_mode()) {
    json doc;
    doc["n"] = n;
    doc["k"] = k;
    doc["right"] = words_json(chains.right);
    doc["left"] = words_json(chains.left);
    emit(doc);
  } else {
    render_options letter_opts = opts;
    letter_opts.letters = true;
    for (int m = 1; m <= k; ++m) {
      std::cout << "w_" << m << " = "
                << render_word(chains.right[static_cast<std::size_t>(m - 1)],
                               letter_opts, n + 1)
                << "\n";
    }
    for (int m = 1; m <= k; ++m) {
      std::cout << "v_" << m << " = "
                << render_word(chains.left[static_cast<std::size_t>(m - 1)],
                               letter_opts, n + 1)
                << "\n";
    }
  }
  return exit_ok;
}

int run_enumerate(int n, int max_len, bool dump, render_options const& opts) {
  hk::growth_report const report = hk::enumerate_reduced(n, max_len);
  if (opts.json_mode()) {
    json doc;
    doc["n"] = n;
    doc["max_len"] = max_len;
    doc["counts"] = report.counts;
    doc["cumulative"] = report.cumulative;
    doc["stabilized"] = report.stabilized;
    if (dump) {
      doc["words"] = words_json(hk::reduced_words(n, max_len));
    }
    emit(doc);
  } else {
    std::cout << "length:";
    for (std::size_t len = 0; len < report.counts.size(); ++len) {
      std::cout << " " << len;
    }
    std::cout << "\ncount: ";
    for (auto c : report.counts) {
      std::cout << " " << c;
    }
    std::cout << "\ntotal:  " << report.cumulative.back()
              << (report.stabilized ? " (tail periodic)" : "") << "\n";
    if (dump) {
      for (auto const& w : hk::reduced_words(n, max_len)) {
        std::cout << render_word(w, opts) << "\n";
      }
    }
  }
  return exit_ok;
}

int run_exceptional(int n, render_options const& opts) {
  auto const words = hk::exceptional_set(n);
  std::size_t max_len = 0;
  for (auto const& w : words) {
    max_len = std::max(max_len, w.size());
  }
  if (opts.json_mode()) {
    json doc;
    doc["n"] = n;
    doc["count"] = words.size();
    doc["max_len"] = max_len;
    doc["bound"] = hk::exceptional_length_bound(n);
    doc["words"] = words_json(words);
    emit(doc);
  } else {
    std::cout << words.size() << " words, longest " << max_len
              << " (bound " << hk::exceptional_length_bound(n) << ")\n";
    for (auto const& w : words) {
      std::cout << render_word(w, opts) << "\n";
    }
  }
  return exit_ok;
}

int run_oracle_check(std::string const& path, std::string const& u_text,
                     std::string const& v_text, int slack,
                     std::uint64_t budget, render_options const& opts) {
  hk::digraph const g = hk::load_digraph(path);
  hk::presentation const p = hk::presentation_of(g);
  hk::word_type const u = parse_word_arg(u_text, p.alphabet);
  hk::word_type const v = parse_word_arg(v_text, p.alphabet);
  auto const res = hk::congruent(p, u, v, slack, budget);
  bool const equal = res.verdict == hk::oracle_verdict::equal;
  if (opts.json_mode()) {
    json doc;
    doc["verdict"] = equal ? "equal" : "not-found";
    doc["visited"] = res.visited;
    doc["budget_exhausted"] = res.budget_exhausted;
    emit(doc);
  } else {
    std::cout << (equal ? "equal" : "not-found") << " (visited "
              << res.visited << (res.budget_exhausted ? ", budget exhausted" : "")
              << ")\n";
  }
  return equal ? exit_ok : exit_false;
}

int run_verify(int n, std::string const& check, int max_len,
               std::uint64_t seed, render_options const& opts) {
  hk::suite_limits limits = hk::suite_limits::defaults(n);
  limits.seed = seed;
  if (max_len > 0) {
    limits.confluence_len = std::min(limits.confluence_len, max_len);
    limits.roundtrip_len = std::min(limits.roundtrip_len, max_len);
    limits.periodic_len = std::min(limits.periodic_len, max_len);
    limits.ideal_len = std::min(limits.ideal_len, max_len);
    limits.morphism_len = std::min(limits.morphism_len, max_len);
    limits.oracle_len = std::min(limits.oracle_len, max_len);
    limits.embedding_len = std::min(limits.embedding_len, max_len);
  }
  hk::suite_report const report =
      check.empty() ? hk::run_suite(n, limits)
                    : hk::run_suite_check(n, limits, check);
  auto status_name = [](hk::check_status s) {
    switch (s) {
      case hk::check_status::pass:
        return "pass";
      case hk::check_status::fail:
        return "fail";
      case hk::check_status::skip:
        return "skip";
    }
    return "fail";
  };
  json doc;
  doc["n"] = n;
  doc["seed"] = seed;
  json checks = json::array();
  for (auto const& c : report.checks) {
    json entry;
    entry["name"] = c.name;
    entry["status"] = status_name(c.status);
    entry["detail"] = c.detail;
    entry["counterexample"] = words_json(c.counterexample);
    checks.push_back(entry);
  }
  doc["checks"] = checks;
  doc["all_passed"] = report.all_passed();
  if (opts.json_mode()) {
    emit(doc);
  } else {
    std::cout << "seed " << seed << "\n";
    for (auto const& c : report.checks) {
      std::cout << status_name(c.status) << "  " << c.name;
      if (!c.detail.empty()) {
        std::cout << "  (" << c.detail << ")";
      }
      if (!c.counterexample.empty()) {
        std::cout << "  counterexample:";
        for (auto const& w : c.counterexample) {
          std::cout << " '" << hk::format_word(w) << "'";
        }
      }
      std::cout << "\n";
    }
  }
  return report.all_passed() ? exit_ok : exit_false;
}

int run_embed(int n, std::string const& word_text,
              render_options const& opts) {
  hk::word_type const w = parse_word_arg(word_text, n - 1);
  hk::word_type const image = hk::embed(n, w);
  hk::word_type const reduced = hk::normalize(n, image);
  if (opts.json_mode()) {
    json doc;
    doc["n"] = n;
    doc["input"] = word_json(w);
    doc["image"] = word_json(image);
    doc["image_reduced"] = word_json(reduced);
    emit(doc);
  } else {
    std::cout << render_word(image, opts) << "\n";
    if (image != reduced) {
      std::cout << "reduced: " << render_word(reduced, opts) << "\n";
    }
  }
  return exit_ok;
}

int run_morphism(int n, std::string const& map_name, int shift, int i,
                 std::string const& word_text, render_options const& opts) {
  hk::word_type const w = parse_word_arg(word_text, n);
  hk::word_type image;
  if (map_name == "tau") {
    image = hk::tau(n, w);
  } else if (map_name == "sigma") {
    image = hk::sigma(n, w, shift);
  } else {
    image = hk::chi(n, i, w);
  }
  hk::word_type const reduced = hk::normalize(n, image);
  if (opts.json_mode()) {
    json doc;
    doc["map"] = map_name;
    doc["input"] = word_json(w);
    doc["image"] = word_json(image);
    doc["image_reduced"] = word_json(reduced);
    emit(doc);
  } else {
    std::cout << render_word(image, opts) << "\n";
    if (image != reduced) {
      std::cout << "reduced: " << render_word(reduced, opts) << "\n";
    }
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for digraph monoids and their cyclic structures"};
  app.require_subcommand(1);

  int n = 3;
  int index = 0;
  int k = 3;
  int max_len = 0;
  int slack = 3;
  int shift = 1;
  std::uint64_t budget = 2'000'000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  bool trace = false;
  bool dump = false;
  std::string word_text, u_text, v_text, graph_path, check_name, map_name;
  std::string rows_text, cols_text;
  render_options opts;

  auto* normalize_cmd =
      app.add_subcommand("normalize", "Reduced form of a word");
  normalize_cmd->add_option("--n", n, "Cycle rank")->required();
  normalize_cmd->add_option("--word", word_text, "Input word")->required();
  normalize_cmd->add_flag("--trace", trace, "Print every rewrite step");
  add_render_flags(normalize_cmd, opts);

  auto* equal_cmd =
      app.add_subcommand("equal", "Compare two words in the monoid");
  equal_cmd->add_option("--n", n, "Cycle rank")->required();
  equal_cmd->add_option("--u", u_text, "First word")->required();
  equal_cmd->add_option("--v", v_text, "Second word")->required();
  add_render_flags(equal_cmd, opts);

  auto* classify_cmd = app.add_subcommand(
      "classify", "Cap decomposition a (x_n q_i)^k b of a word");
  classify_cmd->add_option("--n", n, "Cycle rank")->required();
  classify_cmd->add_option("--word", word_text, "Input word")->required();
  add_render_flags(classify_cmd, opts);

  auto* sets_cmd = app.add_subcommand("sets", "Cap sets A_i and B_i");
  sets_cmd->add_option("--n", n, "Cycle rank")->required();
  sets_cmd->add_option("--i", index, "Structure index")->required();
  add_render_flags(sets_cmd, opts);

  auto* sandwich_cmd =
      app.add_subcommand("sandwich", "Sandwich matrix and its determinant");
  sandwich_cmd->add_option("--n", n, "Cycle rank")->required();
  sandwich_cmd->add_option("--i", index, "Structure index")->required();
  sandwich_cmd->add_option("--rows", rows_text,
                           "Comma-separated row caps (default: involution "
                           "images of the columns)");
  sandwich_cmd->add_option("--cols", cols_text,
                           "Comma-separated column caps (default: deg-lex)");
  add_render_flags(sandwich_cmd, opts);

  auto* fmap_cmd = app.add_subcommand(
      "fmap", "Image of a word under the affine coordinate map");
  fmap_cmd->add_option("--n", n, "Cycle rank")->required();
  fmap_cmd->add_option("--word", word_text, "Input word")->required();
  add_render_flags(fmap_cmd, opts);

  auto* noeth_cmd = app.add_subcommand(
      "noetherian", "Chain-condition classification of a digraph");
  noeth_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  add_render_flags(noeth_cmd, opts);

  auto* wit_cmd = app.add_subcommand(
      "witnesses", "Ideal chains witnessing the failure of the chain "
                   "condition for the cycle with a tail arrow");
  wit_cmd->add_option("--n", n, "Cycle rank")->required();
  wit_cmd->add_option("--k", k, "Chain length")->capture_default_str();
  add_render_flags(wit_cmd, opts);

  auto* enum_cmd =
      app.add_subcommand("enumerate", "Count reduced words per length");
  enum_cmd->add_option("--n", n, "Cycle rank")->required();
  enum_cmd->add_option("--max-len", max_len, "Largest length")->required();
  enum_cmd->add_flag("--dump", dump, "Also list the words");
  add_render_flags(enum_cmd, opts);

  auto* exc_cmd = app.add_subcommand(
      "exceptional", "Reduced words with no backbone factor");
  exc_cmd->add_option("--n", n, "Cycle rank")->required();
  add_render_flags(exc_cmd, opts);

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "Decide a word pair by relation closure");
  oracle_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  oracle_cmd->add_option("--u", u_text, "First word")->required();
  oracle_cmd->add_option("--v", v_text, "Second word")->required();
  oracle_cmd->add_option("--slack", slack, "Length slack")
      ->capture_default_str();
  oracle_cmd->add_option("--budget", budget, "Node budget")
      ->capture_default_str();
  add_render_flags(oracle_cmd, opts);

  auto* verify_cmd =
      app.add_subcommand("verify", "Run the structural check suite");
  verify_cmd->add_option("--n", n, "Cycle rank")->required();
  verify_cmd->add_option("--check", check_name, "Run one named check");
  verify_cmd->add_option("--max-len", max_len,
                         "Cap the sweep lengths of every check");
  verify_cmd->add_option("--seed", seed, "Seed for randomized checks")
      ->capture_default_str();
  add_render_flags(verify_cmd, opts);

  auto* embed_cmd = app.add_subcommand(
      "embed", "Embed a word of the rank n-1 monoid into rank n");
  embed_cmd->add_option("--n", n, "Target cycle rank")->required();
  embed_cmd->add_option("--word", word_text, "Word over rank n-1")
      ->required();
  add_render_flags(embed_cmd, opts);

  auto* morph_cmd = app.add_subcommand(
      "morphism", "Apply the reversal, shift or cap-swap morphism");
  morph_cmd->add_option("--n", n, "Cycle rank")->required();
  morph_cmd->add_option("--map", map_name, "One of tau, sigma, chi")
      ->required()
      ->check(CLI::IsMember({"tau", "sigma", "chi"}));
  morph_cmd->add_option("--shift", shift, "Shift amount for sigma")
      ->capture_default_str();
  morph_cmd->add_option("--i", index, "Index for chi");
  morph_cmd->add_option("--word", word_text, "Input word")->required();
  add_render_flags(morph_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    app.exit(e);
    return exit_invalid;
  }

  try {
    if (normalize_cmd->parsed()) {
      return run_normalize(n, word_text, trace, opts);
    }
    if (equal_cmd->parsed()) {
      return run_equal(n, u_text, v_text, opts);
    }
    if (classify_cmd->parsed()) {
      return run_classify(n, word_text, opts);
    }
    if (sets_cmd->parsed()) {
      return run_sets(n, index, opts);
    }
    if (sandwich_cmd->parsed()) {
      return run_sandwich(n, index, rows_text, cols_text, opts);
    }
    if (fmap_cmd->parsed()) {
      return run_fmap(n, word_text, opts);
    }
    if (noeth_cmd->parsed()) {
      return run_noetherian(graph_path, opts);
    }
    if (wit_cmd->parsed()) {
      return run_witnesses(n, k, opts);
    }
    if (enum_cmd->parsed()) {
      return run_enumerate(n, max_len, dump, opts);
    }
    if (exc_cmd->parsed()) {
      return run_exceptional(n, opts);
    }
    if (oracle_cmd->parsed()) {
      return run_oracle_check(graph_path, u_text, v_text, slack, budget,
                              opts);
    }
    if (verify_cmd->parsed()) {
      return run_verify(n, check_name, max_len, seed, opts);
    }
    if (embed_cmd->parsed()) {
      return run_embed(n, word_text, opts);
    }
    if (morph_cmd->parsed()) {
      return run_morphism(n, map_name, shift, index, word_text, opts);
    }
  } catch (hk::invalid_input const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (hk::internal_error const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_invalid;
}
