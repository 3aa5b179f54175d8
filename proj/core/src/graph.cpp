#include "hk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hk/error.hpp"

namespace hk {

std::vector<std::string> validate(digraph const& g) {
  std::vector<std::string> errors;
  int const n = g.size();
  std::set<std::string> names;
  for (auto const& name : g.vertices) {
    if (!names.insert(name).second) {
      errors.push_back("duplicate vertex name '" + name + "'");
    }
  }
  auto in_range = [&](int v) { return v >= 0 && v < n; };
  auto name_of = [&](int v) {
    return in_range(v) ? g.vertices[static_cast<std::size_t>(v)]
                       : "#" + std::to_string(v);
  };
  std::set<std::pair<int, int>> arrow_set;
  for (auto const& [u, v] : g.arrows) {
    if (!in_range(u) || !in_range(v)) {
      errors.push_back("arrow endpoint out of range");
      continue;
    }
    if (u == v) {
      errors.push_back("loop at vertex '" + name_of(u) + "'");
      continue;
    }
    if (!arrow_set.insert({u, v}).second) {
      errors.push_back("duplicate arrow " + name_of(u) + " -> " + name_of(v));
    }
  }
  for (auto const& [u, v] : g.arrows) {
    if (in_range(u) && in_range(v) && u != v && arrow_set.count({v, u}) &&
        u < v) {
      errors.push_back("opposite arrows between '" + name_of(u) + "' and '" +
                       name_of(v) + "'; declare an unoriented edge instead");
    }
  }
  std::set<std::pair<int, int>> edge_set;
  for (auto const& [u, v] : g.edges) {
    if (!in_range(u) || !in_range(v)) {
      errors.push_back("edge endpoint out of range");
      continue;
    }
    if (u == v) {
      errors.push_back("loop edge at vertex '" + name_of(u) + "'");
      continue;
    }
    auto key = std::minmax(u, v);
    if (!edge_set.insert(key).second) {
      errors.push_back("duplicate edge {" + name_of(u) + ", " + name_of(v) +
                       "}");
    }
    if (arrow_set.count({u, v}) || arrow_set.count({v, u})) {
      errors.push_back("pair {" + name_of(u) + ", " + name_of(v) +
                       "} declared both as arrow and edge");
    }
  }
  return errors;
}

void check_graph(digraph const& g) {
  auto errors = validate(g);
  if (!errors.empty()) {
    std::string joined;
    for (auto const& e : errors) {
      if (!joined.empty()) {
        joined += "; ";
      }
      joined += e;
    }
    detail::throw_invalid("invalid graph: " + joined);
  }
}

digraph cycle_digraph(int n) {
  check_rank(n);
  digraph g;
  for (int v = 1; v <= n; ++v) {
    g.vertices.push_back("x" + std::to_string(v));
  }
  for (int v = 0; v < n; ++v) {
    g.arrows.emplace_back(v, (v + 1) % n);
  }
  return g;
}

digraph cycle_with_tail(int n) {
  digraph g = cycle_digraph(n);
  g.vertices.push_back("y");
  g.arrows.emplace_back(n, 0);
  return g;
}

namespace {

int vertex_index(std::vector<std::string> const& vertices,
                 std::string const& name) {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end()) {
    detail::throw_invalid("unknown vertex '" + name + "'");
  }
  return static_cast<int>(it - vertices.begin());
}

}  // namespace

digraph parse_digraph(std::string const& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (nlohmann::json::parse_error const& e) {
    detail::throw_invalid(std::string("graph JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    detail::throw_invalid("graph JSON needs a \"vertices\" array");
  }
  digraph g;
  for (auto const& v : j["vertices"]) {
    if (!v.is_string()) {
      detail::throw_invalid("vertex names must be strings");
    }
    g.vertices.push_back(v.get<std::string>());
  }
  auto read_pairs = [&](char const* key) {
    std::vector<std::pair<int, int>> out;
    if (!j.contains(key)) {
      return out;
    }
    if (!j[key].is_array()) {
      detail::throw_invalid(std::string("\"") + key + "\" must be an array");
    }
    for (auto const& pair : j[key]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string()) {
        detail::throw_invalid(std::string("entries of \"") + key +
                              "\" must be [name, name] pairs");
      }
      out.emplace_back(vertex_index(g.vertices, pair[0].get<std::string>()),
                       vertex_index(g.vertices, pair[1].get<std::string>()));
    }
    return out;
  };
  g.arrows = read_pairs("arrows");
  g.edges = read_pairs("edges");
  for (auto& [u, v] : g.edges) {
    if (u > v) {
      std::swap(u, v);
    }
  }
  check_graph(g);
  return g;
}

digraph load_digraph(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    detail::throw_invalid("cannot open graph file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

std::string digraph_to_json(digraph const& g) {
  nlohmann::json j;
  j["vertices"] = g.vertices;
  auto pairs = [&](std::vector<std::pair<int, int>> const& list) {
    nlohmann::json out = nlohmann::json::array();
    for (auto const& [u, v] : list) {
      out.push_back({g.vertices[static_cast<std::size_t>(u)],
                     g.vertices[static_cast<std::size_t>(v)]});
    }
    return out;
  };
  j["arrows"] = pairs(g.arrows);
  j["edges"] = pairs(g.edges);
  return j.dump();
}

std::vector<std::vector<int>> weak_components(digraph const& g) {
  int const n = g.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    parent[static_cast<std::size_t>(v)] = v;
  }
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int u, int v) {
    parent[static_cast<std::size_t>(find(u))] = find(v);
  };
  for (auto const& [u, v] : g.arrows) {
    unite(u, v);
  }
  for (auto const& [u, v] : g.edges) {
    unite(u, v);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) {
    groups[find(v)].push_back(v);
  }
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](auto const& a, auto const& b) { return a.front() < b.front(); });
  return out;
}

component_info classify_component(digraph const& g,
                                  std::vector<int> const& component) {
  std::set<int> members(component.begin(), component.end());
  for (auto const& [u, v] : g.edges) {
    if (members.count(u) || members.count(v)) {
      detail::throw_invalid(
          "classification out of scope: the component has an unoriented "
          "edge");
    }
  }
  component_info info;
  info.vertices = component;
  std::sort(info.vertices.begin(), info.vertices.end());

  std::map<int, std::vector<int>> out_adj;
  std::map<int, int> in_deg, out_deg;
  for (int v : component) {
    in_deg[v] = 0;
    out_deg[v] = 0;
  }
  int arrow_count = 0;
  for (auto const& [u, v] : g.arrows) {
    if (members.count(u) && members.count(v)) {
      out_adj[u].push_back(v);
      ++out_deg[u];
      ++in_deg[v];
      ++arrow_count;
    }
  }

  // Directed cycle detection by iterative three-color DFS.
  std::map<int, int> color;  // 0 white, 1 grey, 2 black
  bool has_cycle = false;
  for (int start : component) {
    if (color[start] != 0) {
      continue;
    }
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto const& adj = out_adj[v];
      if (next < adj.size()) {
        int const to = adj[next++];
        if (color[to] == 1) {
          has_cycle = true;
        } else if (color[to] == 0) {
          color[to] = 1;
          stack.emplace_back(to, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }

  if (!has_cycle) {
    info.kind = component_kind::acyclic;
    return info;
  }
  // A single directed cycle covering the component: every degree 1 and as
  // many arrows as vertices (>= 3: opposite pairs are rejected upstream).
  bool single_cycle = arrow_count == static_cast<int>(component.size()) &&
                      component.size() >= 3;
  if (single_cycle) {
    for (int v : component) {
      if (in_deg[v] != 1 || out_deg[v] != 1) {
        single_cycle = false;
        break;
      }
    }
  }
  if (single_cycle) {
    info.kind = component_kind::oriented_cycle;
    info.cycle_length = static_cast<int>(component.size());
  } else {
    info.kind = component_kind::other;
  }
  return info;
}

noetherian_report noetherian(digraph const& g) {
  check_graph(g);
  noetherian_report report;
  if (!g.oriented()) {
    report.verdict = noetherian_verdict::out_of_scope;
    return report;
  }
  report.verdict = noetherian_verdict::yes;
  for (auto const& component : weak_components(g)) {
    component_info info = classify_component(g, component);
    if (info.kind == component_kind::other) {
      report.verdict = noetherian_verdict::no;
    }
    report.components.push_back(std::move(info));
  }
  return report;
}

acc_witness_chains acc_witnesses(int n, int k) {
  check_rank(n);
  if (k < 1) {
    detail::throw_invalid("witness count must be at least 1");
  }
  acc_witness_chains chains;
  letter_type const y = n + 1;
  for (int m = 1; m <= k; ++m) {
    word_type w;
    for (int t = 0; t < m; ++t) {
      for (letter_type g = n; g >= 1; --g) {
        w.push_back(g);
      }
    }
    w.push_back(y);
    chains.right.push_back(std::move(w));

    word_type v{1, 2, y};
    for (int t = 0; t < m; ++t) {
      v.push_back(1);
      for (letter_type g = n; g >= 2; --g) {
        v.push_back(g);
      }
    }
    chains.left.push_back(std::move(v));
  }
  return chains;
}

}  // namespace hk
