#ifndef HK_GRAPH_HPP_
#define HK_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

#include "hk/word.hpp"

namespace hk {

// A finite simple digraph: named vertices, ordered arrows, unordered
// edges. No loops, no duplicates, no pair serving as both arrow and edge,
// and no opposite arrow pair (that must be declared as an edge instead).
struct digraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> arrows;  // 0-based vertex indices
  std::vector<std::pair<int, int>> edges;   // stored with first < second

  int size() const { return static_cast<int>(vertices.size()); }
  bool oriented() const { return edges.empty(); }
};

// Every violated invariant, one message each; empty means valid.
std::vector<std::string> validate(digraph const& g);

// Throws invalid_input listing the violations.
void check_graph(digraph const& g);

// The oriented cycle x_1 -> x_2 -> ... -> x_n -> x_1.
digraph cycle_digraph(int n);

// JSON schema: {"vertices": ["a","b"], "arrows": [["a","b"]], "edges": []}.
digraph parse_digraph(std::string const& json_text);
digraph load_digraph(std::string const& path);
std::string digraph_to_json(digraph const& g);

// Partition of the vertices into weakly connected components (arrows and
// edges both connect); each component sorted, components ordered by least
// vertex.
std::vector<std::vector<int>> weak_components(digraph const& g);

enum class component_kind { acyclic, oriented_cycle, other };

struct component_info {
  std::vector<int> vertices;
  component_kind kind = component_kind::acyclic;
  int cycle_length = 0;  // set when kind == oriented_cycle
};

// Classification of one component of an oriented graph; throws
// invalid_input when the component touches an unoriented edge, which the
// classification theorem does not cover.
component_info classify_component(digraph const& g,
                                  std::vector<int> const& component);

enum class noetherian_verdict { yes, no, out_of_scope };

struct noetherian_report {
  noetherian_verdict verdict = noetherian_verdict::out_of_scope;
  std::vector<component_info> components;  // empty when out of scope
};

// The algebra of g is Noetherian iff every weak component is an oriented
// cycle or acyclic; any unoriented edge puts the graph out of scope.
noetherian_report noetherian(digraph const& g);

// Explicit chains witnessing the failure of both chain conditions for the
// cycle with an extra arrow y -> x_1; y is encoded as the letter n+1.
// right[k-1] = (x_n x_{n-1} ... x_1)^k y and
// left[k-1]  = x_1 x_2 y (x_1 x_n ... x_2)^k.
struct acc_witness_chains {
  std::vector<word_type> right;
  std::vector<word_type> left;
};

acc_witness_chains acc_witnesses(int n, int k);

// The graph those witnesses live on.
digraph cycle_with_tail(int n);

}  // namespace hk

#endif  // HK_GRAPH_HPP_
