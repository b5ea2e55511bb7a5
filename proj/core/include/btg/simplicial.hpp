#pragma once

// Simplicial systems: graphs with edges labelled by coordinates, each edge
// carrying an elementary unipotent matrix, and the win-lose induction on them.

#include "btg/matrix.hpp"
#include "btg/renorm.hpp"
#include "btg/simplex.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace btg {

struct SimplicialEdge {
  std::size_t src;
  std::size_t dst;
  int label;  // 1-based coordinate index
  friend bool operator==(const SimplicialEdge&, const SimplicialEdge&) = default;
};

class SimplicialGraph {
 public:
  /// Throws std::invalid_argument when an endpoint is out of range, a label is
  /// outside 1..alphabet_size, or two out-edges of a vertex share a label.
  SimplicialGraph(std::vector<std::string> vertices, std::vector<SimplicialEdge> edges, int alphabet_size = 3);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<SimplicialEdge>& edges() const { return edges_; }
  int alphabet_size() const { return alphabet_size_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  /// Indices into edges() of the edges leaving v.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  /// Bitmask (bit label-1) of l(v_out).
  unsigned out_labels(std::size_t v) const;
  std::optional<std::size_t> find_vertex(std::string_view name) const;

  /// {"vertices": [...], "edges": [{"src", "dst", "label"}]}.
  std::string to_json() const;
  static SimplicialGraph from_json(std::string_view text);

 private:
  std::vector<std::string> vertices_;
  std::vector<SimplicialEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  int alphabet_size_;
};

/// Id + sum of E_{alpha, l(e)} over the other out-labels alpha of the source.
/// Requires alphabet size 3.
Mat3 edge_matrix(const SimplicialGraph& g, std::size_t edge);

struct WinLoseState {
  std::size_t vertex;
  LengthVector point;
  friend bool operator==(const WinLoseState&, const WinLoseState&) = default;
};

namespace win_lose {
struct Moved {
  WinLoseState next;
  std::size_t edge;
};
/// Tie between compared coordinates, or a compared coordinate is zero.
struct Degenerate {};
/// The vertex has no outgoing edges.
struct Sink {};
}  // namespace win_lose

using WinLoseResult = std::variant<win_lose::Moved, win_lose::Degenerate, win_lose::Sink>;

/// Takes the out-edge whose label carries the strict minimum of the point
/// over the out-labels, and maps the point by the normalized M_e^{-1}.
WinLoseResult win_lose_step(const SimplicialGraph& g, const WinLoseState& s);

/// The graph realizing the ARC induction. White vertices 11 and 13 stand for
/// the states P123 and P213; 22 is the hole.
SimplicialGraph arc_graph();

struct ReturnPath {
  std::vector<std::size_t> edges;
  std::size_t end;
  Mat3 product;  // M_{e1} M_{e2} ... in path order
};

/// All paths from start that stop at the first vertex of `stops` reached (the
/// start itself does not count). Paths ending in sinks are dropped. Throws
/// std::runtime_error if a cycle avoids `stops`.
std::vector<ReturnPath> first_return_paths(const SimplicialGraph& g, std::size_t start,
                                           const std::vector<std::size_t>& stops);

/// Tarjan's algorithm; component ids are assigned in order of completion.
std::vector<std::size_t> strongly_connected_components(std::size_t n,
                                                       const std::vector<std::vector<std::size_t>>& adj);

/// G_L: at each vertex keep the out-edges labelled in L if there are any,
/// otherwise keep all of them. L is a label bitmask.
std::vector<std::vector<std::size_t>> restricted_adjacency(const SimplicialGraph& g, unsigned label_mask);

struct Cond2Failure {
  unsigned label_mask;
  std::size_t vertex;
  std::vector<std::size_t> component;
};

struct Cond2Report {
  bool ok = true;
  std::size_t subsets_checked = 0;
  std::vector<Cond2Failure> failures;
  /// One line per subset: its components and how each vertex passed.
  std::vector<std::string> log;
};

Cond2Report check_strong_nondegeneracy_cond2(const SimplicialGraph& g);

/// One induction step computed on arc_graph(): win-lose steps from the white
/// vertex of the state until the next white vertex (Step), the hole (Hole),
/// or a tie (Degenerate). The letter is read off the return-path product.
StepResult arc_return_step(const SimplicialGraph& arc, const InductionState& s);

}  // namespace btg
