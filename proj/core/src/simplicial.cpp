#include "btg/simplicial.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace btg {

SimplicialGraph::SimplicialGraph(std::vector<std::string> vertices, std::vector<SimplicialEdge> edges,
                                 int alphabet_size)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), out_(vertices_.size()), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 1 || alphabet_size_ > 31) throw std::invalid_argument("alphabet size must be in 1..31");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.src >= vertices_.size() || e.dst >= vertices_.size()) throw std::invalid_argument("edge endpoint out of range");
    if (e.label < 1 || e.label > alphabet_size_) throw std::invalid_argument("edge label out of range");
    for (std::size_t j : out_[e.src]) {
      if (edges_[j].label == e.label) {
        throw std::invalid_argument("vertex " + vertices_[e.src] + " has two out-edges labelled " +
                                    std::to_string(e.label));
      }
    }
    out_[e.src].push_back(i);
  }
}

unsigned SimplicialGraph::out_labels(std::size_t v) const {
  unsigned mask = 0;
  for (std::size_t i : out_[v]) mask |= 1u << (edges_[i].label - 1);
  return mask;
}

std::optional<std::size_t> SimplicialGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return i;
  return std::nullopt;
}

std::string SimplicialGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertices_;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges_) j["edges"].push_back({{"src", vertices_[e.src]}, {"dst", vertices_[e.dst]}, {"label", e.label}});
  j["alphabet_size"] = alphabet_size_;
  return j.dump(2);
}

SimplicialGraph SimplicialGraph::from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto names = j.at("vertices").get<std::vector<std::string>>();
  auto index = [&](const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw std::invalid_argument("unknown vertex '" + n + "'");
    return static_cast<std::size_t>(it - names.begin());
  };
  std::vector<SimplicialEdge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({index(e.at("src").get<std::string>()), index(e.at("dst").get<std::string>()), e.at("label").get<int>()});
  int alphabet = j.value("alphabet_size", 3);
  return SimplicialGraph(std::move(names), std::move(edges), alphabet);
}

Mat3 edge_matrix(const SimplicialGraph& g, std::size_t edge) {
  if (g.alphabet_size() != 3) throw std::invalid_argument("edge_matrix: alphabet size must be 3");
  const auto& e = g.edges().at(edge);
  Mat3 m = Mat3::identity();
  for (std::size_t i : g.out_edges(e.src)) {
    int alpha = g.edges()[i].label;
    if (alpha != e.label) m(alpha - 1, e.label - 1) += 1;
  }
  return m;
}

WinLoseResult win_lose_step(const SimplicialGraph& g, const WinLoseState& s) {
  const auto& out = g.out_edges(s.vertex);
  if (out.empty()) return win_lose::Sink{};
  const auto& p = s.point;
  std::size_t best = out.front();
  for (std::size_t i : out) {
    if (p[g.edges()[i].label - 1] == 0) return win_lose::Degenerate{};
    if (p[g.edges()[i].label - 1] < p[g.edges()[best].label - 1]) best = i;
  }
  const int l = g.edges()[best].label;
  for (std::size_t i : out)
    if (i != best && p[g.edges()[i].label - 1] == p[l - 1]) return win_lose::Degenerate{};

  // M_e^{-1} = Id - sum E_{alpha,l}: subtract the loser from every other out-label.
  QVec3 v = p.vec();
  for (std::size_t i : out) {
    int alpha = g.edges()[i].label;
    if (alpha != l) v[alpha - 1] -= p[l - 1];
  }
  return win_lose::Moved{WinLoseState{g.edges()[best].dst, LengthVector::normalized(v)}, best};
}

SimplicialGraph arc_graph() {
  std::vector<std::string> v{"11", "13", "21", "23", "22"};
  enum { k11, k13, k21, k23, k22 };
  std::vector<SimplicialEdge> e{
      {k11, k13, 1}, {k13, k11, 2}, {k11, k21, 3}, {k13, k23, 3},
      {k21, k11, 2}, {k23, k13, 1}, {k21, k22, 1}, {k23, k22, 2},
  };
  return SimplicialGraph(std::move(v), std::move(e), 3);
}

std::vector<ReturnPath> first_return_paths(const SimplicialGraph& g, std::size_t start,
                                           const std::vector<std::size_t>& stops) {
  std::vector<ReturnPath> result;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(g.vertex_count(), false);
  auto is_stop = [&](std::size_t v) { return std::find(stops.begin(), stops.end(), v) != stops.end(); };

  std::function<void(std::size_t, const Mat3&)> walk = [&](std::size_t v, const Mat3& m) {
    for (std::size_t i : g.out_edges(v)) {
      std::size_t w = g.edges()[i].dst;
      Mat3 next = m * edge_matrix(g, i);
      path.push_back(i);
      if (is_stop(w)) {
        result.push_back({path, w, next});
      } else if (!g.out_edges(w).empty()) {
        if (on_path[w]) throw std::runtime_error("first_return_paths: cycle avoids the stop set");
        on_path[w] = true;
        walk(w, next);
        on_path[w] = false;
      }
      path.pop_back();
    }
  };
  on_path[start] = true;
  walk(start, Mat3::identity());
  return result;
}

std::vector<std::size_t> strongly_connected_components(std::size_t n,
                                                       const std::vector<std::vector<std::size_t>>& adj) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0, ncomp = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] == kUnset) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == kUnset) visit(v);
  return comp;
}

std::vector<std::vector<std::size_t>> restricted_adjacency(const SimplicialGraph& g, unsigned label_mask) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    bool any = (g.out_labels(v) & label_mask) != 0;
    for (std::size_t i : g.out_edges(v)) {
      const auto& e = g.edges()[i];
      if (!any || (label_mask >> (e.label - 1)) & 1u) adj[v].push_back(e.dst);
    }
  }
  return adj;
}

namespace {

std::string mask_string(unsigned mask) {
  std::string s = "{";
  for (int l = 1; mask; ++l, mask >>= 1) {
    if (mask & 1u) {
      if (s.size() > 1) s += ',';
      s += std::to_string(l);
    }
  }
  return s + "}";
}

}  // namespace

Cond2Report check_strong_nondegeneracy_cond2(const SimplicialGraph& g) {
  Cond2Report report;
  const unsigned full = (1u << g.alphabet_size()) - 1;
  const std::size_t n = g.vertex_count();

  for (unsigned mask = 1; mask < full; ++mask) {
    ++report.subsets_checked;
    auto comp = strongly_connected_components(n, restricted_adjacency(g, mask));
    std::ostringstream line;
    line << "L=" << mask_string(mask) << ":";

    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> members;
      for (std::size_t w = 0; w < n; ++w)
        if (comp[w] == comp[v]) members.push_back(w);

      line << ' ' << g.vertices()[v] << "[scc " << comp[v] << "]";
      if (std::popcount(g.out_labels(v) & mask) <= 1) {
        line << "=small";
        continue;
      }
      // L-labelled paths in G from v.
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> todo{v};
      seen[v] = true;
      bool escapes = false;
      while (!todo.empty() && !escapes) {
        std::size_t u = todo.back();
        todo.pop_back();
        for (std::size_t i : g.out_edges(u)) {
          const auto& e = g.edges()[i];
          if (!((mask >> (e.label - 1)) & 1u) || seen[e.dst]) continue;
          if (comp[e.dst] != comp[v]) {
            escapes = true;
            break;
          }
          seen[e.dst] = true;
          todo.push_back(e.dst);
        }
      }
      if (escapes) {
        line << "=escapes";
      } else {
        line << "=FAIL";
        report.ok = false;
        report.failures.push_back({mask, v, members});
      }
    }
    report.log.push_back(line.str());
  }
  return report;
}

StepResult arc_return_step(const SimplicialGraph& arc, const InductionState& s) {
  const std::size_t white[2] = {*arc.find_vertex("11"), *arc.find_vertex("13")};
  WinLoseState w{s.perm == Perm::P123 ? white[0] : white[1], s.lengths};
  Mat3 product = Mat3::identity();
  for (;;) {
    WinLoseResult r = win_lose_step(arc, w);
    if (std::holds_alternative<win_lose::Sink>(r)) return step_result::Hole{};
    if (std::holds_alternative<win_lose::Degenerate>(r)) return step_result::Degenerate{};
    auto& moved = std::get<win_lose::Moved>(r);
    product = product * edge_matrix(arc, moved.edge);
    w = std::move(moved.next);
    if (w.vertex == white[0] || w.vertex == white[1]) break;
  }
  Perm to = w.vertex == white[0] ? Perm::P123 : Perm::P213;
  for (Letter l : kAllLetters) {
    if (source(l) == s.perm && target(l) == to && matrix_of(l) == product) {
      return step_result::Step{InductionState{to, w.point}, l};
    }
  }
  throw std::logic_error("arc_return_step: return product is not an induction matrix");
}

}  // namespace btg
