#ifndef MIURA_SEMIGRAPH_HPP
#define MIURA_SEMIGRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace miura {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

// Half of an edge. Branches are addressed by (edge, slot) so that both halves
// of a self-loop remain distinguishable.
struct BranchRef {
  EdgeIndex edge = 0;
  std::uint8_t slot = 0;

  [[nodiscard]] constexpr BranchRef partner() const {
    return {edge, static_cast<std::uint8_t>(1 - slot)};
  }
  // Dense index into per-branch arrays: 2 * edge + slot.
  [[nodiscard]] constexpr std::size_t index() const { return 2 * edge + slot; }

  friend constexpr auto operator<=>(const BranchRef&, const BranchRef&) = default;
};

// Where a branch is attached: a vertex, or nullopt for the open end of a leg.
using Incidence = std::optional<VertexIndex>;

// Input description of an edge by vertex ids; a missing end is OPEN.
struct EdgeSpec {
  std::string id;
  std::array<std::optional<std::string>, 2> ends;
};

/// A finite semi-graph: vertices, and edges made of two branches each, every
/// branch attached either to a vertex or to the open point.
///
/// Immutable once constructed. Construction rejects duplicate ids and ends
/// naming unknown vertices with StructureError; anything else (degree,
/// connectivity, edges with two open ends) is left to validate().
class SemiGraph {
 public:
  struct Edge {
    std::string id;
    std::array<Incidence, 2> ends;
  };

  SemiGraph() = default;
  SemiGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] std::size_t branch_count() const { return 2 * edges_.size(); }

  [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  [[nodiscard]] std::optional<VertexIndex> find_vertex(std::string_view id) const;
  [[nodiscard]] std::optional<EdgeIndex> find_edge(std::string_view id) const;

  [[nodiscard]] Incidence incidence(BranchRef b) const { return edges_.at(b.edge).ends.at(b.slot); }

  // Branches attached to v, ordered by (edge, slot). A self-loop at v
  // contributes both of its branches.
  [[nodiscard]] std::span<const BranchRef> branches_at(VertexIndex v) const { return at_vertex_.at(v); }
  [[nodiscard]] std::size_t degree(VertexIndex v) const { return at_vertex_.at(v).size(); }

  // Branches attached to the open point, in edge order.
  [[nodiscard]] std::vector<BranchRef> open_branches() const;

  [[nodiscard]] bool is_leg(EdgeIndex e) const;
  [[nodiscard]] bool is_self_loop(EdgeIndex e) const;
  [[nodiscard]] bool has_open_pair(EdgeIndex e) const;
  [[nodiscard]] std::size_t internal_edge_count() const;

  // Every pair of distinct vertices is joined by a path of branches. Vacuous
  // for graphs with fewer than two vertices.
  [[nodiscard]] bool connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<BranchRef>> at_vertex_;
};

/// A semi-graph together with an ordering of its open branches. Position i in
/// the marking carries label i + 1.
class MarkedSemiGraph {
 public:
  MarkedSemiGraph() = default;
  // Marking by leg edge ids; the marked branch is the open branch of each leg.
  MarkedSemiGraph(SemiGraph graph, const std::vector<std::string>& marking_edges);
  MarkedSemiGraph(SemiGraph graph, std::vector<BranchRef> marking);

  [[nodiscard]] const SemiGraph& graph() const { return graph_; }
  [[nodiscard]] std::span<const BranchRef> marking() const { return marking_; }
  [[nodiscard]] std::optional<std::size_t> label_of(BranchRef b) const;

 private:
  SemiGraph graph_;
  std::vector<BranchRef> marking_;
};

struct GraphType {
  std::size_t g = 0;
  std::size_t r = 0;
  friend bool operator==(const GraphType&, const GraphType&) = default;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::optional<GraphType> type;  // set when every check passes

  [[nodiscard]] bool valid() const;
  [[nodiscard]] const ValidationCheck* find(std::string_view name) const;
};

// Checks, in order: "incidence", "three_regular", "connected", "marking",
// "stable".
ValidationReport validate(const MarkedSemiGraph& m);

// Type (g, r) with g = 1 - |V| + |E| - r. Throws PreconditionError unless m
// passes validate().
GraphType graph_type(const MarkedSemiGraph& m);

// First Betti number of the graph with legs removed. Requires a connected
// graph.
std::size_t betti(const MarkedSemiGraph& m);

/// A closed path of branches (b_1, ..., b_l) from `base` to itself in which no
/// step immediately reverses the previous one, cyclically.
struct ReducedLoop {
  std::vector<BranchRef> branches;
  VertexIndex base = 0;
  // The requested base vertex lies on no reduced loop; `base` is another vertex.
  bool rebased = false;
};

// Empty when the graph carries no cycle (g = 0).
std::optional<ReducedLoop> reduced_loop(const MarkedSemiGraph& m, VertexIndex base);

// True when `path` is a path from its first branch's vertex back to itself
// whose consecutive branches never reverse each other, indices taken
// cyclically.
bool is_reduced_loop(const SemiGraph& g, std::span<const BranchRef> path);

namespace builders {

MarkedSemiGraph tripod();
MarkedSemiGraph theta();
MarkedSemiGraph dumbbell();
MarkedSemiGraph cycle_with_legs(std::size_t n);
MarkedSemiGraph loop_with_leg();

}  // namespace builders

}  // namespace miura

#endif  // MIURA_SEMIGRAPH_HPP
