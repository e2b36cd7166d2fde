#include "miura/semigraph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "miura/errors.hpp"

namespace miura {

SemiGraph::SemiGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)), at_vertex_(vertices_.size()) {
  std::unordered_map<std::string_view, VertexIndex> vertex_ids;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (!vertex_ids.emplace(vertices_[v], v).second) {
      throw StructureError("duplicate vertex id '" + vertices_[v] + "'");
    }
  }

  std::unordered_set<std::string_view> edge_ids;
  edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    Edge edge{spec.id, {}};
    for (std::size_t slot = 0; slot < 2; ++slot) {
      if (!spec.ends[slot]) continue;
      auto it = vertex_ids.find(*spec.ends[slot]);
      if (it == vertex_ids.end()) {
        throw StructureError("edge '" + spec.id + "' refers to unknown vertex '" + *spec.ends[slot] + "'");
      }
      edge.ends[slot] = it->second;
    }
    edges_.push_back(std::move(edge));
  }
  for (const auto& edge : edges_) {
    if (!edge_ids.insert(edge.id).second) {
      throw StructureError("duplicate edge id '" + edge.id + "'");
    }
  }

  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    for (std::uint8_t slot = 0; slot < 2; ++slot) {
      if (const auto v = edges_[e].ends[slot]) at_vertex_[*v].push_back({e, slot});
    }
  }
}

std::optional<VertexIndex> SemiGraph::find_vertex(std::string_view id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<EdgeIndex> SemiGraph::find_edge(std::string_view id) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
  if (it == edges_.end()) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

std::vector<BranchRef> SemiGraph::open_branches() const {
  std::vector<BranchRef> out;
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    for (std::uint8_t slot = 0; slot < 2; ++slot) {
      if (!edges_[e].ends[slot]) out.push_back({e, slot});
    }
  }
  return out;
}

bool SemiGraph::is_leg(EdgeIndex e) const {
  const auto& ends = edges_.at(e).ends;
  return ends[0].has_value() != ends[1].has_value();
}

bool SemiGraph::is_self_loop(EdgeIndex e) const {
  const auto& ends = edges_.at(e).ends;
  return ends[0] && ends[1] && *ends[0] == *ends[1];
}

bool SemiGraph::has_open_pair(EdgeIndex e) const {
  const auto& ends = edges_.at(e).ends;
  return !ends[0] && !ends[1];
}

std::size_t SemiGraph::internal_edge_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) {
    return e.ends[0] && e.ends[1];
  }));
}

bool SemiGraph::connected() const {
  if (vertices_.size() < 2) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::queue<VertexIndex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const VertexIndex v = frontier.front();
    frontier.pop();
    for (const BranchRef b : at_vertex_[v]) {
      const auto w = incidence(b.partner());
      if (w && !seen[*w]) {
        seen[*w] = true;
        ++reached;
        frontier.push(*w);
      }
    }
  }
  return reached == vertices_.size();
}

MarkedSemiGraph::MarkedSemiGraph(SemiGraph graph, const std::vector<std::string>& marking_edges)
    : graph_(std::move(graph)) {
  marking_.reserve(marking_edges.size());
  for (const auto& id : marking_edges) {
    const auto e = graph_.find_edge(id);
    if (!e) throw StructureError("marking refers to unknown edge '" + id + "'");
    if (!graph_.is_leg(*e)) throw StructureError("marking refers to non-leg edge '" + id + "'");
    const auto& ends = graph_.edge(*e).ends;
    marking_.push_back({*e, static_cast<std::uint8_t>(ends[0] ? 1 : 0)});
  }
}

MarkedSemiGraph::MarkedSemiGraph(SemiGraph graph, std::vector<BranchRef> marking)
    : graph_(std::move(graph)), marking_(std::move(marking)) {
  for (const BranchRef b : marking_) {
    if (b.edge >= graph_.edge_count() || b.slot > 1) throw StructureError("marking refers to unknown branch");
    if (graph_.incidence(b)) {
      throw StructureError("marking refers to branch of '" + graph_.edge(b.edge).id + "' that is not open");
    }
  }
}

std::optional<std::size_t> MarkedSemiGraph::label_of(BranchRef b) const {
  auto it = std::find(marking_.begin(), marking_.end(), b);
  if (it == marking_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - marking_.begin()) + 1;
}

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

// g by the type formula; may be negative for graphs failing validation.
long long genus_formula(const SemiGraph& g) {
  const auto v = static_cast<long long>(g.vertex_count());
  const auto e = static_cast<long long>(g.edge_count());
  const auto r = static_cast<long long>(g.open_branches().size());
  return 1 - v + e - r;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

ValidationReport validate(const MarkedSemiGraph& m) {
  const SemiGraph& g = m.graph();
  ValidationReport report;

  {
    std::vector<std::string> bad;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (g.has_open_pair(e)) bad.push_back("edge " + g.edge(e).id + " has both branches open");
    }
    report.checks.push_back({"incidence", bad.empty(), join(bad)});
  }
  {
    std::vector<std::string> bad;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 3) {
        bad.push_back("vertex " + g.vertices()[v] + " has degree " + std::to_string(g.degree(v)));
      }
    }
    report.checks.push_back({"three_regular", bad.empty(), join(bad)});
  }
  {
    const bool ok = g.connected();
    report.checks.push_back({"connected", ok, ok ? "" : "graph is not connected"});
  }
  {
    std::vector<std::string> bad;
    const auto open = g.open_branches();
    for (const BranchRef b : open) {
      const auto n = std::count(m.marking().begin(), m.marking().end(), b);
      if (n != 1) {
        bad.push_back("leg " + g.edge(b.edge).id + " marked " + std::to_string(n) + " times");
      }
    }
    if (bad.empty() && m.marking().size() != open.size()) bad.emplace_back("marking length differs from leg count");
    report.checks.push_back({"marking", bad.empty(), join(bad)});
  }
  const long long genus = genus_formula(g);
  const auto r = static_cast<long long>(g.open_branches().size());
  {
    const bool ok = 2 * genus - 2 + r > 0;
    report.checks.push_back(
        {"stable", ok, ok ? "" : "2g - 2 + r = " + std::to_string(2 * genus - 2 + r) + " is not positive"});
  }

  if (report.valid()) {
    report.type = GraphType{static_cast<std::size_t>(genus), static_cast<std::size_t>(r)};
  }
  return report;
}

GraphType graph_type(const MarkedSemiGraph& m) {
  const auto report = validate(m);
  if (!report.type) throw PreconditionError("graph_type requires a valid marked semi-graph");
  return *report.type;
}

std::size_t betti(const MarkedSemiGraph& m) {
  const SemiGraph& g = m.graph();
  if (!g.connected()) throw PreconditionError("betti requires a connected graph");
  if (g.vertex_count() == 0) return 0;
  return g.internal_edge_count() + 1 - g.vertex_count();
}

bool is_reduced_loop(const SemiGraph& g, std::span<const BranchRef> path) {
  if (path.empty()) return false;
  const std::size_t l = path.size();
  for (std::size_t j = 0; j < l; ++j) {
    const BranchRef cur = path[j];
    const BranchRef next = path[(j + 1) % l];
    if (cur.edge >= g.edge_count() || cur.slot > 1) return false;
    const auto here = g.incidence(cur);
    const auto there = g.incidence(cur.partner());
    if (!here || !there) return false;
    if (g.incidence(next) != there) return false;
    if (next == cur.partner()) return false;
  }
  return true;
}

namespace {

// Depth-first search for a simple path from `at` back to `target` that avoids
// `used` edges and revisits no vertex.
bool extend_to(const SemiGraph& g, VertexIndex at, VertexIndex target, std::vector<bool>& used_edge,
               std::vector<bool>& visited, std::vector<BranchRef>& path) {
  for (const BranchRef b : g.branches_at(at)) {
    if (used_edge[b.edge]) continue;
    const auto w = g.incidence(b.partner());
    if (!w) continue;
    if (*w == target) {
      path.push_back(b);
      return true;
    }
    if (visited[*w]) continue;
    used_edge[b.edge] = true;
    visited[*w] = true;
    path.push_back(b);
    if (extend_to(g, *w, target, used_edge, visited, path)) return true;
    path.pop_back();
    visited[*w] = false;
    used_edge[b.edge] = false;
  }
  return false;
}

std::optional<std::vector<BranchRef>> cycle_through(const SemiGraph& g, VertexIndex v) {
  for (const BranchRef b : g.branches_at(v)) {
    if (g.is_self_loop(b.edge)) return std::vector<BranchRef>{b};
  }
  for (const BranchRef b : g.branches_at(v)) {
    const auto w = g.incidence(b.partner());
    if (!w) continue;
    std::vector<bool> used_edge(g.edge_count(), false);
    std::vector<bool> visited(g.vertex_count(), false);
    used_edge[b.edge] = true;
    visited[v] = true;
    visited[*w] = true;
    std::vector<BranchRef> path{b};
    if (extend_to(g, *w, v, used_edge, visited, path)) return path;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ReducedLoop> reduced_loop(const MarkedSemiGraph& m, VertexIndex base) {
  const SemiGraph& g = m.graph();
  if (base >= g.vertex_count()) throw PreconditionError("reduced_loop: unknown base vertex");
  if (auto path = cycle_through(g, base)) return ReducedLoop{std::move(*path), base, false};
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (v == base) continue;
    if (auto path = cycle_through(g, v)) return ReducedLoop{std::move(*path), v, true};
  }
  return std::nullopt;
}

}  // namespace miura
