#include <algorithm>
#include <thread>

#include "miura/errors.hpp"
#include "miura/search.hpp"
#include "model.hpp"

namespace miura {

std::string_view to_string(Kind kind) { return kind == Kind::strict ? "strict" : "balanced"; }

std::optional<Kind> parse_kind(std::string_view text) {
  if (text == "strict") return Kind::strict;
  if (text == "balanced") return Kind::balanced;
  return std::nullopt;
}

std::string_view to_string(CountMethod method) {
  return method == CountMethod::backtracking ? "backtracking" : "contraction";
}

void check_query(const MarkedSemiGraph& m, const EnumerationQuery& q) {
  const auto report = validate(m);
  if (!report.valid()) {
    for (const auto& c : report.checks) {
      if (!c.passed) throw PreconditionError("graph fails check '" + c.name + "': " + c.detail);
    }
  }
  if (q.constraint) {
    if (q.constraint->size() != m.marking().size()) {
      throw PreconditionError("constraint has " + std::to_string(q.constraint->size()) + " entries but the graph has " +
                              std::to_string(m.marking().size()) + " marked points");
    }
    for (const Value v : q.constraint->entries) {
      if (!q.p.contains(v)) throw PreconditionError("constraint entry " + std::to_string(v) + " is not a residue");
    }
  }
}

ExponentVector constraint_key(const MarkedSemiGraph& m, const Numbering& n) {
  return std::visit(
      [&](const auto& numbering) {
        if constexpr (std::is_same_v<std::decay_t<decltype(numbering)>, BranchNumbering>) {
          return exponent_of(m, numbering);
        } else {
          return radii_of(m, numbering);
        }
      },
      n);
}

namespace detail {

Model build_model(const MarkedSemiGraph& m, const EnumerationQuery& q) {
  check_query(m, q);
  const SemiGraph& g = m.graph();
  const int p = q.p.value();

  Model model{q.p, q.kind, g.edge_count(), {}, {}, {m.marking().begin(), m.marking().end()}};
  model.allowed.assign(g.edge_count(), std::vector<bool>(static_cast<std::size_t>(p), false));
  for (auto& mask : model.allowed) {
    // Balanced: p - 1 already breaks the sum bound at the attached vertex.
    const int lo = q.kind == Kind::strict ? 1 : 0;
    const int hi = q.kind == Kind::strict ? p - 1 : p - 2;
    for (int x = lo; x <= hi; ++x) mask[static_cast<std::size_t>(x)] = true;
  }
  if (q.constraint) {
    for (std::size_t i = 0; i < model.marking.size(); ++i) {
      const BranchRef b = model.marking[i];
      const Value want = q.constraint->entries[i];
      const Value x = (q.kind == Kind::strict && b.slot == 1) ? inv(q.p, want) : want;
      auto& mask = model.allowed[b.edge];
      for (int y = 0; y < p; ++y) {
        if (y != x) mask[static_cast<std::size_t>(y)] = false;
      }
    }
  }
  model.at_vertex.reserve(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto bs = g.branches_at(v);
    model.at_vertex.push_back({bs[0], bs[1], bs[2]});
  }
  return model;
}

Numbering Model::materialize(const std::vector<Value>& edge_values) const {
  if (kind == Kind::balanced) return EdgeNumbering(p, edge_values);
  std::vector<Value> branches;
  branches.reserve(2 * edge_values.size());
  for (const Value x : edge_values) {
    branches.push_back(x);
    branches.push_back(x == 0 ? 0 : p.value() - x);
  }
  return BranchNumbering(p, std::move(branches));
}

}  // namespace detail

namespace {

constexpr Value kUnset = -1;

class Backtracker {
 public:
  explicit Backtracker(const detail::Model& model)
      : model_(model), values_(model.edge_count, kUnset), edge_vertices_(model.edge_count) {
    for (VertexIndex v = 0; v < model.at_vertex.size(); ++v) {
      for (const BranchRef b : model.at_vertex[v]) {
        auto& list = edge_vertices_[b.edge];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
  }

  bool propagate_all() {
    std::vector<VertexIndex> all(model_.at_vertex.size());
    for (VertexIndex v = 0; v < all.size(); ++v) all[v] = v;
    return propagate(std::move(all));
  }

  [[nodiscard]] std::optional<EdgeIndex> next_free() const {
    for (EdgeIndex e = 0; e < values_.size(); ++e) {
      if (values_[e] == kUnset) return e;
    }
    return std::nullopt;
  }

  // Assigns e = x and propagates; on conflict the state is rolled back.
  bool try_assign(EdgeIndex e, Value x) {
    const std::size_t mark = trail_.size();
    assign(e, x);
    if (propagate(edge_vertices_[e])) return true;
    undo(mark);
    return false;
  }

  // Depth-first search below the current state. Returns false if `visit`
  // asked to stop.
  template <class Visit>
  bool search(Visit& visit) {
    const auto e = next_free();
    if (!e) return visit(values_);
    const auto& mask = model_.allowed[*e];
    for (Value x = 0; x < model_.p.value(); ++x) {
      if (!mask[static_cast<std::size_t>(x)]) continue;
      const std::size_t mark = trail_.size();
      if (!try_assign(*e, x)) continue;
      const bool go_on = search(visit);
      undo(mark);
      if (!go_on) return false;
    }
    return true;
  }

 private:
  struct Examination {
    bool conflict = false;
    std::optional<std::pair<EdgeIndex, Value>> forced;
  };

  void assign(EdgeIndex e, Value x) {
    values_[e] = x;
    trail_.push_back(e);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  bool allowed(EdgeIndex e, Value x) const {
    return model_.p.contains(x) && model_.allowed[e][static_cast<std::size_t>(x)];
  }

  // Necessary conditions at v given the current partial assignment, plus the
  // value forced on a single remaining branch.
  Examination examine(VertexIndex v) const {
    const auto& bs = model_.at_vertex[v];
    const int p = model_.p.value();
    int known_sum = 0;
    int known = 0;
    std::array<Value, 3> vals{};
    std::optional<BranchRef> single;
    int loop_branches = 0;
    for (const BranchRef b : bs) {
      const Value x = values_[b.edge];
      if (x != kUnset) {
        vals[static_cast<std::size_t>(known++)] = model_.branch_value(b, x);
        known_sum += vals[static_cast<std::size_t>(known - 1)];
        continue;
      }
      const bool loop = std::find(bs.begin(), bs.end(), b.partner()) != bs.end();
      if (loop) {
        ++loop_branches;
      } else {
        single = b;
      }
    }
    const int loops = loop_branches / 2;
    const int singles = 3 - known - loop_branches;

    Examination out;
    if (model_.kind == Kind::strict) {
      // A free self-loop contributes x + (p - x) = p.
      const int base = known_sum + loops * p;
      if (base + singles > p + 1 || base + singles * (p - 1) < p + 1) {
        out.conflict = true;
      } else if (singles == 1) {
        const Value need = p + 1 - base;
        const Value x = single->slot == 0 ? need : p - need;
        if (!allowed(single->edge, x)) {
          out.conflict = true;
        } else {
          out.forced = std::pair{single->edge, x};
        }
      }
      return out;
    }

    if (known == 3) {
      out.conflict = !satisfies_star(model_.p, vals[0], vals[1], vals[2]);
      return out;
    }
    if (known_sum > p - 2) {
      out.conflict = true;
      return out;
    }
    if (singles == 1 && loops == 0) {
      const Value lo = std::abs(vals[0] - vals[1]);
      const Value hi = std::min(vals[0] + vals[1], p - 2 - vals[0] - vals[1]);
      int candidates = 0;
      Value last = kUnset;
      for (Value x = lo; x <= hi; ++x) {
        if (allowed(single->edge, x)) {
          ++candidates;
          last = x;
        }
      }
      if (candidates == 0) {
        out.conflict = true;
      } else if (candidates == 1) {
        out.forced = std::pair{single->edge, last};
      }
    } else if (loops == 1 && singles == 0) {
      // (m, m, x): x <= 2m and 2m + x <= p - 2.
      const Value x = vals[0];
      out.conflict = (x + 1) / 2 > (p - 2 - x) / 2;
    }
    return out;
  }

  bool propagate(std::vector<VertexIndex> work) {
    while (!work.empty()) {
      const VertexIndex v = work.back();
      work.pop_back();
      const auto ex = examine(v);
      if (ex.conflict) return false;
      if (ex.forced) {
        const auto [e, x] = *ex.forced;
        assign(e, x);
        for (const VertexIndex w : edge_vertices_[e]) work.push_back(w);
      }
    }
    return true;
  }

  const detail::Model& model_;
  std::vector<Value> values_;
  std::vector<EdgeIndex> trail_;
  std::vector<std::vector<VertexIndex>> edge_vertices_;
};

struct Tally {
  Count total = 0;
  std::map<ExponentVector, Count> cells;
};

}  // namespace

std::size_t enumerate(const MarkedSemiGraph& m, const EnumerationQuery& q, const NumberingSink& sink) {
  const auto model = detail::build_model(m, q);
  std::size_t emitted = 0;
  if (q.limit && *q.limit == 0) return 0;
  Backtracker bt(model);
  if (!bt.propagate_all()) return 0;
  auto visit = [&](const std::vector<Value>& values) {
    ++emitted;
    const bool keep = sink(model.materialize(values));
    return keep && !(q.limit && emitted >= *q.limit);
  };
  bt.search(visit);
  return emitted;
}

std::vector<Numbering> enumerate_all(const MarkedSemiGraph& m, const EnumerationQuery& q) {
  std::vector<Numbering> out;
  enumerate(m, q, [&](const Numbering& n) {
    out.push_back(n);
    return true;
  });
  return out;
}

CensusReport count(const MarkedSemiGraph& m, const EnumerationQuery& q, const CountOptions& options) {
  const auto model = detail::build_model(m, q);
  CensusReport report;
  report.method = CountMethod::backtracking;

  Backtracker root(model);
  std::vector<Tally> tallies;
  if (root.propagate_all()) {
    const auto first = root.next_free();
    std::vector<Value> candidates;
    if (first) {
      for (Value x = 0; x < q.p.value(); ++x) {
        if (model.allowed[*first][static_cast<std::size_t>(x)]) candidates.push_back(x);
      }
    }
    const unsigned workers =
        first ? std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(candidates.size()))) : 1u;
    tallies.resize(workers);

    auto work = [&](unsigned rank) {
      Tally& tally = tallies[rank];
      auto visit = [&](const std::vector<Value>& values) {
        ++tally.total;
        if (options.by_exponent) ++tally.cells[model.key(values)];
        return true;
      };
      if (!first) {
        // Root propagation fixed every edge.
        Backtracker bt = root;
        bt.search(visit);
        return;
      }
      for (std::size_t i = rank; i < candidates.size(); i += workers) {
        Backtracker bt = root;
        if (bt.try_assign(*first, candidates[i])) bt.search(visit);
      }
    };

    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned rank = 0; rank < workers; ++rank) pool.emplace_back(work, rank);
    }
  }

  if (options.by_exponent) report.by_exponent.emplace();
  for (const auto& t : tallies) {
    report.total += t.total;
    if (options.by_exponent) {
      for (const auto& [key, n] : t.cells) (*report.by_exponent)[key] += n;
    }
  }
  return report;
}

}  // namespace miura
