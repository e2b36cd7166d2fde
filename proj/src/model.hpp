#ifndef MIURA_SRC_MODEL_HPP
#define MIURA_SRC_MODEL_HPP

#include <array>
#include <vector>

#include "miura/search.hpp"

namespace miura::detail {

// One variable per edge. For strict queries the variable is the slot-0
// branch value and slot 1 carries its inverse; for balanced queries it is the
// edge value.
struct Model {
  Prime p;
  Kind kind;
  std::size_t edge_count = 0;
  std::vector<std::vector<bool>> allowed;             // per edge, per value
  std::vector<std::array<BranchRef, 3>> at_vertex;    // per vertex
  std::vector<BranchRef> marking;

  [[nodiscard]] Value branch_value(BranchRef b, Value x) const {
    if (kind == Kind::strict && b.slot == 1) return x == 0 ? 0 : p.value() - x;
    return x;
  }

  [[nodiscard]] bool vertex_holds(Value a, Value b, Value c) const {
    if (kind == Kind::strict) return a + b + c == p.value() + 1;
    return satisfies_star(p, a, b, c);
  }

  [[nodiscard]] ExponentVector key(const std::vector<Value>& edge_values) const {
    ExponentVector out;
    out.entries.reserve(marking.size());
    for (const BranchRef b : marking) out.entries.push_back(branch_value(b, edge_values[b.edge]));
    return out;
  }

  [[nodiscard]] Numbering materialize(const std::vector<Value>& edge_values) const;
};

// Validates the query and builds the variable domains.
Model build_model(const MarkedSemiGraph& m, const EnumerationQuery& q);

}  // namespace miura::detail

#endif  // MIURA_SRC_MODEL_HPP
