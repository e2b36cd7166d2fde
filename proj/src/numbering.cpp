#include "miura/numbering.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "miura/errors.hpp"

namespace miura {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(int p) : p_(p) {
  if (p <= 2 || !is_prime(p)) throw PreconditionError(std::to_string(p) + " is not an odd prime");
}

Value inv(Prime p, Value m) {
  if (!p.contains(m)) throw PreconditionError("value " + std::to_string(m) + " out of range");
  return m == 0 ? 0 : p.value() - m;
}

Value residue(Prime p, long long m) {
  const long long q = p.value();
  return static_cast<Value>(((m % q) + q) % q);
}

namespace {

void check_range(Prime p, std::span<const Value> values) {
  for (const Value v : values) {
    if (!p.contains(v)) {
      throw PreconditionError("value " + std::to_string(v) + " outside 0.." + std::to_string(p.value() - 1));
    }
  }
}

void require_three_regular(const SemiGraph& g) {
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw PreconditionError("vertex " + g.vertices()[v] + " is not trivalent");
  }
}

}  // namespace

BranchNumbering::BranchNumbering(Prime p, std::vector<Value> values) : p_(p), values_(std::move(values)) {
  if (values_.size() % 2 != 0) throw PreconditionError("branch numbering needs two values per edge");
  check_range(p_, values_);
}

EdgeNumbering::EdgeNumbering(Prime p, std::vector<Value> values) : p_(p), values_(std::move(values)) {
  check_range(p_, values_);
}

bool satisfies_star(Prime p, Value m1, Value m2, Value m3) {
  return std::abs(m2 - m3) <= m1 && m1 <= m2 + m3 && m1 + m2 + m3 <= p.value() - 2;
}

bool is_branch_numbering(const MarkedSemiGraph& m, Prime p, std::span<const Value> assignment) {
  const SemiGraph& g = m.graph();
  if (assignment.size() != g.branch_count()) return false;
  if (!std::all_of(assignment.begin(), assignment.end(), [&](Value v) { return p.contains(v); })) return false;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (assignment[2 * e + 1] != inv(p, assignment[2 * e])) return false;
  }
  return true;
}

bool is_branch_numbering(const MarkedSemiGraph& m, const BranchNumbering& a) {
  return is_branch_numbering(m, a.prime(), a.values());
}

std::array<Value, 3> vertex_values(const SemiGraph& g, VertexIndex v, const BranchNumbering& a) {
  const auto branches = g.branches_at(v);
  if (branches.size() != 3) throw PreconditionError("vertex " + g.vertices()[v] + " is not trivalent");
  return {a.at(branches[0]), a.at(branches[1]), a.at(branches[2])};
}

std::array<Value, 3> vertex_values(const SemiGraph& g, VertexIndex v, const EdgeNumbering& a) {
  const auto branches = g.branches_at(v);
  if (branches.size() != 3) throw PreconditionError("vertex " + g.vertices()[v] + " is not trivalent");
  return {a.at(branches[0].edge), a.at(branches[1].edge), a.at(branches[2].edge)};
}

bool is_balanced(const MarkedSemiGraph& m, const EdgeNumbering& a) {
  const SemiGraph& g = m.graph();
  if (a.values().size() != g.edge_count()) throw PreconditionError("edge numbering size does not match graph");
  require_three_regular(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto [m1, m2, m3] = vertex_values(g, v, a);
    if (!satisfies_star(a.prime(), m1, m2, m3)) return false;
  }
  return true;
}

bool is_strict(const MarkedSemiGraph& m, const BranchNumbering& a) {
  const SemiGraph& g = m.graph();
  if (a.values().size() != g.branch_count()) throw PreconditionError("branch numbering size does not match graph");
  require_three_regular(g);
  if (!is_branch_numbering(m, a)) return false;
  const auto values = a.values();
  if (std::find(values.begin(), values.end(), 0) != values.end()) return false;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto [m1, m2, m3] = vertex_values(g, v, a);
    if (m1 + m2 + m3 != a.prime().value() + 1) return false;
  }
  return true;
}

ExponentVector exponent_of(const MarkedSemiGraph& m, const BranchNumbering& a) {
  if (a.values().size() != m.graph().branch_count()) {
    throw PreconditionError("branch numbering size does not match graph");
  }
  ExponentVector out;
  for (const BranchRef b : m.marking()) out.entries.push_back(a.at(b));
  return out;
}

ExponentVector radii_of(const MarkedSemiGraph& m, const EdgeNumbering& a) {
  if (a.values().size() != m.graph().edge_count()) throw PreconditionError("edge numbering size does not match graph");
  ExponentVector out;
  for (const BranchRef b : m.marking()) out.entries.push_back(a.at(b.edge));
  return out;
}

}  // namespace miura
