// Brute-force reference counts. These scan every assignment and check the
// defining conditions inline; they share nothing with the search engines
// beyond the graph's incidence data.
#ifndef MIURA_TESTS_ORACLE_HPP
#define MIURA_TESTS_ORACLE_HPP

#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "miura/semigraph.hpp"

namespace miura::testing {

// Positive triples in 1..p-1 summing to p + 1.
inline long long naive_tripod_strict_count(int p) {
  long long n = 0;
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      for (int c = 1; c < p; ++c)
        if (a + b + c == p + 1) ++n;
  return n;
}

inline bool naive_star(int p, int a, int b, int c) {
  return a <= b + c && b <= a + c && c <= a + b && a + b + c <= p - 2;
}

struct NaiveResult {
  // Each solution as its full per-branch value vector (index 2e + slot).
  std::set<std::vector<int>> solutions;
  std::map<std::vector<int>, long long> by_key;
};

// Scans every value of every edge in 0..p-1. For strict, the scanned value
// sits on slot 0 and slot 1 gets p - x (0 for 0); for balanced both slots
// carry the edge value. `strict` selects the family.
inline NaiveResult naive_scan(const MarkedSemiGraph& m, int p, bool strict,
                              const std::optional<std::vector<int>>& constraint = std::nullopt) {
  const SemiGraph& g = m.graph();
  const std::size_t edges = g.edge_count();
  NaiveResult out;
  std::vector<int> x(edges, 0);
  while (true) {
    std::vector<int> branch(2 * edges);
    for (std::size_t e = 0; e < edges; ++e) {
      branch[2 * e] = x[e];
      branch[2 * e + 1] = strict ? (x[e] == 0 ? 0 : p - x[e]) : x[e];
    }
    bool ok = true;
    if (strict) {
      for (int v : branch) ok = ok && v != 0;
    }
    for (VertexIndex v = 0; ok && v < g.vertex_count(); ++v) {
      std::vector<int> vals;
      for (std::size_t e = 0; e < edges; ++e) {
        for (int s = 0; s < 2; ++s) {
          if (g.edge(e).ends[static_cast<std::size_t>(s)] == v) vals.push_back(branch[2 * e + static_cast<std::size_t>(s)]);
        }
      }
      ok = vals.size() == 3 && (strict ? vals[0] + vals[1] + vals[2] == p + 1 : naive_star(p, vals[0], vals[1], vals[2]));
    }
    std::vector<int> key;
    for (const BranchRef b : m.marking()) key.push_back(branch[b.index()]);
    if (ok && constraint) ok = key == *constraint;
    if (ok) {
      out.solutions.insert(branch);
      ++out.by_key[key];
    }
    std::size_t i = 0;
    while (i < edges && ++x[i] == p) x[i++] = 0;
    if (i == edges) break;
  }
  return out;
}

// Strict numberings by scanning every branch independently over 0..p-1
// (p^(2|E|) assignments) and checking the involution inline as well.
inline long long naive_strict_per_branch(const MarkedSemiGraph& m, int p) {
  const SemiGraph& g = m.graph();
  const std::size_t n = g.branch_count();
  std::vector<int> b(n, 0);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t e = 0; ok && e < g.edge_count(); ++e) {
      const int u = b[2 * e];
      const int w = b[2 * e + 1];
      ok = u != 0 && w != 0 && u + w == p;
    }
    for (VertexIndex v = 0; ok && v < g.vertex_count(); ++v) {
      int sum = 0;
      for (const BranchRef r : g.branches_at(v)) sum += b[r.index()];
      ok = sum == p + 1;
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++b[i] == p) b[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace miura::testing

#endif  // MIURA_TESTS_ORACLE_HPP
