#ifndef MIURA_NUMBERING_HPP
#define MIURA_NUMBERING_HPP

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "miura/semigraph.hpp"

namespace miura {

// Numbering values live in {0, ..., p-1}. Residues mod p use the same
// representatives, so the canonical map between the two is the identity.
using Value = int;

/// An odd prime p > 2, checked at construction.
class Prime {
 public:
  explicit Prime(int p);

  [[nodiscard]] int value() const { return p_; }
  // (p - 1) / 2, the largest value the Miura map produces.
  [[nodiscard]] int half() const { return (p_ - 1) / 2; }
  [[nodiscard]] bool contains(long long m) const { return m >= 0 && m < p_; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  int p_;
};

bool is_prime(int n);

// The involution 0 -> 0, m -> p - m. Throws PreconditionError when m is not
// in 0..p-1.
Value inv(Prime p, Value m);

// Reduce an arbitrary integer to its residue in 0..p-1.
Value residue(Prime p, long long m);

/// Values read at the marked branches, in marking order. Empty when r = 0.
struct ExponentVector {
  std::vector<Value> entries;

  [[nodiscard]] std::size_t size() const { return entries.size(); }
  [[nodiscard]] bool empty() const { return entries.empty(); }
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

/// Value per branch, indexed by BranchRef::index(). Construction checks only
/// the value range; the involution constraint across each edge is a property
/// checked by is_branch_numbering().
class BranchNumbering {
 public:
  BranchNumbering(Prime p, std::vector<Value> values);

  [[nodiscard]] Prime prime() const { return p_; }
  [[nodiscard]] std::span<const Value> values() const { return values_; }
  [[nodiscard]] Value at(BranchRef b) const { return values_.at(b.index()); }

  friend bool operator==(const BranchNumbering&, const BranchNumbering&) = default;

 private:
  Prime p_;
  std::vector<Value> values_;
};

/// Value per edge, indexed by EdgeIndex.
class EdgeNumbering {
 public:
  EdgeNumbering(Prime p, std::vector<Value> values);

  [[nodiscard]] Prime prime() const { return p_; }
  [[nodiscard]] std::span<const Value> values() const { return values_; }
  [[nodiscard]] Value at(EdgeIndex e) const { return values_.at(e); }

  friend bool operator==(const EdgeNumbering&, const EdgeNumbering&) = default;

 private:
  Prime p_;
  std::vector<Value> values_;
};

// The balancing conditions at one vertex: |m2 - m3| <= m1 <= m2 + m3 and
// m1 + m2 + m3 <= p - 2. Symmetric in its three arguments.
bool satisfies_star(Prime p, Value m1, Value m2, Value m3);

// True iff `assignment` (indexed by BranchRef::index()) has one value in
// 0..p-1 per branch and its two values on every edge are exchanged by inv.
bool is_branch_numbering(const MarkedSemiGraph& m, Prime p, std::span<const Value> assignment);
bool is_branch_numbering(const MarkedSemiGraph& m, const BranchNumbering& a);

// Balanced: the balancing conditions at every vertex, a self-loop supplying
// its edge value twice. Requires a 3-regular graph.
bool is_balanced(const MarkedSemiGraph& m, const EdgeNumbering& a);

// Strict: a branch numbering with no zero value whose three branch values sum
// to p + 1 at every vertex. Requires a 3-regular graph.
bool is_strict(const MarkedSemiGraph& m, const BranchNumbering& a);

// Values on the marked (open) branches in marking order.
ExponentVector exponent_of(const MarkedSemiGraph& m, const BranchNumbering& a);

// Values on the marked leg edges in marking order.
ExponentVector radii_of(const MarkedSemiGraph& m, const EdgeNumbering& a);

// The three values seen at vertex v.
std::array<Value, 3> vertex_values(const SemiGraph& g, VertexIndex v, const BranchNumbering& a);
std::array<Value, 3> vertex_values(const SemiGraph& g, VertexIndex v, const EdgeNumbering& a);

}  // namespace miura

#endif  // MIURA_NUMBERING_HPP
