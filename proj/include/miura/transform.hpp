#ifndef MIURA_TRANSFORM_HPP
#define MIURA_TRANSFORM_HPP

#include <array>
#include <vector>

#include "miura/numbering.hpp"

namespace miura {

// (p - m - 1) / 2 for even m, (m - 1) / 2 for odd m. Always <= (p - 1) / 2.
Value mu_value(Prime p, Value m);

// Componentwise mu_value.
ExponentVector mu_of(Prime p, const ExponentVector& v);

/// Sends a strict branch numbering to the edge numbering carrying mu_value of
/// either branch on each edge.
///
/// Throws PreconditionError when `a` is not strict. Both branches of every
/// edge are mapped and compared; a mismatch throws std::logic_error, since
/// m and p - m always have opposite parity for odd p.
EdgeNumbering miura_transform(const MarkedSemiGraph& m, const BranchNumbering& a);

using Triple = std::array<Value, 3>;

struct TripodTriple {
  Triple values;  // vertex-side branch values of legs 1, 2, 3
  bool strict = false;
};

// All triples in {0..p-1}^3 with p | (m1 + m2 + m3 - 1), lexicographic, each
// flagged with whether it is a strict numbering of the tripod.
std::vector<TripodTriple> tripod_strict_set(Prime p);

struct TripodCheck {
  bool holds = true;
  std::size_t triples_checked = 0;
  std::vector<Triple> counterexamples;
};

// For every triple of tripod_strict_set(p): strict iff its mu-image is
// balanced on the tripod.
TripodCheck check_pp004(Prime p);

// The tripod numbering whose vertex-side values are `t` (open sides inv(t)).
BranchNumbering tripod_branch_numbering(Prime p, const Triple& t);

}  // namespace miura

#endif  // MIURA_TRANSFORM_HPP
