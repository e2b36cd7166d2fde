#ifndef MIURA_VERIFY_HPP
#define MIURA_VERIFY_HPP

#include <span>
#include <string>

#include "miura/io.hpp"
#include "miura/numbering.hpp"
#include "miura/semigraph.hpp"

namespace miura {

enum class Verdict { pass, fail, not_applicable };

std::string_view to_string(Verdict v);

/// Outcome of checking one claim on one (graph, p) cell.
///
/// A failing report always carries a witness: a JSON payload holding the
/// graph, p, the check that failed and the offending data, which
/// replay_witness() re-evaluates from scratch.
struct TheoremReport {
  std::string theorem;
  std::string graph;  // label of the input graph, empty when none
  std::optional<int> p;
  std::string claim;
  std::string observed;
  Verdict verdict = Verdict::pass;
  Json witness = Json::object();

  [[nodiscard]] bool passed() const { return verdict == Verdict::pass; }
  [[nodiscard]] Json to_json() const;
};

// Strict-iff-balanced-image on every tripod triple with p | (sum - 1).
TheoremReport verify_pp004(Prime p);

// Genus bound and genus-one census. g >= 2: no strict numbering (both
// counting methods). g = 1: exactly p - 1, all of exponent (p-1, ..., p-1),
// and the constrained count at that exponent equals the full count.
// g = 0: not applicable.
TheoremReport verify_p048(const MarkedSemiGraph& m, Prime p, std::string label = {});

// Genus-one structure: along the cycle every outgoing branch carries one
// value a (partners p - a, side branches 1); every vertex off the cycle
// carries the multiset [1, 1, p - 1]; a runs over 1..p-1 exactly once.
// Not applicable unless g = 1.
TheoremReport verify_p048_structure(const MarkedSemiGraph& m, Prime p, std::string label = {});

// Over every strict numbering: mu agrees across each edge, the image is
// balanced, and the image's radii are mu of the exponent.
TheoremReport verify_miura(const MarkedSemiGraph& m, Prime p, std::string label = {});

// The same checks over caller-supplied branch numberings, taken as given.
TheoremReport verify_miura_on(const MarkedSemiGraph& m, std::span<const BranchNumbering> numberings,
                              std::string label = {});

struct FigureFixture {
  MarkedSemiGraph graph;
  BranchNumbering numbering;
  std::vector<Value> expected_image;
};

// Type (0, 5) tree with three trivalent vertices carrying a strict
// 11-branch numbering; branch pairs (10,1), (9,2), (9,2), (3,8), (7,4),
// (6,5), (3,8) in edge order.
FigureFixture figure_fixture();
TheoremReport verify_figure_vector();

// Re-evaluates a failing report's witness through the numbering predicates.
// True when the recorded failure is reproduced.
bool replay_witness(const TheoremReport& report);

}  // namespace miura

#endif  // MIURA_VERIFY_HPP
