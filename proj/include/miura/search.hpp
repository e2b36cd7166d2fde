#ifndef MIURA_SEARCH_HPP
#define MIURA_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "miura/numbering.hpp"

namespace miura {

enum class Kind { balanced, strict };

std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view text);

struct EnumerationQuery {
  Prime p;
  Kind kind = Kind::strict;
  // Radii for balanced queries, exponent for strict ones; residues 0..p-1.
  std::optional<ExponentVector> constraint;
  std::optional<std::size_t> limit;
};

using Numbering = std::variant<BranchNumbering, EdgeNumbering>;
using Count = std::uint64_t;

enum class CountMethod { backtracking, contraction };

std::string_view to_string(CountMethod method);

struct CensusReport {
  Count total = 0;
  // Nonzero cells only, keyed by exponent (strict) or radii (balanced).
  std::optional<std::map<ExponentVector, Count>> by_exponent;
  CountMethod method = CountMethod::backtracking;
  std::vector<std::string> warnings;
};

struct CountOptions {
  bool by_exponent = false;
  // Workers for backtracking counts; the top-level branching is split.
  unsigned threads = 1;
  // Contraction warns when an intermediate table exceeds this many entries.
  std::size_t max_table_entries = std::size_t{1} << 22;
};

// Throws PreconditionError unless m validates and the constraint, if any, has
// length r and entries in 0..p-1.
void check_query(const MarkedSemiGraph& m, const EnumerationQuery& q);

// Return false to stop the enumeration early.
using NumberingSink = std::function<bool(const Numbering&)>;

/// Streams every numbering of the requested kind satisfying the constraint,
/// each exactly once. Order: edges in declaration order, values ascending;
/// for strict numberings the chosen value sits on slot 0 and slot 1 carries
/// its inverse. Returns the number of numberings emitted (capped by limit).
std::size_t enumerate(const MarkedSemiGraph& m, const EnumerationQuery& q, const NumberingSink& sink);
std::vector<Numbering> enumerate_all(const MarkedSemiGraph& m, const EnumerationQuery& q);

// Backtracking count. Ignores q.limit.
CensusReport count(const MarkedSemiGraph& m, const EnumerationQuery& q, const CountOptions& options = {});

/// Count by variable elimination on the factor graph whose variables are
/// edges and whose factors are the vertex constraints. Never materializes a
/// numbering. Ignores q.limit and options.threads.
CensusReport count_by_contraction(const MarkedSemiGraph& m, const EnumerationQuery& q,
                                  const CountOptions& options = {});

// Exponent of a strict numbering or radii of a balanced one.
ExponentVector constraint_key(const MarkedSemiGraph& m, const Numbering& n);

}  // namespace miura

#endif  // MIURA_SEARCH_HPP
