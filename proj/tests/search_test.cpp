#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "corpus.hpp"
#include "miura/errors.hpp"
#include "miura/io.hpp"
#include "miura/search.hpp"
#include "oracle.hpp"

namespace miura {
namespace {

using testing::corpus;
using testing::naive_scan;

EnumerationQuery query(int p, Kind kind, std::optional<std::vector<Value>> constraint = std::nullopt) {
  EnumerationQuery q{Prime{p}, kind, std::nullopt, std::nullopt};
  if (constraint) q.constraint = ExponentVector{*constraint};
  return q;
}

// Per-branch value vector of a numbering, in the oracle's layout.
std::vector<int> branch_layout(const Numbering& n) {
  if (const auto* b = std::get_if<BranchNumbering>(&n)) return {b->values().begin(), b->values().end()};
  const auto& e = std::get<EdgeNumbering>(n);
  std::vector<int> out;
  for (Value v : e.values()) out.insert(out.end(), {v, v});
  return out;
}

TEST(Enumerate, TripodStrictP5) {
  EXPECT_EQ(enumerate_all(builders::tripod(), query(5, Kind::strict)).size(), 10u);
}

TEST(Enumerate, LoopWithLegStrictP7) {
  const auto all = enumerate_all(builders::loop_with_leg(), query(7, Kind::strict));
  ASSERT_EQ(all.size(), 6u);
  for (int a = 1; a <= 6; ++a) {
    const auto& n = std::get<BranchNumbering>(all[static_cast<std::size_t>(a - 1)]);
    EXPECT_EQ(std::vector<Value>(n.values().begin(), n.values().end()), (std::vector<Value>{a, 7 - a, 1, 6}));
  }
}

TEST(Enumerate, ThetaStrictP11IsEmpty) {
  EXPECT_TRUE(enumerate_all(builders::theta(), query(11, Kind::strict)).empty());
}

TEST(Enumerate, LimitGivesPrefix) {
  const auto m = builders::cycle_with_legs(2);
  const auto all = enumerate_all(m, query(7, Kind::balanced));
  ASSERT_GT(all.size(), 5u);
  for (std::size_t limit : {std::size_t{0}, std::size_t{1}, std::size_t{5}, all.size() + 3}) {
    auto q = query(7, Kind::balanced);
    q.limit = limit;
    const auto some = enumerate_all(m, q);
    ASSERT_EQ(some.size(), std::min(limit, all.size()));
    for (std::size_t i = 0; i < some.size(); ++i) EXPECT_EQ(some[i], all[i]);
  }
}

TEST(Enumerate, SinkCanStopEarly) {
  std::size_t seen = 0;
  const auto emitted = enumerate(builders::tripod(), query(11, Kind::strict), [&](const Numbering&) {
    return ++seen < 4;
  });
  EXPECT_EQ(seen, 4u);
  EXPECT_EQ(emitted, 4u);
}

TEST(Enumerate, RejectsBadQueries) {
  EXPECT_THROW(enumerate_all(builders::tripod(), query(5, Kind::strict, std::vector<Value>{1, 2})),
               PreconditionError);
  EXPECT_THROW(enumerate_all(builders::tripod(), query(5, Kind::strict, std::vector<Value>{1, 2, 5})),
               PreconditionError);
  MarkedSemiGraph bad(SemiGraph({"v"}, {{"e", {"v", "v"}}}), std::vector<std::string>{});
  EXPECT_THROW(enumerate_all(bad, query(5, Kind::balanced)), PreconditionError);
  EXPECT_THROW(count(bad, query(5, Kind::balanced)), PreconditionError);
}

TEST(Enumerate, OutputIsLexicographicByEdgeValue) {
  for (const auto& named : corpus()) {
    for (Kind kind : {Kind::strict, Kind::balanced}) {
      const auto all = enumerate_all(named.graph, query(5, kind));
      for (std::size_t i = 1; i < all.size(); ++i) {
        auto key = [&](const Numbering& n) {
          const auto v = branch_layout(n);
          std::vector<int> edges;
          for (std::size_t e = 0; e < v.size(); e += 2) edges.push_back(v[e]);
          return edges;
        };
        EXPECT_LT(key(all[i - 1]), key(all[i])) << named.name;
      }
    }
  }
}

TEST(Enumerate, DeterministicOutputStream) {
  auto stream = [](const MarkedSemiGraph& m, Kind kind) {
    std::ostringstream out;
    enumerate(m, query(7, kind), [&](const Numbering& n) {
      out << write_numbering(m, n);
      return true;
    });
    return out.str();
  };
  for (const auto& named : corpus()) {
    for (Kind kind : {Kind::strict, Kind::balanced}) {
      EXPECT_EQ(stream(named.graph, kind), stream(named.graph, kind)) << named.name;
    }
  }
}

TEST(Count, Examples) {
  EXPECT_EQ(count(builders::tripod(), query(7, Kind::strict)).total, 21u);
  EXPECT_EQ(count(builders::cycle_with_legs(3), query(5, Kind::strict)).total, 4u);
  const auto oracle = naive_scan(builders::tripod(), 5, false);
  EXPECT_EQ(count(builders::tripod(), query(5, Kind::balanced)).total, oracle.solutions.size());
  EXPECT_EQ(oracle.solutions.size(), 5u);
}

// Balanced counts frozen from the brute-force oracle (tests/oracle.hpp).
TEST(Count, FrozenBalancedCensus) {
  struct Row {
    MarkedSemiGraph graph;
    std::array<Count, 4> expect;  // p = 3, 5, 7, 11
  };
  const std::vector<Row> rows{
      {builders::tripod(), {1, 5, 14, 55}},        {builders::theta(), {1, 5, 14, 55}},
      {builders::dumbbell(), {1, 5, 14, 55}},      {builders::loop_with_leg(), {1, 3, 6, 15}},
      {builders::cycle_with_legs(2), {1, 7, 26, 155}}, {builders::cycle_with_legs(3), {1, 18, 129, 1884}},
  };
  const std::array<int, 4> primes{3, 5, 7, 11};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      EXPECT_EQ(count(row.graph, query(primes[i], Kind::balanced)).total, row.expect[i]);
    }
  }
}

TEST(Count, ThreadCountDoesNotChangeResult) {
  for (const auto& named : corpus()) {
    for (Kind kind : {Kind::strict, Kind::balanced}) {
      const auto one = count(named.graph, query(7, kind), {true, 1});
      const auto four = count(named.graph, query(7, kind), {true, 4});
      EXPECT_EQ(one.total, four.total) << named.name;
      EXPECT_EQ(one.by_exponent, four.by_exponent) << named.name;
    }
  }
}

TEST(Count, ByExponentSumsToTotal) {
  for (const auto& named : corpus()) {
    for (Kind kind : {Kind::strict, Kind::balanced}) {
      const auto report = count(named.graph, query(5, kind), {true, 2});
      ASSERT_TRUE(report.by_exponent.has_value());
      Count sum = 0;
      for (const auto& [key, n] : *report.by_exponent) {
        EXPECT_GT(n, 0u);
        EXPECT_EQ(key.size(), named.graph.marking().size());
        sum += n;
      }
      EXPECT_EQ(sum, report.total) << named.name;
    }
  }
}

TEST(Count, RankZeroByExponentIsSingleCell) {
  const auto report = count(builders::theta(), query(7, Kind::balanced), {true, 1});
  ASSERT_EQ(report.by_exponent->size(), 1u);
  EXPECT_TRUE(report.by_exponent->begin()->first.empty());
  EXPECT_EQ(report.by_exponent->begin()->second, report.total);
}

// Soundness and completeness against the naive scan, for graphs with at most
// four edges and p up to 13, with and without constraints.
TEST(SearchProperty, MatchesNaiveScanOnSmallGraphs) {
  for (const auto& named : corpus()) {
    const auto& m = named.graph;
    if (m.graph().edge_count() > 4) continue;
    for (int pv : {3, 5, 7, 11, 13}) {
      for (Kind kind : {Kind::strict, Kind::balanced}) {
        const bool strict = kind == Kind::strict;
        const auto oracle = naive_scan(m, pv, strict);
        std::set<std::vector<int>> got;
        for (const auto& n : enumerate_all(m, query(pv, kind))) {
          if (strict) {
            EXPECT_TRUE(is_strict(m, std::get<BranchNumbering>(n)));
          } else {
            EXPECT_TRUE(is_balanced(m, std::get<EdgeNumbering>(n)));
          }
          EXPECT_TRUE(got.insert(branch_layout(n)).second) << "duplicate in " << named.name;
        }
        EXPECT_EQ(got, oracle.solutions) << named.name << " p=" << pv << " " << to_string(kind);
        EXPECT_EQ(count(m, query(pv, kind)).total, oracle.solutions.size());

        for (const auto& [key, expected] : oracle.by_key) {
          const auto constrained = enumerate_all(m, query(pv, kind, key));
          EXPECT_EQ(static_cast<long long>(constrained.size()), expected);
          for (const auto& n : constrained) EXPECT_EQ(constraint_key(m, n).entries, key);
        }
      }
    }
  }
}

TEST(SearchProperty, StrictMatchesPerBranchScan) {
  for (const auto& name : {"tripod", "theta", "loop_with_leg", "cycle1", "dumbbell"}) {
    for (const auto& named : corpus()) {
      if (named.name != name) continue;
      for (int pv : {3, 5, 7}) {
        EXPECT_EQ(static_cast<long long>(count(named.graph, query(pv, Kind::strict)).total),
                  testing::naive_strict_per_branch(named.graph, pv))
            << name << " p=" << pv;
      }
    }
  }
}

TEST(SearchProperty, LargerGraphsMatchNaiveCounts) {
  for (const auto& named : corpus()) {
    const auto& m = named.graph;
    if (m.graph().edge_count() <= 4 || m.graph().edge_count() > 7) continue;
    for (int pv : {3, 5}) {
      for (Kind kind : {Kind::strict, Kind::balanced}) {
        const auto oracle = naive_scan(m, pv, kind == Kind::strict);
        EXPECT_EQ(count(m, query(pv, kind)).total, oracle.solutions.size()) << named.name;
      }
    }
  }
}

// Summing constrained counts over every r-tuple recovers the unconstrained
// count, for r <= 2 and p <= 7.
TEST(SearchProperty, ConstrainedCountsPartitionTotal) {
  for (const auto& named : corpus()) {
    const auto& m = named.graph;
    const std::size_t r = m.marking().size();
    if (r > 2) continue;
    for (int pv : {3, 5, 7}) {
      for (Kind kind : {Kind::strict, Kind::balanced}) {
        const auto total = count(m, query(pv, kind)).total;
        Count sum = 0;
        std::vector<Value> key(r, 0);
        while (true) {
          sum += count(m, query(pv, kind, key)).total;
          std::size_t i = 0;
          while (i < r && ++key[i] == pv) key[i++] = 0;
          if (i == r) break;
        }
        EXPECT_EQ(sum, total) << named.name << " p=" << pv;
      }
    }
  }
}

TEST(KindText, RoundTrip) {
  EXPECT_EQ(parse_kind("strict"), Kind::strict);
  EXPECT_EQ(parse_kind("balanced"), Kind::balanced);
  EXPECT_FALSE(parse_kind("other").has_value());
  EXPECT_EQ(to_string(Kind::balanced), "balanced");
  EXPECT_EQ(to_string(CountMethod::contraction), "contraction");
}

}  // namespace
}  // namespace miura
