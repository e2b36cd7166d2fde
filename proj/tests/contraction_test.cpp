#include <gtest/gtest.h>

#include "corpus.hpp"
#include "miura/search.hpp"

namespace miura {
namespace {

EnumerationQuery query(int p, Kind kind, std::optional<std::vector<Value>> constraint = std::nullopt) {
  EnumerationQuery q{Prime{p}, kind, std::nullopt, std::nullopt};
  if (constraint) q.constraint = ExponentVector{*constraint};
  return q;
}

TEST(Contraction, Examples) {
  const auto theta = count_by_contraction(builders::theta(), query(11, Kind::strict));
  EXPECT_EQ(theta.total, 0u);
  EXPECT_EQ(theta.method, CountMethod::contraction);
  EXPECT_EQ(theta.total, count(builders::theta(), query(11, Kind::strict)).total);

  const auto loop = count_by_contraction(builders::loop_with_leg(), query(13, Kind::strict));
  EXPECT_EQ(loop.total, 12u);
  EXPECT_EQ(loop.total, count(builders::loop_with_leg(), query(13, Kind::strict)).total);

  EXPECT_EQ(count_by_contraction(builders::tripod(), query(5, Kind::balanced)).total,
            count(builders::tripod(), query(5, Kind::balanced)).total);
}

TEST(Contraction, AgreesWithBacktrackingAcrossCorpus) {
  for (const auto& named : testing::corpus()) {
    for (int pv : {3, 5, 7, 11}) {
      for (Kind kind : {Kind::strict, Kind::balanced}) {
        const auto bt = count(named.graph, query(pv, kind), {true, 2});
        const auto ct = count_by_contraction(named.graph, query(pv, kind), {true, 1});
        EXPECT_EQ(bt.total, ct.total) << named.name << " p=" << pv << " " << to_string(kind);
        EXPECT_EQ(bt.by_exponent, ct.by_exponent) << named.name << " p=" << pv;
        // Each nonzero exponent cell, re-queried as a constraint.
        for (const auto& [key, n] : *bt.by_exponent) {
          EXPECT_EQ(count_by_contraction(named.graph, query(pv, kind, key.entries)).total, n);
        }
      }
    }
  }
}

TEST(Contraction, ConstraintOutsideSupportGivesZero) {
  const auto m = builders::cycle_with_legs(3);
  EXPECT_EQ(count_by_contraction(m, query(5, Kind::strict, std::vector<Value>{4, 4, 4})).total, 4u);
  EXPECT_EQ(count_by_contraction(m, query(5, Kind::strict, std::vector<Value>{4, 4, 3})).total, 0u);
  EXPECT_EQ(count_by_contraction(m, query(5, Kind::strict, std::vector<Value>{0, 4, 4})).total, 0u);
}

TEST(Contraction, WarnsWhenTablesExceedBound) {
  const auto m = testing::k4();
  CountOptions tight;
  tight.max_table_entries = 4;
  const auto report = count_by_contraction(m, query(7, Kind::balanced), tight);
  EXPECT_FALSE(report.warnings.empty());
  EXPECT_EQ(report.total, count(m, query(7, Kind::balanced)).total);

  const auto roomy = count_by_contraction(m, query(7, Kind::balanced));
  EXPECT_TRUE(roomy.warnings.empty());
}

TEST(Contraction, RandomGraphsAgree) {
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    const std::size_t v = 1 + rng() % 6;
    const std::size_t r = (3 * v) % 2 == 0 ? 2 * (rng() % 2) : 1 + 2 * (rng() % 2);
    const auto m = testing::random_trivalent(rng, v, r);
    for (Kind kind : {Kind::strict, Kind::balanced}) {
      EXPECT_EQ(count_by_contraction(m, query(5, kind)).total, count(m, query(5, kind)).total);
    }
  }
}

}  // namespace
}  // namespace miura
