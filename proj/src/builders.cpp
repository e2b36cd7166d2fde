#include <string>

#include "miura/errors.hpp"
#include "miura/semigraph.hpp"

namespace miura::builders {

namespace {

EdgeSpec edge(std::string id, std::string a, std::string b) {
  return {std::move(id), {std::move(a), std::move(b)}};
}

EdgeSpec leg(std::string id, std::string v) { return {std::move(id), {std::move(v), std::nullopt}}; }

}  // namespace

MarkedSemiGraph tripod() {
  SemiGraph g({"v"}, {leg("l1", "v"), leg("l2", "v"), leg("l3", "v")});
  return {std::move(g), std::vector<std::string>{"l1", "l2", "l3"}};
}

MarkedSemiGraph theta() {
  SemiGraph g({"v1", "v2"}, {edge("e1", "v1", "v2"), edge("e2", "v1", "v2"), edge("e3", "v1", "v2")});
  return {std::move(g), std::vector<std::string>{}};
}

MarkedSemiGraph dumbbell() {
  SemiGraph g({"v1", "v2"}, {edge("e1", "v1", "v1"), edge("e2", "v1", "v2"), edge("e3", "v2", "v2")});
  return {std::move(g), std::vector<std::string>{}};
}

MarkedSemiGraph cycle_with_legs(std::size_t n) {
  if (n == 0) throw PreconditionError("cycle_with_legs requires n >= 1");
  std::vector<std::string> vertices;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back(edge("e" + std::to_string(i + 1), vertices[i], vertices[(i + 1) % n]));
  }
  std::vector<std::string> marking;
  for (std::size_t i = 0; i < n; ++i) {
    marking.push_back("l" + std::to_string(i + 1));
    edges.push_back(leg(marking.back(), vertices[i]));
  }
  SemiGraph g(std::move(vertices), edges);
  return {std::move(g), marking};
}

MarkedSemiGraph loop_with_leg() {
  SemiGraph g({"v1"}, {edge("e1", "v1", "v1"), leg("l1", "v1")});
  return {std::move(g), std::vector<std::string>{"l1"}};
}

}  // namespace miura::builders
