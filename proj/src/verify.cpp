#include "miura/verify.hpp"

#include <algorithm>
#include <numeric>

#include "miura/errors.hpp"
#include "miura/search.hpp"
#include "miura/transform.hpp"

namespace miura {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "fail";
}

Json TheoremReport::to_json() const {
  Json doc = Json::object();
  doc["theorem"] = theorem;
  doc["graph"] = graph;
  doc["p"] = p ? Json(*p) : Json(nullptr);
  doc["claim"] = claim;
  doc["observed"] = observed;
  doc["verdict"] = std::string(to_string(verdict));
  doc["witness"] = witness;
  return doc;
}

namespace {

TheoremReport make_report(std::string theorem, std::string label, std::optional<int> p, std::string claim) {
  TheoremReport r;
  r.theorem = std::move(theorem);
  r.graph = std::move(label);
  r.p = p;
  r.claim = std::move(claim);
  return r;
}

Json witness_base(std::string check, const MarkedSemiGraph& m, Prime p) {
  Json w = Json::object();
  w["check"] = std::move(check);
  w["graph"] = graph_to_json(m);
  w["p"] = p.value();
  return w;
}

void fail(TheoremReport& r, Json witness, std::string observed) {
  r.verdict = Verdict::fail;
  r.witness = std::move(witness);
  r.observed = std::move(observed);
}

std::vector<BranchNumbering> strict_numberings(const MarkedSemiGraph& m, Prime p,
                                               std::optional<ExponentVector> constraint = std::nullopt) {
  std::vector<BranchNumbering> out;
  enumerate(m, {p, Kind::strict, std::move(constraint), std::nullopt}, [&](const Numbering& n) {
    out.push_back(std::get<BranchNumbering>(n));
    return true;
  });
  return out;
}

Json triples_json(const std::vector<Triple>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(Json(t));
  return out;
}

// First failure among the Miura checks for one numbering: the check name and
// a detail payload.
std::optional<std::pair<std::string, Json>> miura_violation(const MarkedSemiGraph& m, const BranchNumbering& a) {
  const Prime p = a.prime();
  const SemiGraph& g = m.graph();
  std::vector<Value> image(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Value lhs = mu_value(p, a.at({e, 0}));
    const Value rhs = mu_value(p, a.at({e, 1}));
    if (lhs != rhs) return std::pair{std::string("miura_edge"), Json{{"edge", g.edge(e).id}}};
    image[e] = lhs;
  }
  const EdgeNumbering mu_image(p, std::move(image));
  if (!is_balanced(m, mu_image)) return std::pair{std::string("miura_balanced"), Json::object()};
  if (radii_of(m, mu_image) != mu_of(p, exponent_of(m, a))) {
    return std::pair{std::string("miura_radii"), Json::object()};
  }
  return std::nullopt;
}

std::optional<std::string> structure_violation(const MarkedSemiGraph& m, std::span<const BranchRef> loop,
                                               const BranchNumbering& a) {
  const SemiGraph& g = m.graph();
  const int p = a.prime().value();
  const Value value = a.at(loop.front());
  const std::size_t l = loop.size();
  std::vector<bool> on_loop(g.vertex_count(), false);
  for (std::size_t j = 0; j < l; ++j) {
    const BranchRef b = loop[j];
    const BranchRef prev_partner = loop[(j + l - 1) % l].partner();
    if (a.at(b) != value) return "loop branch " + g.edge(b.edge).id + " does not carry " + std::to_string(value);
    if (a.at(b.partner()) != p - value) {
      return "partner of loop branch " + g.edge(b.edge).id + " does not carry " + std::to_string(p - value);
    }
    const VertexIndex v = *g.incidence(b);
    on_loop[v] = true;
    for (const BranchRef c : g.branches_at(v)) {
      if (c == b || c == prev_partner) continue;
      if (a.at(c) != 1) return "side branch at " + g.vertices()[v] + " is not 1";
    }
  }
  const std::vector<Value> expected{1, 1, p - 1};
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (on_loop[v]) continue;
    auto vals = vertex_values(g, v, a);
    std::sort(vals.begin(), vals.end());
    if (!std::equal(vals.begin(), vals.end(), expected.begin())) {
      return "off-loop vertex " + g.vertices()[v] + " does not carry [1, 1, p-1]";
    }
  }
  return std::nullopt;
}

Json loop_json(const SemiGraph& g, std::span<const BranchRef> loop) {
  Json out = Json::array();
  for (const BranchRef b : loop) out.push_back(Json::array({g.edge(b.edge).id, b.slot}));
  return out;
}

std::vector<BranchRef> loop_from_json(const SemiGraph& g, const Json& j) {
  std::vector<BranchRef> out;
  for (const auto& item : j) {
    const auto e = g.find_edge(item.at(0).get<std::string>());
    if (!e) throw ParseError("witness loop names an unknown edge");
    out.push_back({*e, item.at(1).get<std::uint8_t>()});
  }
  return out;
}

bool is_permutation_of_units(std::vector<Value> values, int p) {
  std::sort(values.begin(), values.end());
  std::vector<Value> units(static_cast<std::size_t>(p - 1));
  std::iota(units.begin(), units.end(), 1);
  return values == units;
}

std::vector<std::string> figure_failures(const MarkedSemiGraph& m, const BranchNumbering& a,
                                         const std::vector<Value>& expected_image) {
  std::vector<std::string> failed;
  const SemiGraph& g = m.graph();
  const int p = a.prime().value();
  if (!is_branch_numbering(m, a)) failed.emplace_back("is_branch_numbering");
  if (!is_strict(m, a)) failed.emplace_back("is_strict");
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto vals = vertex_values(g, v, a);
    if (vals[0] + vals[1] + vals[2] != p + 1) failed.push_back("vertex_sum:" + g.vertices()[v]);
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (a.at({e, 0}) + a.at({e, 1}) != p) failed.push_back("pair_sum:" + g.edge(e).id);
  }
  std::vector<Value> image(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) image[e] = mu_value(a.prime(), a.at({e, 0}));
  if (image != expected_image) failed.emplace_back("image_values");
  if (!is_balanced(m, EdgeNumbering(a.prime(), image))) failed.emplace_back("image_balanced");
  return failed;
}

}  // namespace

TheoremReport verify_pp004(Prime p) {
  auto r = make_report("pp004", "tripod", p.value(),
                       "a triple with p | (m1+m2+m3-1) is strict iff its mu-image satisfies the balancing conditions");
  const auto check = check_pp004(p);
  r.observed = std::to_string(check.triples_checked) + " triples checked, " +
               std::to_string(check.counterexamples.size()) + " counterexamples";
  if (!check.holds) {
    Json w = Json::object();
    w["check"] = "pp004";
    w["p"] = p.value();
    w["triples"] = triples_json(check.counterexamples);
    fail(r, std::move(w), r.observed);
  }
  return r;
}

TheoremReport verify_p048(const MarkedSemiGraph& m, Prime p, std::string label) {
  const GraphType type = graph_type(m);
  auto r = make_report("p048", std::move(label), p.value(), "");
  if (type.g == 0) {
    r.claim = "genus bound and genus-one census";
    r.observed = "g = 0: the genus bound holds vacuously and the genus-one census does not apply";
    r.verdict = Verdict::not_applicable;
    return r;
  }

  const EnumerationQuery all{p, Kind::strict, std::nullopt, std::nullopt};
  const Count by_search = count(m, all).total;
  const Count by_contraction = count_by_contraction(m, all).total;

  if (type.g >= 2) {
    r.claim = "no strict numbering exists when g >= 2";
    r.observed = "g = " + std::to_string(type.g) + ": backtracking count " + std::to_string(by_search) +
                 ", contraction count " + std::to_string(by_contraction);
    if (by_search != 0 || by_contraction != 0) {
      const auto found = enumerate_all(m, {p, Kind::strict, std::nullopt, 1});
      Json w = witness_base(found.empty() ? "count" : "strict_exists", m, p);
      if (found.empty()) {
        w["expected"] = 0;
      } else {
        w["numbering"] = numbering_to_json(m, found.front());
      }
      fail(r, std::move(w), r.observed);
    }
    return r;
  }

  const auto expected_count = static_cast<Count>(p.value() - 1);
  const ExponentVector e{std::vector<Value>(type.r, p.value() - 1)};
  r.claim = "g = 1: exactly p - 1 strict numberings, all of exponent (p-1, ..., p-1)";
  const Count constrained = count(m, {p, Kind::strict, e, std::nullopt}).total;
  const Count constrained_contraction = count_by_contraction(m, {p, Kind::strict, e, std::nullopt}).total;
  r.observed = "backtracking " + std::to_string(by_search) + ", contraction " + std::to_string(by_contraction) +
               ", of exponent e: " + std::to_string(constrained);

  if (by_search != expected_count || by_contraction != expected_count || constrained != expected_count ||
      constrained_contraction != expected_count) {
    Json w = witness_base("count", m, p);
    w["expected"] = expected_count;
    w["constraint"] = to_json(e);
    fail(r, std::move(w), r.observed);
    return r;
  }
  for (const auto& n : strict_numberings(m, p)) {
    if (exponent_of(m, n) != e) {
      Json w = witness_base("exponent", m, p);
      w["numbering"] = numbering_to_json(m, n);
      w["expected"] = to_json(e);
      fail(r, std::move(w), "a strict numbering has exponent other than e");
      return r;
    }
  }
  return r;
}

TheoremReport verify_p048_structure(const MarkedSemiGraph& m, Prime p, std::string label) {
  const GraphType type = graph_type(m);
  auto r = make_report("p048_structure", std::move(label), p.value(),
                       "g = 1: constant loop value a with partners p - a, off-loop vertices [1, 1, p-1], "
                       "a ranging over 1..p-1 bijectively");
  if (type.g != 1) {
    r.verdict = Verdict::not_applicable;
    r.observed = "g = " + std::to_string(type.g);
    return r;
  }
  const auto loop = reduced_loop(m, 0);
  if (!loop) throw std::logic_error("genus-one graph without a reduced loop");
  const SemiGraph& g = m.graph();

  std::vector<Value> a_values;
  for (const auto& n : strict_numberings(m, p)) {
    if (auto why = structure_violation(m, loop->branches, n)) {
      Json w = witness_base("structure", m, p);
      w["numbering"] = numbering_to_json(m, n);
      w["loop"] = loop_json(g, loop->branches);
      fail(r, std::move(w), *why);
      return r;
    }
    a_values.push_back(n.at(loop->branches.front()));
  }
  std::string edges;
  for (const BranchRef b : loop->branches) edges += (edges.empty() ? "" : ",") + g.edge(b.edge).id;
  r.observed = std::to_string(a_values.size()) + " solutions on loop {" + edges + "}";
  if (!is_permutation_of_units(a_values, p.value())) {
    Json w = witness_base("a_values", m, p);
    w["a_values"] = a_values;
    w["loop"] = loop_json(g, loop->branches);
    fail(r, std::move(w), r.observed + "; loop values are not a permutation of 1..p-1");
  }
  return r;
}

TheoremReport verify_miura_on(const MarkedSemiGraph& m, std::span<const BranchNumbering> numberings,
                              std::string label) {
  auto r = make_report("miura", std::move(label), std::nullopt,
                       "mu agrees across each edge, the image is balanced, and radii of the image are mu of the "
                       "exponent");
  for (const auto& n : numberings) {
    if (!r.p) r.p = n.prime().value();
    if (auto v = miura_violation(m, n)) {
      Json w = witness_base(v->first, m, n.prime());
      w["numbering"] = numbering_to_json(m, n);
      w["detail"] = v->second;
      fail(r, std::move(w), "check " + v->first + " failed");
      return r;
    }
  }
  r.observed = std::to_string(numberings.size()) + " strict numberings checked";
  return r;
}

TheoremReport verify_miura(const MarkedSemiGraph& m, Prime p, std::string label) {
  const auto numberings = strict_numberings(m, p);
  auto r = verify_miura_on(m, numberings, std::move(label));
  r.p = p.value();
  return r;
}

FigureFixture figure_fixture() {
  // Vertices A, B, C; A carries legs l1, l2, B carries l3, C carries l4, l5.
  SemiGraph g({"A", "B", "C"}, {{"l1", {"A", std::nullopt}},
                                {"l2", {"A", std::nullopt}},
                                {"AB", {"A", "B"}},
                                {"l3", {"B", std::nullopt}},
                                {"BC", {"B", "C"}},
                                {"l4", {"C", std::nullopt}},
                                {"l5", {"C", std::nullopt}}});
  MarkedSemiGraph m(std::move(g), std::vector<std::string>{"l1", "l2", "l3", "l4", "l5"});
  const Prime p(11);
  // Per edge: (slot 0, slot 1).
  BranchNumbering n(p, {1, 10, 2, 9, 9, 2, 3, 8, 7, 4, 5, 6, 3, 8});
  return {std::move(m), std::move(n), {0, 4, 4, 1, 3, 2, 1}};
}

TheoremReport verify_figure_vector() {
  auto fx = figure_fixture();
  auto r = make_report("figure", "figure_p11", 11,
                       "the p = 11 tree numbering is a strict branch numbering with vertex sums 12 and mu-image "
                       "(0,4,4,1,3,2,1) balanced");
  const auto failed = figure_failures(fx.graph, fx.numbering, fx.expected_image);
  r.observed = failed.empty() ? "all checks hold" : std::to_string(failed.size()) + " checks failed";
  if (!failed.empty()) {
    Json w = witness_base("figure", fx.graph, fx.numbering.prime());
    w["numbering"] = numbering_to_json(fx.graph, fx.numbering);
    w["expected_image"] = fx.expected_image;
    w["failed"] = failed;
    fail(r, std::move(w), r.observed);
  }
  return r;
}

bool replay_witness(const TheoremReport& report) {
  if (report.verdict != Verdict::fail) return false;
  const Json& w = report.witness;
  const std::string check = w.at("check").get<std::string>();
  const Prime p(w.at("p").get<int>());

  if (check == "pp004") {
    const auto tripod = builders::tripod();
    for (const auto& t : w.at("triples")) {
      const Triple triple = t.get<Triple>();
      const bool strict = is_strict(tripod, tripod_branch_numbering(p, triple));
      const EdgeNumbering image(p, {mu_value(p, triple[0]), mu_value(p, triple[1]), mu_value(p, triple[2])});
      if (strict != is_balanced(tripod, image)) return true;
    }
    return false;
  }

  const MarkedSemiGraph m = graph_from_json(w.at("graph"));
  auto branch = [&]() { return std::get<BranchNumbering>(numbering_from_json(m, w.at("numbering"))); };

  if (check == "strict_exists") return is_strict(m, branch());
  if (check == "count") {
    std::optional<ExponentVector> constraint;
    if (w.contains("constraint")) constraint = ExponentVector{w.at("constraint").get<std::vector<Value>>()};
    const auto expected = w.at("expected").get<Count>();
    const EnumerationQuery all{p, Kind::strict, std::nullopt, std::nullopt};
    if (count(m, all).total != expected || count_by_contraction(m, all).total != expected) return true;
    if (constraint) {
      const EnumerationQuery q{p, Kind::strict, constraint, std::nullopt};
      return count(m, q).total != expected || count_by_contraction(m, q).total != expected;
    }
    return false;
  }
  if (check == "exponent") {
    return exponent_of(m, branch()) != ExponentVector{w.at("expected").get<std::vector<Value>>()};
  }
  if (check == "structure") {
    return structure_violation(m, loop_from_json(m.graph(), w.at("loop")), branch()).has_value();
  }
  if (check == "a_values") {
    const auto loop = loop_from_json(m.graph(), w.at("loop"));
    std::vector<Value> a_values;
    for (const auto& n : strict_numberings(m, p)) a_values.push_back(n.at(loop.front()));
    return !is_permutation_of_units(a_values, p.value());
  }
  if (check == "miura_edge" || check == "miura_balanced" || check == "miura_radii") {
    const auto v = miura_violation(m, branch());
    return v && v->first == check;
  }
  if (check == "figure") {
    return !figure_failures(m, branch(), w.at("expected_image").get<std::vector<Value>>()).empty();
  }
  throw ParseError("unknown witness check '" + check + "'");
}

}  // namespace miura
