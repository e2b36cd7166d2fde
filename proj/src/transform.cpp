#include "miura/transform.hpp"

#include <stdexcept>
#include <string>

#include "miura/errors.hpp"

namespace miura {

Value mu_value(Prime p, Value m) {
  if (!p.contains(m)) throw PreconditionError("value " + std::to_string(m) + " out of range");
  return m % 2 == 0 ? (p.value() - m - 1) / 2 : (m - 1) / 2;
}

ExponentVector mu_of(Prime p, const ExponentVector& v) {
  ExponentVector out;
  out.entries.reserve(v.size());
  for (const Value x : v.entries) out.entries.push_back(mu_value(p, x));
  return out;
}

EdgeNumbering miura_transform(const MarkedSemiGraph& m, const BranchNumbering& a) {
  if (!is_strict(m, a)) throw PreconditionError("miura_transform requires a strict branch numbering");
  const Prime p = a.prime();
  const SemiGraph& g = m.graph();
  std::vector<Value> out(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Value lhs = mu_value(p, a.at({e, 0}));
    const Value rhs = mu_value(p, a.at({e, 1}));
    if (lhs != rhs) {
      throw std::logic_error("mu-values disagree across edge '" + g.edge(e).id + "'");
    }
    out[e] = lhs;
  }
  return EdgeNumbering(p, std::move(out));
}

BranchNumbering tripod_branch_numbering(Prime p, const Triple& t) {
  std::vector<Value> values;
  for (const Value x : t) {
    values.push_back(x);
    values.push_back(inv(p, x));
  }
  return BranchNumbering(p, std::move(values));
}

std::vector<TripodTriple> tripod_strict_set(Prime p) {
  const auto tripod = builders::tripod();
  const int q = p.value();
  std::vector<TripodTriple> out;
  for (Value a = 0; a < q; ++a) {
    for (Value b = 0; b < q; ++b) {
      for (Value c = 0; c < q; ++c) {
        if ((a + b + c - 1) % q != 0) continue;
        const Triple t{a, b, c};
        out.push_back({t, is_strict(tripod, tripod_branch_numbering(p, t))});
      }
    }
  }
  return out;
}

TripodCheck check_pp004(Prime p) {
  const auto tripod = builders::tripod();
  TripodCheck result;
  for (const auto& [t, strict] : tripod_strict_set(p)) {
    ++result.triples_checked;
    const EdgeNumbering image(p, {mu_value(p, t[0]), mu_value(p, t[1]), mu_value(p, t[2])});
    if (strict != is_balanced(tripod, image)) result.counterexamples.push_back(t);
  }
  result.holds = result.counterexamples.empty();
  return result;
}

}  // namespace miura
