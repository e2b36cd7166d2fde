#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "miura/errors.hpp"
#include "miura/search.hpp"
#include "model.hpp"

namespace miura {

namespace {

// Beyond this many entries a table is refused outright.
constexpr std::size_t kHardTableLimit = std::size_t{1} << 28;

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("count exceeds 64 bits");
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("count exceeds 64 bits");
  return out;
}

// Dense table over edge variables with domain 0..p-1; vars[0] varies fastest.
struct Factor {
  std::vector<EdgeIndex> vars;
  std::vector<Count> table;

  [[nodiscard]] bool mentions(EdgeIndex e) const { return std::find(vars.begin(), vars.end(), e) != vars.end(); }
};

class Contractor {
 public:
  Contractor(const detail::Model& model, std::size_t warn_entries, std::vector<std::string>& warnings)
      : model_(model), p_(static_cast<std::size_t>(model.p.value())), warn_entries_(warn_entries), warnings_(warnings) {}

  std::size_t table_size(std::size_t arity) const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      if (n > kHardTableLimit / p_) {
        throw std::length_error("contraction table over " + std::to_string(arity) + " variables is too large");
      }
      n *= p_;
    }
    return n;
  }

  Factor unary(EdgeIndex e) const {
    Factor f{{e}, std::vector<Count>(p_, 0)};
    for (std::size_t x = 0; x < p_; ++x) f.table[x] = model_.allowed[e][x] ? 1 : 0;
    return f;
  }

  Factor vertex_factor(VertexIndex v) const {
    const auto& bs = model_.at_vertex[v];
    Factor f;
    for (const BranchRef b : bs) {
      if (!f.mentions(b.edge)) f.vars.push_back(b.edge);
    }
    f.table.assign(table_size(f.vars.size()), 0);
    std::vector<Value> assignment(model_.edge_count, 0);
    for (std::size_t idx = 0; idx < f.table.size(); ++idx) {
      std::size_t rest = idx;
      for (const EdgeIndex e : f.vars) {
        assignment[e] = static_cast<Value>(rest % p_);
        rest /= p_;
      }
      std::array<Value, 3> vals{};
      for (std::size_t i = 0; i < 3; ++i) vals[i] = model_.branch_value(bs[i], assignment[bs[i].edge]);
      f.table[idx] = model_.vertex_holds(vals[0], vals[1], vals[2]) ? 1 : 0;
    }
    return f;
  }

  // Pointwise product over the union of the factors' variables.
  Factor multiply(const std::vector<Factor>& factors) {
    Factor out;
    for (const auto& f : factors) {
      for (const EdgeIndex e : f.vars) {
        if (!out.mentions(e)) out.vars.push_back(e);
      }
    }
    const std::size_t size = table_size(out.vars.size());
    if (size > warn_entries_) {
      warnings_.push_back("intermediate table with " + std::to_string(size) + " entries exceeds bound " +
                          std::to_string(warn_entries_));
    }
    out.table.assign(size, 1);

    // strides[k][i]: step in factor k's index when out.vars[i] increments.
    std::vector<std::vector<std::size_t>> strides(factors.size(), std::vector<std::size_t>(out.vars.size(), 0));
    for (std::size_t k = 0; k < factors.size(); ++k) {
      std::size_t stride = 1;
      for (const EdgeIndex e : factors[k].vars) {
        const auto pos = static_cast<std::size_t>(std::find(out.vars.begin(), out.vars.end(), e) - out.vars.begin());
        strides[k][pos] = stride;
        stride *= p_;
      }
    }

    std::vector<std::size_t> digits(out.vars.size(), 0);
    std::vector<std::size_t> offsets(factors.size(), 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
      Count v = 1;
      for (std::size_t k = 0; k < factors.size() && v != 0; ++k) v = checked_mul(v, factors[k].table[offsets[k]]);
      out.table[idx] = v;
      // Mixed-radix increment.
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < p_) {
          for (std::size_t k = 0; k < factors.size(); ++k) offsets[k] += strides[k][i];
          break;
        }
        digits[i] = 0;
        for (std::size_t k = 0; k < factors.size(); ++k) offsets[k] -= strides[k][i] * (p_ - 1);
      }
    }
    return out;
  }

  Factor sum_out(const Factor& f, EdgeIndex var) const {
    const auto pos = static_cast<std::size_t>(std::find(f.vars.begin(), f.vars.end(), var) - f.vars.begin());
    Factor out;
    for (const EdgeIndex e : f.vars) {
      if (e != var) out.vars.push_back(e);
    }
    out.table.assign(table_size(out.vars.size()), 0);
    std::size_t inner = 1;
    for (std::size_t i = 0; i < pos; ++i) inner *= p_;
    for (std::size_t idx = 0; idx < f.table.size(); ++idx) {
      const std::size_t low = idx % inner;
      const std::size_t high = idx / (inner * p_);
      const std::size_t target = low + high * inner;
      out.table[target] = checked_add(out.table[target], f.table[idx]);
    }
    return out;
  }

  void eliminate(std::vector<Factor>& factors, EdgeIndex var) {
    std::vector<Factor> touching;
    std::vector<Factor> rest;
    for (auto& f : factors) (f.mentions(var) ? touching : rest).push_back(std::move(f));
    rest.push_back(sum_out(multiply(touching), var));
    factors = std::move(rest);
  }

 private:
  const detail::Model& model_;
  std::size_t p_;
  std::size_t warn_entries_;
  std::vector<std::string>& warnings_;
};

// Number of other variables sharing a factor with `var`.
std::size_t interaction_degree(const std::vector<Factor>& factors, EdgeIndex var) {
  std::set<EdgeIndex> neighbours;
  for (const auto& f : factors) {
    if (!f.mentions(var)) continue;
    for (const EdgeIndex e : f.vars) {
      if (e != var) neighbours.insert(e);
    }
  }
  return neighbours.size();
}

}  // namespace

CensusReport count_by_contraction(const MarkedSemiGraph& m, const EnumerationQuery& q, const CountOptions& options) {
  const auto model = detail::build_model(m, q);
  const SemiGraph& g = m.graph();
  CensusReport report;
  report.method = CountMethod::contraction;
  Contractor c(model, options.max_table_entries, report.warnings);

  std::vector<Factor> factors;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) factors.push_back(c.unary(e));
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) factors.push_back(c.vertex_factor(v));

  // Marked legs stay alive when a breakdown by exponent is requested.
  std::vector<bool> keep(g.edge_count(), false);
  if (options.by_exponent) {
    for (const BranchRef b : model.marking) keep[b.edge] = true;
  }

  std::vector<EdgeIndex> pending;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!keep[e]) pending.push_back(e);
  }

  // Self-loops first: each lives in a single vertex factor.
  for (auto it = pending.begin(); it != pending.end();) {
    if (g.is_self_loop(*it)) {
      c.eliminate(factors, *it);
      it = pending.erase(it);
    } else {
      ++it;
    }
  }
  // Then greedy minimum degree, ties broken by declaration order.
  while (!pending.empty()) {
    auto best = pending.begin();
    std::size_t best_degree = std::numeric_limits<std::size_t>::max();
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      const std::size_t d = interaction_degree(factors, *it);
      if (d < best_degree) {
        best_degree = d;
        best = it;
      }
    }
    c.eliminate(factors, *best);
    pending.erase(best);
  }

  const Factor joint = c.multiply(factors);
  for (const Count n : joint.table) report.total = checked_add(report.total, n);

  if (options.by_exponent) {
    report.by_exponent.emplace();
    const std::size_t p = static_cast<std::size_t>(q.p.value());
    for (std::size_t idx = 0; idx < joint.table.size(); ++idx) {
      if (joint.table[idx] == 0) continue;
      std::vector<Value> edge_values(g.edge_count(), 0);
      std::size_t rest = idx;
      for (const EdgeIndex e : joint.vars) {
        edge_values[e] = static_cast<Value>(rest % p);
        rest /= p;
      }
      (*report.by_exponent)[model.key(edge_values)] += joint.table[idx];
    }
  }
  return report;
}

}  // namespace miura
