#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "miura/errors.hpp"
#include "miura/io.hpp"
#include "miura/search.hpp"
#include "miura/transform.hpp"
#include "miura/verify.hpp"

namespace miura::cli {

namespace {

struct CliConfig {
  std::string graph_path;
  std::string builtin;
  std::string numbering_path;
  std::string theorem;
  std::optional<int> p;
  std::string kind;
  std::optional<std::string> constraint;
  std::optional<std::size_t> limit;
  std::string format;
  std::string method = "backtracking";
  bool by_exponent = false;
  std::size_t max_table = std::size_t{1} << 22;
  unsigned threads = 1;
};

// Input errors that map to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Semantic failures that map to exit code 1.
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedGraph {
  MarkedSemiGraph graph;
  std::string label;
};

std::optional<MarkedSemiGraph> builtin_graph(const std::string& name) {
  if (name == "tripod") return builders::tripod();
  if (name == "theta") return builders::theta();
  if (name == "dumbbell") return builders::dumbbell();
  if (name == "loop_with_leg") return builders::loop_with_leg();
  if (name == "figure") return figure_fixture().graph;
  if (name.rfind("cycle:", 0) == 0) {
    std::size_t n = 0;
    const auto digits = std::string_view(name).substr(6);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1 && n <= 64) {
      return builders::cycle_with_legs(n);
    }
  }
  return std::nullopt;
}

LoadedGraph load(const CliConfig& cfg) {
  if (!cfg.builtin.empty() && !cfg.graph_path.empty()) throw InputError("give either --builtin or a graph file, not both");
  if (!cfg.builtin.empty()) {
    auto g = builtin_graph(cfg.builtin);
    if (!g) throw InputError("unknown builtin graph '" + cfg.builtin + "'");
    return {std::move(*g), cfg.builtin};
  }
  if (cfg.graph_path.empty()) throw InputError("no graph given (file argument or --builtin)");
  return {load_graph(cfg.graph_path), std::filesystem::path(cfg.graph_path).stem().string()};
}

Prime prime_of(const CliConfig& cfg) {
  if (!cfg.p) throw InputError("--p is required");
  if (!is_prime(*cfg.p) || *cfg.p == 2) throw InputError("--p " + std::to_string(*cfg.p) + " is not an odd prime");
  return Prime(*cfg.p);
}

EnumerationQuery query_of(const CliConfig& cfg, const MarkedSemiGraph& m) {
  const Prime p = prime_of(cfg);
  const auto kind = parse_kind(cfg.kind);
  if (!kind) throw InputError("--kind must be strict or balanced");
  EnumerationQuery q{p, *kind, std::nullopt, cfg.limit};
  if (cfg.constraint) {
    q.constraint = parse_constraint(p, *cfg.constraint);
    if (q.constraint->size() != m.marking().size()) {
      throw SemanticError("constraint has " + std::to_string(q.constraint->size()) + " entries but the graph has " +
                          std::to_string(m.marking().size()) + " marked points");
    }
  }
  const auto report = validate(m);
  if (!report.valid()) throw SemanticError("graph is not a valid stable trivalent marked semi-graph");
  return q;
}

Json validation_json(const MarkedSemiGraph& m, const ValidationReport& report) {
  Json doc = Json::object();
  doc["valid"] = report.valid();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  doc["checks"] = std::move(checks);
  if (report.type) {
    doc["type"] = Json{{"g", report.type->g}, {"r", report.type->r}};
    doc["betti"] = betti(m);
  } else {
    doc["type"] = nullptr;
  }
  return doc;
}

int cmd_validate(const CliConfig& cfg, std::ostream& out) {
  const auto loaded = load(cfg);
  const auto report = validate(loaded.graph);
  out << validation_json(loaded.graph, report).dump(2) << "\n";
  return report.valid() ? kPass : kSemanticFailure;
}

int cmd_show(const CliConfig& cfg, std::ostream& out) {
  out << write_graph(load(cfg).graph);
  return kPass;
}

std::string table_row(const MarkedSemiGraph& m, const Numbering& n) {
  const SemiGraph& g = m.graph();
  std::string row;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!row.empty()) row += ' ';
    row += g.edge(e).id + "=";
    if (const auto* edge = std::get_if<EdgeNumbering>(&n)) {
      row += std::to_string(edge->at(e));
    } else {
      const auto& branch = std::get<BranchNumbering>(n);
      row += std::to_string(branch.at({e, 0})) + "/" + std::to_string(branch.at({e, 1}));
    }
  }
  return row;
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& out) {
  const auto loaded = load(cfg);
  const auto q = query_of(cfg, loaded.graph);
  const std::string format = cfg.format.empty() ? "jsonl" : cfg.format;
  Json array = Json::array();
  enumerate(loaded.graph, q, [&](const Numbering& n) {
    if (format == "jsonl") {
      out << write_numbering(loaded.graph, n);
    } else if (format == "json") {
      array.push_back(numbering_to_json(loaded.graph, n));
    } else {
      out << table_row(loaded.graph, n) << "\n";
    }
    return true;
  });
  if (format == "json") out << array.dump(2) << "\n";
  return kPass;
}

int cmd_count(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto loaded = load(cfg);
  auto q = query_of(cfg, loaded.graph);
  q.limit.reset();
  const CountOptions options{cfg.by_exponent, cfg.threads, cfg.max_table};

  std::optional<CensusReport> search;
  std::optional<CensusReport> contraction;
  if (cfg.method == "backtracking" || cfg.method == "both") search = count(loaded.graph, q, options);
  if (cfg.method == "contraction" || cfg.method == "both") {
    contraction = count_by_contraction(loaded.graph, q, options);
    for (const auto& w : contraction->warnings) err << "warning: " << w << "\n";
  }

  const CensusReport& primary = search ? *search : *contraction;
  Json doc = to_json(primary);
  int code = kPass;
  if (search && contraction) {
    doc["method"] = "both";
    doc["totals"] = Json{{"backtracking", search->total}, {"contraction", contraction->total}};
    if (search->total != contraction->total || search->by_exponent != contraction->by_exponent) {
      err << "error: counting methods disagree\n";
      doc["agree"] = false;
      code = kSemanticFailure;
    } else {
      doc["agree"] = true;
    }
  }

  if (cfg.format == "table") {
    out << "total " << primary.total << " (" << doc["method"].get<std::string>() << ")\n";
    if (primary.by_exponent) {
      for (const auto& [key, n] : *primary.by_exponent) out << to_json(key).dump() << " " << n << "\n";
    }
  } else {
    out << doc.dump(2) << "\n";
  }
  return code;
}

int cmd_miura(const CliConfig& cfg, std::ostream& out) {
  const auto loaded = load(cfg);
  const auto numbering = load_numbering(loaded.graph, cfg.numbering_path);
  const auto* branch = std::get_if<BranchNumbering>(&numbering);
  if (!branch) throw SemanticError("input is an edge numbering, not a strict branch numbering");
  if (!is_strict(loaded.graph, *branch)) throw SemanticError("input numbering is not strict");
  const auto image = miura_transform(loaded.graph, *branch);
  Json doc = numbering_to_json(loaded.graph, image);
  doc["radii"] = to_json(radii_of(loaded.graph, image));
  out << doc.dump() << "\n";
  return kPass;
}

int verdict_code(const TheoremReport& r) {
  switch (r.verdict) {
    case Verdict::pass:
      return kPass;
    case Verdict::not_applicable:
      return kNotApplicable;
    case Verdict::fail:
      break;
  }
  return kSemanticFailure;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const std::string& t = cfg.theorem;
  if (t == "figure") {
    const auto r = verify_figure_vector();
    out << r.to_json().dump(2) << "\n";
    return verdict_code(r);
  }
  if (t == "pp004") {
    if (cfg.p) {
      const auto r = verify_pp004(prime_of(cfg));
      out << r.to_json().dump(2) << "\n";
      return verdict_code(r);
    }
    Json all = Json::array();
    int code = kPass;
    for (int p = 3; p <= 31; p += 2) {
      if (!is_prime(p)) continue;
      const auto r = verify_pp004(Prime(p));
      if (!r.passed()) code = kSemanticFailure;
      all.push_back(r.to_json());
    }
    out << all.dump(2) << "\n";
    return code;
  }

  const auto loaded = load(cfg);
  const Prime p = prime_of(cfg);
  if (!validate(loaded.graph).valid()) throw SemanticError("graph is not a valid stable trivalent marked semi-graph");
  TheoremReport r;
  if (t == "p048") {
    r = verify_p048(loaded.graph, p, loaded.label);
  } else if (t == "p048-structure") {
    r = verify_p048_structure(loaded.graph, p, loaded.label);
  } else if (t == "miura") {
    r = verify_miura(loaded.graph, p, loaded.label);
  } else {
    throw InputError("unknown theorem '" + t + "'");
  }
  out << r.to_json().dump(2) << "\n";
  return verdict_code(r);
}

std::optional<unsigned> threads_from_env(std::ostream& err) {
  const char* raw = std::getenv("MIURA_THREADS");
  if (raw == nullptr || *raw == '\0') return std::max(1u, std::thread::hardware_concurrency());
  unsigned n = 0;
  const std::string_view text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n == 0) {
    err << "error: MIURA_THREADS must be a positive integer\n";
    return std::nullopt;
  }
  return n;
}

void add_graph_options(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("graph", cfg.graph_path, "Graph JSON file");
  sub->add_option("--builtin", cfg.builtin, "Builtin graph: tripod|theta|dumbbell|loop_with_leg|figure|cycle:N");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  const auto threads = threads_from_env(err);
  if (!threads) return kMalformedInput;
  cfg.threads = *threads;

  CLI::App app{"Strict and balanced p-numberings on trivalent marked semi-graphs"};
  app.require_subcommand(1);

  auto* validate_cmd = app.add_subcommand("validate", "Check a marked semi-graph and report its type");
  add_graph_options(validate_cmd, cfg);

  auto* show_cmd = app.add_subcommand("show", "Print a graph in canonical form");
  add_graph_options(show_cmd, cfg);

  const std::string constraint_help =
      "Comma-separated exponent (strict) or radii (balanced); integers reduced mod p, so -1 means p-1";

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream numberings as JSON lines");
  enumerate_cmd->add_option("--p", cfg.p, "Odd prime")->required();
  enumerate_cmd->add_option("--kind", cfg.kind, "strict or balanced")->required();
  enumerate_cmd->add_option("--constraint", cfg.constraint, constraint_help);
  enumerate_cmd->add_option("--limit", cfg.limit, "Stop after N numberings");
  enumerate_cmd->add_option("--format", cfg.format, "jsonl (default), json or table")
      ->check(CLI::IsMember({"jsonl", "json", "table"}));
  add_graph_options(enumerate_cmd, cfg);

  auto* count_cmd = app.add_subcommand("count", "Count numberings");
  count_cmd->add_option("--p", cfg.p, "Odd prime")->required();
  count_cmd->add_option("--kind", cfg.kind, "strict or balanced")->required();
  count_cmd->add_option("--constraint", cfg.constraint, constraint_help);
  count_cmd->add_flag("--by-exponent", cfg.by_exponent, "Break the total down by exponent or radii");
  count_cmd->add_option("--method", cfg.method, "backtracking (default), contraction or both")
      ->check(CLI::IsMember({"backtracking", "contraction", "both"}));
  count_cmd->add_option("--max-table", cfg.max_table, "Warn when a contraction table exceeds this many entries");
  count_cmd->add_option("--format", cfg.format, "json (default) or table")->check(CLI::IsMember({"json", "table"}));
  add_graph_options(count_cmd, cfg);

  auto* miura_cmd = app.add_subcommand("miura", "Apply the Miura map to a strict numbering");
  miura_cmd->add_option("numbering", cfg.numbering_path, "Numbering JSON file")->required();
  add_graph_options(miura_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem on concrete input");
  verify_cmd->add_option("theorem", cfg.theorem, "pp004 | p048 | p048-structure | miura | figure")
      ->required()
      ->check(CLI::IsMember({"pp004", "p048", "p048-structure", "miura", "figure"}));
  verify_cmd->add_option("--p", cfg.p, "Odd prime");
  add_graph_options(verify_cmd, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kMalformedInput;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(cfg, out);
    if (show_cmd->parsed()) return cmd_show(cfg, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(cfg, out);
    if (count_cmd->parsed()) return cmd_count(cfg, out, err);
    if (miura_cmd->parsed()) return cmd_miura(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const StructureError& e) {
    err << "malformed graph: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kSemanticFailure;
  }
  return kMalformedInput;
}

}  // namespace miura::cli
