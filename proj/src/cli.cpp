#include "ncg/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ncg/errors.h"
#include "ncg/io.h"
#include "ncg/tree.h"

namespace ncg::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write " + path.string());
  }
  out << content;
}

SearchOptions search_options(std::optional<int> budget_cap) {
  SearchOptions options;
  options.budget_cap = budget_cap;
  if (const char* limit = std::getenv("NCG_ENUM_LIMIT")) {
    try {
      options.enumeration_limit = std::stoull(limit);
    } catch (const std::exception&) {
      throw ParseError(std::string("NCG_ENUM_LIMIT must be a positive integer, got '") + limit +
                       "'");
    }
  }
  return options;
}

Violation violation_of(const MultiSwap& swap) {
  return Violation{swap.agent, swap.strategy, swap.before, swap.after};
}

struct CheckResult {
  Json report;
  bool holds;
};

CheckResult check_instance(const InstanceFile& file, Concept c, const std::string& oracle,
                           const SearchOptions& options) {
  const bool tree = is_tree(file.graph);
  const bool characterize =
      c == Concept::NE && (oracle == "characterization" || (oracle == "auto" && tree));
  if (!characterize) {
    const EquilibriumReport report = check(file.graph, file.config, c, options);
    Json doc = to_json(report);
    doc["oracle"] = "brute";
    return {doc, report.holds};
  }
  if (!tree) {
    throw DomainError("the characterization oracle only decides trees");
  }
  EquilibriumReport report;
  report.solution_concept = Concept::NE;
  Json verdict_doc;
  if (file.config.objective() == Objective::Sum) {
    SumTreeCertificate certificate = sum_tree_certify(file.graph, file.config);
    if (certificate.violation) {
      report.violations.push_back(*certificate.violation);
    }
    verdict_doc = certificate.ge_and_ne ? "ne" : "not_ge";
  } else {
    const MaxTreeVerdict verdict = max_tree_is_ne(file.graph, file.config);
    if (verdict.violation) {
      report.violations.push_back(*verdict.violation);
    }
    if (verdict.multi_buy) {
      report.violations.push_back(*verdict.multi_buy);
    }
    if (verdict.multi_swap) {
      report.violations.push_back(violation_of(*verdict.multi_swap));
    }
    verdict_doc = to_string(verdict.kind);
  }
  report.holds = report.violations.empty();
  Json doc = to_json(report);
  doc["oracle"] = "characterization";
  doc["verdict"] = verdict_doc;
  return {doc, report.holds};
}

std::vector<Rational> parse_alpha_list(const std::string& text) {
  std::vector<Rational> alphas;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) {
      alphas.push_back(parse_rational(item));
    }
  }
  if (alphas.empty()) {
    throw ParseError("empty alpha list");
  }
  return alphas;
}

struct GenerateParams {
  std::string family;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<std::string> alpha;
  std::string pattern = "h2";
  std::string kind = "star";
  bool leaf_owned = false;
};

Fixture generate_fixture(const GenerateParams& p) {
  auto alpha_or = [&](Rational fallback) {
    return p.alpha ? parse_rational(*p.alpha) : fallback;
  };
  auto need = [](const std::optional<int>& value, const char* flag) {
    if (!value) {
      throw DomainError(std::string("this family needs ") + flag);
    }
    return *value;
  };
  if (p.family == "c5") {
    return c5(alpha_or(Rational(2)), p.pattern);
  }
  if (p.family == "cycle-with-leaves") {
    return cycle_with_leaves(alpha_or(Rational(7)));
  }
  if (p.family == "sum-lower-bound") {
    return sum_lower_bound(p.k.value_or(3));
  }
  if (p.family == "max-nonlocal") {
    return max_nonlocal(parse_nonlocal_kind(p.kind), p.k.value_or(2));
  }
  if (p.family == "badly-connected-tree") {
    const int k = p.k.value_or(7);
    return p.alpha ? badly_connected_tree(k, parse_rational(*p.alpha)) : badly_connected_tree(k);
  }
  if (p.family == "cheap-network") {
    return cheap_network(alpha_or(Rational(1)));
  }
  if (p.family == "max-lower-bound") {
    return max_lower_bound(p.k.value_or(3), alpha_or(Rational(2)));
  }
  if (p.family == "cheap-star") {
    return cheap_star(need(p.n, "--n"), alpha_or(Rational(1, 100)), !p.leaf_owned);
  }
  if (p.family == "h4") {
    return h4_candidate(alpha_or(Rational(7, 2)));
  }
  throw DomainError("unknown family '" + p.family + "'");
}

fs::path sidecar_path(const fs::path& instance) {
  fs::path sidecar = instance;
  sidecar.replace_extension();
  sidecar += ".expected.json";
  return sidecar;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Network creation game laboratory"};
  app.require_subcommand(1);

  std::string instance_path;
  std::optional<int> budget_cap;

  auto* check_cmd = app.add_subcommand("check", "test an equilibrium concept");
  std::string concept_name = "ge";
  std::string oracle = "auto";
  check_cmd->add_option("instance", instance_path, "instance JSON")->required();
  check_cmd->add_option("--concept", concept_name, "ge, ne, se or ase");
  check_cmd->add_option("--oracle", oracle, "auto, brute or characterization (ne only)")
      ->check(CLI::IsMember({"auto", "brute", "characterization"}));
  check_cmd->add_option("--budget-cap", budget_cap, "largest strategy size searched for ne");

  auto* generate_cmd = app.add_subcommand("generate", "emit a construction");
  GenerateParams params;
  std::string output;
  std::string expectations_output;
  generate_cmd->add_option("family", params.family)->required();
  generate_cmd->add_option("--k", params.k);
  generate_cmd->add_option("--n", params.n);
  generate_cmd->add_option("--alpha", params.alpha);
  generate_cmd->add_option("--pattern", params.pattern, "c5 ownership: h2, h3, h5 or F/B x5");
  generate_cmd->add_option("--kind", params.kind, "max-nonlocal: star, clique or spider");
  generate_cmd->add_flag("--leaf-owned", params.leaf_owned, "cheap-star: leaves own their edges");
  generate_cmd->add_option("-o,--output", output, "instance file (default: stdout)");
  generate_cmd->add_option("--expectations", expectations_output,
                           "sidecar file (default: next to --output)");

  auto* ratio_cmd = app.add_subcommand("ratio", "approximation ratio of an instance");
  ratio_cmd->add_option("instance", instance_path)->required();
  ratio_cmd->add_option("--budget-cap", budget_cap);

  auto* reduce_cmd = app.add_subcommand("reduce", "facility location instance of one agent");
  Vertex agent = 0;
  reduce_cmd->add_option("instance", instance_path)->required();
  reduce_cmd->add_option("--agent", agent)->required();

  auto* solve_cmd = app.add_subcommand("solve-fl", "local search and brute force on an FL file");
  solve_cmd->add_option("instance", instance_path)->required();

  auto* dynamics_cmd = app.add_subcommand("dynamics", "greedy play until no agent moves");
  std::string policy = "round-robin";
  std::uint64_t seed = 0;
  int max_rounds = 1000;
  std::string dot_dir;
  dynamics_cmd->add_option("instance", instance_path)->required();
  dynamics_cmd->add_option("--policy", policy)
      ->check(CLI::IsMember({"round-robin", "random", "max-gain"}));
  dynamics_cmd->add_option("--seed", seed);
  dynamics_cmd->add_option("--max-rounds", max_rounds);
  dynamics_cmd->add_option("--dot-dir", dot_dir, "write one DOT snapshot per step");

  auto* sweep_cmd = app.add_subcommand("sweep-alpha", "check a concept over several alphas");
  std::string alphas;
  sweep_cmd->add_option("instance", instance_path)->required();
  sweep_cmd->add_option("--alphas", alphas, "comma separated fractions")->required();
  sweep_cmd->add_option("--concept", concept_name);
  sweep_cmd->add_option("--budget-cap", budget_cap);

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering of an instance");
  dot_cmd->add_option("instance", instance_path)->required();

  std::vector<std::string> argv_storage{"ncg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) {
    argv.push_back(a.data());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (check_cmd->parsed()) {
      const InstanceFile file = parse_instance(read_file(instance_path));
      const auto result =
          check_instance(file, parse_concept(concept_name), oracle, search_options(budget_cap));
      out << result.report.dump(2) << "\n";
      return result.holds ? kHolds : kViolated;
    }
    if (generate_cmd->parsed()) {
      const Fixture f = generate_fixture(params);
      const std::string instance = serialize_instance(instance_of(f));
      const std::string sidecar = expectations_json(f).dump(2) + "\n";
      if (output.empty()) {
        out << instance;
      } else {
        write_file(output, instance);
      }
      if (!expectations_output.empty()) {
        write_file(expectations_output, sidecar);
      } else if (!output.empty()) {
        write_file(sidecar_path(output), sidecar);
      }
      return kHolds;
    }
    if (ratio_cmd->parsed()) {
      const InstanceFile file = parse_instance(read_file(instance_path));
      try {
        out << to_json(approx_ratio(file.graph, file.config, search_options(budget_cap))).dump(2)
            << "\n";
      } catch (const InstanceTooLarge& e) {
        err << "error: " << e.what()
            << "\nhint: limit the search with --budget-cap or raise NCG_ENUM_LIMIT\n";
        return kError;
      }
      return kHolds;
    }
    if (reduce_cmd->parsed()) {
      const InstanceFile file = parse_instance(read_file(instance_path));
      out << to_json(reduce(file.graph, file.config, agent).instance).dump(2) << "\n";
      return kHolds;
    }
    if (solve_cmd->parsed()) {
      const FLInstance inst = parse_fl_instance(read_file(instance_path));
      const FLSolution init = initial_solution(inst);
      const FLSolution local = local_search(inst, init);
      Json doc{{"initial", to_json(init)}, {"local", to_json(local)}};
      if (inst.facilities <= 20) {
        const FLSolution best = brute_force_optimum(inst);
        doc["optimum"] = to_json(best);
        if (best.cost.is_finite() && local.cost.is_finite() && best.cost.value() > 0) {
          doc["gap"] = to_string(local.cost.value() / best.cost.value());
        }
      }
      out << doc.dump(2) << "\n";
      return kHolds;
    }
    if (dynamics_cmd->parsed()) {
      const InstanceFile file = parse_instance(read_file(instance_path));
      const Schedule schedule{parse_policy(policy), seed, max_rounds};
      const Trajectory t = run_dynamics(file.graph, file.config, schedule);
      if (!dot_dir.empty()) {
        fs::create_directories(dot_dir);
        OwnershipGraph g = t.initial;
        write_file(fs::path(dot_dir) / "step-0000.dot", to_dot(g, file.labels));
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
          g = apply_move(g, t.steps[i].agent, t.steps[i].move);
          char name[32];
          std::snprintf(name, sizeof name, "step-%04zu.dot", i + 1);
          write_file(fs::path(dot_dir) / name, to_dot(g, file.labels));
        }
      }
      out << to_json(t).dump(2) << "\n";
      return kHolds;
    }
    if (sweep_cmd->parsed()) {
      const InstanceFile file = parse_instance(read_file(instance_path));
      const Concept c = parse_concept(concept_name);
      const SearchOptions options = search_options(budget_cap);
      std::ostringstream csv;
      csv << "alpha,holds\n";
      for (const Rational& alpha : parse_alpha_list(alphas)) {
        const bool holds =
            check(file.graph, file.config.with_alpha(alpha), c, options).holds;
        csv << to_string(alpha) << "," << (holds ? "yes" : "no") << "\n";
      }
      out << csv.str();
      return kHolds;
    }
    if (dot_cmd->parsed()) {
      const InstanceFile file = parse_instance(read_file(instance_path));
      out << to_dot(file.graph, file.labels);
      return kHolds;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

} // namespace ncg::cli
