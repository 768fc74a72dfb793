#include "lppgames/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "lppgames/generate.hpp"
#include "lppgames/json_io.hpp"

namespace lpp {

namespace {

struct Options {
  std::string input_path;
  std::string format = "table";
  std::optional<int> decimals;
  int partition_cap = kDefaultPartitionCap;
};

std::string render(const Rational& value, const Options& options) {
  if (options.decimals) return to_decimal(value, *options.decimals);
  return to_string(value);
}

void note_if_approximate(std::ostream& out, const Options& options) {
  if (options.decimals) {
    out << "(values approximate, " << *options.decimals << " decimal places)\n";
  }
}

LPPInstance load_validated(const Options& options, std::ostream& err) {
  LPPInstance instance = load_instance(options.input_path);
  const std::vector<std::string> violations = validate(instance);
  if (!violations.empty()) {
    err << options.input_path << ": instance fails validation\n";
    for (const std::string& violation : violations) err << "  - " << violation << "\n";
    throw ParseError("invalid instance");
  }
  return instance;
}

void emit(std::ostream& out, const Options& options, const nlohmann::ordered_json& doc,
          const std::function<void()>& table) {
  if (options.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    table();
  }
}

int cmd_validate(const Options& options, std::ostream& out, std::ostream& err) {
  const LPPInstance instance = load_instance(options.input_path);
  const std::vector<std::string> violations = validate(instance);
  nlohmann::ordered_json doc;
  doc["valid"] = violations.empty();
  doc["violations"] = violations;
  emit(out, options, doc, [&] {
    if (violations.empty()) {
      out << "valid (n=" << instance.n << ", q=" << instance.q << ", g=" << instance.g << ")\n";
    } else {
      out << "invalid:\n";
      for (const std::string& violation : violations) out << "  - " << violation << "\n";
    }
  });
  if (!violations.empty()) {
    err << "instance fails validation\n";
    return 2;
  }
  return 0;
}

int cmd_demands(const Options& options, const std::string& coalition_spec, std::ostream& out,
                std::ostream& err) {
  const LPPInstance instance = load_validated(options, err);
  DemandProfile profile(instance);
  std::vector<Coalition> wanted;
  if (coalition_spec.empty()) {
    for (std::uint32_t mask = 1; mask <= Coalition::full(instance.n).mask(); ++mask) {
      wanted.push_back(Coalition::from_mask(mask));
    }
  } else {
    Coalition one;
    std::istringstream stream(coalition_spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
      const int label = std::stoi(token);
      if (label < 1 || label > instance.n) {
        throw std::invalid_argument("--coalition: player " + token + " out of range");
      }
      one = one.unite(Coalition::single(label - 1));
    }
    wanted.push_back(one);
  }

  nlohmann::ordered_json doc;
  doc["n"] = instance.n;
  doc["r"] = to_string(instance.r);
  nlohmann::ordered_json demands;
  for (Coalition coalition : wanted) {
    demands[coalition_key(coalition, instance.n)] = to_string(profile.demand(coalition));
  }
  doc["demands"] = std::move(demands);
  emit(out, options, doc, [&] {
    note_if_approximate(out, options);
    out << std::left << std::setw(14) << "coalition" << "demand\n";
    for (Coalition coalition : wanted) {
      out << std::left << std::setw(14) << to_text(coalition)
          << render(profile.demand(coalition), options) << "\n";
    }
    out << std::left << std::setw(14) << "stock r" << render(instance.r, options) << "\n";
  });
  return 0;
}

int cmd_classify(const Options& options, std::ostream& out, std::ostream& err) {
  const LPPInstance instance = load_validated(options, err);
  DemandProfile profile(instance);
  const RegimeReport report = classify_regime(profile, options.partition_cap);
  emit(out, options, regime_report_to_json(report), [&] {
    out << "regime: " << to_string(report.regime) << "\n";
    if (report.minimal_exceeding.empty()) {
      out << "no structure demands more than the stock\n";
    } else {
      out << "minimal over-demand structures:\n";
      for (const Partition& partition : report.minimal_exceeding) {
        out << "  " << to_text(partition) << " (demand "
            << render(profile.partition_demand(partition), options) << " > r)\n";
      }
    }
  });
  return 0;
}

CharacteristicGame build_model_game(const std::string& model, DemandProfile& profile,
                                    const Options& options) {
  if (model == "characteristic") return characteristic_game(profile, options.partition_cap);
  if (model == "optimistic") {
    return lpp_game_from_resource_game(profile, optimistic_resource_game(profile));
  }
  if (model == "pessimistic") {
    return lpp_game_from_resource_game(
        profile, pessimistic_resource_game(profile, options.partition_cap));
  }
  if (model == "resource-opt") return optimistic_resource_game(profile);
  if (model == "resource-pes") return pessimistic_resource_game(profile, options.partition_cap);
  if (model == "bankruptcy") {
    std::vector<Rational> claims;
    for (int i = 0; i < profile.instance().n; ++i) {
      claims.push_back(profile.demand(Coalition::single(i)));
    }
    return bankruptcy_game(profile.instance().r, claims);
  }
  throw std::invalid_argument("unknown model '" + model + "'");
}

void print_characteristic_table(const CharacteristicGame& game, const Options& options,
                                std::ostream& out, const std::string& heading) {
  note_if_approximate(out, options);
  out << std::left << std::setw(14) << "coalition" << heading << "\n";
  game.for_each_nonempty([&](Coalition coalition, const Rational& worth) {
    out << std::left << std::setw(14) << to_text(coalition) << render(worth, options) << "\n";
  });
}

int cmd_game(const Options& options, const std::string& model, const std::string& rule,
             std::ostream& out, std::ostream& err) {
  const LPPInstance instance = load_validated(options, err);
  DemandProfile profile(instance);
  if (model == "partition") {
    const PartitionFunctionGame game =
        partition_function_game(profile, rule_by_name(rule), options.partition_cap);
    emit(out, options, partition_game_to_json(game), [&] {
      note_if_approximate(out, options);
      out << "rule: " << game.rule_name() << "\n";
      out << std::left << std::setw(26) << "embedded coalition" << std::setw(14) << "allotment"
          << "worth\n";
      for (std::size_t p = 0; p < game.partitions().size(); ++p) {
        for (const auto& cell : game.cells(p)) {
          out << std::left << std::setw(26)
              << to_text(cell.block) + "|" + to_text(game.partitions()[p]) << std::setw(14)
              << render(cell.allotment, options) << render(cell.worth, options) << "\n";
        }
      }
    });
    return 0;
  }
  const CharacteristicGame game = build_model_game(model, profile, options);
  emit(out, options, game_to_json(game), [&] {
    print_characteristic_table(game, options, out,
                               model.rfind("resource-", 0) == 0 ? "share" : "worth");
  });
  return 0;
}

void print_core_report(const CoreReport& report, const Options& options, std::ostream& out) {
  out << "core: " << to_string(report.verdict) << "\n";
  if (report.witness) {
    out << "witness:";
    for (Eigen::Index i = 0; i < report.witness->size(); ++i) {
      out << " " << render((*report.witness)(i), options);
    }
    out << "\n";
  }
  if (report.source) out << "source: " << to_string(*report.source) << "\n";
}

int cmd_core(const Options& options, const std::string& model, const std::string& rule,
             const std::string& view, std::ostream& out, std::ostream& err) {
  const LPPInstance instance = load_validated(options, err);
  DemandProfile profile(instance);
  CoreReport report;
  if (model == "partition") {
    const PartitionFunctionGame game =
        partition_function_game(profile, rule_by_name(rule), options.partition_cap);
    report = partition_core(game,
                            view == "optimistic" ? CoreView::Optimistic : CoreView::Pessimistic);
  } else {
    report = core_nonempty(build_model_game(model, profile, options));
  }
  emit(out, options, core_report_to_json(report), [&] {
    note_if_approximate(out, options);
    print_core_report(report, options, out);
  });
  return 0;
}

int cmd_owen(const Options& options, std::ostream& out, std::ostream& err) {
  const LPPInstance instance = load_validated(options, err);
  DemandProfile profile(instance);
  const Allocation payoff = owen_allocation(profile);
  const CharacteristicGame optimistic =
      lpp_game_from_resource_game(profile, optimistic_resource_game(profile));
  const MembershipCheck membership = check_core_membership(optimistic, payoff);
  Rational total = 0;
  for (Eigen::Index i = 0; i < payoff.size(); ++i) total += payoff(i);

  nlohmann::ordered_json doc;
  nlohmann::ordered_json allocation = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < payoff.size(); ++i) allocation.push_back(to_string(payoff(i)));
  doc["allocation"] = std::move(allocation);
  doc["total"] = to_string(total);
  doc["in_core_of_optimistic_game"] = membership.in_core;
  emit(out, options, doc, [&] {
    note_if_approximate(out, options);
    out << "endowments priced at grand-coalition duals\n";
    for (Eigen::Index i = 0; i < payoff.size(); ++i) {
      out << "  producer " << (i + 1) << ": " << render(payoff(i), options) << "\n";
    }
    out << "total: " << render(total, options) << "\n";
    out << "in core of the optimistic game: " << (membership.in_core ? "yes" : "no") << "\n";
  });
  return 0;
}

int cmd_stability(const Options& options, const std::string& semantics_name, std::ostream& out,
                  std::ostream& err) {
  const LPPInstance instance = load_validated(options, err);
  DemandProfile profile(instance);
  const ReductionSemantics semantics = semantics_name == "capped-block"
                                           ? ReductionSemantics::CappedBlockOnly
                                           : ReductionSemantics::CappedSubcoalitions;
  nlohmann::ordered_json stable_list = nlohmann::ordered_json::array();
  std::vector<std::pair<Partition, StabilityCheck>> stable;
  for_each_partition(instance.n, options.partition_cap, [&](const Partition& partition) {
    StabilityCheck check = is_partitionally_stable(profile, partition, semantics);
    if (check.stable) stable.emplace_back(partition, std::move(check));
  });
  for (const auto& [partition, check] : stable) {
    nlohmann::ordered_json entry;
    entry["partition"] = to_text(partition);
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const auto& [block, witness] : check.block_witnesses) {
      nlohmann::ordered_json item;
      item["coalition"] = to_text(block);
      nlohmann::ordered_json pay = nlohmann::ordered_json::array();
      for (int member : block.members()) pay.push_back(to_string(witness(member)));
      item["witness"] = std::move(pay);
      blocks.push_back(std::move(item));
    }
    entry["blocks"] = std::move(blocks);
    stable_list.push_back(std::move(entry));
  }
  nlohmann::ordered_json doc;
  doc["semantics"] =
      semantics == ReductionSemantics::CappedBlockOnly ? "capped-block" : "capped-subcoalitions";
  doc["stable"] = std::move(stable_list);
  emit(out, options, doc, [&] {
    note_if_approximate(out, options);
    if (stable.empty()) {
      out << "no stable structure\n";
      return;
    }
    out << "stable structures:\n";
    for (const auto& [partition, check] : stable) {
      out << "  " << to_text(partition) << "\n";
      for (const auto& [block, witness] : check.block_witnesses) {
        out << "    block " << to_text(block) << " core witness:";
        for (int member : block.members()) out << " " << render(witness(member), options);
        out << "\n";
      }
    }
  });
  return 0;
}

int cmd_generate(const GeneratorConfig& config, const std::string& out_path, std::ostream& out) {
  const LPPInstance instance = generate_instance(config);
  const std::string text = instance_to_json(instance).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
    file << text;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cooperative analysis of linear production under a managed common-pool resource"};
  app.require_subcommand(1);
  app.fallthrough();

  Options options;
  app.add_option("--format", options.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--decimals", options.decimals,
                 "render values as fixed-point approximations with this many places");
  app.add_option("--partition-cap", options.partition_cap,
                 "largest player count for which structures are enumerated")
      ->check(CLI::PositiveNumber);

  const auto with_input = [&](CLI::App* cmd) {
    cmd->add_option("input", options.input_path, "instance JSON file")->required();
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the model assumptions");
  with_input(validate_cmd);

  std::string coalition_spec;
  CLI::App* demands_cmd = app.add_subcommand("demands", "optimal pool demands d_S");
  with_input(demands_cmd);
  demands_cmd->add_option("--coalition", coalition_spec, "single coalition, e.g. 1,3");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "how binding the pool is across structures");
  with_input(classify_cmd);

  std::string model = "characteristic";
  std::string rule = "demand-capped-proportional";
  CLI::App* game_cmd = app.add_subcommand("game", "build a cooperative game");
  with_input(game_cmd);
  game_cmd->add_option("--model", model,
                       "characteristic | optimistic | pessimistic | resource-opt | resource-pes "
                       "| partition | bankruptcy")
      ->required();
  game_cmd->add_option("--rule", rule, "allocation rule for --model partition");

  std::string core_model = "characteristic";
  std::string core_rule = "demand-capped-proportional";
  std::string core_view = "pessimistic";
  CLI::App* core_cmd = app.add_subcommand("core", "decide core emptiness, with witness");
  with_input(core_cmd);
  core_cmd->add_option("--model", core_model, "same choices as game --model")->required();
  core_cmd->add_option("--rule", core_rule, "allocation rule for --model partition");
  core_cmd->add_option("--view", core_view, "pessimistic | optimistic (partition model)")
      ->check(CLI::IsMember({"pessimistic", "optimistic"}));

  CLI::App* owen_cmd =
      app.add_subcommand("owen", "core allocation from grand-coalition dual prices");
  with_input(owen_cmd);

  std::string semantics = "capped-subcoalitions";
  CLI::App* stability_cmd = app.add_subcommand("stability", "partitionally stable structures");
  with_input(stability_cmd);
  stability_cmd->add_option("--semantics", semantics, "capped-subcoalitions | capped-block")
      ->check(CLI::IsMember({"capped-subcoalitions", "capped-block"}));

  GeneratorConfig generator;
  std::string regime_name = "unconstrained";
  std::string out_path;
  CLI::App* generate_cmd = app.add_subcommand("generate", "random valid instance");
  generate_cmd->add_option("--n", generator.n, "producers")->required();
  generate_cmd->add_option("--q", generator.q, "owned resources")->required();
  generate_cmd->add_option("--g", generator.g, "goods")->required();
  generate_cmd->add_option("--seed", generator.seed, "PRNG seed")->required();
  generate_cmd->add_option("--regime", regime_name, "unconstrained | grand-only | general")
      ->required()
      ->check(CLI::IsMember({"unconstrained", "grand-only", "general"}));
  generate_cmd->add_option("--attempts", generator.attempts, "rejection-sampling budget");
  generate_cmd->add_option("--out", out_path, "write to file instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(options, out, err);
    if (*demands_cmd) return cmd_demands(options, coalition_spec, out, err);
    if (*classify_cmd) return cmd_classify(options, out, err);
    if (*game_cmd) return cmd_game(options, model, rule, out, err);
    if (*core_cmd) return cmd_core(options, core_model, core_rule, core_view, out, err);
    if (*owen_cmd) return cmd_owen(options, out, err);
    if (*stability_cmd) return cmd_stability(options, semantics, out, err);
    if (*generate_cmd) {
      generator.partition_cap = options.partition_cap;
      if (regime_name == "unconstrained") generator.regime = Regime::Unconstrained;
      if (regime_name == "grand-only") generator.regime = Regime::GrandOnly;
      if (regime_name == "general") generator.regime = Regime::General;
      return cmd_generate(generator, out_path, out);
    }
  } catch (const ParseError& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const CapError& error) {
    err << "refused: " << error.what() << "\n";
    return 3;
  } catch (const PreconditionError& error) {
    err << "refused: " << error.what() << "\n";
    return 3;
  } catch (const std::domain_error& error) {
    err << "refused: " << error.what() << "\n";
    return 3;
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace lpp
