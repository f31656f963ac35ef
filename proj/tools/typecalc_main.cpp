#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "typecalc/classification.hpp"
#include "typecalc/io.hpp"
#include "typecalc/render.hpp"

namespace {

using namespace typecalc;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string fixtures_path;
  std::string format = "text";
  std::string max_weight = "1";
  std::string method = "both";
  std::string type_literal;
  std::string verify_target;
  i64 power_exponent = 1;
  bool reduce_after_power = false;
  i64 n_max = 10000;
};

const Fixtures& load_fixtures(const Options& opt, Fixtures& storage) {
  if (opt.fixtures_path.empty()) return Fixtures::builtin();
  storage = Fixtures::from_file(opt.fixtures_path);
  return storage;
}

SliceMethod parse_method(const std::string& name) {
  if (name == "series") return SliceMethod::series;
  if (name == "knapsack") return SliceMethod::knapsack;
  if (name == "both") return SliceMethod::both;
  throw InvalidInput("unknown method \"" + name + "\" (expected series, knapsack or both)");
}

std::optional<int> table2_row_for(const Fixtures& fixtures, const AutType& t) {
  for (const auto& row : fixtures.table2)
    if (row.type == t) return row.index;
  return std::nullopt;
}

int run_primitives(const Options& opt) {
  const auto wmax = parse_rational(opt.max_weight);
  const auto catalogue = primitives_up_to_weight(wmax);
  std::cout << render_primitives(catalogue, render_format_from_string(opt.format));
  return kExitOk;
}

int run_age_one(const Options& opt) {
  Fixtures storage;
  const auto& fixtures = load_fixtures(opt, storage);
  const auto catalogue = enumerate_age_one(fixtures, parse_method(opt.method));
  std::cout << render_age_one(catalogue, render_format_from_string(opt.format));
  return kExitOk;
}

int run_classify(const Options& opt) {
  Fixtures storage;
  const auto& fixtures = load_fixtures(opt, storage);
  const AutType t = reduce(parse_type(opt.type_literal));
  const auto catalogue = primitives_up_to_weight(Rational(1));
  const auto strategies = classify(t, catalogue);
  const auto row = table2_row_for(fixtures, t);
  if (opt.format == "json") {
    nlohmann::json names = nlohmann::json::array();
    for (const auto& s : strategies) names.push_back(s.str());
    nlohmann::json out{{"type", type_str(t)}, {"weight", weight(t).str()},
                       {"strategies", names}};
    if (row) out["table2_row"] = *row;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "type: " << type_str(t) << "\n";
    std::cout << "weight: " << weight(t).str() << "\n";
    std::cout << "strategies:";
    for (const auto& s : strategies) std::cout << " " << s.str();
    std::cout << "\n";
    if (row) std::cout << "table2 row: " << *row << "\n";
  }
  return kExitOk;
}

int run_power(const Options& opt) {
  AutType t = power(parse_type(opt.type_literal), opt.power_exponent);
  if (opt.reduce_after_power) t = reduce(t);
  std::cout << type_str(t) << "\n";
  return kExitOk;
}

int run_inverse(const Options& opt) {
  std::cout << type_str(inverse(parse_type(opt.type_literal))) << "\n";
  return kExitOk;
}

int run_weight(const Options& opt) {
  std::cout << weight(parse_type(opt.type_literal)).str() << "\n";
  return kExitOk;
}

int run_decompose(const Options& opt) {
  const AutType t = parse_type(opt.type_literal);
  const auto catalogue = primitives_up_to_weight(Rational(1));
  const auto monomials = decompose(t, catalogue);
  if (opt.format == "json") {
    nlohmann::json names = nlohmann::json::array();
    for (const auto& m : monomials) names.push_back(m.str());
    std::cout << nlohmann::json{{"type", type_str(t)}, {"decompositions", names}}.dump(2) << "\n";
  } else {
    if (monomials.empty()) {
      std::cout << "no decomposition into weight-<=-1 primitives\n";
    } else {
      for (const auto& m : monomials) std::cout << m.str() << "\n";
    }
  }
  return kExitOk;
}

int run_verify(const Options& opt) {
  Fixtures storage;
  const auto& fixtures = load_fixtures(opt, storage);
  std::vector<VerificationReport> reports;
  const auto want = [&](const std::string& name) {
    return opt.verify_target == name || opt.verify_target == "all";
  };
  if (want("lemmas")) reports.push_back(verify_lemmas(opt.n_max));
  if (want("table1")) reports.push_back(verify_table1(fixtures));
  if (want("table2")) reports.push_back(verify_table2(fixtures));
  if (want("series")) reports.push_back(verify_series(fixtures));
  if (want("notes")) reports.push_back(verify_notes(fixtures));
  std::cout << render_reports(reports, render_format_from_string(opt.format));
  for (const auto& rep : reports)
    if (!rep.passed()) return kExitVerificationFailure;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact calculus of finite-order automorphism types: catalogues, age-1 "
               "classification and verification"};
  app.require_subcommand(1);
  app.add_option("--fixtures", opt.fixtures_path,
                 "JSON file overriding the embedded reference tables");

  auto* primitives = app.add_subcommand("primitives", "primitive types of bounded weight");
  primitives->add_option("--max-weight", opt.max_weight, "weight bound, a rational in (0, 1]");
  primitives->add_option("--format", opt.format, "text, csv, json or latex");

  auto* age_one = app.add_subcommand("age-one", "the 35 reduced types of age 1");
  age_one->add_option("--method", opt.method, "series, knapsack or both (cross-checked)");
  age_one->add_option("--format", opt.format, "text, csv, json or latex");

  auto* classify_cmd = app.add_subcommand("classify", "applicable strategies for an age-1 type");
  classify_cmd->add_option("type", opt.type_literal, "type literal, e.g. \"1/7, 2/7, 4/7\"")
      ->required();
  classify_cmd->add_option("--format", opt.format, "text or json");

  auto* power_cmd = app.add_subcommand("power", "entry-wise multiplication by an integer");
  power_cmd->add_option("type", opt.type_literal, "type literal")->required();
  power_cmd->add_option("k", opt.power_exponent, "positive exponent")->required();
  power_cmd->add_flag("--reduce", opt.reduce_after_power, "drop zero entries from the result");

  auto* inverse_cmd = app.add_subcommand("inverse", "entry-wise negation mod 1");
  inverse_cmd->add_option("type", opt.type_literal, "type literal")->required();

  auto* weight_cmd = app.add_subcommand("weight", "exact entry sum");
  weight_cmd->add_option("type", opt.type_literal, "type literal")->required();

  auto* decompose_cmd =
      app.add_subcommand("decompose", "all decompositions into catalogue primitives");
  decompose_cmd->add_option("type", opt.type_literal, "type literal")->required();
  decompose_cmd->add_option("--format", opt.format, "text or json");

  auto* verify = app.add_subcommand("verify", "re-derive and check the reference data");
  verify->add_option("target", opt.verify_target, "table1, table2, notes, lemmas, series or all")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "notes", "lemmas", "series", "all"}));
  verify->add_option("--n-max", opt.n_max, "sweep bound for the lemma checks (default 10000)");
  verify->add_option("--format", opt.format, "text, csv, json or latex");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (primitives->parsed()) return run_primitives(opt);
    if (age_one->parsed()) return run_age_one(opt);
    if (classify_cmd->parsed()) return run_classify(opt);
    if (power_cmd->parsed()) return run_power(opt);
    if (inverse_cmd->parsed()) return run_inverse(opt);
    if (weight_cmd->parsed()) return run_weight(opt);
    if (decompose_cmd->parsed()) return run_decompose(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.position << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const StabilityError& e) {
    std::cerr << "invalid type: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClassificationError& e) {
    std::cerr << "classification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
