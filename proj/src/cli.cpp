#include "intorder/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intorder/dimension.hpp"
#include "intorder/instances.hpp"
#include "intorder/json_io.hpp"

namespace intorder {
namespace {

json read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Poset poset_from_document(const json& doc) {
  if (doc.is_object() && doc.contains("poset"))
    return poset_from_json(doc.at("poset"));
  if (doc.is_object() && doc.contains("representation"))
    return poset_from_representation(
        representation_from_json(doc.at("representation")));
  if (doc.is_object() && doc.contains("elements")) return poset_from_json(doc);
  throw ParseError("input needs a 'poset' or 'representation' key");
}

Representation representation_from_document(const json& doc) {
  if (doc.is_object() && doc.contains("representation"))
    return representation_from_json(doc.at("representation"));
  if (doc.is_object() && doc.contains("intervals"))
    return representation_from_json(doc);
  throw ParseError("input needs a 'representation' key");
}

void emit(const json& doc, const std::string& output, std::ostream& out) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  if (output == "-") {
    out << text;
    return;
  }
  std::ofstream file(output);
  if (!file) throw ParseError("cannot open output file '" + output + "'");
  file << text;
}

void emit_error(std::ostream& out, const std::string& code,
                const std::string& detail) {
  json body;
  body["error"] = code;
  body["detail"] = detail;
  out << body.dump(2) << "\n";
}

std::vector<Rational> parse_lengths(const std::string& text) {
  std::vector<Rational> lengths;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    lengths.push_back(Rational::parse(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return lengths;
}

std::uint64_t seed_from_environment() {
  const char* env = std::getenv("INTORDER_SEED");
  if (env == nullptr) return 0;
  std::string text(env);
  try {
    std::size_t used = 0;
    std::uint64_t value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing junk");
    return value;
  } catch (const std::exception&) {
    throw ParseError("INTORDER_SEED is not an unsigned integer: '" + text +
                     "'");
  }
}

json instance_document(const NamedInstance& inst) {
  json doc;
  doc["poset"] = poset_to_json(inst.poset);
  if (inst.representation)
    doc["representation"] = representation_to_json(*inst.representation);
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"interval order toolkit: representations, realizers, exact "
               "dimension"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string input = "-";
  std::string output = "-";

  // gen
  auto* gen = app.add_subcommand("gen", "generate a poset + representation");
  std::string kind;
  gen->add_option("--kind", kind, "canonical, random, or named")
      ->required()
      ->check(CLI::IsMember({"canonical", "random", "named"}));
  int gen_n = 0;
  gen->add_option("--n", gen_n, "size parameter (canonical/random)");
  std::string gen_name;
  gen->add_option("--name", gen_name, "fixture name (named)");
  std::string gen_lengths = "1";
  gen->add_option("--lengths", gen_lengths,
                  "comma-separated interval lengths (random)");
  std::string gen_policy = "all_closed";
  gen->add_option("--policy", gen_policy, "end-flag policy (random)")
      ->check(CLI::IsMember({"all_closed", "oc", "mixed"}));
  int gen_grid = 1;
  gen->add_option("--grid", gen_grid, "endpoint grid denominator (random)");
  int gen_span = -1;
  gen->add_option("--span", gen_span,
                  "left endpoints lie in [0, span]; -1 means max(1, n)");
  std::uint64_t gen_seed = 0;
  auto* seed_opt = gen->add_option("--seed", gen_seed,
                                   "generator seed (random; INTORDER_SEED "
                                   "sets the default)");
  gen->add_option("-o,--output", output, "output path, - for stdout");
  gen->callback([&] {
    if (seed_opt->count() == 0) gen_seed = seed_from_environment();
    json doc;
    if (kind == "canonical") {
      auto [p, rep] = canonical_interval_order(gen_n);
      doc["poset"] = poset_to_json(p);
      doc["representation"] = representation_to_json(rep);
    } else if (kind == "named") {
      doc = instance_document(named(gen_name));
    } else {
      RandomRepSpec spec;
      spec.n = gen_n;
      spec.lengths = parse_lengths(gen_lengths);
      spec.policy = flag_policy_from_string(gen_policy);
      spec.grid = gen_grid;
      spec.span = gen_span;
      spec.seed = gen_seed;
      Representation rep = random_representation(spec);
      doc["poset"] = poset_to_json(poset_from_representation(rep));
      doc["representation"] = representation_to_json(rep);
    }
    emit(doc, output, out);
  });

  // recognize
  auto* recognize =
      app.add_subcommand("recognize", "test for (unit) interval order");
  recognize->add_option("input", input, "input path, - for stdin");
  recognize->add_option("-o,--output", output, "output path, - for stdout");
  recognize->callback([&] {
    Poset p = poset_from_document(read_document(input, in));
    bool interval = is_interval_order(p);
    bool unit = interval && is_unit_interval_order(p);
    json result;
    result["interval_order"] = interval;
    result["unit_interval_order"] = unit;
    if (!interval) {
      json witness;
      witness["pattern"] = "two_plus_two";
      witness["embedding"] =
          embedding_to_json(two_plus_two_pattern(), p, *find_two_plus_two(p));
      result["witness"] = std::move(witness);
    } else if (!unit) {
      json witness;
      witness["pattern"] = "one_plus_three";
      witness["embedding"] = embedding_to_json(one_plus_three_pattern(), p,
                                               *find_one_plus_three(p));
      result["witness"] = std::move(witness);
    }
    emit(result, output, out);
  });

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "classify a representation");
  classify_cmd->add_option("input", input, "input path, - for stdin");
  classify_cmd->add_option("-o,--output", output, "output path, - for stdout");
  classify_cmd->callback([&] {
    Representation rep =
        representation_from_document(read_document(input, in));
    emit(repr_class_to_json(classify(rep)), output, out);
  });

  // realize
  auto* realize = app.add_subcommand(
      "realize", "build a realizer from a representation");
  std::string method;
  realize->add_option("--method", method, "construction to run")
      ->required()
      ->check(CLI::IsMember({"unit-oc", "zero-one", "multi-length"}));
  realize->add_option("input", input, "input path, - for stdin");
  realize->add_option("-o,--output", output, "output path, - for stdout");
  realize->callback([&] {
    json doc = read_document(input, in);
    Representation rep = representation_from_document(doc);
    Poset p = doc.contains("poset") ? poset_from_json(doc.at("poset"))
                                    : poset_from_representation(rep);
    Realizer r;
    if (method == "unit-oc")
      r = realizer_unit_oc(p, rep);
    else if (method == "zero-one")
      r = realizer_zero_one(p, rep);
    else
      r = realizer_multi_length(p, rep);
    if (!verify_realizer(p, r))
      throw DomainError(Errc::self_check_failed,
                        "constructed realizer failed re-verification");
    json result;
    result["poset"] = poset_to_json(p);
    result["representation"] = representation_to_json(rep);
    result["realizer"] = realizer_to_json(p, r);
    emit(result, output, out);
  });

  // dim
  auto* dim = app.add_subcommand("dim", "exact order dimension");
  int dim_limit = 0;
  auto* dim_limit_opt =
      dim->add_option("--limit", dim_limit, "stop after this many extensions");
  int dim_jobs = 1;
  dim->add_option("--jobs", dim_jobs, "worker threads for the search");
  int dim_max_elements = 14;
  dim->add_option("--max-elements", dim_max_elements,
                  "refuse posets larger than this");
  dim->add_option("input", input, "input path, - for stdin");
  dim->add_option("-o,--output", output, "output path, - for stdout");
  dim->callback([&] {
    Poset p = poset_from_document(read_document(input, in));
    DimensionOptions options;
    if (dim_limit_opt->count() > 0) options.limit = dim_limit;
    options.jobs = dim_jobs;
    options.max_elements = dim_max_elements;
    DimensionResult result = exact_dimension(p, options);
    emit(dimension_result_to_json(p, result), output, out);
  });

  // verify
  auto* verify =
      app.add_subcommand("verify", "check a realizer against a poset");
  verify->add_option("input", input, "input path, - for stdin");
  verify->add_option("-o,--output", output, "output path, - for stdout");
  verify->callback([&] {
    json doc = read_document(input, in);
    Poset p = poset_from_document(doc);
    if (!doc.is_object() || !doc.contains("realizer"))
      throw ParseError("input needs a 'realizer' key");
    Realizer r = realizer_from_json(p, doc.at("realizer"));
    RealizerCheck check = check_realizer(p, r);
    json result;
    result["ok"] = check.ok;
    if (!check.ok) {
      result["uncovered"] = json::array({p.name(check.uncovered.first),
                                         p.name(check.uncovered.second)});
      exit_code = 2;
    }
    emit(result, output, out);
  });

  // fixtures
  auto* fixtures =
      app.add_subcommand("fixtures", "write every named fixture to a directory");
  std::string fixtures_dir = "fixtures";
  fixtures->add_option("--dir", fixtures_dir, "target directory");
  fixtures->add_option("-o,--output", output, "output path, - for stdout");
  fixtures->callback([&] {
    std::filesystem::create_directories(fixtures_dir);
    json written = json::array();
    for (const std::string& name : instance_names()) {
      std::filesystem::path path =
          std::filesystem::path(fixtures_dir) / (name + ".json");
      std::ofstream file(path);
      if (!file)
        throw ParseError("cannot open output file '" + path.string() + "'");
      file << instance_document(named(name)).dump(2) << "\n";
      written.push_back(path.generic_string());
    }
    json result;
    result["written"] = std::move(written);
    emit(result, output, out);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    return exit_code;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(out, "usage", e.what());
    return 1;
  } catch (const NotIntervalOrderError& e) {
    json body;
    body["error"] = errc_name(e.code());
    body["detail"] = e.detail();
    json witness = json::object();
    for (const auto& [pattern, host] : e.witness()) witness[pattern] = host;
    body["witness"] = std::move(witness);
    out << body.dump(2) << "\n";
    return 2;
  } catch (const DomainError& e) {
    emit_error(out, errc_name(e.code()), e.detail());
    return e.code() == Errc::self_check_failed ? 3 : 2;
  } catch (const ParseError& e) {
    emit_error(out, "parse_error", e.what());
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    emit_error(out, "io_error", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error(out, "internal", e.what());
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace intorder
