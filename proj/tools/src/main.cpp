#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ltsenv/json_io.hpp"

namespace {

using ltsenv::cli::Options;

enum Exit { kOk = 0, kMathFailure = 1, kInputError = 2 };

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("-o,--output", o.output, "Write the report to this path instead of stdout");
  cmd->add_flag("--timing", o.timing, "Include timing_ms in the report");
}

void add_system_input(CLI::App* cmd, Options& o) {
  cmd->add_option("-s,--system", o.system, "Catalog system (see `ltsenv catalog`)");
  cmd->add_option("-f,--file", o.file, "Structure constants in JSON");
}

void add_algebra_input(CLI::App* cmd, Options& o) {
  cmd->add_option("-a,--algebra", o.algebra, "Catalog algebra (see `ltsenv catalog`)");
  cmd->add_option("-f,--file", o.file, "Multiplication table in JSON");
}

int emit(const ltsenv::Report& r, const Options& o) {
  const std::string text = o.format == "json" ? r.to_json().dump(2) + "\n" : r.to_text();
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << o.output << '\n';
      return kInputError;
    }
    out << text;
  }
  return r.ok() ? kOk : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Lie triple systems, their enveloping algebras and nuclei"};
  app.require_subcommand(1);
  Options o;
  std::function<ltsenv::Report(const Options&)> run;

  auto* catalog = app.add_subcommand("catalog", "List catalog systems and algebras");
  add_output_flags(catalog, o);
  catalog->callback([&] { run = ltsenv::cli::run_catalog; });

  auto* axioms = app.add_subcommand("axioms", "Check the axioms of a ternary system");
  add_system_input(axioms, o);
  axioms->add_option("--mode", o.mode, "Axiom set")->check(CLI::IsMember({"lts", "bol", "malcev"}));
  add_output_flags(axioms, o);
  axioms->callback([&] { run = ltsenv::cli::run_axioms; });

  auto* envelope = app.add_subcommand("envelope", "Lie envelope and PBW checks");
  add_system_input(envelope, o);
  envelope->add_option("--scale", o.scale, "Envelope of (V, scale [,,]), e.g. 4 or 1/2");
  envelope->add_option("-d,--degree", o.degree, "PBW degree bound (default 3)")->check(CLI::PositiveNumber);
  add_output_flags(envelope, o);
  envelope->callback([&] { run = ltsenv::cli::run_envelope; });

  auto* mul = app.add_subcommand("mul", "Multiply two elements of U(V)");
  add_system_input(mul, o);
  mul->add_option("--left", o.left, "Generator names (right-normed product) or JSON terms")->required();
  mul->add_option("--right", o.right, "Generator names (right-normed product) or JSON terms")->required();
  add_output_flags(mul, o);
  mul->callback([&] { run = ltsenv::cli::run_mul; });

  auto* centralizer = app.add_subcommand("centralizer", "Centralizer of V in U(V) up to a degree");
  add_system_input(centralizer, o);
  centralizer->add_option("-d,--degree", o.degree, "Degree bound (default 3)")->check(CLI::PositiveNumber);
  centralizer->add_option("--method", o.method, "split or full")->check(CLI::IsMember({"split", "full"}));
  add_output_flags(centralizer, o);
  centralizer->callback([&] { run = ltsenv::cli::run_centralizer; });

  auto* nuclei = app.add_subcommand("nuclei", "Nuclei, center and LN_alt of a finite algebra");
  add_algebra_input(nuclei, o);
  add_output_flags(nuclei, o);
  nuclei->callback([&] { run = ltsenv::cli::run_nuclei; });

  auto* decompose = app.add_subcommand("decompose", "Split A into a central part and a nilpotent ideal");
  add_algebra_input(decompose, o);
  decompose->add_option("--subspace", o.subspace, "Spanning vectors of V as JSON, e.g. [[0,1,0]]")->required();
  add_output_flags(decompose, o);
  decompose->callback([&] { run = ltsenv::cli::run_decompose; });

  auto* verify = app.add_subcommand("verify", "Run one identity check");
  verify->add_option("id", o.id, "Check identifier")->required();
  verify->add_option("-s,--system", o.system, "Restrict to one catalog system");
  verify->add_option("--max-n", o.max_n, "Exponent bound")->check(CLI::PositiveNumber);
  verify->add_option("-d,--degree", o.degree, "Degree bound")->check(CLI::PositiveNumber);
  verify->add_option("--cases", o.cases, "Random cases per system")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Seed for random cases");
  add_output_flags(verify, o);
  verify->callback([&] { run = ltsenv::cli::run_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    ltsenv::Report r = run(o);
    if (o.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    return emit(r, o);
  } catch (const ltsenv::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const ltsenv::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMathFailure;
  }
  return kInputError;
}
