#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "paritypoly/laurent.hpp"
#include "paritypoly/moves.hpp"
#include "paritypoly/realize.hpp"

using namespace paritypoly;
using namespace paritypoly::cli;

namespace {

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "Emit one JSON record per line");
  sub->add_flag("-v,--verbose", o.verbose, "Print passing checks too");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity virtual Alexander polynomial of virtual knot diagrams"};
  app.require_subcommand(1);
  Options o;
  std::string suite;

  auto* compute = app.add_subcommand("compute", "Print the canonical polynomial of every diagram");
  compute->add_option("paths", o.paths, ".vkd or .gauss files")->required();
  add_common(compute, o);

  auto* bounds = app.add_subcommand("bounds", "Print widths and crossing-number lower bounds");
  bounds->add_option("paths", o.paths, ".vkd or .gauss files")->required();
  add_common(bounds, o);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "moves | symmetry | skein | oddswitch | foxid | prop1")
      ->required()
      ->check(CLI::IsMember({"moves", "symmetry", "skein", "oddswitch", "foxid", "prop1"}));
  verify->add_option("paths", o.paths, "Corpus files");
  verify->add_option("--trials", o.trials, "Random trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "RNG seed");
  add_common(verify, o);

  auto* presentation = app.add_subcommand("presentation", "Print the parity group presentation");
  presentation->add_option("paths", o.paths, ".vkd or .gauss files")->required();

  auto* batch = app.add_subcommand("batch", "JSON record per line of a .gauss table");
  batch->add_option("table", o.paths, "Table file")->required()->expected(1);
  batch->add_option("--out", o.out, "Write records to FILE");
  batch->add_option("-j,--jobs", o.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputFailure;
  }

  try {
    if (*compute) return cmd_compute(o, std::cout);
    if (*bounds) return cmd_bounds(o, std::cout);
    if (*verify) return cmd_verify(suite, o, std::cout);
    if (*presentation) return cmd_presentation(o, std::cout);
    if (*batch) return cmd_batch(o, std::cout);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputFailure;
  } catch (const ValidationError& e) {
    std::cerr << "invalid diagram: " << e.what() << "\n";
    return kInputFailure;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputFailure;
  } catch (const MoveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}
