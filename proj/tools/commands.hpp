#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "paritypoly/alexander.hpp"
#include "paritypoly/diagram.hpp"

namespace paritypoly::cli {

/// Unreadable file or unsupported extension.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kOk = 0, kInputFailure = 1, kInternalError = 2 };

struct Options {
  std::vector<std::string> paths;
  bool json = false;
  bool verbose = false;
  int trials = 1000;
  std::uint64_t seed = 1;
  int jobs = 0;  // 0 = hardware concurrency
  std::string out;
};

/// `.vkd` files are parsed directly; `.gauss` lines are realized.
std::vector<NamedDiagram> load_diagrams(const std::string& path);
std::vector<NamedDiagram> load_all(const std::vector<std::string>& paths);

/// One RunReport record.
nlohmann::json diagram_record(const NamedDiagram& d, const AlexanderResult& r);

int cmd_compute(const Options& o, std::ostream& out);
int cmd_bounds(const Options& o, std::ostream& out);
int cmd_verify(const std::string& suite, const Options& o, std::ostream& out);
int cmd_presentation(const Options& o, std::ostream& out);
int cmd_batch(const Options& o, std::ostream& out);

}  // namespace paritypoly::cli
