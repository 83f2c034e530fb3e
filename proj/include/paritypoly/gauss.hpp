#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paritypoly/diagram.hpp"

namespace paritypoly {

struct GaussPass {
  int crossing = 0;
  bool over = true;
  int sign = 1;

  bool operator==(const GaussPass&) const = default;
};

/// Classical signed Gauss code, e.g. O1-O2-U1-O3+U2-U3+.
class SignedGaussCode {
 public:
  SignedGaussCode() = default;
  explicit SignedGaussCode(std::vector<GaussPass> passes) : passes_(std::move(passes)) {}

  const std::vector<GaussPass>& passes() const { return passes_; }
  std::size_t size() const { return passes_.size(); }
  bool empty() const { return passes_.empty(); }

  /// Compact rendering without separators, e.g. "O1+U1+".
  std::string to_string() const;
  /// Same code as a DiagramCode with no virtual crossings.
  DiagramCode to_diagram() const;

  bool operator==(const SignedGaussCode&) const = default;

 private:
  std::vector<GaussPass> passes_;
};

/// Parses `([OU]\d+[+-])+` with optional whitespace; validates pairing and signs.
SignedGaussCode parse_gauss(std::string_view text);

std::vector<std::string> validate(const SignedGaussCode& g);

/// Drops virtual passes, keeping kinds and signs.
SignedGaussCode classical_gauss_code(const DiagramCode& code);

/// True iff a equals some cyclic rotation of b.
bool equal_up_to_rotation(const SignedGaussCode& a, const SignedGaussCode& b);

struct NamedGauss {
  std::string name;
  std::string text;
  int line = 0;
};

/// Splits a `.gauss` file into lines of `name<TAB>code` or bare code. Comment
/// (#) and blank lines are skipped; codes are not parsed here.
std::vector<NamedGauss> read_gauss_table(std::string_view file_text);

}  // namespace paritypoly
