#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paritypoly {

/// Malformed `.vkd`/`.gauss` text. Carries the 1-based input line when known.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A code that violates one or more structural invariants.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

enum class PassKind : std::uint8_t { Over, Under, Virtual };

/// One passage of the knot through a crossing.
struct Pass {
  int crossing = 0;
  PassKind kind = PassKind::Over;
  /// Virtual passes only: this strand, followed by the other strand, forms a
  /// positively oriented frame.
  bool frame_first = false;

  bool is_classical() const { return kind != PassKind::Virtual; }
  bool operator==(const Pass& o) const {
    return crossing == o.crossing && kind == o.kind && (kind != PassKind::Virtual || frame_first == o.frame_first);
  }
};

/// Cyclic pass sequence of a planar virtual knot diagram plus classical signs.
/// The first pass is the basepoint. Construction does not validate.
class DiagramCode {
 public:
  DiagramCode() = default;
  DiagramCode(std::vector<Pass> passes, std::map<int, int> signs)
      : passes_(std::move(passes)), signs_(std::move(signs)) {}

  const std::vector<Pass>& passes() const { return passes_; }
  const std::map<int, int>& signs() const { return signs_; }
  std::size_t size() const { return passes_.size(); }
  bool empty() const { return passes_.empty(); }

  /// All crossing ids, ascending.
  std::vector<int> crossing_ids() const;
  std::vector<int> classical_ids() const;
  std::vector<int> virtual_ids() const;
  std::size_t crossing_count() const { return passes_.size() / 2; }

  bool is_classical(int id) const { return signs_.count(id) != 0; }
  int sign(int id) const;
  /// 0-based positions of the two passes of id, in sequence order.
  std::pair<std::size_t, std::size_t> positions(int id) const;
  int max_id() const;

  /// Token rendering, e.g. "O1+ U2+ U1+ O2+"; empty code renders as "".
  std::string to_string() const;

  bool operator==(const DiagramCode& o) const { return passes_ == o.passes_ && signs_ == o.signs_; }

 private:
  std::vector<Pass> passes_;
  std::map<int, int> signs_;
};

struct NamedDiagram {
  std::string name;
  DiagramCode code;
  int line = 0;
};

/// Parses one code line body: whitespace-separated O<id><sign>, U<id><sign>,
/// V<id>x, V<id>y tokens. Validates the result.
DiagramCode parse_diagram(std::string_view text);

/// Parses a whole `.vkd` file (comments, name: and code: lines).
std::vector<NamedDiagram> parse_vkd(std::string_view file_text);

/// Every violated invariant, each naming the offending crossing. Empty means valid.
std::vector<std::string> validate(const DiagramCode& code);
/// Throws ValidationError unless valid.
void require_valid(const DiagramCode& code);

enum class Parity : std::uint8_t { Even, Odd };
using ParityMap = std::map<int, Parity>;

/// A classical crossing is odd iff an odd number of classical passes lie
/// strictly between its two passes. Virtual passes are not counted.
ParityMap parity(const DiagramCode& code);

/// Semi-arc i (1-based) runs from pass position i to position i+1 (cyclic).
class SemiArcLabeling {
 public:
  explicit SemiArcLabeling(std::size_t pass_count) : passes_(pass_count) {}

  /// 2n arcs, or a single closed loop for the empty code.
  std::size_t arc_count() const { return passes_ == 0 ? 1 : passes_; }
  /// Arc label leaving the pass at 0-based position pos.
  int outgoing_arc(std::size_t pos) const { return static_cast<int>(pos) + 1; }
  /// Arc label entering the pass at 0-based position pos.
  int incoming_arc(std::size_t pos) const {
    return pos == 0 ? static_cast<int>(passes_) : static_cast<int>(pos);
  }

 private:
  std::size_t passes_;
};

SemiArcLabeling semi_arcs(const DiagramCode& code);

/// Orientation reversal: pass order reversed, everything else unchanged.
DiagramCode reverse(const DiagramCode& code);
/// Every classical crossing switched: O <-> U and signs negated.
DiagramCode switch_crossings(const DiagramCode& code);
/// Plane flip: O <-> U with signs kept; virtual frame bits move to the other pass.
DiagramCode flip(const DiagramCode& code);
/// switch_crossings(flip(code)).
DiagramCode switched_flip(const DiagramCode& code);

/// Rotates the sequence so position k becomes the basepoint (k taken mod 2n).
DiagramCode shift_basepoint(const DiagramCode& code, long k);
/// Renames crossing ids through a bijection on the ids of code.
DiagramCode relabel(const DiagramCode& code, const std::map<int, int>& permutation);
/// Renames crossings 1..n in order of first appearance.
DiagramCode normalize_labels(const DiagramCode& code);

/// True iff b equals a up to basepoint shift and crossing relabeling.
bool equivalent_codes(const DiagramCode& a, const DiagramCode& b);

/// Crossing-class census used in reports.
struct CrossingCounts {
  int even = 0;
  int odd = 0;
  int virtual_crossings = 0;
};
CrossingCounts count_crossings(const DiagramCode& code);

}  // namespace paritypoly
