#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "paritypoly/diagram.hpp"

namespace paritypoly {

/// The requested local pattern is not present at the site.
class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arc arguments are semi-arc labels (1-based, see SemiArcLabeling); arc 1 of
// the empty code is the whole loop. Inserted crossings get fresh ids
// max_id()+1, max_id()+2.

/// Classical kink on one arc. over_first picks which pass comes first; the
/// curl side is then fixed by the sign.
struct R1Insert {
  int arc = 1;
  bool over_first = true;
  int sign = 1;
};
struct R1Remove {
  int crossing = 0;
};

/// Bigon between two distinct arcs. Strand 1 (arc1) meets the new crossings in
/// order c1, c2; strand 2 meets them in the same order when parallel, else
/// c2, c1. Signs are first_sign at c1 and -first_sign at c2.
struct R2Insert {
  int arc1 = 1;
  int arc2 = 2;
  bool strand1_over = true;
  bool parallel = true;
  int first_sign = 1;
};
struct R2Remove {
  int crossing1 = 0;
  int crossing2 = 0;
};

/// Virtual kink; frame_first_first marks the first pass as the frame pass.
struct V1Insert {
  int arc = 1;
  bool frame_first_first = true;
};
struct V1Remove {
  int crossing = 0;
};

/// Virtual bigon; strand1_frame_at_c1 gives strand 1's frame bit at c1, and the
/// bit is complemented at c2.
struct V2Insert {
  int arc1 = 1;
  int arc2 = 2;
  bool parallel = true;
  bool strand1_frame_at_c1 = true;
};
struct V2Remove {
  int crossing1 = 0;
  int crossing2 = 0;
};

using MoveSpec =
    std::variant<R1Insert, R1Remove, R2Insert, R2Remove, V1Insert, V1Remove, V2Insert, V2Remove>;

std::string describe(const MoveSpec& move);

/// Applies the move; throws MoveError when the site does not match.
DiagramCode apply_move(const DiagramCode& code, const MoveSpec& move);

/// Removal moves whose patterns are present in code.
std::vector<MoveSpec> available_removals(const DiagramCode& code);

/// The removal undoing an insertion just applied to `before`.
MoveSpec inverse_of_insert(const DiagramCode& before, const MoveSpec& insert);

}  // namespace paritypoly
