#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paritypoly/diagram.hpp"
#include "paritypoly/foxcalc.hpp"
#include "paritypoly/laurent.hpp"

namespace paritypoly {

using Matrix = std::vector<std::vector<LaurentPoly>>;

/// Exact determinant. Unit pivots are eliminated first (rows of a crossing
/// matrix all carry a -1 on their target arc), the dense remainder goes
/// through fraction-free Bareiss elimination. The 0x0 determinant is 1.
LaurentPoly determinant(const Matrix& m);

/// Removes the listed rows and columns.
Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& drop_rows,
                 const std::vector<std::size_t>& drop_cols);

enum class RelationKind : std::uint8_t { Z, W, Commutator };

enum class CrossingType : std::uint8_t { EvenPositive, EvenNegative, Odd, Virtual };

std::string to_string(CrossingType type);

/// Semi-arc labels around one crossing: x continues to w, y continues to z.
struct CrossingRoles {
  int x_in = 0;
  int y_in = 0;
  int w_out = 0;
  int z_out = 0;
};

/// x is the incoming arc of the strand that, followed by the other strand,
/// forms a positive frame: the over strand at a positive crossing, the under
/// strand at a negative one, the frame_first pass at a virtual one.
std::map<int, CrossingRoles> assign_roles(const DiagramCode& code);

CrossingType crossing_type(const DiagramCode& code, const ParityMap& parity, int id);

struct Relator {
  GroupWord word;  // rhs * target^-1
  int crossing = 0;
  RelationKind kind = RelationKind::Z;
  CrossingType type = CrossingType::EvenPositive;
};

/// Relator pair of one crossing of the given type with the given roles.
std::vector<Relator> relators_for(int crossing, CrossingType type, const CrossingRoles& roles);

/// Two relators per crossing, crossings ascending, Z before W.
std::vector<Relator> crossing_relators(const DiagramCode& code);

struct RowLabel {
  int crossing = 0;  // 0 for commutator rows
  RelationKind kind = RelationKind::Z;
  std::string name;
};

struct AlexanderMatrix {
  Matrix entries;
  std::vector<RowLabel> rows;
  std::vector<std::string> columns;

  std::size_t size() const { return entries.size(); }
};

/// Row of abelianized Fox derivatives of r with respect to a_1..a_arcs.
std::vector<LaurentPoly> jacobian_row(const GroupWord& r, int arcs);

/// 2n x 2n matrix of arc derivatives.
AlexanderMatrix build_matrix_A(const DiagramCode& code);

/// (2n+3) x (2n+3): A bordered by the s, q, theta columns and the three
/// commutator rows [s,q], [s,theta], [theta,q].
AlexanderMatrix build_full_matrix_M(const DiagramCode& code);

struct AlexanderResult {
  LaurentPoly determinant;  // det(A) as computed, before normalization
  LaurentPoly canonical;
  std::optional<int> q_width;  // empty when the polynomial vanishes
  std::optional<int> theta_width;
  CrossingCounts counts;
};

AlexanderResult parity_alexander(const DiagramCode& code);

/// Shorthand for parity_alexander(code).canonical.
LaurentPoly phi_delta(const DiagramCode& code);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical gcd of all minors of size dim - corank, by enumeration.
/// Dimension must be at most 8; the gcd of no minors is 0.
LaurentPoly gcd_of_minors(const Matrix& m, int corank);

struct CrossingBounds {
  std::optional<int> virtual_lower;  // ceil(q-width / 2)
  std::optional<int> odd_lower;      // ceil(theta-width / 2)

  bool informative() const { return virtual_lower.has_value(); }
};

/// Lower bounds on virtual and odd crossings; empty for the zero polynomial.
CrossingBounds crossing_bounds(const LaurentPoly& poly);

struct SkeinMatrices {
  Matrix plus;
  Matrix minus;
  Matrix smoothing;
  std::size_t row_z = 0;  // rows of the selected crossing
  std::size_t row_w = 0;
};

/// Three matrices sharing all rows except those of the selected even classical
/// crossing, which carry the positive, negative and smoothing templates.
SkeinMatrices skein_matrices(const DiagramCode& code, int crossing);

struct SkeinReport {
  LaurentPoly d_plus;
  LaurentPoly d_minus;
  LaurentPoly d_smooth;
  bool plain_form = false;  // D+ - D- == (1 - st) Dv
  bool weighted_form = false;    // D+ - st D- == (1 - st) Dv
};

SkeinReport check_even_skein(const DiagramCode& code, int crossing);

/// Swaps over/under at one classical crossing and negates its sign.
DiagramCode switch_crossing(const DiagramCode& code, int crossing);

struct SymmetryReport {
  LaurentPoly base;
  bool reverse = false;
  bool switched = false;
  bool flipped = false;
  bool switched_flipped = false;

  bool all() const { return reverse && switched && flipped && switched_flipped; }
};

SymmetryReport check_symmetries(const DiagramCode& code);

/// Generators and relators in the debug word syntax, one relator per line.
std::string group_presentation(const DiagramCode& code);

}  // namespace paritypoly
