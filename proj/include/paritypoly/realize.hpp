#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "paritypoly/diagram.hpp"
#include "paritypoly/gauss.hpp"

namespace paritypoly {

/// Geometric degeneracy the router could not perturb away, or parallel
/// directions handed to frame_sign.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  long long x = 0;
  long long y = 0;
  bool operator==(const Point&) const = default;
};

/// +1 iff det[a; b] > 0, i.e. (a, b) is a positively oriented frame.
int frame_sign(Point a, Point b);

enum class RoutingStrategy {
  /// Crossings on a line; each semi-arc is one arch at its own height.
  Arch,
  /// Two pseudo-random waypoints per semi-arc.
  Scatter,
};

struct RealizeOptions {
  RoutingStrategy strategy = RoutingStrategy::Arch;
  std::uint64_t seed = 0;
  int max_attempts = 64;
};

/// Exact rational a/b with b > 0.
struct Fraction {
  long long num = 0;
  long long den = 1;
};

struct RoutedSegment {
  Point from;
  Point to;
  /// Index into the Gauss passes for the short segment through a classical
  /// site, -1 for routing segments.
  int gauss_pass = -1;
};

struct RoutedIntersection {
  std::size_t segment_a = 0;
  std::size_t segment_b = 0;
  Fraction t_a;
  Fraction t_b;
  /// Classical crossing id, or 0 for an intersection that becomes virtual.
  int classical = 0;
};

/// Closed planar polyline realizing a Gauss code, with every transversal
/// self-intersection. Segments are listed in traversal order.
struct Routing {
  std::vector<RoutedSegment> segments;
  std::vector<RoutedIntersection> intersections;
  int attempts = 0;
};

/// Routes the code in general position. Throws DegeneracyError when no
/// attempt avoids degeneracies.
Routing route(const SignedGaussCode& g, const RealizeOptions& options = {});

/// Reads a DiagramCode off a routing: classical sites keep their Gauss ids and
/// signs, other intersections become virtual crossings numbered after them.
DiagramCode diagram_from_routing(const SignedGaussCode& g, const Routing& routing);

/// Planar realization of a classical signed Gauss code.
DiagramCode realize(const SignedGaussCode& g, const RealizeOptions& options = {});

}  // namespace paritypoly
