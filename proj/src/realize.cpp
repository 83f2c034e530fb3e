#include "paritypoly/realize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

namespace paritypoly {

namespace {

using i128 = __int128;

constexpr long long kSpacing = 100;  // distance between classical sites
constexpr long long kHalfPass = 3;   // half length of a pass segment
constexpr long long kStub = 5;       // straight continuation out of a site

long long cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point add(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point scale(Point a, long long k) { return {a.x * k, a.y * k}; }
long long dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

Fraction make_fraction(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

bool fraction_less(const Fraction& a, const Fraction& b) {
  return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}

// Reduced exact intersection point, for coincidence detection.
std::tuple<long long, long long, long long, long long> exact_point(const RoutedSegment& s, Fraction t) {
  Point r = sub(s.to, s.from);
  auto coord = [&](long long p, long long d) {
    i128 num = static_cast<i128>(p) * t.den + static_cast<i128>(t.num) * d;
    i128 den = t.den;
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
      i128 tmp = a % b;
      a = b;
      b = tmp;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    return std::pair<long long, long long>{static_cast<long long>(num), static_cast<long long>(den)};
  };
  auto [xn, xd] = coord(s.from.x, r.x);
  auto [yn, yd] = coord(s.from.y, r.y);
  return {xn, xd, yn, yd};
}

class Degenerate {};

struct SitePass {
  Point center;
  Point dir;
};

struct Layout {
  std::vector<SitePass> passes;  // one per Gauss pass
};

Layout lay_out(const SignedGaussCode& g) {
  std::map<int, long long> site_index;
  for (const auto& p : g.passes()) site_index.try_emplace(p.crossing, static_cast<long long>(site_index.size()));
  Layout layout;
  for (const auto& p : g.passes()) {
    Point c{site_index.at(p.crossing) * kSpacing, 0};
    // Over travels east, under travels north for + and south for -, so
    // frame_sign(over, under) equals the crossing sign.
    Point d = p.over ? Point{1, 0} : Point{0, p.sign};
    layout.passes.push_back({c, d});
  }
  return layout;
}

struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long long uniform(long long lo, long long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(engine() % span);
  }
  std::mt19937_64 engine;
};

std::vector<RoutedSegment> build_polyline(const SignedGaussCode& g, const Layout& layout,
                                          const RealizeOptions& options, int attempt) {
  const std::size_t m = g.size();
  Rng rng(options.seed * 1000003ULL + static_cast<std::uint64_t>(attempt) * 7919ULL + 17ULL);
  const long long sites = static_cast<long long>(m / 2);
  std::vector<RoutedSegment> segs;
  auto push = [&](Point a, Point b, int pass) {
    if (a == b) throw Degenerate{};
    segs.push_back({a, b, pass});
  };
  for (std::size_t k = 0; k < m; ++k) {
    const SitePass& here = layout.passes[k];
    const SitePass& next = layout.passes[(k + 1) % m];
    Point entry = sub(here.center, scale(here.dir, kHalfPass));
    Point exit = add(here.center, scale(here.dir, kHalfPass));
    push(entry, exit, static_cast<int>(k));

    Point from = exit;
    Point stub_out = add(exit, scale(here.dir, kStub));
    Point next_entry = sub(next.center, scale(next.dir, kHalfPass));
    Point stub_in = sub(next_entry, scale(next.dir, kStub));

    std::vector<Point> way;
    if (options.strategy == RoutingStrategy::Arch) {
      const long long side = k % 2 == 0 ? 1 : -1;
      const long long jitter = 3LL * attempt;
      Point w{(stub_out.x + stub_in.x) / 2 + 7 + 2 * static_cast<long long>(k) + rng.uniform(-jitter, jitter),
              side * (20 + 11 * static_cast<long long>(k)) + rng.uniform(-jitter, jitter)};
      way.push_back(w);
    } else {
      const long long box = kSpacing * (sites + 1);
      for (int i = 0; i < 2; ++i) {
        way.push_back({rng.uniform(-box / 2, box + box / 2), rng.uniform(-box, box)});
      }
    }
    push(from, stub_out, -1);
    Point prev = stub_out;
    for (Point w : way) {
      push(prev, w, -1);
      prev = w;
    }
    push(prev, stub_in, -1);
    push(stub_in, next_entry, -1);
  }
  return segs;
}

bool adjacent(std::size_t i, std::size_t j, std::size_t n) {
  return j == i + 1 || (i == 0 && j == n - 1);
}

std::vector<RoutedIntersection> intersect_all(const std::vector<RoutedSegment>& segs) {
  const std::size_t n = segs.size();
  std::vector<RoutedIntersection> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = segs[i].from;
    const Point r = sub(segs[i].to, segs[i].from);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point q = segs[j].from;
      const Point s = sub(segs[j].to, segs[j].from);
      const long long rxs = cross(r, s);
      const long long qpxr = cross(sub(q, p), r);
      if (adjacent(i, j, n)) {
        // Consecutive segments share one endpoint; only a fold back is bad.
        if (rxs == 0 && dot(r, s) < 0) throw Degenerate{};
        continue;
      }
      if (rxs == 0) {
        if (qpxr != 0) continue;  // parallel, disjoint
        // Collinear: overlapping or touching is degenerate.
        long long rr = dot(r, r);
        long long t0 = dot(sub(q, p), r);
        long long t1 = t0 + dot(s, r);
        if (std::max(t0, t1) >= 0 && std::min(t0, t1) <= rr) throw Degenerate{};
        continue;
      }
      const long long tn = cross(sub(q, p), s);
      const long long un = qpxr;
      Fraction t = make_fraction(tn, rxs);
      Fraction u = make_fraction(un, rxs);
      auto in_closed = [](Fraction f) { return f.num >= 0 && f.num <= f.den; };
      if (!in_closed(t) || !in_closed(u)) continue;
      auto at_end = [](Fraction f) { return f.num == 0 || f.num == f.den; };
      if (at_end(t) || at_end(u)) throw Degenerate{};
      out.push_back({i, j, t, u, 0});
    }
  }
  std::map<std::tuple<long long, long long, long long, long long>, int> seen;
  for (const auto& x : out) {
    if (++seen[exact_point(segs[x.segment_a], x.t_a)] > 1) throw Degenerate{};
  }
  return out;
}

}  // namespace

int frame_sign(Point a, Point b) {
  long long d = cross(a, b);
  if (d == 0) throw DegeneracyError("parallel directions have no frame orientation");
  return d > 0 ? 1 : -1;
}

Routing route(const SignedGaussCode& g, const RealizeOptions& options) {
  if (auto v = validate(g); !v.empty()) throw ValidationError(v);
  Routing routing;
  if (g.empty()) return routing;
  const Layout layout = lay_out(g);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    try {
      auto segs = build_polyline(g, layout, options, attempt);
      auto hits = intersect_all(segs);
      for (auto& h : hits) {
        const int pa = segs[h.segment_a].gauss_pass;
        const int pb = segs[h.segment_b].gauss_pass;
        if (pa >= 0 && pb >= 0 && g.passes()[static_cast<std::size_t>(pa)].crossing ==
                                      g.passes()[static_cast<std::size_t>(pb)].crossing) {
          h.classical = g.passes()[static_cast<std::size_t>(pa)].crossing;
        }
      }
      routing.segments = std::move(segs);
      routing.intersections = std::move(hits);
      routing.attempts = attempt + 1;
      return routing;
    } catch (const Degenerate&) {
    }
  }
  throw DegeneracyError("routing stayed degenerate after " + std::to_string(options.max_attempts) +
                        " attempts");
}

DiagramCode diagram_from_routing(const SignedGaussCode& g, const Routing& routing) {
  if (g.empty()) return {};
  const auto& segs = routing.segments;
  struct Event {
    Fraction t;
    std::size_t hit;
    std::size_t other;
  };
  std::vector<std::vector<Event>> events(segs.size());
  for (std::size_t h = 0; h < routing.intersections.size(); ++h) {
    const auto& x = routing.intersections[h];
    events[x.segment_a].push_back({x.t_a, h, x.segment_b});
    events[x.segment_b].push_back({x.t_b, h, x.segment_a});
  }
  int next_virtual = 0;
  for (const auto& p : g.passes()) next_virtual = std::max(next_virtual, p.crossing);
  std::map<std::size_t, int> virtual_ids;
  std::map<int, int> classical_seen;
  std::vector<Pass> passes;
  std::map<int, int> signs;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    auto& ev = events[s];
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return fraction_less(a.t, b.t); });
    const Point dir = sub(segs[s].to, segs[s].from);
    for (const auto& e : ev) {
      const auto& x = routing.intersections[e.hit];
      const Point other_dir = sub(segs[e.other].to, segs[e.other].from);
      if (x.classical != 0) {
        const auto& gp = g.passes()[static_cast<std::size_t>(segs[s].gauss_pass)];
        const int geometric = gp.over ? frame_sign(dir, other_dir) : frame_sign(other_dir, dir);
        if (geometric != gp.sign) {
          throw DegeneracyError("geometric sign disagrees with code at crossing " +
                                std::to_string(gp.crossing));
        }
        passes.push_back({gp.crossing, gp.over ? PassKind::Over : PassKind::Under, false});
        signs[gp.crossing] = gp.sign;
        ++classical_seen[gp.crossing];
      } else {
        auto [it, inserted] = virtual_ids.try_emplace(e.hit, next_virtual + 1);
        if (inserted) ++next_virtual;
        passes.push_back({it->second, PassKind::Virtual, frame_sign(dir, other_dir) > 0});
      }
    }
  }
  DiagramCode code(std::move(passes), std::move(signs));
  for (const auto& p : g.passes()) {
    if (classical_seen[p.crossing] != 2) {
      throw DegeneracyError("classical site " + std::to_string(p.crossing) + " not realized");
    }
  }
  require_valid(code);
  return code;
}

DiagramCode realize(const SignedGaussCode& g, const RealizeOptions& options) {
  Routing routing = route(g, options);
  DiagramCode code = diagram_from_routing(g, routing);
  if (!equal_up_to_rotation(classical_gauss_code(code), g)) {
    throw DegeneracyError("realization does not reproduce the Gauss code");
  }
  return code;
}

}  // namespace paritypoly
