#include "paritypoly/moves.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace paritypoly {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t insertion_index(const DiagramCode& code, int arc) {
  const int arcs = code.empty() ? 1 : static_cast<int>(code.size());
  if (arc < 1 || arc > arcs) {
    throw MoveError("arc " + std::to_string(arc) + " out of range 1.." + std::to_string(arcs));
  }
  return code.empty() ? 0 : static_cast<std::size_t>(arc);
}

bool cyclically_adjacent(std::size_t a, std::size_t b, std::size_t n) {
  if (a > b) std::swap(a, b);
  return b == a + 1 || (a == 0 && b == n - 1 && n > 2);
}

// Inserts two groups of passes at two arcs, keeping both index computations
// relative to the unmodified code.
std::vector<Pass> insert_two(const DiagramCode& code, int arc1, std::vector<Pass> group1, int arc2,
                             std::vector<Pass> group2) {
  if (arc1 == arc2) throw MoveError("bigon moves need two distinct arcs");
  std::size_t i1 = insertion_index(code, arc1);
  std::size_t i2 = insertion_index(code, arc2);
  std::vector<Pass> passes = code.passes();
  if (i1 > i2) {
    passes.insert(passes.begin() + static_cast<long>(i1), group1.begin(), group1.end());
    passes.insert(passes.begin() + static_cast<long>(i2), group2.begin(), group2.end());
  } else {
    passes.insert(passes.begin() + static_cast<long>(i2), group2.begin(), group2.end());
    passes.insert(passes.begin() + static_cast<long>(i1), group1.begin(), group1.end());
  }
  return passes;
}

DiagramCode erase_crossings(const DiagramCode& code, std::initializer_list<int> ids) {
  std::vector<Pass> passes;
  for (const auto& p : code.passes()) {
    if (std::find(ids.begin(), ids.end(), p.crossing) == ids.end()) passes.push_back(p);
  }
  std::map<int, int> signs = code.signs();
  for (int id : ids) signs.erase(id);
  return DiagramCode(std::move(passes), std::move(signs));
}

bool has_crossing(const DiagramCode& code, int id) {
  return std::any_of(code.passes().begin(), code.passes().end(),
                     [id](const Pass& p) { return p.crossing == id; });
}

void require_kink(const DiagramCode& code, int id, bool classical) {
  if (!has_crossing(code, id)) throw MoveError("crossing " + std::to_string(id) + " not present");
  if (code.is_classical(id) != classical) {
    throw MoveError("crossing " + std::to_string(id) + (classical ? " is virtual" : " is classical"));
  }
  auto [a, b] = code.positions(id);
  if (!cyclically_adjacent(a, b, code.size())) {
    throw MoveError("passes of crossing " + std::to_string(id) + " are not adjacent");
  }
}

// The two passes of c1 and c2 split into two cyclically adjacent (c1, c2)
// pairs; returns them as position pairs {c1 pos, c2 pos}.
std::optional<std::array<std::pair<std::size_t, std::size_t>, 2>> bigon_pairs(
    const DiagramCode& code, int c1, int c2) {
  auto [a1, b1] = code.positions(c1);
  auto [a2, b2] = code.positions(c2);
  const std::size_t n = code.size();
  using P = std::array<std::pair<std::size_t, std::size_t>, 2>;
  for (const P& cand : {P{{{a1, a2}, {b1, b2}}}, P{{{a1, b2}, {b1, a2}}}}) {
    if (cyclically_adjacent(cand[0].first, cand[0].second, n) &&
        cyclically_adjacent(cand[1].first, cand[1].second, n)) {
      return cand;
    }
  }
  return std::nullopt;
}

void check_r2_site(const DiagramCode& code, int c1, int c2) {
  if (c1 == c2) throw MoveError("R2 needs two distinct crossings");
  for (int id : {c1, c2}) {
    if (!has_crossing(code, id)) throw MoveError("crossing " + std::to_string(id) + " not present");
    if (!code.is_classical(id)) throw MoveError("crossing " + std::to_string(id) + " is virtual");
  }
  if (code.sign(c1) == code.sign(c2)) throw MoveError("R2 crossings must have opposite signs");
  auto pairs = bigon_pairs(code, c1, c2);
  if (!pairs) throw MoveError("R2 passes are not in two adjacent pairs");
  for (const auto& [p1, p2] : *pairs) {
    if (code.passes()[p1].kind != code.passes()[p2].kind) {
      throw MoveError("R2 strand is not over (or under) at both crossings");
    }
  }
}

void check_v2_site(const DiagramCode& code, int c1, int c2) {
  if (c1 == c2) throw MoveError("V2 needs two distinct crossings");
  for (int id : {c1, c2}) {
    if (!has_crossing(code, id)) throw MoveError("crossing " + std::to_string(id) + " not present");
    if (code.is_classical(id)) throw MoveError("crossing " + std::to_string(id) + " is classical");
  }
  auto pairs = bigon_pairs(code, c1, c2);
  if (!pairs) throw MoveError("V2 passes are not in two adjacent pairs");
  for (const auto& [p1, p2] : *pairs) {
    if (code.passes()[p1].frame_first == code.passes()[p2].frame_first) {
      throw MoveError("V2 frame bits are not complementary along a strand");
    }
  }
}

}  // namespace

std::string describe(const MoveSpec& move) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  return std::visit(
      Overloaded{
          [&](const R1Insert& m) {
            return "R1_insert(arc=" + std::to_string(m.arc) + ", over_first=" + b(m.over_first) +
                   ", sign=" + std::to_string(m.sign) + ")";
          },
          [](const R1Remove& m) { return "R1_remove(" + std::to_string(m.crossing) + ")"; },
          [&](const R2Insert& m) {
            return "R2_insert(arcs=" + std::to_string(m.arc1) + "," + std::to_string(m.arc2) +
                   ", strand1_over=" + b(m.strand1_over) + ", parallel=" + b(m.parallel) +
                   ", first_sign=" + std::to_string(m.first_sign) + ")";
          },
          [](const R2Remove& m) {
            return "R2_remove(" + std::to_string(m.crossing1) + "," + std::to_string(m.crossing2) + ")";
          },
          [&](const V1Insert& m) {
            return "V1_insert(arc=" + std::to_string(m.arc) + ", frame_first_first=" +
                   b(m.frame_first_first) + ")";
          },
          [](const V1Remove& m) { return "V1_remove(" + std::to_string(m.crossing) + ")"; },
          [&](const V2Insert& m) {
            return "V2_insert(arcs=" + std::to_string(m.arc1) + "," + std::to_string(m.arc2) +
                   ", parallel=" + b(m.parallel) + ", strand1_frame_at_c1=" +
                   b(m.strand1_frame_at_c1) + ")";
          },
          [](const V2Remove& m) {
            return "V2_remove(" + std::to_string(m.crossing1) + "," + std::to_string(m.crossing2) + ")";
          },
      },
      move);
}

DiagramCode apply_move(const DiagramCode& code, const MoveSpec& move) {
  require_valid(code);
  const int c1 = code.max_id() + 1;
  const int c2 = code.max_id() + 2;
  return std::visit(
      Overloaded{
          [&](const R1Insert& m) {
            if (m.sign != 1 && m.sign != -1) throw MoveError("sign must be +-1");
            std::vector<Pass> passes = code.passes();
            Pass first{c1, m.over_first ? PassKind::Over : PassKind::Under, false};
            Pass second{c1, m.over_first ? PassKind::Under : PassKind::Over, false};
            auto at = passes.begin() + static_cast<long>(insertion_index(code, m.arc));
            passes.insert(at, {first, second});
            auto signs = code.signs();
            signs[c1] = m.sign;
            return DiagramCode(std::move(passes), std::move(signs));
          },
          [&](const R1Remove& m) {
            require_kink(code, m.crossing, true);
            return erase_crossings(code, {m.crossing});
          },
          [&](const R2Insert& m) {
            if (m.first_sign != 1 && m.first_sign != -1) throw MoveError("sign must be +-1");
            PassKind k1 = m.strand1_over ? PassKind::Over : PassKind::Under;
            PassKind k2 = m.strand1_over ? PassKind::Under : PassKind::Over;
            std::vector<Pass> strand1{{c1, k1, false}, {c2, k1, false}};
            std::vector<Pass> strand2 = m.parallel ? std::vector<Pass>{{c1, k2, false}, {c2, k2, false}}
                                                   : std::vector<Pass>{{c2, k2, false}, {c1, k2, false}};
            auto passes = insert_two(code, m.arc1, strand1, m.arc2, strand2);
            auto signs = code.signs();
            signs[c1] = m.first_sign;
            signs[c2] = -m.first_sign;
            return DiagramCode(std::move(passes), std::move(signs));
          },
          [&](const R2Remove& m) {
            check_r2_site(code, m.crossing1, m.crossing2);
            return erase_crossings(code, {m.crossing1, m.crossing2});
          },
          [&](const V1Insert& m) {
            std::vector<Pass> passes = code.passes();
            auto at = passes.begin() + static_cast<long>(insertion_index(code, m.arc));
            passes.insert(at, {Pass{c1, PassKind::Virtual, m.frame_first_first},
                               Pass{c1, PassKind::Virtual, !m.frame_first_first}});
            return DiagramCode(std::move(passes), code.signs());
          },
          [&](const V1Remove& m) {
            require_kink(code, m.crossing, false);
            return erase_crossings(code, {m.crossing});
          },
          [&](const V2Insert& m) {
            bool f = m.strand1_frame_at_c1;
            std::vector<Pass> strand1{{c1, PassKind::Virtual, f}, {c2, PassKind::Virtual, !f}};
            Pass s2c1{c1, PassKind::Virtual, !f};
            Pass s2c2{c2, PassKind::Virtual, f};
            std::vector<Pass> strand2 = m.parallel ? std::vector<Pass>{s2c1, s2c2} : std::vector<Pass>{s2c2, s2c1};
            auto passes = insert_two(code, m.arc1, strand1, m.arc2, strand2);
            return DiagramCode(std::move(passes), code.signs());
          },
          [&](const V2Remove& m) {
            check_v2_site(code, m.crossing1, m.crossing2);
            return erase_crossings(code, {m.crossing1, m.crossing2});
          },
      },
      move);
}

std::vector<MoveSpec> available_removals(const DiagramCode& code) {
  require_valid(code);
  std::vector<MoveSpec> out;
  const auto ids = code.crossing_ids();
  for (int id : ids) {
    auto [a, b] = code.positions(id);
    if (!cyclically_adjacent(a, b, code.size())) continue;
    if (code.is_classical(id)) {
      out.emplace_back(R1Remove{id});
    } else {
      out.emplace_back(V1Remove{id});
    }
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      try {
        if (code.is_classical(ids[i])) {
          check_r2_site(code, ids[i], ids[j]);
          out.emplace_back(R2Remove{ids[i], ids[j]});
        } else {
          check_v2_site(code, ids[i], ids[j]);
          out.emplace_back(V2Remove{ids[i], ids[j]});
        }
      } catch (const MoveError&) {
      }
    }
  }
  return out;
}

MoveSpec inverse_of_insert(const DiagramCode& before, const MoveSpec& insert) {
  const int c1 = before.max_id() + 1;
  const int c2 = before.max_id() + 2;
  return std::visit(Overloaded{
                        [&](const R1Insert&) -> MoveSpec { return R1Remove{c1}; },
                        [&](const R2Insert&) -> MoveSpec { return R2Remove{c1, c2}; },
                        [&](const V1Insert&) -> MoveSpec { return V1Remove{c1}; },
                        [&](const V2Insert&) -> MoveSpec { return V2Remove{c1, c2}; },
                        [](const auto&) -> MoveSpec {
                          throw MoveError("inverse_of_insert needs an insertion move");
                        },
                    },
                    insert);
}

}  // namespace paritypoly
