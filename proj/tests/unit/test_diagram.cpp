#include <algorithm>

#include <doctest.h>

#include "oracles.hpp"
#include "paritypoly/diagram.hpp"
#include "paritypoly/verify.hpp"

using namespace paritypoly;

namespace {

DiagramCode D(const char* text) { return parse_diagram(text); }

bool any_contains(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("parsing") {
  const DiagramCode a = D("O1+ U2+ U1+ O2+");
  CHECK(a.size() == 4);
  CHECK(a.sign(1) == 1);
  CHECK(a.sign(2) == 1);
  CHECK(a.to_string() == "O1+ U2+ U1+ O2+");

  const DiagramCode b = D("V1x O2- V1y U2-");
  CHECK(b.virtual_ids() == std::vector<int>{1});
  CHECK(b.classical_ids() == std::vector<int>{2});
  CHECK(b.passes()[0].frame_first);
  CHECK_FALSE(b.passes()[2].frame_first);

  CHECK_THROWS_AS(D("O1+ U1-"), ParseError);
  CHECK_THROWS_AS(D("O1+ X1+"), ParseError);
  CHECK_THROWS_AS(D("O0+ U0+"), ParseError);
  CHECK_THROWS_AS(D("O1+ O1+"), ParseError);
  CHECK_THROWS_AS(D("V1x V1x"), ParseError);
  CHECK(D("").empty());
}

TEST_CASE("vkd files") {
  const auto ds = parse_vkd("# comment\n\nname: a\ncode: O1+ U1+\nname: b\ncode: V1x V1y\n");
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].name == "a");
  CHECK(ds[0].line == 4);
  CHECK(ds[1].code.virtual_ids().size() == 1);
  CHECK(parse_vkd("code: O1+ U1+\n")[0].name == "diagram1");
  CHECK(parse_vkd("name: unknot\ncode:\n")[0].code.empty());
  try {
    parse_vkd("name: a\ncode: O1+ U1+\nname: b\ncode: O1+ U2+\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_vkd("name: a\n"), ParseError);
  CHECK_THROWS_AS(parse_vkd("hello\n"), ParseError);
}

TEST_CASE("validation") {
  CHECK(validate(D("O1+ U2+ U1+ O2+")).empty());
  const DiagramCode two_over({{1, PassKind::Over}, {1, PassKind::Over}}, {{1, 1}});
  CHECK(any_contains(validate(two_over), "crossing 1: two over passes"));
  const DiagramCode both_frames({{1, PassKind::Virtual, true}, {1, PassKind::Virtual, true}}, {});
  CHECK(any_contains(validate(both_frames), "crossing 1"));
  const DiagramCode signed_virtual({{1, PassKind::Virtual, true}, {1, PassKind::Virtual, false}}, {{1, 1}});
  CHECK_FALSE(validate(signed_virtual).empty());
  const DiagramCode unsigned_classical({{1, PassKind::Over}, {1, PassKind::Under}}, {});
  CHECK_FALSE(validate(unsigned_classical).empty());
  CHECK_THROWS_AS(require_valid(two_over), ValidationError);
}

TEST_CASE("parity") {
  // classical sequence a b a c b c with a = 1, b = 2, c = 3
  const DiagramCode abacbc = D("O1+ U2+ U1+ O3+ O2+ V4x U3+ V4y");
  const ParityMap p = parity(abacbc);
  CHECK(p.at(1) == Parity::Odd);
  CHECK(p.at(2) == Parity::Even);
  CHECK(p.at(3) == Parity::Odd);
  CHECK(p.count(4) == 0);

  for (const auto& [id, par] : parity(D("O1- U2- O3- U1- O2- U3-"))) CHECK(par == Parity::Even);
  const ParityMap abab = parity(D("V3x O1+ V3y U2+ U1+ O2+"));
  CHECK(abab.at(1) == Parity::Odd);
  CHECK(abab.at(2) == Parity::Odd);
}

TEST_CASE("parity agrees with the interlacement oracle") {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const DiagramCode code = random_code(rng, 7);
    const ParityMap p = parity(code);
    const auto odd = oracle::interlacement_odd(code);
    CHECK(p.size() == odd.size());
    for (const auto& [id, par] : p) CHECK((par == Parity::Odd) == odd.at(id));
  }
}

TEST_CASE("semi-arcs") {
  const SemiArcLabeling two = semi_arcs(D("O1+ U2+ U1+ O2+"));
  CHECK(two.arc_count() == 4);
  CHECK(two.outgoing_arc(0) == two.incoming_arc(1));
  CHECK(two.incoming_arc(0) == 4);
  CHECK(semi_arcs(D("O1+ U1+")).arc_count() == 2);
  CHECK(semi_arcs(DiagramCode()).arc_count() == 1);
  Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    const DiagramCode code = random_code(rng, 6);
    const SemiArcLabeling arcs = semi_arcs(code);
    CHECK(arcs.arc_count() == 2 * code.crossing_count());
    std::vector<int> in, out;
    for (std::size_t pos = 0; pos < code.size(); ++pos) {
      in.push_back(arcs.incoming_arc(pos));
      out.push_back(arcs.outgoing_arc(pos));
    }
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    CHECK(in == out);
    CHECK(std::adjacent_find(in.begin(), in.end()) == in.end());
  }
}

TEST_CASE("symmetry operators") {
  CHECK(switch_crossings(D("O1+ U2+ U1+ O2+")) == D("U1- O2- O1- U2-"));
  CHECK(flip(D("O1+ V2x U1+ V2y")) == D("U1+ V2y O1+ V2x"));
  CHECK(reverse(D("O1+ V2x U3- U1+ V2y O3-")) == D("O3- V2y U1+ U3- V2x O1+"));
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const DiagramCode c = random_code(rng, 6);
    CHECK(switch_crossings(switch_crossings(c)) == c);
    CHECK(flip(flip(c)) == c);
    CHECK(reverse(reverse(c)) == c);
    CHECK(switched_flip(c) == switch_crossings(flip(c)));
    CHECK(switched_flip(c) == flip(switch_crossings(c)));
    for (const DiagramCode& t : {reverse(c), switch_crossings(c), flip(c), switched_flip(c)}) {
      CHECK(validate(t).empty());
      CHECK(parity(t) == parity(c));
      CHECK(oracle::supporting_genus(t) == oracle::supporting_genus(c));
    }
  }
}

TEST_CASE("basepoint and labels") {
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    const DiagramCode c = random_code(rng, 6);
    CHECK(shift_basepoint(c, static_cast<long>(c.size())) == c);
    CHECK(shift_basepoint(shift_basepoint(c, 3), -3) == c);
    std::map<int, int> identity;
    for (int id : c.crossing_ids()) identity[id] = id;
    CHECK(relabel(c, identity) == c);
    const DiagramCode r = random_relabel(rng, shift_basepoint(c, 5));
    CHECK(parity(normalize_labels(r)) == parity(normalize_labels(shift_basepoint(c, 5))));
    CHECK(equivalent_codes(c, r));
    CHECK(count_crossings(r).odd == count_crossings(c).odd);
  }
  const DiagramCode c = D("O1+ U2+ U1+ O2+");
  CHECK_THROWS_AS(relabel(c, {{1, 2}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(relabel(c, {{1, 3}}), std::invalid_argument);
  CHECK_FALSE(equivalent_codes(c, D("O1+ U1+")));
}

TEST_CASE("crossing census") {
  const CrossingCounts k = count_crossings(D("O1+ U2+ U1+ O3+ O2+ V4x U3+ V4y"));
  CHECK(k.even == 1);
  CHECK(k.odd == 2);
  CHECK(k.virtual_crossings == 1);
}
