#include <doctest.h>

#include "oracles.hpp"
#include "paritypoly/alexander.hpp"
#include "paritypoly/gauss.hpp"
#include "paritypoly/realize.hpp"
#include "paritypoly/verify.hpp"

using namespace paritypoly;

namespace {

SignedGaussCode random_gauss(Rng& rng, int max_crossings) {
  const int n = uniform_int(rng, 1, max_crossings);
  std::vector<int> slots;
  for (int c = 1; c <= n; ++c) slots.insert(slots.end(), {c, c});
  for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[uniform_int(rng, 0, static_cast<int>(i) - 1)]);
  std::vector<int> over_first(n + 1), sign(n + 1);
  for (int c = 1; c <= n; ++c) {
    over_first[c] = uniform_int(rng, 0, 1);
    sign[c] = uniform_int(rng, 0, 1) ? 1 : -1;
  }
  std::vector<bool> seen(n + 1);
  std::vector<GaussPass> passes;
  for (int c : slots) {
    const bool first = !seen[c];
    seen[c] = true;
    passes.push_back({c, first == (over_first[c] == 1), sign[c]});
  }
  return SignedGaussCode(passes);
}

}  // namespace

TEST_CASE("gauss parsing") {
  const SignedGaussCode trefoil = parse_gauss("O1+U2+O3+U1+O2+U3+");
  CHECK(trefoil.size() == 6);
  CHECK(parse_gauss("O1+ U1+").to_string() == "O1+U1+");
  CHECK_THROWS_AS(parse_gauss("O1+U2+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1+U1-"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1+Q1+"), ParseError);
  CHECK(parse_gauss("").empty());
  const auto table = read_gauss_table("# c\nk1\tO1+U1+\n\nO1-U1-\n");
  REQUIRE(table.size() == 2);
  CHECK(table[0].name == "k1");
  CHECK(table[1].name == "line4");
  CHECK(table[1].line == 4);
}

TEST_CASE("frame sign") {
  CHECK(frame_sign({1, 0}, {0, 1}) == 1);
  CHECK(frame_sign({0, 1}, {1, 0}) == -1);
  CHECK_THROWS_AS(frame_sign({1, 0}, {1, 0}), DegeneracyError);
  CHECK_THROWS_AS(frame_sign({1, 1}, {-2, -2}), DegeneracyError);
}

TEST_CASE("small realizations") {
  CHECK(realize(SignedGaussCode()).empty());
  const DiagramCode kink = realize(parse_gauss("O1+U1+"));
  CHECK(equal_up_to_rotation(classical_gauss_code(kink), parse_gauss("O1+U1+")));
}

TEST_CASE("realization contract on random codes") {
  Rng rng(41);
  for (int i = 0; i < 150; ++i) {
    const SignedGaussCode g = random_gauss(rng, 8);
    const DiagramCode d = realize(g, {i % 2 ? RoutingStrategy::Scatter : RoutingStrategy::Arch, static_cast<std::uint64_t>(i)});
    CHECK(validate(d).empty());
    CHECK(equal_up_to_rotation(classical_gauss_code(d), g));
    for (const auto& p : g.passes()) CHECK(d.sign(p.crossing) == p.sign);
    for (int id : d.crossing_ids()) CHECK((id <= static_cast<int>(g.size() / 2)) == d.is_classical(id));
    CHECK(oracle::supporting_genus(d) == 0);
  }
}

TEST_CASE("routing does not change the invariant") {
  Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    const SignedGaussCode g = random_gauss(rng, 5);
    const LaurentPoly base = phi_delta(realize(g));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      CHECK(phi_delta(realize(g, {RoutingStrategy::Scatter, seed})) == base);
    }
    CHECK(phi_delta(realize(g, {RoutingStrategy::Arch, 99})) == base);
  }
}

TEST_CASE("braid closures") {
  const SignedGaussCode left_trefoil = oracle::braid_closure({-1, -1, -1});
  CHECK(equal_up_to_rotation(left_trefoil, parse_gauss("O1-U2-O3-U1-O2-U3-")));
  const SignedGaussCode figure_eight = oracle::braid_closure({1, -2, 1, -2});
  CHECK(equal_up_to_rotation(figure_eight, parse_gauss("O1+U2-O3-U1+O4+U3-O2-U4+")));
  CHECK(phi_delta(realize(left_trefoil)).is_zero());
  CHECK(phi_delta(realize(oracle::braid_closure({1, 1, 1}))).is_zero());
  CHECK(phi_delta(realize(figure_eight)).is_zero());
  CHECK(phi_delta(realize(oracle::braid_closure({1, 1, 1, 1, 1}))).is_zero());
  CHECK(phi_delta(realize(oracle::braid_closure({1, 1, 1, 2, -1, 2}))).is_zero());
}

TEST_CASE("routing data") {
  const SignedGaussCode g = parse_gauss("O1-O2-U1-O3+U2-U3+");
  const Routing r = route(g);
  CHECK(r.attempts >= 1);
  int classical = 0;
  for (const auto& x : r.intersections) classical += x.classical != 0;
  CHECK(classical == 3);
  CHECK(diagram_from_routing(g, r) == realize(g));
}
