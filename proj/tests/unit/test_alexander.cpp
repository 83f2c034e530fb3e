#include <doctest.h>

#include "oracles.hpp"
#include "paritypoly/alexander.hpp"
#include "paritypoly/gauss.hpp"
#include "paritypoly/realize.hpp"
#include "paritypoly/verify.hpp"

using namespace paritypoly;

namespace {

DiagramCode D(const char* text) { return parse_diagram(text); }
LaurentPoly P(const char* text) { return parse_laurent(text); }

const LaurentPoly s = pow(Var::S, 1), t = pow(Var::T, 1), q = pow(Var::Q, 1), h = pow(Var::Theta, 1);

const char* const kKnot31 = "O1-O2-U1-O3+U2-U3+";

LaurentPoly random_entry(Rng& rng) {
  LaurentPoly p;
  const int terms = uniform_int(rng, 0, 2);
  for (int i = 0; i < terms; ++i) {
    Exponents e{};
    for (auto& x : e) x = uniform_int(rng, -1, 1);
    p += LaurentPoly::monomial(e, uniform_int(rng, -2, 2));
  }
  return p;
}

/// Closed-form Jacobian rows of one crossing, [z-row, w-row], over arcs 1..n.
std::vector<std::vector<LaurentPoly>> template_rows(CrossingType type, const CrossingRoles& r, int n) {
  std::vector<std::vector<LaurentPoly>> rows(2, std::vector<LaurentPoly>(n));
  auto at = [&](int row, int arc) -> LaurentPoly& { return rows[row][arc - 1]; };
  const LaurentPoly one(1);
  switch (type) {
    case CrossingType::EvenPositive:
      at(0, r.x_in) += one - s * t;
      at(0, r.y_in) += t;
      at(1, r.x_in) += s;
      break;
    case CrossingType::EvenNegative:
      at(0, r.y_in) += s.unit_inverse();
      at(1, r.x_in) += t.unit_inverse();
      at(1, r.y_in) += one - (s * t).unit_inverse();
      break;
    case CrossingType::Odd:
      at(0, r.y_in) += h.unit_inverse();
      at(1, r.x_in) += h;
      break;
    case CrossingType::Virtual:
      at(0, r.y_in) += q.unit_inverse();
      at(1, r.x_in) += q;
      break;
  }
  at(0, r.z_out) -= one;
  at(1, r.w_out) -= one;
  return rows;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(determinant(Matrix{}).is_one());
  CHECK(determinant(Matrix{{P("1 - st")}}) == P("1 - st"));
  const Matrix block{{LaurentPoly(1) - q, s - LaurentPoly(1), LaurentPoly()},
                     {LaurentPoly(1) - h, LaurentPoly(), s - LaurentPoly(1)},
                     {LaurentPoly(), h - LaurentPoly(1), LaurentPoly(1) - q}};
  CHECK(determinant(block).is_zero());
  CHECK(determinant(Matrix{{LaurentPoly(), LaurentPoly(1)}, {LaurentPoly(1), LaurentPoly()}}) == LaurentPoly(-1));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  Rng rng(51);
  for (int i = 0; i < 60; ++i) {
    const int n = uniform_int(rng, 1, 6);
    Matrix m(n, std::vector<LaurentPoly>(n));
    for (auto& row : m) {
      for (auto& e : row) e = random_entry(rng);
      // crossing-matrix shape: a -1 somewhere in most rows
      if (uniform_int(rng, 0, 3) != 0) row[uniform_int(rng, 0, n - 1)] = LaurentPoly(-1);
    }
    CHECK(determinant(m) == oracle::cofactor_det(m));
  }
  for (int i = 0; i < 40; ++i) {
    const DiagramCode c = random_code(rng, 3);
    const AlexanderMatrix a = build_matrix_A(c);
    CHECK(determinant(a.entries) == oracle::cofactor_det(a.entries));
  }
}

TEST_CASE("row templates") {
  const CrossingRoles r{1, 2, 3, 4};
  for (CrossingType type : {CrossingType::EvenPositive, CrossingType::EvenNegative, CrossingType::Odd, CrossingType::Virtual}) {
    const auto rel = relators_for(7, type, r);
    REQUIRE(rel.size() == 2);
    CHECK(rel[0].kind == RelationKind::Z);
    CHECK(rel[1].kind == RelationKind::W);
    const auto expected = template_rows(type, r, 4);
    CHECK(jacobian_row(rel[0].word, 4) == expected[0]);
    CHECK(jacobian_row(rel[1].word, 4) == expected[1]);
    for (const auto& x : rel) CHECK(abelianize(x.word).is_one());
  }
  CHECK(to_string(CrossingType::EvenNegative) == "even-");
}

TEST_CASE("generic rows match the templates on random codes") {
  Rng rng(52);
  for (int i = 0; i < 200; ++i) {
    const DiagramCode c = random_code(rng, 6);
    const AlexanderMatrix a = build_matrix_A(c);
    const auto roles = assign_roles(c);
    const ParityMap par = parity(c);
    const int n = static_cast<int>(c.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t row = 0; row < a.size(); ++row) {
      const int id = a.rows[row].crossing;
      const auto expected = template_rows(crossing_type(c, par, id), roles.at(id), n);
      CHECK(a.entries[row] == expected[a.rows[row].kind == RelationKind::Z ? 0 : 1]);
      int nonzero = 0;
      for (const auto& e : a.entries[row]) nonzero += !e.is_zero();
      CHECK(nonzero <= 4);
    }
  }
}

TEST_CASE("roles") {
  // positive classical crossing: x is the over strand
  const auto pos = assign_roles(D("O1+ U1+")).at(1);
  CHECK(pos.x_in == 2);
  CHECK(pos.w_out == 1);
  CHECK(pos.y_in == 1);
  CHECK(pos.z_out == 2);
  // negative: y is the over strand
  const auto neg = assign_roles(D("O1- U1-")).at(1);
  CHECK(neg.y_in == 2);
  CHECK(neg.z_out == 1);
  // virtual: x is the frame pass
  const auto v = assign_roles(D("V1y V1x")).at(1);
  CHECK(v.x_in == 1);
  CHECK(v.w_out == 2);
}

TEST_CASE("bordered matrix") {
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const DiagramCode c = random_code(rng, 5);
    const AlexanderMatrix m = build_full_matrix_M(c);
    const std::size_t n = c.size();
    REQUIRE(m.size() == n + 3);
    for (std::size_t r = n; r < n + 3; ++r) {
      for (std::size_t col = 0; col < n; ++col) CHECK(m.entries[r][col].is_zero());
    }
    const LaurentPoly one(1);
    CHECK(m.entries[n][n] == one - q);
    CHECK(m.entries[n][n + 1] == s - one);
    CHECK(m.entries[n][n + 2].is_zero());
    CHECK(m.entries[n + 1][n] == one - h);
    CHECK(m.entries[n + 1][n + 1].is_zero());
    CHECK(m.entries[n + 1][n + 2] == s - one);
    CHECK(m.entries[n + 2][n].is_zero());
    CHECK(m.entries[n + 2][n + 1] == h - one);
    CHECK(m.entries[n + 2][n + 2] == one - q);
    CHECK(determinant(m.entries).is_zero());
  }
  CHECK(build_full_matrix_M(DiagramCode()).size() == 3);
}

TEST_CASE("invariant values") {
  CHECK(phi_delta(DiagramCode()).is_one());
  CHECK(phi_delta(realize(parse_gauss("O1-U2-O3-U1-O2-U3-"))).is_zero());
  // regression value of the realized 3.1 diagram
  const AlexanderResult k31 = parity_alexander(realize(parse_gauss(kKnot31)));
  CHECK(k31.canonical == P("q^2 - h^2 - stq^2 + sth^2"));
  CHECK(k31.canonical == (LaurentPoly(1) - s * t) * (q * q - h * h));
  CHECK(k31.q_width == 2);
  CHECK(k31.theta_width == 2);
  CHECK(k31.counts.odd == 2);
  CHECK(k31.counts.even == 1);
  CHECK(equal_up_to_unit(k31.determinant, k31.canonical));
  const AlexanderResult zero = parity_alexander(D("O1+ U1+"));
  CHECK(zero.canonical.is_zero());
  CHECK_FALSE(zero.q_width.has_value());
}

TEST_CASE("crossing bounds") {
  const CrossingBounds b31 = crossing_bounds(P("q^2 + h^2 + st - sth^2"));
  CHECK(b31.virtual_lower == 1);
  CHECK(b31.odd_lower == 1);
  const CrossingBounds b47 = crossing_bounds(P("1 - q^2"));
  CHECK(b47.virtual_lower == 1);
  CHECK(b47.odd_lower == 0);
  const CrossingBounds b6 = crossing_bounds(P("1 - s^-1t^-1 + s^-1q^-1 - tq^-1 - sq + t^-1q - qh^-1 + stqh^-1"));
  CHECK(b6.virtual_lower == 1);
  CHECK(b6.odd_lower == 1);
  CHECK_FALSE(crossing_bounds(LaurentPoly()).informative());
  CHECK(crossing_bounds(LaurentPoly(1)).virtual_lower == 0);
}

TEST_CASE("bounds never exceed the crossing counts") {
  Rng rng(54);
  for (int i = 0; i < 300; ++i) {
    const DiagramCode c = random_code(rng, 6);
    const LaurentPoly p = phi_delta(c);
    if (p.is_zero()) continue;
    const CrossingBounds b = crossing_bounds(p);
    const CrossingCounts k = count_crossings(c);
    CHECK(*b.virtual_lower <= k.virtual_crossings);
    CHECK(*b.odd_lower <= k.odd);
  }
}

TEST_CASE("gcd of minors") {
  CHECK(gcd_of_minors(Matrix{{LaurentPoly(), LaurentPoly()}, {LaurentPoly(), LaurentPoly()}}, 1).is_zero());
  CHECK_THROWS_AS(gcd_of_minors(Matrix(9, std::vector<LaurentPoly>(9)), 1), DimensionError);
  for (const auto& c : enumerate_codes(2)) {
    const Matrix m = build_full_matrix_M(c).entries;
    const LaurentPoly d1 = gcd_of_minors(m, 1);
    CHECK(equal_up_to_unit(d1, determinant(build_matrix_A(c).entries)));
    const LaurentPoly d2 = gcd_of_minors(m, 2);
    if (!d2.is_zero()) CHECK(divides(d2, d1));
  }
}

TEST_CASE("even skein") {
  Rng rng(55);
  int crossings = 0;
  for (int i = 0; i < 150; ++i) {
    const DiagramCode c = random_code(rng, 5);
    for (const auto& [id, p] : parity(c)) {
      if (p != Parity::Even) continue;
      const SkeinMatrices m = skein_matrices(c, id);
      // the three matrices differ only in the selected rows
      for (std::size_t r = 0; r < m.plus.size(); ++r) {
        if (r == m.row_z || r == m.row_w) continue;
        CHECK(m.plus[r] == m.minus[r]);
        CHECK(m.plus[r] == m.smoothing[r]);
      }
      const SkeinReport rep = check_even_skein(c, id);
      if (m.plus.size() <= 6) CHECK(rep.d_plus == oracle::cofactor_det(m.plus));
      CHECK(rep.weighted_form);
      // swapped templates break the identity whenever the sides differ
      const LaurentPoly st = s * t;
      if (rep.d_plus != rep.d_minus && !rep.d_minus.is_zero()) {
        CHECK(rep.d_minus - st * rep.d_plus != (LaurentPoly(1) - st) * rep.d_smooth);
      }
      ++crossings;
    }
  }
  CHECK(crossings > 50);
  CHECK_THROWS_AS(skein_matrices(D("V1x O2- V1y U2-"), 1), std::invalid_argument);
  CHECK_THROWS_AS(skein_matrices(D("O1+ U2+ U1+ O2+"), 1), std::invalid_argument);
}

TEST_CASE("kink skein by hand") {
  // O1+ U1+: x = a2, y = a1, w = a1, z = a2.
  const SkeinReport r = check_even_skein(D("O1+ U1+"), 1);
  const SkeinMatrices m = skein_matrices(D("O1+ U1+"), 1);
  CHECK(r.d_plus == oracle::cofactor_det(m.plus));
  CHECK(r.d_minus == oracle::cofactor_det(m.minus));
  CHECK(r.d_smooth == oracle::cofactor_det(m.smoothing));
  CHECK(r.d_plus.is_zero());
  CHECK(r.weighted_form);
}

TEST_CASE("odd crossing switch") {
  const DiagramCode k31 = realize(parse_gauss(kKnot31));
  const LaurentPoly base = determinant(build_matrix_A(k31).entries);
  DiagramCode all = k31;
  for (const auto& [id, p] : parity(k31)) {
    if (p != Parity::Odd) continue;
    const DiagramCode sw = switch_crossing(k31, id);
    CHECK(determinant(build_matrix_A(sw).entries) == base);
    all = switch_crossing(all, id);
  }
  CHECK(determinant(build_matrix_A(all).entries) == base);
  CHECK_FALSE(base.is_zero());

  Rng rng(56);
  for (int i = 0; i < 200; ++i) {
    const DiagramCode c = random_code(rng, 6);
    for (const auto& [id, p] : parity(c)) {
      if (p != Parity::Odd) continue;
      const auto a = crossing_relators(c), b = crossing_relators(switch_crossing(c, id));
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].word == b[k].word);
    }
  }
  CHECK_THROWS_AS(switch_crossing(D("V1x V1y"), 1), std::invalid_argument);
}

TEST_CASE("symmetries of 3.1") {
  const DiagramCode k31 = realize(parse_gauss(kKnot31));
  const SymmetryReport r = check_symmetries(k31);
  CHECK(r.all());
  CHECK(phi_delta(flip(k31)) == canonicalize(substitute_inverses(r.base, {Var::Q, Var::Theta})).poly);
}

TEST_CASE("reverse inverts every variable") {
  Rng rng(57);
  for (int i = 0; i < 200; ++i) {
    const DiagramCode c = random_code(rng, 5);
    const LaurentPoly p = phi_delta(c);
    CHECK(equal_up_to_unit(phi_delta(reverse(c)), substitute_inverses(p, {Var::S, Var::T, Var::Q, Var::Theta})));
  }
}

TEST_CASE("group presentation") {
  CHECK(group_presentation(DiagramCode()) ==
        "generators: s q h\n[s,q]: s q s^-1 q^-1\n[s,h]: s h s^-1 h^-1\n[q,h]: q h q^-1 h^-1\n");
  const std::string one = group_presentation(D("O1+ U1+"));
  CHECK(one.rfind("generators: a1 a2 s q h\n", 0) == 0);
  CHECK(std::count(one.begin(), one.end(), '\n') == 6);
  const std::string odd = group_presentation(D("V3x O1+ V3y U2+ U1+ O2+"));
  CHECK(odd.find("r1_z (odd): h^-1") != std::string::npos);
  CHECK(odd.find("r3_w (virtual): q") != std::string::npos);
}
