#include "paritypoly/alexander.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace paritypoly {

namespace {

// Sign of the permutation picking active index `rank` first.
int rank_sign(std::size_t rank) { return rank % 2 == 0 ? 1 : -1; }

LaurentPoly bareiss(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly(1);
  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Smallest nonzero pivot keeps intermediate products small.
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (best == n || a[i][k].size() < a[best][k].size()) best = i;
    }
    if (best == n) return LaurentPoly();
    if (best != k) {
      std::swap(a[best], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = prev.is_one() ? std::move(v) : exact_div(v, prev);
      }
      a[i][k] = LaurentPoly();
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace

LaurentPoly determinant(const Matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  Matrix a = m;
  std::vector<std::size_t> rows(n), cols(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  LaurentPoly factor(1);

  while (!rows.empty()) {
    std::vector<std::size_t> row_nnz(rows.size(), 0), col_nnz(cols.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!a[rows[i]][cols[j]].is_zero()) {
          ++row_nnz[i];
          ++col_nnz[j];
        }
      }
    }
    if (std::find(row_nnz.begin(), row_nnz.end(), 0) != row_nnz.end()) return LaurentPoly();
    // Markowitz choice among unit entries.
    std::size_t pi = rows.size(), pj = 0, cost = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const LaurentPoly& e = a[rows[i]][cols[j]];
        if (!e.is_unit()) continue;
        std::size_t c = (row_nnz[i] - 1) * (col_nnz[j] - 1);
        if (pi == rows.size() || c < cost) {
          pi = i;
          pj = j;
          cost = c;
        }
      }
    }
    if (pi == rows.size()) break;

    const std::size_t pr = rows[pi], pc = cols[pj];
    const LaurentPoly pivot = a[pr][pc];
    const LaurentPoly inv = pivot.unit_inverse();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t r = rows[i];
      if (r == pr || a[r][pc].is_zero()) continue;
      const LaurentPoly f = a[r][pc] * inv;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const std::size_t c = cols[j];
        if (c == pc || a[pr][c].is_zero()) continue;
        a[r][c] -= f * a[pr][c];
      }
      a[r][pc] = LaurentPoly();
    }
    factor = factor * pivot;
    if (rank_sign(pi + pj) < 0) factor = -factor;
    rows.erase(rows.begin() + static_cast<long>(pi));
    cols.erase(cols.begin() + static_cast<long>(pj));
  }

  Matrix core(rows.size(), std::vector<LaurentPoly>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) core[i][j] = std::move(a[rows[i]][cols[j]]);
  }
  return factor * bareiss(std::move(core));
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& drop_rows,
                 const std::vector<std::size_t>& drop_cols) {
  Matrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (std::find(drop_rows.begin(), drop_rows.end(), i) != drop_rows.end()) continue;
    std::vector<LaurentPoly> row;
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (std::find(drop_cols.begin(), drop_cols.end(), j) != drop_cols.end()) continue;
      row.push_back(m[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string to_string(CrossingType type) {
  switch (type) {
    case CrossingType::EvenPositive: return "even+";
    case CrossingType::EvenNegative: return "even-";
    case CrossingType::Odd: return "odd";
    case CrossingType::Virtual: return "virtual";
  }
  return "?";
}

std::map<int, CrossingRoles> assign_roles(const DiagramCode& code) {
  require_valid(code);
  const SemiArcLabeling arcs = semi_arcs(code);
  std::map<int, CrossingRoles> out;
  for (int id : code.crossing_ids()) {
    auto [p1, p2] = code.positions(id);
    const Pass& first = code.passes()[p1];
    bool first_is_x = false;
    if (first.kind == PassKind::Virtual) {
      first_is_x = first.frame_first;
    } else {
      first_is_x = (first.kind == PassKind::Over) == (code.sign(id) > 0);
    }
    const std::size_t px = first_is_x ? p1 : p2;
    const std::size_t py = first_is_x ? p2 : p1;
    out[id] = {arcs.incoming_arc(px), arcs.incoming_arc(py), arcs.outgoing_arc(px), arcs.outgoing_arc(py)};
  }
  return out;
}

CrossingType crossing_type(const DiagramCode& code, const ParityMap& parity, int id) {
  if (!code.is_classical(id)) return CrossingType::Virtual;
  if (parity.at(id) == Parity::Odd) return CrossingType::Odd;
  return code.sign(id) > 0 ? CrossingType::EvenPositive : CrossingType::EvenNegative;
}

std::vector<Relator> relators_for(int crossing, CrossingType type, const CrossingRoles& roles) {
  const GroupWord x(Generator::arc_label(roles.x_in));
  const GroupWord y(Generator::arc_label(roles.y_in));
  const GroupWord z(Generator::arc_label(roles.z_out));
  const GroupWord w(Generator::arc_label(roles.w_out));
  const GroupWord s(Generator::s());
  const GroupWord q(Generator::q());
  const GroupWord h(Generator::theta());
  GroupWord z_rhs, w_rhs;
  switch (type) {
    case CrossingType::EvenPositive:
      z_rhs = x * y * s * x.inverse() * s.inverse();
      w_rhs = s * x * s.inverse();
      break;
    case CrossingType::EvenNegative:
      z_rhs = s.inverse() * y * s;
      w_rhs = s.inverse() * y.inverse() * s * x * y;
      break;
    case CrossingType::Odd:
      z_rhs = h.inverse() * y * h;
      w_rhs = h * x * h.inverse();
      break;
    case CrossingType::Virtual:
      z_rhs = q.inverse() * y * q;
      w_rhs = q * x * q.inverse();
      break;
  }
  return {{z_rhs * z.inverse(), crossing, RelationKind::Z, type},
          {w_rhs * w.inverse(), crossing, RelationKind::W, type}};
}

std::vector<Relator> crossing_relators(const DiagramCode& code) {
  const auto roles = assign_roles(code);
  const ParityMap par = parity(code);
  std::vector<Relator> out;
  for (const auto& [id, r] : roles) {
    auto pair = relators_for(id, crossing_type(code, par, id), r);
    out.insert(out.end(), pair.begin(), pair.end());
  }
  return out;
}

std::vector<LaurentPoly> jacobian_row(const GroupWord& r, int arcs) {
  std::vector<LaurentPoly> row(static_cast<std::size_t>(arcs));
  for (const Generator& g : support(r)) {
    if (g.kind != Generator::Kind::Arc) continue;
    if (g.arc < 1 || g.arc > arcs) throw std::out_of_range("arc generator outside the matrix");
    row[static_cast<std::size_t>(g.arc - 1)] = abelianize(fox_derivative(r, g));
  }
  return row;
}

namespace {

std::string row_name(const Relator& r) {
  return "r" + std::to_string(r.crossing) + (r.kind == RelationKind::Z ? "_z" : "_w");
}

}  // namespace

AlexanderMatrix build_matrix_A(const DiagramCode& code) {
  const int arcs = static_cast<int>(code.size());
  AlexanderMatrix m;
  for (int j = 1; j <= arcs; ++j) m.columns.push_back("a" + std::to_string(j));
  for (const Relator& r : crossing_relators(code)) {
    m.entries.push_back(jacobian_row(r.word, arcs));
    m.rows.push_back({r.crossing, r.kind, row_name(r)});
  }
  return m;
}

AlexanderMatrix build_full_matrix_M(const DiagramCode& code) {
  const int arcs = static_cast<int>(code.size());
  AlexanderMatrix m = build_matrix_A(code);
  const std::vector<Generator> extra{Generator::s(), Generator::q(), Generator::theta()};
  for (const auto& g : extra) m.columns.push_back(g.name());
  const auto relators = crossing_relators(code);
  for (std::size_t i = 0; i < relators.size(); ++i) {
    for (const auto& g : extra) m.entries[i].push_back(abelianize(fox_derivative(relators[i].word, g)));
  }
  const GroupWord s(Generator::s()), q(Generator::q()), h(Generator::theta());
  const std::vector<std::pair<GroupWord, std::string>> comms{
      {commutator(s, q), "[s,q]"}, {commutator(s, h), "[s,h]"}, {commutator(h, q), "[h,q]"}};
  for (const auto& [word, name] : comms) {
    std::vector<LaurentPoly> row(static_cast<std::size_t>(arcs));
    for (const auto& g : extra) row.push_back(abelianize(fox_derivative(word, g)));
    m.entries.push_back(std::move(row));
    m.rows.push_back({0, RelationKind::Commutator, name});
  }
  return m;
}

AlexanderResult parity_alexander(const DiagramCode& code) {
  AlexanderResult out;
  out.counts = count_crossings(code);
  out.determinant = code.empty() ? LaurentPoly(1) : determinant(build_matrix_A(code).entries);
  out.canonical = canonicalize(out.determinant).poly;
  if (!out.canonical.is_zero()) {
    out.q_width = width(out.canonical, Var::Q);
    out.theta_width = width(out.canonical, Var::Theta);
  }
  return out;
}

LaurentPoly phi_delta(const DiagramCode& code) { return parity_alexander(code).canonical; }

namespace {

// Calls f on every k-subset of {0..n-1}, as sorted index vectors.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& keep, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(keep.begin(), keep.end(), i)) out.push_back(i);
  }
  return out;
}

}  // namespace

LaurentPoly gcd_of_minors(const Matrix& m, int corank) {
  const std::size_t n = m.size();
  if (n > 8) throw DimensionError("gcd_of_minors enumerates minors only up to dimension 8");
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionError("gcd_of_minors needs a square matrix");
  }
  if (corank < 0 || static_cast<std::size_t>(corank) > n) throw DimensionError("corank out of range");
  const std::size_t k = n - static_cast<std::size_t>(corank);
  LaurentPoly g;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& rs) {
    const auto drop_r = complement(rs, n);
    for_each_subset(n, k, [&](const std::vector<std::size_t>& cs) {
      if (g.is_one()) return;
      g = gcd(g, determinant(submatrix(m, drop_r, complement(cs, n))));
    });
  });
  return canonicalize(g).poly;
}

CrossingBounds crossing_bounds(const LaurentPoly& poly) {
  if (poly.is_zero()) return {};
  return {(width(poly, Var::Q) + 1) / 2, (width(poly, Var::Theta) + 1) / 2};
}

SkeinMatrices skein_matrices(const DiagramCode& code, int crossing) {
  require_valid(code);
  if (!code.is_classical(crossing)) {
    throw std::invalid_argument("skein needs a classical crossing, " + std::to_string(crossing) + " is not");
  }
  if (parity(code).at(crossing) != Parity::Even) {
    throw std::invalid_argument("even skein needs an even crossing, " + std::to_string(crossing) + " is odd");
  }
  AlexanderMatrix a = build_matrix_A(code);
  const int arcs = static_cast<int>(code.size());
  SkeinMatrices out;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].crossing != crossing) continue;
    (a.rows[i].kind == RelationKind::Z ? out.row_z : out.row_w) = i;
  }
  // Roles follow the frame, which a crossing switch preserves, so all three
  // templates share one labeling.
  const CrossingRoles roles = assign_roles(code).at(crossing);
  auto with = [&](const GroupWord& rz, const GroupWord& rw) {
    Matrix m = a.entries;
    m[out.row_z] = jacobian_row(rz, arcs);
    m[out.row_w] = jacobian_row(rw, arcs);
    return m;
  };
  auto pos = relators_for(crossing, CrossingType::EvenPositive, roles);
  auto neg = relators_for(crossing, CrossingType::EvenNegative, roles);
  out.plus = with(pos[0].word, pos[1].word);
  out.minus = with(neg[0].word, neg[1].word);
  const GroupWord x(Generator::arc_label(roles.x_in)), y(Generator::arc_label(roles.y_in));
  const GroupWord z(Generator::arc_label(roles.z_out)), w(Generator::arc_label(roles.w_out));
  out.smoothing = with(x * z.inverse(), y * w.inverse());
  return out;
}

SkeinReport check_even_skein(const DiagramCode& code, int crossing) {
  const SkeinMatrices m = skein_matrices(code, crossing);
  SkeinReport r;
  r.d_plus = determinant(m.plus);
  r.d_minus = determinant(m.minus);
  r.d_smooth = determinant(m.smoothing);
  const LaurentPoly st = pow(Var::S, 1) * pow(Var::T, 1);
  const LaurentPoly rhs = (LaurentPoly(1) - st) * r.d_smooth;
  r.plain_form = r.d_plus - r.d_minus == rhs;
  r.weighted_form = r.d_plus - st * r.d_minus == rhs;
  return r;
}

DiagramCode switch_crossing(const DiagramCode& code, int crossing) {
  require_valid(code);
  if (!code.is_classical(crossing)) {
    throw std::invalid_argument("crossing " + std::to_string(crossing) + " is not classical");
  }
  std::vector<Pass> passes = code.passes();
  for (auto& p : passes) {
    if (p.crossing == crossing) p.kind = p.kind == PassKind::Over ? PassKind::Under : PassKind::Over;
  }
  auto signs = code.signs();
  signs[crossing] = -signs[crossing];
  return DiagramCode(std::move(passes), std::move(signs));
}

SymmetryReport check_symmetries(const DiagramCode& code) {
  SymmetryReport r;
  r.base = phi_delta(code);
  r.reverse = equal_up_to_unit(phi_delta(reverse(code)), r.base);
  r.switched = equal_up_to_unit(phi_delta(switch_crossings(code)), substitute_inverses(r.base, {Var::S, Var::T}));
  r.flipped = equal_up_to_unit(phi_delta(flip(code)), substitute_inverses(r.base, {Var::Q, Var::Theta}));
  r.switched_flipped = equal_up_to_unit(phi_delta(switched_flip(code)),
                                        substitute_inverses(r.base, {Var::S, Var::T, Var::Q, Var::Theta}));
  return r;
}

std::string group_presentation(const DiagramCode& code) {
  require_valid(code);
  std::ostringstream out;
  out << "generators:";
  for (std::size_t i = 1; i <= code.size(); ++i) out << " a" << i;
  out << " s q h\n";
  for (const Relator& r : crossing_relators(code)) {
    out << row_name(r) << " (" << to_string(r.type) << "): " << r.word.to_string() << "\n";
  }
  const GroupWord s(Generator::s()), q(Generator::q()), h(Generator::theta());
  out << "[s,q]: " << commutator(s, q).to_string() << "\n";
  out << "[s,h]: " << commutator(s, h).to_string() << "\n";
  out << "[q,h]: " << commutator(q, h).to_string() << "\n";
  return out.str();
}

}  // namespace paritypoly
