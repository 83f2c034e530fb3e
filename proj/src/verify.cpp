#include "paritypoly/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace paritypoly {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

bool SuiteReport::passed() const { return count(Outcome::Fail) == 0; }

std::size_t SuiteReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [o](const Check& c) { return c.outcome == o; }));
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? Outcome::Pass : Outcome::Fail, std::move(detail)});
}

int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

namespace {

bool coin(Rng& rng) { return (rng() & 1U) != 0; }

template <class T>
void shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1))]);
  }
}

int arc_count(const DiagramCode& code) { return code.empty() ? 1 : static_cast<int>(code.size()); }

std::string poly_pair(const LaurentPoly& a, const LaurentPoly& b) {
  return "expected " + a.to_string() + ", got " + b.to_string();
}

}  // namespace

DiagramCode random_code(Rng& rng, int max_crossings) {
  const int n = uniform_int(rng, 1, std::max(1, max_crossings));
  std::vector<int> slots;
  for (int id = 1; id <= n; ++id) slots.insert(slots.end(), {id, id});
  shuffle(rng, slots);
  std::map<int, bool> is_virtual, over_first, frame_first;
  std::map<int, int> signs;
  for (int id = 1; id <= n; ++id) {
    is_virtual[id] = uniform_int(rng, 0, 9) < 4;
    over_first[id] = coin(rng);
    frame_first[id] = coin(rng);
    if (!is_virtual[id]) signs[id] = coin(rng) ? 1 : -1;
  }
  std::vector<Pass> passes;
  std::map<int, int> seen;
  for (int id : slots) {
    const bool first = seen[id]++ == 0;
    if (is_virtual[id]) {
      passes.push_back({id, PassKind::Virtual, first == frame_first[id]});
    } else {
      passes.push_back({id, first == over_first[id] ? PassKind::Over : PassKind::Under, false});
    }
  }
  return DiagramCode(std::move(passes), std::move(signs));
}

GroupWord random_word(Rng& rng, int arcs, int max_length) {
  const int len = uniform_int(rng, 0, max_length);
  std::vector<Letter> letters;
  for (int i = 0; i < len; ++i) {
    const int g = uniform_int(rng, 0, arcs + 2);
    Generator gen = g < arcs ? Generator::arc_label(g + 1)
                  : g == arcs ? Generator::s()
                  : g == arcs + 1 ? Generator::q()
                  : Generator::theta();
    letters.push_back({gen, coin(rng) ? 1 : -1});
  }
  return GroupWord::from_letters(letters);
}

MoveSpec random_insertion(Rng& rng, const DiagramCode& code) {
  const int arcs = arc_count(code);
  const int kind = uniform_int(rng, 0, arcs >= 2 ? 3 : 1);
  auto two_arcs = [&]() {
    int a = uniform_int(rng, 1, arcs);
    int b = uniform_int(rng, 1, arcs - 1);
    if (b >= a) ++b;
    return std::pair{a, b};
  };
  switch (kind) {
    case 0: return R1Insert{uniform_int(rng, 1, arcs), coin(rng), coin(rng) ? 1 : -1};
    case 1: return V1Insert{uniform_int(rng, 1, arcs), coin(rng)};
    case 2: {
      auto [a, b] = two_arcs();
      return R2Insert{a, b, coin(rng), coin(rng), coin(rng) ? 1 : -1};
    }
    default: {
      auto [a, b] = two_arcs();
      return V2Insert{a, b, coin(rng), coin(rng)};
    }
  }
}

DiagramCode random_relabel(Rng& rng, const DiagramCode& code) {
  std::vector<int> ids = code.crossing_ids();
  std::vector<int> image = ids;
  // Spread the new labels out so relabeling is not only a permutation of 1..n.
  for (auto& v : image) v = v * 3 + uniform_int(rng, 0, 2);
  shuffle(rng, image);
  std::map<int, int> perm;
  for (std::size_t i = 0; i < ids.size(); ++i) perm[ids[i]] = image[i];
  std::vector<Pass> passes = code.passes();
  std::map<int, int> signs;
  for (auto& p : passes) p.crossing = perm.at(p.crossing);
  for (const auto& [id, s] : code.signs()) signs[perm.at(id)] = s;
  return DiagramCode(std::move(passes), std::move(signs));
}

std::vector<DiagramCode> enumerate_codes(int max_crossings) {
  std::vector<DiagramCode> out;
  for (int n = 1; n <= max_crossings; ++n) {
    std::vector<int> seq;
    for (int id = 1; id <= n; ++id) seq.insert(seq.end(), {id, id});
    do {
      int next = 1;
      bool normal = true;
      for (int v : seq) {
        if (v > next) {
          normal = false;
          break;
        }
        if (v == next) ++next;
      }
      if (!normal) continue;
      // Six states per crossing: classical (over first?, sign) or virtual (frame bit).
      int total = 1;
      for (int i = 0; i < n; ++i) total *= 6;
      for (int code_idx = 0; code_idx < total; ++code_idx) {
        std::vector<int> state(static_cast<std::size_t>(n + 1));
        for (int id = 1, c = code_idx; id <= n; ++id, c /= 6) state[static_cast<std::size_t>(id)] = c % 6;
        std::vector<Pass> passes;
        std::map<int, int> signs, seen;
        for (int id : seq) {
          const int st = state[static_cast<std::size_t>(id)];
          const bool first = seen[id]++ == 0;
          if (st < 4) {
            const bool over_first = st % 2 == 0;
            passes.push_back({id, first == over_first ? PassKind::Over : PassKind::Under, false});
            signs[id] = st < 2 ? 1 : -1;
          } else {
            passes.push_back({id, PassKind::Virtual, first == (st == 4)});
          }
        }
        out.emplace_back(std::move(passes), std::move(signs));
      }
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
  return out;
}

std::vector<FixturePair> collect_pairs(const std::vector<NamedDiagram>& diagrams) {
  std::map<std::string, FixturePair> pairs;
  std::map<std::string, int> seen;
  for (const auto& d : diagrams) {
    auto slash = d.name.rfind('/');
    if (slash == std::string::npos) continue;
    const std::string label = d.name.substr(0, slash);
    const std::string side = d.name.substr(slash + 1);
    auto& p = pairs[label];
    p.name = label;
    if (side == "before") {
      p.before = d.code;
      seen[label] |= 1;
    } else if (side == "after") {
      p.after = d.code;
      seen[label] |= 2;
    }
  }
  std::vector<FixturePair> out;
  for (auto& [label, p] : pairs) {
    if (seen[label] == 3) out.push_back(std::move(p));
  }
  return out;
}

SuiteReport verify_moves(const MoveSuiteOptions& options, const std::vector<FixturePair>& pairs) {
  SuiteReport report{"moves", {}, {}};
  Rng rng(options.seed);
  int nonzero = 0;
  int total_moves = 0;
  std::map<std::string, int> move_counts;
  for (int trial = 0; trial < options.trials; ++trial) {
    DiagramCode code;
    LaurentPoly base;
    // Prefer codes with a nonvanishing invariant; zero is trivially preserved
    // by far more mistakes.
    for (int attempt = 0; attempt < 12; ++attempt) {
      code = random_code(rng, options.max_crossings);
      base = phi_delta(code);
      if (!base.is_zero()) break;
    }
    if (!base.is_zero()) ++nonzero;
    const DiagramCode start = code;
    const int steps = uniform_int(rng, 1, options.max_moves);
    std::string failure;
    for (int step = 0; step < steps && failure.empty(); ++step) {
      DiagramCode next;
      std::string what;
      const int action = uniform_int(rng, 0, 5);
      if (action <= 1) {
        MoveSpec m = random_insertion(rng, code);
        what = describe(m);
        next = apply_move(code, m);
      } else if (action <= 3) {
        std::vector<MoveSpec> removals;
        for (auto& m : available_removals(code)) {
          if (!apply_move(code, m).empty()) removals.push_back(m);
        }
        if (removals.empty()) {
          MoveSpec m = random_insertion(rng, code);
          what = describe(m);
          next = apply_move(code, m);
        } else {
          const MoveSpec& m = removals[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(removals.size()) - 1))];
          what = describe(m);
          next = apply_move(code, m);
        }
      } else if (action == 4) {
        const int k = uniform_int(rng, 0, static_cast<int>(code.size()) - 1);
        what = "shift_basepoint(" + std::to_string(k) + ")";
        next = shift_basepoint(code, k);
      } else {
        what = "relabel";
        next = random_relabel(rng, code);
      }
      ++total_moves;
      ++move_counts[what.substr(0, what.find('('))];
      const LaurentPoly now = phi_delta(next);
      if (now != base) {
        failure = "trial " + std::to_string(trial) + " step " + std::to_string(step) + " " + what +
                  "\n  before: " + code.to_string() + "\n  after:  " + next.to_string() + "\n  " +
                  poly_pair(base, now);
      }
      code = std::move(next);
    }
    report.add("trial " + std::to_string(trial), failure.empty(), failure.empty() ? start.to_string() : failure);
  }
  report.notes.push_back(std::to_string(nonzero) + " of " + std::to_string(options.trials) +
                         " trials start from a nonzero invariant; " + std::to_string(total_moves) + " steps");
  std::ostringstream mix;
  mix << "step mix:";
  for (const auto& [k, v] : move_counts) mix << " " << k << "=" << v;
  report.notes.push_back(mix.str());
  for (const auto& p : pairs) {
    const LaurentPoly a = phi_delta(p.before);
    const LaurentPoly b = phi_delta(p.after);
    report.add("fixture " + p.name, a == b,
               a == b ? a.to_string() : p.before.to_string() + " | " + p.after.to_string() + ": " + poly_pair(a, b));
  }
  return report;
}

SuiteReport verify_symmetry(const std::vector<NamedDiagram>& corpus) {
  SuiteReport report{"symmetry", {}, {}};
  int held[4] = {0, 0, 0, 0};
  int reverse_inverted = 0;
  for (const auto& d : corpus) {
    const SymmetryReport r = check_symmetries(d.code);
    std::string bad;
    if (!r.reverse) bad += " reverse";
    if (!r.switched) bad += " switch";
    if (!r.flipped) bad += " flip";
    if (!r.switched_flipped) bad += " switched_flip";
    held[0] += r.reverse;
    held[1] += r.switched;
    held[2] += r.flipped;
    held[3] += r.switched_flipped;
    const LaurentPoly all_inverted = substitute_inverses(r.base, {Var::S, Var::T, Var::Q, Var::Theta});
    reverse_inverted += equal_up_to_unit(phi_delta(reverse(d.code)), all_inverted) ? 1 : 0;
    report.add(d.name, r.all(), r.all() ? r.base.to_string() : "failed:" + bad + " (base " + r.base.to_string() + ")");
  }
  const auto n = std::to_string(corpus.size());
  report.notes.push_back("identities held: reverse " + std::to_string(held[0]) + "/" + n + ", switch " +
                         std::to_string(held[1]) + "/" + n + ", flip " + std::to_string(held[2]) + "/" + n +
                         ", switched_flip " + std::to_string(held[3]) + "/" + n);
  report.notes.push_back("reverse with all four variables inverted held " + std::to_string(reverse_inverted) + "/" +
                         n);
  return report;
}

SuiteReport verify_skein(const std::vector<NamedDiagram>& corpus) {
  SuiteReport report{"skein", {}, {}};
  int plain = 0, weighted = 0, total = 0;
  for (const auto& d : corpus) {
    const ParityMap par = parity(d.code);
    for (const auto& [id, p] : par) {
      if (p != Parity::Even) continue;
      const SkeinReport r = check_even_skein(d.code, id);
      ++total;
      plain += r.plain_form ? 1 : 0;
      weighted += r.weighted_form ? 1 : 0;
      std::string forms = std::string(r.plain_form ? " D+ - D-" : "") + (r.weighted_form ? " D+ - stD-" : "");
      report.add(d.name + " crossing " + std::to_string(id), r.plain_form || r.weighted_form,
                 forms.empty() ? "neither identity holds" : "holds:" + forms);
    }
  }
  if (total == 0) {
    report.checks.push_back({"uniform identity", Outcome::Skipped, "no even crossings in corpus"});
    return report;
  }
  const bool uniform = plain == total || weighted == total;
  std::string which = weighted == total && plain == total ? "both forms"
                      : weighted == total                   ? "D+ - st D- = (1 - st) Dv"
                      : plain == total                 ? "D+ - D- = (1 - st) Dv"
                                                         : "none uniformly";
  report.add("uniform identity", uniform,
             which + " (" + std::to_string(weighted) + "/" + std::to_string(total) + " with st factor, " +
                 std::to_string(plain) + "/" + std::to_string(total) + " without)");
  return report;
}

SuiteReport verify_oddswitch(const std::vector<NamedDiagram>& corpus) {
  SuiteReport report{"oddswitch", {}, {}};
  for (const auto& d : corpus) {
    const ParityMap par = parity(d.code);
    const LaurentPoly base = parity_alexander(d.code).determinant;
    DiagramCode all = d.code;
    bool any = false;
    for (const auto& [id, p] : par) {
      if (p != Parity::Odd) continue;
      any = true;
      const LaurentPoly after = parity_alexander(switch_crossing(d.code, id)).determinant;
      report.add(d.name + " crossing " + std::to_string(id), after == base,
                 after == base ? std::string() : poly_pair(base, after));
      all = switch_crossing(all, id);
    }
    if (!any) continue;
    const LaurentPoly after = parity_alexander(all).determinant;
    report.add(d.name + " all odd", after == base,
               (after == base ? std::string() : poly_pair(base, after) + "; ") +
                   (base.is_zero() ? "invariant is zero" : "invariant nonzero"));
  }
  return report;
}

SuiteReport verify_foxid(int trials, std::uint64_t seed, const std::vector<NamedDiagram>& corpus) {
  SuiteReport report{"foxid", {}, {}};
  Rng rng(seed);
  int bad = 0;
  std::string first_bad;
  for (int i = 0; i < trials; ++i) {
    const GroupWord w = random_word(rng, 6, 20);
    if (!fundamental_identity_check(w)) {
      if (bad++ == 0) first_bad = w.to_string();
    }
  }
  report.add("fundamental identity on " + std::to_string(trials) + " words", bad == 0,
             bad == 0 ? std::string() : std::to_string(bad) + " failures, first: " + first_bad);
  for (const auto& d : corpus) {
    const LaurentPoly det = determinant(build_full_matrix_M(d.code).entries);
    report.add(d.name + " det(M) = 0", det.is_zero(), det.is_zero() ? std::string() : det.to_string());
  }
  return report;
}

SuiteReport verify_prop1(const std::vector<NamedDiagram>& corpus) {
  SuiteReport report{"prop1", {}, {}};
  std::vector<NamedDiagram> codes;
  int k = 0;
  for (auto& c : enumerate_codes(2)) codes.push_back({"small" + std::to_string(++k), std::move(c), 0});
  for (const auto& d : corpus) {
    if (!d.code.empty() && d.code.crossing_count() <= 2) codes.push_back(d);
  }
  int nonzero = 0;
  for (const auto& d : codes) {
    const LaurentPoly det = parity_alexander(d.code).canonical;
    const LaurentPoly g = gcd_of_minors(build_full_matrix_M(d.code).entries, 1);
    nonzero += det.is_zero() ? 0 : 1;
    report.add(d.name, equal_up_to_unit(det, g), d.code.to_string() + ": det(A) " + det.to_string() + ", gcd " + g.to_string());
  }
  report.notes.push_back(std::to_string(nonzero) + " of " + std::to_string(codes.size()) + " codes have det(A) != 0");
  return report;
}

}  // namespace paritypoly
