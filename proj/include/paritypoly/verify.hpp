#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "paritypoly/alexander.hpp"
#include "paritypoly/diagram.hpp"
#include "paritypoly/moves.hpp"

namespace paritypoly {

enum class Outcome : std::uint8_t { Pass, Fail, Skipped };

std::string to_string(Outcome o);

struct Check {
  std::string name;
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t count(Outcome o) const;
  void add(std::string name, bool ok, std::string detail = {});
};

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] by modular reduction, so sequences are the same
/// on every standard library.
int uniform_int(Rng& rng, int lo, int hi);

/// Random valid code with 1..max_crossings crossings; roughly 40% virtual.
/// The pass order is arbitrary, so the code need not be planar.
DiagramCode random_code(Rng& rng, int max_crossings);

/// Random word in a1..a_arcs, s, q, h of length 0..max_length.
GroupWord random_word(Rng& rng, int arcs, int max_length);

/// Random insertion move valid on code.
MoveSpec random_insertion(Rng& rng, const DiagramCode& code);

/// Random relabeling through a permutation of the crossing ids.
DiagramCode random_relabel(Rng& rng, const DiagramCode& code);

/// Every code with 1..max_crossings crossings up to relabeling, over all
/// crossing kinds, signs, over/under orders and frame bits.
std::vector<DiagramCode> enumerate_codes(int max_crossings);

/// Labelled before/after diagrams of a move not implemented as a rewrite.
struct FixturePair {
  std::string name;
  DiagramCode before;
  DiagramCode after;
};

/// Pairs diagrams named `<label>/before` and `<label>/after`.
std::vector<FixturePair> collect_pairs(const std::vector<NamedDiagram>& diagrams);

struct MoveSuiteOptions {
  int trials = 1000;
  std::uint64_t seed = 1;
  int max_crossings = 6;
  int max_moves = 6;
};

/// Random move sequences (with basepoint shifts and relabelings) on random
/// codes, plus the fixture pairs. The first failing step of a trial is
/// reported as its counterexample.
SuiteReport verify_moves(const MoveSuiteOptions& options, const std::vector<FixturePair>& pairs);

SuiteReport verify_symmetry(const std::vector<NamedDiagram>& corpus);
SuiteReport verify_skein(const std::vector<NamedDiagram>& corpus);
SuiteReport verify_oddswitch(const std::vector<NamedDiagram>& corpus);
SuiteReport verify_foxid(int trials, std::uint64_t seed, const std::vector<NamedDiagram>& corpus);
SuiteReport verify_prop1(const std::vector<NamedDiagram>& corpus);

}  // namespace paritypoly
