#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "paritypoly/gauss.hpp"
#include "paritypoly/json_io.hpp"
#include "paritypoly/realize.hpp"
#include "paritypoly/verify.hpp"

namespace paritypoly::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string extension(const std::string& path) { return std::filesystem::path(path).extension().string(); }

nlohmann::json counts_json(const CrossingCounts& c) {
  return {{"even", c.even}, {"odd", c.odd}, {"virtual", c.virtual_crossings}};
}

std::string bounds_text(const AlexanderResult& r) {
  if (!r.q_width) return "no information (zero polynomial)";
  const CrossingBounds b = crossing_bounds(r.canonical);
  std::string text = "q-width " + std::to_string(*r.q_width) + "  h-width " + std::to_string(*r.theta_width) +
                     "  virtual>=" + std::to_string(*b.virtual_lower) + "  odd>=" + std::to_string(*b.odd_lower);
  if (*b.virtual_lower == 0 && *b.odd_lower == 0) text += "  (no information)";
  return text;
}

void print_json_line(std::ostream& out, const nlohmann::json& j) { out << j.dump() << "\n"; }

}  // namespace

std::vector<NamedDiagram> load_diagrams(const std::string& path) {
  const std::string text = read_file(path);
  const std::string ext = extension(path);
  if (ext == ".vkd") {
    try {
      return parse_vkd(text);
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (ext == ".gauss") {
    std::vector<NamedDiagram> out;
    for (const NamedGauss& g : read_gauss_table(text)) {
      SignedGaussCode code;
      try {
        code = parse_gauss(g.text);
      } catch (const ParseError& e) {
        throw ParseError(path + ": line " + std::to_string(g.line) + ": " + e.what());
      }
      out.push_back({g.name, realize(code), g.line});
    }
    return out;
  }
  throw InputError(path + ": unsupported file type (expected .vkd or .gauss)");
}

std::vector<NamedDiagram> load_all(const std::vector<std::string>& paths) {
  std::vector<NamedDiagram> out;
  for (const auto& p : paths) {
    auto part = load_diagrams(p);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

nlohmann::json diagram_record(const NamedDiagram& d, const AlexanderResult& r) {
  nlohmann::json j;
  j["name"] = d.name;
  j["code"] = d.code.to_string();
  j["crossings"] = counts_json(r.counts);
  j["polynomial"] = r.canonical.to_string();
  j["terms"] = to_json(r.canonical);
  if (r.q_width) {
    const CrossingBounds b = crossing_bounds(r.canonical);
    j["q_width"] = *r.q_width;
    j["h_width"] = *r.theta_width;
    j["bounds"] = {{"virtual", *b.virtual_lower}, {"odd", *b.odd_lower}};
  } else {
    j["q_width"] = nullptr;
    j["h_width"] = nullptr;
    j["bounds"] = nullptr;
  }
  return j;
}

int cmd_compute(const Options& o, std::ostream& out) {
  for (const auto& d : load_all(o.paths)) {
    const AlexanderResult r = parity_alexander(d.code);
    if (o.json) {
      print_json_line(out, diagram_record(d, r));
    } else {
      out << d.name << "\t" << r.canonical.to_string() << "\n";
    }
  }
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  for (const auto& d : load_all(o.paths)) {
    const AlexanderResult r = parity_alexander(d.code);
    if (o.json) {
      print_json_line(out, diagram_record(d, r));
    } else {
      out << d.name << "\t" << bounds_text(r) << "\n";
    }
  }
  return kOk;
}

int cmd_presentation(const Options& o, std::ostream& out) {
  for (const auto& d : load_all(o.paths)) {
    out << "# " << d.name << "\n" << group_presentation(d.code);
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const Options& o, std::ostream& out) {
  const auto corpus = load_all(o.paths);
  SuiteReport report;
  if (suite == "moves") {
    MoveSuiteOptions mo;
    mo.trials = o.trials;
    mo.seed = o.seed;
    report = verify_moves(mo, collect_pairs(corpus));
  } else if (suite == "symmetry") {
    report = verify_symmetry(corpus);
  } else if (suite == "skein") {
    report = verify_skein(corpus);
  } else if (suite == "oddswitch") {
    report = verify_oddswitch(corpus);
  } else if (suite == "foxid") {
    report = verify_foxid(o.trials, o.seed, corpus);
  } else if (suite == "prop1") {
    report = verify_prop1(corpus);
  } else {
    throw InputError("unknown suite '" + suite + "'");
  }
  if (o.json) {
    nlohmann::json j;
    j["suite"] = report.suite;
    j["passed"] = report.passed();
    j["notes"] = report.notes;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
      j["checks"].push_back({{"name", c.name}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}});
    }
    print_json_line(out, j);
  } else {
    for (const auto& c : report.checks) {
      if (c.outcome == Outcome::Fail || o.verbose) {
        out << (c.outcome == Outcome::Pass ? "PASS " : c.outcome == Outcome::Fail ? "FAIL " : "SKIP ") << c.name;
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
      }
    }
    for (const auto& n : report.notes) out << "note: " << n << "\n";
    out << report.suite << ": " << report.count(Outcome::Pass) << " passed, " << report.count(Outcome::Fail)
        << " failed, " << report.count(Outcome::Skipped) << " skipped\n";
  }
  return report.passed() ? kOk : kInputFailure;
}

namespace {

struct BatchResult {
  nlohmann::json record;
  bool failed = false;
};

BatchResult batch_line(const NamedGauss& g) {
  BatchResult r;
  try {
    const DiagramCode code = realize(parse_gauss(g.text));
    r.record = diagram_record({g.name, code, g.line}, parity_alexander(code));
    r.record["line"] = g.line;
  } catch (const std::exception& e) {
    const bool internal = dynamic_cast<const InexactDivision*>(&e) || dynamic_cast<const DegeneracyError*>(&e);
    r.record = {{"line", g.line}, {"name", g.name}, {"error", e.what()}, {"kind", internal ? "internal" : "input"}};
    r.failed = true;
  }
  return r;
}

}  // namespace

int cmd_batch(const Options& o, std::ostream& out) {
  if (o.paths.size() != 1) throw InputError("batch takes exactly one table file");
  const auto lines = read_gauss_table(read_file(o.paths.front()));
  std::vector<BatchResult> results(lines.size());
  const std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(lines.size(), o.jobs > 0 ? static_cast<std::size_t>(o.jobs)
                                                        : std::max(1U, std::thread::hardware_concurrency())));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < lines.size(); i += workers) results[i] = batch_line(lines[i]);
    }));
  }
  for (auto& t : tasks) t.get();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) throw InputError("cannot write " + o.out);
    sink = &file;
  }
  bool any_failed = false;
  for (const auto& r : results) {
    print_json_line(*sink, r.record);
    any_failed = any_failed || r.failed;
  }
  return any_failed ? kInputFailure : kOk;
}

}  // namespace paritypoly::cli
