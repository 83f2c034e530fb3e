#include "paritypoly/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace paritypoly {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::invalid_argument("invalid diagram code: " + join(violations)),
      violations_(std::move(violations)) {}

std::vector<int> DiagramCode::crossing_ids() const {
  std::set<int> ids;
  for (const auto& p : passes_) ids.insert(p.crossing);
  return {ids.begin(), ids.end()};
}

std::vector<int> DiagramCode::classical_ids() const {
  std::vector<int> out;
  for (const auto& [id, s] : signs_) out.push_back(id);
  return out;
}

std::vector<int> DiagramCode::virtual_ids() const {
  std::vector<int> out;
  for (int id : crossing_ids()) {
    if (!is_classical(id)) out.push_back(id);
  }
  return out;
}

int DiagramCode::sign(int id) const {
  auto it = signs_.find(id);
  if (it == signs_.end()) throw std::out_of_range("crossing " + std::to_string(id) + " has no sign");
  return it->second;
}

std::pair<std::size_t, std::size_t> DiagramCode::positions(int id) const {
  std::size_t found[2] = {0, 0};
  int n = 0;
  for (std::size_t i = 0; i < passes_.size() && n < 2; ++i) {
    if (passes_[i].crossing == id) found[n++] = i;
  }
  if (n != 2) throw std::out_of_range("crossing " + std::to_string(id) + " does not occur twice");
  return {found[0], found[1]};
}

int DiagramCode::max_id() const {
  int m = 0;
  for (const auto& p : passes_) m = std::max(m, p.crossing);
  return m;
}

std::string DiagramCode::to_string() const {
  std::string out;
  for (const auto& p : passes_) {
    if (!out.empty()) out += ' ';
    switch (p.kind) {
      case PassKind::Over: out += 'O'; break;
      case PassKind::Under: out += 'U'; break;
      case PassKind::Virtual: out += 'V'; break;
    }
    out += std::to_string(p.crossing);
    if (p.kind == PassKind::Virtual) {
      out += p.frame_first ? 'x' : 'y';
    } else {
      auto it = signs_.find(p.crossing);
      out += (it != signs_.end() && it->second < 0) ? '-' : '+';
    }
  }
  return out;
}

std::vector<std::string> validate(const DiagramCode& code) {
  std::vector<std::string> violations;
  struct Seen {
    int over = 0, under = 0, virt = 0, frames = 0;
  };
  std::map<int, Seen> seen;
  for (const auto& p : code.passes()) {
    if (p.crossing <= 0) {
      violations.push_back("crossing " + std::to_string(p.crossing) + ": id must be positive");
      continue;
    }
    auto& s = seen[p.crossing];
    switch (p.kind) {
      case PassKind::Over: ++s.over; break;
      case PassKind::Under: ++s.under; break;
      case PassKind::Virtual:
        ++s.virt;
        if (p.frame_first) ++s.frames;
        break;
    }
  }
  for (const auto& [id, s] : seen) {
    std::string tag = "crossing " + std::to_string(id) + ": ";
    bool classical = s.over + s.under > 0;
    if (classical && s.virt > 0) {
      violations.push_back(tag + "mixes classical and virtual passes");
      continue;
    }
    if (classical) {
      if (s.over > 1) violations.push_back(tag + "two over passes");
      if (s.under > 1) violations.push_back(tag + "two under passes");
      if (s.over == 0) violations.push_back(tag + "missing over pass");
      if (s.under == 0) violations.push_back(tag + "missing under pass");
      auto it = code.signs().find(id);
      if (it == code.signs().end()) {
        violations.push_back(tag + "classical crossing without sign");
      } else if (it->second != 1 && it->second != -1) {
        violations.push_back(tag + "sign must be +1 or -1");
      }
    } else {
      if (s.virt != 2) violations.push_back(tag + "virtual crossing must occur exactly twice");
      if (s.frames != 1) violations.push_back(tag + "exactly one virtual pass must carry the frame bit");
      if (code.signs().count(id) != 0) violations.push_back(tag + "virtual crossing carries a sign");
    }
  }
  for (const auto& [id, sign] : code.signs()) {
    if (seen.count(id) == 0) violations.push_back("crossing " + std::to_string(id) + ": sign for absent crossing");
  }
  return violations;
}

void require_valid(const DiagramCode& code) {
  auto v = validate(code);
  if (!v.empty()) throw ValidationError(std::move(v));
}

namespace {

DiagramCode parse_tokens(std::string_view text, int line) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<Pass> passes;
  std::map<int, int> signs;
  while (in >> tok) {
    auto bad = [&](const std::string& why) {
      return ParseError("bad token '" + tok + "': " + why, line);
    };
    if (tok.size() < 3) throw bad("too short");
    char kind = tok[0];
    char suffix = tok.back();
    std::string digits = tok.substr(1, tok.size() - 2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); })) {
      throw bad("crossing id must be a positive decimal integer");
    }
    int id = std::stoi(digits);
    if (id <= 0) throw bad("crossing id must be positive");
    Pass p{id, PassKind::Over, false};
    if (kind == 'O' || kind == 'U') {
      p.kind = kind == 'O' ? PassKind::Over : PassKind::Under;
      if (suffix != '+' && suffix != '-') throw bad("classical pass needs sign + or -");
      int sign = suffix == '+' ? 1 : -1;
      auto [it, inserted] = signs.try_emplace(id, sign);
      if (!inserted && it->second != sign) {
        throw ParseError("sign mismatch at crossing " + std::to_string(id), line);
      }
    } else if (kind == 'V') {
      p.kind = PassKind::Virtual;
      if (suffix != 'x' && suffix != 'y') throw bad("virtual pass needs frame marker x or y");
      p.frame_first = suffix == 'x';
    } else {
      throw bad("expected O, U or V");
    }
    passes.push_back(p);
  }
  DiagramCode code(std::move(passes), std::move(signs));
  auto violations = validate(code);
  if (!violations.empty()) {
    throw ParseError("invalid diagram code: " + join(violations), line);
  }
  return code;
}

}  // namespace

DiagramCode parse_diagram(std::string_view text) { return parse_tokens(text, 0); }

std::vector<NamedDiagram> parse_vkd(std::string_view file_text) {
  std::vector<NamedDiagram> out;
  std::istringstream in{std::string(file_text)};
  std::string raw;
  int line_no = 0;
  std::string pending_name;
  bool have_name = false;
  bool name_used = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("name:", 0) == 0) {
      if (have_name && !name_used) throw ParseError("name without code", line_no);
      pending_name = trim(std::string_view(line).substr(5));
      have_name = true;
      name_used = false;
    } else if (line.rfind("code:", 0) == 0) {
      if (have_name && name_used) throw ParseError("second code for diagram '" + pending_name + "'", line_no);
      if (!have_name && !out.empty()) throw ParseError("additional diagrams need a name: line", line_no);
      DiagramCode code = parse_tokens(std::string_view(line).substr(5), line_no);
      std::string name = have_name ? pending_name : "diagram" + std::to_string(out.size() + 1);
      out.push_back({name, std::move(code), line_no});
      name_used = true;
    } else {
      throw ParseError("expected 'name:' or 'code:'", line_no);
    }
  }
  if (have_name && !name_used) throw ParseError("name without code", line_no);
  return out;
}

ParityMap parity(const DiagramCode& code) {
  require_valid(code);
  ParityMap out;
  for (int id : code.classical_ids()) {
    auto [a, b] = code.positions(id);
    int between = 0;
    for (std::size_t i = a + 1; i < b; ++i) {
      if (code.passes()[i].is_classical()) ++between;
    }
    out[id] = between % 2 == 0 ? Parity::Even : Parity::Odd;
  }
  return out;
}

SemiArcLabeling semi_arcs(const DiagramCode& code) {
  require_valid(code);
  return SemiArcLabeling(code.size());
}

DiagramCode reverse(const DiagramCode& code) {
  require_valid(code);
  std::vector<Pass> passes(code.passes().rbegin(), code.passes().rend());
  return DiagramCode(std::move(passes), code.signs());
}

DiagramCode switch_crossings(const DiagramCode& code) {
  require_valid(code);
  std::vector<Pass> passes = code.passes();
  for (auto& p : passes) {
    if (p.kind == PassKind::Over) {
      p.kind = PassKind::Under;
    } else if (p.kind == PassKind::Under) {
      p.kind = PassKind::Over;
    }
  }
  std::map<int, int> signs;
  for (const auto& [id, s] : code.signs()) signs[id] = -s;
  return DiagramCode(std::move(passes), std::move(signs));
}

DiagramCode flip(const DiagramCode& code) {
  require_valid(code);
  std::vector<Pass> passes = code.passes();
  for (auto& p : passes) {
    switch (p.kind) {
      case PassKind::Over: p.kind = PassKind::Under; break;
      case PassKind::Under: p.kind = PassKind::Over; break;
      case PassKind::Virtual: p.frame_first = !p.frame_first; break;
    }
  }
  return DiagramCode(std::move(passes), code.signs());
}

DiagramCode switched_flip(const DiagramCode& code) { return switch_crossings(flip(code)); }

DiagramCode shift_basepoint(const DiagramCode& code, long k) {
  require_valid(code);
  if (code.empty()) return code;
  const long n = static_cast<long>(code.size());
  long r = ((k % n) + n) % n;
  std::vector<Pass> passes = code.passes();
  std::rotate(passes.begin(), passes.begin() + r, passes.end());
  return DiagramCode(std::move(passes), code.signs());
}

DiagramCode relabel(const DiagramCode& code, const std::map<int, int>& permutation) {
  require_valid(code);
  auto ids = code.crossing_ids();
  std::set<int> targets;
  for (int id : ids) {
    auto it = permutation.find(id);
    if (it == permutation.end()) {
      throw std::invalid_argument("permutation does not map crossing " + std::to_string(id));
    }
    if (it->second <= 0) throw std::invalid_argument("permutation target must be positive");
    if (!targets.insert(it->second).second) {
      throw std::invalid_argument("permutation is not injective at " + std::to_string(it->second));
    }
  }
  std::vector<Pass> passes = code.passes();
  for (auto& p : passes) p.crossing = permutation.at(p.crossing);
  std::map<int, int> signs;
  for (const auto& [id, s] : code.signs()) signs[permutation.at(id)] = s;
  return DiagramCode(std::move(passes), std::move(signs));
}

DiagramCode normalize_labels(const DiagramCode& code) {
  std::map<int, int> perm;
  int next = 1;
  for (const auto& p : code.passes()) {
    if (perm.try_emplace(p.crossing, next).second) ++next;
  }
  return relabel(code, perm);
}

bool equivalent_codes(const DiagramCode& a, const DiagramCode& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const DiagramCode nb = normalize_labels(b);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (normalize_labels(shift_basepoint(a, static_cast<long>(k))) == nb) return true;
  }
  return false;
}

CrossingCounts count_crossings(const DiagramCode& code) {
  CrossingCounts c;
  for (const auto& [id, p] : parity(code)) {
    if (p == Parity::Even) {
      ++c.even;
    } else {
      ++c.odd;
    }
  }
  c.virtual_crossings = static_cast<int>(code.virtual_ids().size());
  return c;
}

}  // namespace paritypoly
