#include "paritypoly/gauss.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace paritypoly {

std::string SignedGaussCode::to_string() const {
  std::string out;
  for (const auto& p : passes_) {
    out += p.over ? 'O' : 'U';
    out += std::to_string(p.crossing);
    out += p.sign > 0 ? '+' : '-';
  }
  return out;
}

DiagramCode SignedGaussCode::to_diagram() const {
  std::vector<Pass> passes;
  std::map<int, int> signs;
  for (const auto& p : passes_) {
    passes.push_back({p.crossing, p.over ? PassKind::Over : PassKind::Under, false});
    signs[p.crossing] = p.sign;
  }
  return DiagramCode(std::move(passes), std::move(signs));
}

std::vector<std::string> validate(const SignedGaussCode& g) {
  std::vector<std::string> out;
  std::map<int, std::pair<int, int>> counts;  // over, under
  std::map<int, int> signs;
  for (const auto& p : g.passes()) {
    auto& c = counts[p.crossing];
    (p.over ? c.first : c.second)++;
    auto [it, inserted] = signs.try_emplace(p.crossing, p.sign);
    if (!inserted && it->second != p.sign) out.push_back("crossing " + std::to_string(p.crossing) + ": sign mismatch");
  }
  for (const auto& [id, c] : counts) {
    if (c.first != 1 || c.second != 1) {
      out.push_back("crossing " + std::to_string(id) + ": needs exactly one O and one U pass");
    }
  }
  return out;
}

SignedGaussCode parse_gauss(std::string_view text) {
  std::vector<GaussPass> passes;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("gauss code offset " + std::to_string(i) + ": " + why);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'O' && c != 'U') fail("expected O or U");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected crossing id");
    int id = std::stoi(std::string(text.substr(start, i - start)));
    if (id <= 0) fail("crossing id must be positive");
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail("expected sign");
    int sign = text[i] == '+' ? 1 : -1;
    ++i;
    passes.push_back({id, c == 'O', sign});
  }
  SignedGaussCode g(std::move(passes));
  auto violations = validate(g);
  if (!violations.empty()) {
    std::string msg = "invalid gauss code:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw ParseError(msg);
  }
  return g;
}

SignedGaussCode classical_gauss_code(const DiagramCode& code) {
  std::vector<GaussPass> out;
  for (const auto& p : code.passes()) {
    if (!p.is_classical()) continue;
    out.push_back({p.crossing, p.kind == PassKind::Over, code.sign(p.crossing)});
  }
  return SignedGaussCode(std::move(out));
}

bool equal_up_to_rotation(const SignedGaussCode& a, const SignedGaussCode& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t k = 0; k < n; ++k) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = a.passes()[i] == b.passes()[(i + k) % n];
    if (same) return true;
  }
  return false;
}

std::vector<NamedGauss> read_gauss_table(std::string_view file_text) {
  std::vector<NamedGauss> out;
  std::istringstream in{std::string(file_text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos || raw[b] == '#') continue;
    std::string line = raw.substr(0, raw.find_last_not_of(" \t\r") + 1);
    NamedGauss entry;
    entry.line = line_no;
    if (auto tab = line.find('\t'); tab != std::string::npos) {
      entry.name = line.substr(0, tab);
      entry.text = line.substr(tab + 1);
      std::size_t nb = entry.name.find_first_not_of(" ");
      entry.name = nb == std::string::npos ? "" : entry.name.substr(nb);
    } else {
      entry.text = line.substr(b);
      entry.name = "line" + std::to_string(line_no);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace paritypoly
