#include "minram/group_spec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "minram/errors.hpp"

namespace minram {

namespace {

GroupSpec from_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open group table file: " + path);
  int n = 0;
  if (!(in >> n) || n < 1) throw input_error("group table file must start with the order");
  if (n > AbstractGroup::kMaxOrder) throw resource_error("group table exceeds order 512");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(in >> table[a][b])) throw input_error("group table file is truncated");
  return GroupSpec{AbstractGroup::from_table(std::move(table)),
                   "table(" + path + ", order " + std::to_string(n) + ")"};
}

GroupSpec from_generators(const std::string& text) {
  std::vector<Perm> raw;
  std::size_t start = 0;
  int max_deg = 0;
  std::vector<std::string> parts;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string part = text.substr(start, semi == std::string::npos ? semi : semi - start);
    if (!part.empty()) parts.push_back(part);
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (parts.empty()) throw input_error("no generators in group spec");
  for (const auto& p : parts) {
    Perm g = Perm::from_cycles(p);
    max_deg = std::max(max_deg, g.degree());
  }
  std::vector<Perm> gens;
  for (const auto& p : parts) gens.push_back(Perm::from_cycles(p, max_deg));
  PermGroup pg(max_deg, gens);
  std::string norm;
  for (const Perm& g : pg.generators()) {
    if (!norm.empty()) norm += ";";
    norm += g.to_cycle_string();
  }
  return GroupSpec{AbstractGroup::from_perm_group(pg), "generated(" + norm + ")"};
}

int parse_suffix_int(const std::string& s, std::size_t from) {
  if (from >= s.size()) throw input_error("missing numeric part in group name: " + s);
  long v = 0;
  for (std::size_t i = from; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw input_error("bad group name: " + s);
    v = v * 10 + (s[i] - '0');
    if (v > 100000) throw input_error("group parameter out of range: " + s);
  }
  return static_cast<int>(v);
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw input_error("empty group spec");
  if (t[0] == '@') return from_table_file(t.substr(1));
  if (t[0] == '(') return from_generators(t);

  std::string up;
  for (char c : t) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::size_t num_at = 1;
  if (up.size() > 1 && up[1] == '_') num_at = 2;

  if (up == "V4" || up == "V") return {AbstractGroup::klein_four(), "V4"};
  if (up == "Q8" || up == "Q") return {AbstractGroup::quaternion8(), "Q8"};
  switch (up[0]) {
    case 'C': {
      int n = parse_suffix_int(up, num_at);
      if (n < 1 || n > AbstractGroup::kMaxOrder)
        throw input_error("cyclic group order must be in [1, 512]");
      return {AbstractGroup::cyclic(n), "C" + std::to_string(n)};
    }
    case 'D': {
      int n = parse_suffix_int(up, num_at);
      if (n < 3 || 2 * n > AbstractGroup::kMaxOrder)
        throw input_error("dihedral parameter must be in [3, 256]");
      return {AbstractGroup::dihedral(n), "D" + std::to_string(n)};
    }
    case 'S': {
      int n = parse_suffix_int(up, num_at);
      if (n < 1 || n > 5) throw input_error("symmetric group limited to S1..S5 (order cap 512)");
      return {AbstractGroup::symmetric(n), "S" + std::to_string(n)};
    }
    case 'A': {
      int n = parse_suffix_int(up, num_at);
      if (n < 1 || n > 6)
        throw input_error("alternating group limited to A1..A6 (order cap 512)");
      return {AbstractGroup::alternating(n), "A" + std::to_string(n)};
    }
    default:
      throw input_error("unrecognized group spec: " + text);
  }
}

}  // namespace minram
