#include "minram/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "minram/errors.hpp"

namespace minram {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
      throw input_error("permutation images are not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(int degree) {
  if (degree < 0) throw input_error("negative degree");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw parse_error("empty cycle string", i);
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw parse_error("expected '('", i);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i == text.size()) throw parse_error("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected point number", i);
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw parse_error("point out of range", i);
        ++i;
      }
      if (v < 1) throw parse_error("points are 1-based", i);
      cyc.push_back(static_cast<int>(v - 1));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  skip_ws();
  if (i != text.size()) throw parse_error("trailing characters", i);

  int max_pt = -1;
  for (const auto& c : cycles)
    for (int p : c) max_pt = std::max(max_pt, p);
  int deg = degree > 0 ? degree : max_pt + 1;
  if (max_pt >= deg) throw input_error("cycle point exceeds degree");

  Perm acc = identity(deg);
  for (const auto& c : cycles) {
    std::vector<char> seen(deg, 0);
    for (int p : c) {
      if (seen[p]) throw input_error("repeated point within a cycle");
      seen[p] = 1;
    }
    std::vector<int> img(deg);
    std::iota(img.begin(), img.end(), 0);
    for (std::size_t k = 0; k < c.size(); ++k) img[c[k]] = c[(k + 1) % c.size()];
    Perm cyc;
    cyc.img_ = std::move(img);
    acc = acc * cyc;
  }
  return acc;
}

Perm Perm::transposition(int degree, int a, int b) {
  Perm p = identity(degree);
  if (a < 0 || b < 0 || a >= degree || b >= degree || a == b)
    throw input_error("bad transposition points");
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw input_error("degree mismatch in composition");
  Perm r;
  r.img_.resize(a.img_.size());
  for (std::size_t x = 0; x < r.img_.size(); ++x) r.img_[x] = a.img_[b.img_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<int>(x);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

long Perm::order() const {
  long ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, static_cast<long>(len));
  return ord;
}

int Perm::parity_sign() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<char> seen(img_.size(), 0);
  std::vector<int> lens;
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int x = static_cast<int>(s); !seen[x]; x = img_[x]) {
      seen[x] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

int Perm::smallest_moved_point() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return static_cast<int>(x);
  return -1;
}

Perm Perm::extended(int new_degree) const {
  if (new_degree < degree()) throw input_error("cannot shrink a permutation");
  Perm r = identity(new_degree);
  std::copy(img_.begin(), img_.end(), r.img_.begin());
  return r;
}

std::uint64_t Perm::packed() const {
  if (degree() > 16) throw error("packed form needs degree <= 16");
  std::uint64_t code = 0;
  for (std::size_t x = 0; x < img_.size(); ++x)
    code |= static_cast<std::uint64_t>(img_[x]) << (4 * x);
  return code;
}

Perm Perm::unpacked(std::uint64_t code, int degree) {
  std::vector<int> img(degree);
  for (int x = 0; x < degree; ++x) img[x] = static_cast<int>((code >> (4 * x)) & 0xf);
  return Perm(std::move(img));
}

std::size_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : img_) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string Perm::to_cycle_string() const {
  std::vector<char> seen(img_.size(), 0);
  std::string s;
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (seen[start] || img_[start] == static_cast<int>(start)) continue;
    s += "(";
    bool first = true;
    for (int x = static_cast<int>(start); !seen[x]; x = img_[x]) {
      seen[x] = 1;
      if (!first) s += " ";
      s += std::to_string(x + 1);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm conjugate(const Perm& a, const Perm& g) { return g * a * g.inverse(); }

}  // namespace minram
