#include "minram/abstract_group.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "minram/errors.hpp"

namespace minram {

namespace {

// Relabel so the identity sits at index 0.
std::vector<std::vector<int>> relabel_identity_first(std::vector<std::vector<int>> t, int id) {
  if (id == 0) return t;
  const int n = static_cast<int>(t.size());
  std::vector<int> to_new(n);
  for (int i = 0; i < n; ++i) to_new[i] = i;
  std::swap(to_new[0], to_new[id]);  // involution: also maps new -> old
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[a][b] = to_new[t[to_new[a]][to_new[b]]];
  return out;
}

}  // namespace

AbstractGroup AbstractGroup::from_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw input_error("empty multiplication table");
  if (n > kMaxOrder) throw resource_error("group table exceeds order 512");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw input_error("table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) throw input_error("table entry out of range");
  // Latin square.
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen_row[table[a][b]]++) throw input_error("repeated entry in table row");
      if (seen_col[table[b][a]]++) throw input_error("repeated entry in table column");
    }
  }
  // Two-sided identity.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw input_error("table has no identity element");
  // Associativity: full check when small, deterministic sample otherwise.
  auto check = [&](int a, int b, int c) {
    if (table[table[a][b]][c] != table[a][table[b][c]])
      throw input_error("table is not associative");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    // A fixed stride keeps the check deterministic and O(64^3).
    const int step = (n + 63) / 64;
    for (int a = 0; a < n; a += step)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; c += step) check(a, b, c);
  }
  AbstractGroup g;
  g.t_ = relabel_identity_first(std::move(table), id);
  g.finish();
  return g;
}

void AbstractGroup::finish() {
  const int n = order();
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t_[a][b] == 0) {
        inv_[a] = b;
        break;
      }
  for (int a = 0; a < n; ++a)
    if (inv_[a] < 0) throw input_error("table element without inverse");
}

AbstractGroup AbstractGroup::trivial() {
  AbstractGroup g;
  g.t_ = {{0}};
  g.finish();
  return g;
}

AbstractGroup AbstractGroup::cyclic(int n) {
  if (n < 1 || n > kMaxOrder) throw input_error("cyclic order out of range");
  AbstractGroup g;
  g.t_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.t_[a][b] = (a + b) % n;
  g.finish();
  return g;
}

AbstractGroup AbstractGroup::dihedral(int n) {
  if (n < 3 || 2 * n > kMaxOrder) throw input_error("dihedral parameter out of range");
  return from_perm_group(PermGroup::dihedral(n));
}

AbstractGroup AbstractGroup::klein_four() { return from_perm_group(PermGroup::klein_four()); }

AbstractGroup AbstractGroup::quaternion8() {
  // i -> (1 2 3 4)(5 6 7 8), j -> (1 5 3 7)(2 8 4 6): the regular action.
  Perm i = Perm::from_cycles("(1 2 3 4)(5 6 7 8)");
  Perm j = Perm::from_cycles("(1 5 3 7)(2 8 4 6)");
  return from_perm_group(PermGroup(8, {i, j}));
}

AbstractGroup AbstractGroup::symmetric(int n) {
  if (n < 1) throw input_error("symmetric group needs n >= 1");
  return from_perm_group(PermGroup::symmetric(n));
}

AbstractGroup AbstractGroup::alternating(int n) {
  if (n < 1) throw input_error("alternating group needs n >= 1");
  return from_perm_group(PermGroup::alternating(n));
}

AbstractGroup AbstractGroup::from_perm_group(const PermGroup& G) {
  if (G.order() > static_cast<unsigned long>(kMaxOrder))
    throw resource_error("group exceeds order 512");
  std::vector<Perm> elems = G.elements();
  std::sort(elems.begin(), elems.end());  // identity is lex-least
  const int n = static_cast<int>(elems.size());
  std::unordered_map<std::size_t, std::vector<int>> index;
  for (int i = 0; i < n; ++i) index[elems[i].hash()].push_back(i);
  auto find = [&](const Perm& p) {
    for (int i : index.at(p.hash()))
      if (elems[i] == p) return i;
    throw error("product escaped the element list");
  };
  AbstractGroup g;
  g.t_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.t_[a][b] = find(elems[a] * elems[b]);
  g.finish();
  return g;
}

int AbstractGroup::element_order(int a) const {
  if (a < 0 || a >= order()) throw input_error("element out of range");
  int ord = 1;
  int x = a;
  while (x != 0) {
    x = t_[x][a];
    ++ord;
  }
  return ord;
}

bool AbstractGroup::is_abelian() const {
  const int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (t_[a][b] != t_[b][a]) return false;
  return true;
}

int AbstractGroup::center_size() const {
  const int n = order();
  int count = 0;
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n && central; ++b) central = t_[a][b] == t_[b][a];
    if (central) ++count;
  }
  return count;
}

std::vector<int> AbstractGroup::element_order_multiset() const {
  std::vector<int> orders;
  orders.reserve(order());
  for (int a = 0; a < order(); ++a) orders.push_back(element_order(a));
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<int> AbstractGroup::conjugacy_class_sizes() const {
  const int n = order();
  std::vector<char> seen(n, 0);
  std::vector<int> sizes;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    int size = 0;
    for (int g = 0; g < n; ++g) {
      int c = t_[t_[g][a]][inv_[g]];
      if (!seen[c]) {
        seen[c] = 1;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::string AbstractGroup::invariant_key() const {
  std::ostringstream os;
  os << order() << (is_abelian() ? "a" : "n") << "z" << center_size() << "|";
  for (int o : element_order_multiset()) os << o << ",";
  os << "|";
  for (int s : conjugacy_class_sizes()) os << s << ",";
  return os.str();
}

namespace {

// Greedy generating sequence: repeatedly adjoin the least element outside the
// closure of those chosen so far.
std::vector<int> generating_sequence(const AbstractGroup& g,
                                     std::vector<std::vector<int>>* closures) {
  const int n = g.order();
  std::vector<int> gens;
  std::vector<char> in(n, 0);
  in[0] = 1;
  std::vector<int> members{0};
  while (static_cast<int>(members.size()) < n) {
    int next = 0;
    while (in[next]) ++next;
    gens.push_back(next);
    in[next] = 1;
    members.push_back(next);
    // Right-multiplication BFS by the generators closes the subgroup:
    // inverses are positive powers in a finite group.
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int x : gens) {
        int c = g.mul(members[i], x);
        if (!in[c]) {
          in[c] = 1;
          members.push_back(c);
        }
      }
    if (closures) closures->push_back(members);
  }
  return gens;
}

}  // namespace

std::optional<std::vector<int>> AbstractGroup::isomorphism_to(const AbstractGroup& other) const {
  if (order() != other.order()) return std::nullopt;
  if (invariant_key() != other.invariant_key()) return std::nullopt;
  const int n = order();

  std::vector<std::vector<int>> closures;
  std::vector<int> gens = generating_sequence(*this, &closures);

  // phi: partial map, -1 unknown. Extend generator by generator; images are
  // forced on each closure by the homomorphism property, with consistency
  // checked along the way. The full n^2 verification runs at the end.
  std::vector<int> phi(n, -1);
  phi[0] = 0;
  std::vector<int> other_order_of(n);
  for (int a = 0; a < n; ++a) other_order_of[a] = other.element_order(a);

  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (phi[t_[a][b]] != other.mul(phi[a], phi[b])) return false;
      return true;
    }
    const int g = gens[k];
    const int g_ord = element_order(g);
    const std::vector<int>& target_members = closures[k];
    std::vector<int> phi_backup = phi;
    for (int y = 0; y < n; ++y) {
      if (other_order_of[y] != g_ord) continue;
      phi = phi_backup;
      phi[g] = y;
      // Propagate over the closure via BFS: every member is a product of two
      // earlier-known members once the list is scanned repeatedly.
      bool consistent = true;
      bool progress = true;
      while (progress && consistent) {
        progress = false;
        for (int a : target_members) {
          if (!consistent) break;
          if (phi[a] == -1) continue;
          for (int b : target_members) {
            if (phi[b] == -1) continue;
            int ab = t_[a][b];
            int img = other.mul(phi[a], phi[b]);
            if (phi[ab] == -1) {
              phi[ab] = img;
              progress = true;
            } else if (phi[ab] != img) {
              consistent = false;
              break;
            }
          }
        }
      }
      if (!consistent) continue;
      // Injectivity on the mapped part.
      std::vector<char> used(n, 0);
      bool inj = true;
      for (int a : target_members) {
        if (phi[a] == -1) {
          inj = false;  // closure must be fully determined
          break;
        }
        if (used[phi[a]]++) {
          inj = false;
          break;
        }
      }
      if (!inj) continue;
      if (extend(k + 1)) return true;
    }
    phi = phi_backup;
    return false;
  };
  if (extend(0)) return phi;
  return std::nullopt;
}

bool AbstractGroup::is_isomorphic_to(const AbstractGroup& other) const {
  return isomorphism_to(other).has_value();
}

std::string AbstractGroup::describe() const {
  const int n = order();
  if (n == 1) return "C1";
  // Cyclic.
  for (int a = 0; a < n; ++a)
    if (element_order(a) == n) return "C" + std::to_string(n);
  if (n == 4) return "C2 x C2";
  if (n == 8 && is_isomorphic_to(quaternion8())) return "Q8";
  if (n % 2 == 0 && n >= 6 && n <= 2 * kMaxOrder) {
    int half = n / 2;
    if (half >= 3 && n <= kMaxOrder && is_isomorphic_to(dihedral(half)))
      return "D" + std::to_string(half);
  }
  if (n == 12 && is_isomorphic_to(alternating(4))) return "A4";
  if (n == 24 && is_isomorphic_to(symmetric(4))) return "S4";
  if (n == 60 && is_isomorphic_to(alternating(5))) return "A5";
  if (n == 120 && is_isomorphic_to(symmetric(5))) return "S5";
  if (n == 360 && is_isomorphic_to(alternating(6))) return "A6";
  // Elementary abelian p-groups.
  if (is_abelian()) {
    auto orders = element_order_multiset();
    int p = orders[1];
    bool elem = true;
    for (std::size_t i = 1; i < orders.size(); ++i) elem = elem && orders[i] == p;
    if (elem) {
      int k = 0;
      for (int m = n; m > 1; m /= p) ++k;
      return "C" + std::to_string(p) + "^" + std::to_string(k);
    }
    return "abelian order " + std::to_string(n);
  }
  // Holomorphs of C_p arising as normalizer quotients: C_p with its full
  // affine group, F_(p(p-1)) = AGL(1, p), plus the index-2 subgroup F20's kin.
  struct Affine {
    int size;
    int p;
    int mult_order;
  };
  const Affine affine[] = {{20, 5, 4}, {21, 7, 3}, {42, 7, 6}, {55, 11, 5}, {110, 11, 10}};
  for (const auto& a : affine) {
    if (n != a.size) continue;
    // Build C_p : C_mult_order as permutations of Z/p.
    std::vector<int> shift(a.p), mult(a.p);
    int u = 2;
    for (; u < a.p; ++u) {
      // Need an element of the exact multiplicative order.
      int x = 1, o = 0;
      do {
        x = x * u % a.p;
        ++o;
      } while (x != 1);
      if (o == a.mult_order) break;
    }
    for (int i = 0; i < a.p; ++i) {
      shift[i] = (i + 1) % a.p;
      mult[i] = i * u % a.p;
    }
    PermGroup frob(a.p, {Perm(shift), Perm(mult)});
    if (is_isomorphic_to(from_perm_group(frob))) return "F" + std::to_string(n);
  }
  return "order " + std::to_string(n);
}

AbstractGroup quotient_group(const PermGroup& N, const PermGroup& H) {
  if (N.degree() != H.degree()) throw input_error("degree mismatch");
  if (!H.is_subgroup_of(N)) throw input_error("quotient needs H <= N");
  if (!H.is_normal_in(N)) throw input_error("quotient needs H normal in N");
  BigInt index = N.order() / H.order();
  if (index > AbstractGroup::kMaxOrder) throw resource_error("quotient exceeds order 512");

  std::vector<Perm> elems = N.elements();
  std::sort(elems.begin(), elems.end());
  std::vector<Perm> h_elems = H.elements();

  std::unordered_map<std::size_t, std::vector<int>> index_of;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    index_of[elems[i].hash()].push_back(i);
  auto find = [&](const Perm& p) {
    for (int i : index_of.at(p.hash()))
      if (elems[i] == p) return i;
    throw error("coset product escaped the group");
  };

  const int m = static_cast<int>(elems.size());
  std::vector<int> coset(m, -1);
  std::vector<int> reps;
  for (int i = 0; i < m; ++i) {
    if (coset[i] != -1) continue;
    int label = static_cast<int>(reps.size());
    reps.push_back(i);
    for (const Perm& h : h_elems) coset[find(elems[i] * h)] = label;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) table[a][b] = coset[find(elems[reps[a]] * elems[reps[b]])];
  return AbstractGroup::from_table(std::move(table));
}

}  // namespace minram
