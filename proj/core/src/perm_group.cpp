#include "minram/perm_group.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "minram/errors.hpp"

namespace minram {

PermGroup::PermGroup(int degree) : degree_(degree) {
  if (degree < 0) throw input_error("negative degree");
}

PermGroup::PermGroup(int degree, const std::vector<Perm>& generators) : degree_(degree) {
  if (degree < 0) throw input_error("negative degree");
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw input_error("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
  }
  build(gens_);
}

PermGroup PermGroup::symmetric(int n) {
  if (n < 1) throw input_error("symmetric group needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    gens.emplace_back(std::move(cyc));
    gens.push_back(Perm::transposition(n, 0, 1));
  }
  return PermGroup(n, gens);
}

PermGroup PermGroup::alternating(int n) {
  if (n < 1) throw input_error("alternating group needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 3) {
    // 3-cycle (1 2 3) and, for n > 3, an n- or (n-1)-cycle of even parity.
    std::vector<int> c3(n);
    for (int i = 0; i < n; ++i) c3[i] = i;
    c3[0] = 1;
    c3[1] = 2;
    c3[2] = 0;
    gens.emplace_back(std::move(c3));
    if (n > 3) {
      std::vector<int> img(n);
      if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;  // n-cycle, even for odd n
      } else {
        img[0] = 0;
        for (int i = 1; i < n; ++i) img[i] = i % (n - 1) + 1;  // (n-1)-cycle on 2..n
      }
      gens.emplace_back(std::move(img));
    }
  }
  return PermGroup(n, gens);
}

PermGroup PermGroup::cyclic(int n) {
  if (n < 1) throw input_error("cyclic group needs n >= 1");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return PermGroup(n, {Perm(std::move(img))});
}

PermGroup PermGroup::dihedral(int n) {
  if (n < 3) throw input_error("dihedral group needs n >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

PermGroup PermGroup::klein_four() {
  return PermGroup(4, {Perm::from_cycles("(1 2)(3 4)"), Perm::from_cycles("(1 3)(2 4)")});
}

void PermGroup::build(const std::vector<Perm>& input_gens) {
  levels_.clear();
  for (const Perm& g : input_gens) {
    auto [h, j] = strip(g, 0);
    if (h.is_identity()) continue;
    add_strong_generator(h, 0, j);
    for (std::size_t l = j + 1; l-- > 0;) complete_level(l);
  }
  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<unsigned long>(lv.orbit.size());
}

void PermGroup::add_strong_generator(const Perm& h, std::size_t first, std::size_t last) {
  if (last == levels_.size()) {
    Level lv;
    lv.base = h.smallest_moved_point();
    levels_.push_back(std::move(lv));
  }
  for (std::size_t l = first; l <= last; ++l) levels_[l].gens.push_back(h);
}

void PermGroup::recompute_orbit(std::size_t i) {
  Level& lv = levels_[i];
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit.push_back(lv.base);
  lv.transversal.emplace(lv.base, Perm::identity(degree_));
  for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
    int pt = lv.orbit[idx];
    for (const Perm& g : lv.gens) {
      int np = g(pt);
      if (!lv.transversal.count(np)) {
        lv.transversal.emplace(np, g * lv.transversal.at(pt));
        lv.orbit.push_back(np);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    int x = g(levels_[j].base);
    auto it = levels_[j].transversal.find(x);
    if (it == levels_[j].transversal.end()) return {std::move(g), j};
    if (x != levels_[j].base) g = it->second.inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

// Verify every Schreier generator of level i sifts to the identity through
// the deeper chain, extending the chain as residues appear. levels_ may
// reallocate inside the loop, so it is re-indexed on every access.
void PermGroup::complete_level(std::size_t i) {
  recompute_orbit(i);
  for (std::size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
    const std::size_t gen_count = levels_[i].gens.size();
    for (std::size_t gi = 0; gi < gen_count; ++gi) {
      const int pt = levels_[i].orbit[oi];
      const Perm g = levels_[i].gens[gi];
      Perm s = levels_[i].transversal.at(g(pt)).inverse() * g * levels_[i].transversal.at(pt);
      if (s.is_identity()) continue;
      auto [h, j] = strip(std::move(s), i + 1);
      if (h.is_identity()) continue;
      add_strong_generator(h, i + 1, j);
      for (std::size_t l = j + 1; l-- > i + 1;) complete_level(l);
    }
  }
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).is_identity();
}

Perm PermGroup::sift(const Perm& g) const {
  if (g.degree() != degree_) throw input_error("degree mismatch in sift");
  return strip(g, 0).first;
}

bool PermGroup::is_subgroup_of(const PermGroup& super) const {
  if (degree_ != super.degree_) return false;
  for (const Perm& g : gens_)
    if (!super.contains(g)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& super) const {
  if (!is_subgroup_of(super)) return false;
  for (const Perm& s : super.gens_)
    for (const Perm& h : gens_)
      if (!contains(conjugate(h, s))) return false;
  return true;
}

std::vector<int> PermGroup::orbit_of(int point) const {
  if (point < 0 || point >= degree_) throw input_error("point out of range");
  std::vector<int> orb{point};
  std::vector<char> seen(degree_, 0);
  seen[point] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const Perm& g : gens_) {
      int np = g(orb[i]);
      if (!seen[np]) {
        seen[np] = 1;
        orb.push_back(np);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree_, 0);
  for (int p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit_of(p);
    for (int x : orb) seen[x] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ > 0 && orbits().size() == 1; }

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  if (order_ > static_cast<unsigned long>(cap))
    throw resource_error("group too large to enumerate");
  std::vector<Perm> out;
  out.reserve(order_.get_ui());
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t i, const Perm& acc) {
    if (i == levels_.size()) {
      out.push_back(acc);
      return;
    }
    for (int pt : levels_[i].orbit) rec(i + 1, acc * levels_[i].transversal.at(pt));
  };
  rec(0, Perm::identity(degree_));
  return out;
}

namespace {

// Orbit id per point under H, plus orbit sizes, for normalizer pruning.
struct OrbitIndex {
  std::vector<int> id;      // point -> orbit index
  std::vector<int> size;    // orbit index -> size
};

OrbitIndex orbit_index(const PermGroup& H) {
  OrbitIndex oi;
  oi.id.assign(H.degree(), -1);
  for (const auto& orb : H.orbits()) {
    for (int p : orb) oi.id[p] = static_cast<int>(oi.size.size());
    oi.size.push_back(static_cast<int>(orb.size()));
  }
  return oi;
}

// DFS over the elements of G via its chain, assigning base images one level
// at a time. `prune` sees (level, partial coset rep t); `leaf` consumes a
// fully determined element and returns false to stop the search.
bool backtrack_elements(const PermGroup& G, std::size_t i, const Perm& t,
                        const std::function<bool(std::size_t, const Perm&)>& prune,
                        const std::function<bool(const Perm&)>& leaf) {
  if (i == G.chain().size()) return leaf(t);
  const auto& lv = G.chain()[i];
  for (int pt : lv.orbit) {
    Perm next = t * lv.transversal.at(pt);
    if (!prune(i, next)) continue;
    if (!backtrack_elements(G, i + 1, next, prune, leaf)) return false;
  }
  return true;
}

}  // namespace

PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
  if (G.degree() != H.degree()) throw input_error("degree mismatch");
  // Elements of G already known to normalize H; grown as found. Sifting new
  // candidates against this subgroup skips cosets already covered.
  std::vector<Perm> found;
  for (const Perm& h : H.generators()) found.push_back(h);
  PermGroup N(G.degree(), found);

  const OrbitIndex oi = orbit_index(H);
  // g normalizes H iff it permutes H-orbits (necessary), verified exactly at
  // the leaves. The prune checks the partial orbit map on assigned base
  // points: well-defined, injective, and size-preserving.
  auto prune = [&](std::size_t level, const Perm& t) {
    std::vector<int> omap(oi.size.size(), -1);
    std::vector<char> hit(oi.size.size(), 0);
    for (std::size_t l = 0; l <= level; ++l) {
      int b = G.chain()[l].base;
      int src = oi.id[b];
      int dst = oi.id[t(b)];
      if (oi.size[src] != oi.size[dst]) return false;
      if (omap[src] == -1) {
        if (hit[dst]) return false;
        omap[src] = dst;
        hit[dst] = 1;
      } else if (omap[src] != dst) {
        return false;
      }
    }
    return true;
  };
  auto leaf = [&](const Perm& g) {
    if (N.contains(g)) return true;
    for (const Perm& h : H.generators())
      if (!H.contains(conjugate(h, g))) return true;
    Perm gi = g.inverse();
    for (const Perm& h : H.generators())
      if (!H.contains(conjugate(h, gi))) return true;
    found.push_back(g);
    N = PermGroup(G.degree(), found);
    return true;
  };
  backtrack_elements(G, 0, Perm::identity(G.degree()), prune, leaf);
  return N;
}

PermGroup normalizer_exhaustive(const PermGroup& G, const PermGroup& H) {
  if (G.degree() != H.degree()) throw input_error("degree mismatch");
  if (G.degree() > 8) throw resource_error("exhaustive normalizer limited to degree 8");
  std::vector<Perm> found;
  for (const Perm& g : G.elements()) {
    bool ok = true;
    for (const Perm& h : H.generators())
      if (!H.contains(conjugate(h, g))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Perm gi = g.inverse();
    for (const Perm& h : H.generators())
      if (!H.contains(conjugate(h, gi))) {
        ok = false;
        break;
      }
    if (ok) found.push_back(g);
  }
  return PermGroup(G.degree(), found);
}

std::optional<Perm> conjugating_element(const PermGroup& G, const PermGroup& A,
                                        const PermGroup& B) {
  if (G.degree() != A.degree() || G.degree() != B.degree())
    throw input_error("degree mismatch");
  if (A.order() != B.order()) return std::nullopt;

  const OrbitIndex oa = orbit_index(A);
  const OrbitIndex ob = orbit_index(B);
  {
    // Orbit size multisets must agree.
    std::vector<int> sa = oa.size, sb = ob.size;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  auto prune = [&](std::size_t level, const Perm& t) {
    std::vector<int> omap(oa.size.size(), -1);
    std::vector<char> hit(ob.size.size(), 0);
    for (std::size_t l = 0; l <= level; ++l) {
      int b = G.chain()[l].base;
      int src = oa.id[b];
      int dst = ob.id[t(b)];
      if (oa.size[src] != ob.size[dst]) return false;
      if (omap[src] == -1) {
        if (hit[dst]) return false;
        omap[src] = dst;
        hit[dst] = 1;
      } else if (omap[src] != dst) {
        return false;
      }
    }
    return true;
  };
  std::optional<Perm> witness;
  auto leaf = [&](const Perm& g) {
    for (const Perm& a : A.generators())
      if (!B.contains(conjugate(a, g))) return true;
    // |A| == |B| and gAg^-1 <= B forces equality.
    witness = g;
    return false;
  };
  backtrack_elements(G, 0, Perm::identity(G.degree()), prune, leaf);
  return witness;
}

bool are_conjugate(const PermGroup& G, const PermGroup& A, const PermGroup& B) {
  return conjugating_element(G, A, B).has_value();
}

}  // namespace minram
