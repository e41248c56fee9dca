#include "minram/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "minram/errors.hpp"

namespace minram {

namespace {

bool is_prime_power(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true;  // prime
}

// Element-index workspace over the full element list of G.
struct Workspace {
  int degree = 0;
  std::vector<Perm> elems;  // sorted by image vector; index 0 is the identity
  std::unordered_map<std::uint64_t, int> index;
  std::vector<int> order_of;
  std::vector<int> candidates;  // canonical prime-power generators, ascending

  explicit Workspace(const PermGroup& G) : degree(G.degree()) {
    if (degree > 16) throw resource_error("subgroup enumeration limited to degree 16");
    elems = G.elements(5040);
    std::sort(elems.begin(), elems.end());
    index.reserve(elems.size() * 2);
    for (int i = 0; i < static_cast<int>(elems.size()); ++i)
      index.emplace(elems[i].packed(), i);
    order_of.resize(elems.size());
    for (int i = 0; i < static_cast<int>(elems.size()); ++i)
      order_of[i] = static_cast<int>(elems[i].order());
    // x qualifies when ord(x) is a prime power and x is the least element of
    // its cyclic group among the generators of that group.
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
      if (!is_prime_power(order_of[i])) continue;
      int least = i;
      Perm pw = elems[i];
      for (int k = 2; k < order_of[i]; ++k) {
        pw = pw * elems[i];
        if (std::gcd(k, order_of[i]) == 1) least = std::min(least, index.at(pw.packed()));
      }
      if (least == i) candidates.push_back(i);
    }
  }

  int size() const { return static_cast<int>(elems.size()); }

  int mul(int a, int b) const { return index.at((elems[a] * elems[b]).packed()); }

  int conj(int a, const Perm& g) const {
    return index.at((g * elems[a] * g.inverse()).packed());
  }

  // Closure of `seed` (which must contain 0) under right-multiplication by
  // gens, as a sorted index list.
  std::vector<int> closure(const std::vector<int>& seed, const std::vector<int>& gens) const {
    std::vector<char> in(elems.size(), 0);
    std::vector<int> members = seed;
    for (int m : members) in[m] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int g : gens) {
        int c = mul(members[i], g);
        if (!in[c]) {
          in[c] = 1;
          members.push_back(c);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  }

  PermGroup to_group(const std::vector<int>& gens) const {
    std::vector<Perm> perms;
    perms.reserve(gens.size());
    for (int g : gens) perms.push_back(elems[g]);
    return PermGroup(degree, perms);
  }

  // Conjugation-invariant fingerprint: order plus the multiset of cycle types.
  std::string bucket_key(const std::vector<int>& members) const {
    std::map<std::vector<int>, int> types;
    for (int m : members) ++types[elems[m].cycle_type()];
    std::string key = std::to_string(members.size()) + ":";
    for (const auto& [t, c] : types) {
      for (int x : t) key += std::to_string(x) + ".";
      key += "x" + std::to_string(c) + ";";
    }
    return key;
  }
};

std::uint64_t hash_members(const std::vector<int>& members) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int m : members) {
    h ^= static_cast<std::uint64_t>(m) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Record {
  std::vector<int> members;  // sorted
  std::vector<int> gens;
};

std::vector<PermGroup> finalize(const Workspace& ws, std::vector<Record> records) {
  std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  std::vector<PermGroup> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(ws.to_group(r.gens));
  return out;
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& G) {
  if (G.order() > 720) throw resource_error("full subgroup enumeration limited to order 720");
  Workspace ws(G);

  std::unordered_map<std::uint64_t, std::vector<int>> seen;  // hash -> record ids
  std::vector<Record> records;
  auto lookup_or_add = [&](std::vector<int> members, std::vector<int> gens) -> int {
    std::uint64_t h = hash_members(members);
    for (int id : seen[h])
      if (records[id].members == members) return -1;
    seen[h].push_back(static_cast<int>(records.size()));
    records.push_back(Record{std::move(members), std::move(gens)});
    return static_cast<int>(records.size()) - 1;
  };

  lookup_or_add({0}, {});
  std::vector<int> work{0};
  for (std::size_t wi = 0; wi < work.size(); ++wi) {
    // Copy: records may reallocate while extending.
    const Record rec = records[work[wi]];
    std::vector<char> in(ws.size(), 0);
    for (int m : rec.members) in[m] = 1;
    for (int x : ws.candidates) {
      if (in[x]) continue;
      std::vector<int> gens = rec.gens;
      gens.push_back(x);
      std::vector<int> closed = ws.closure(rec.members, gens);
      int id = lookup_or_add(std::move(closed), std::move(gens));
      if (id >= 0) work.push_back(id);
    }
  }
  return finalize(ws, std::move(records));
}

std::vector<PermGroup> subgroup_class_reps(const PermGroup& G) {
  if (G.order() > 5040)
    throw resource_error("subgroup class enumeration limited to order 5040");
  Workspace ws(G);

  struct ClassRec {
    Record rec;
    PermGroup group;
    std::string key;
  };
  std::vector<ClassRec> classes;
  // Every distinct subgroup met so far, mapped to its class (or -1 while the
  // class test is pending); avoids repeated conjugacy work.
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::vector<int>, int>>> seen;

  auto find_seen = [&](const std::vector<int>& members) -> int* {
    auto& bucket = seen[hash_members(members)];
    for (auto& [m, cls] : bucket)
      if (m == members) return &cls;
    return nullptr;
  };

  auto classify = [&](std::vector<int> members, std::vector<int> gens) -> int {
    if (int* cls = find_seen(members)) return *cls;
    PermGroup pg = ws.to_group(gens);
    std::string key = ws.bucket_key(members);
    int found = -1;
    for (int ci = 0; ci < static_cast<int>(classes.size()); ++ci) {
      if (classes[ci].key != key) continue;
      if (are_conjugate(G, pg, classes[ci].group)) {
        found = ci;
        break;
      }
    }
    if (found == -1) {
      found = static_cast<int>(classes.size());
      classes.push_back(ClassRec{Record{members, std::move(gens)}, std::move(pg), std::move(key)});
    }
    seen[hash_members(members)].emplace_back(std::move(members), found);
    return found;
  };

  classify({0}, {});
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const Record rec = classes[ci].rec;  // copy: classes grows during the loop
    PermGroup N = normalizer(G, classes[ci].group);

    std::vector<char> in(ws.size(), 0);
    for (int m : rec.members) in[m] = 1;
    // One candidate per N-conjugation orbit: conjugate extensions of a
    // normalizer-stable K give conjugate subgroups.
    std::vector<char> orbit_seen(ws.size(), 0);
    for (int x : ws.candidates) {
      if (in[x] || orbit_seen[x]) continue;
      std::vector<int> orbit{x};
      orbit_seen[x] = 1;
      for (std::size_t oi = 0; oi < orbit.size(); ++oi)
        for (const Perm& g : N.generators()) {
          int c = ws.conj(orbit[oi], g);
          if (!orbit_seen[c]) {
            orbit_seen[c] = 1;
            orbit.push_back(c);
          }
        }
      std::vector<int> gens = rec.gens;
      gens.push_back(x);
      std::vector<int> closed = ws.closure(rec.members, gens);
      classify(std::move(closed), std::move(gens));
    }
  }

  std::vector<Record> records;
  records.reserve(classes.size());
  for (auto& c : classes) records.push_back(std::move(c.rec));
  return finalize(ws, std::move(records));
}

}  // namespace minram
