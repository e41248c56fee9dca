#include "minram/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "minram/errors.hpp"

namespace minram {

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw input_error("edge endpoint out of range: (" + std::to_string(u) + ", " +
                      std::to_string(v) + ") with " + std::to_string(n) + " vertices");
  if (u == v) throw input_error("loops are not allowed in a simple graph");
  if (u > v) std::swap(u, v);
  auto e = std::make_pair(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it != edges.end() && *it == e)
    throw verification_error("duplicate edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
  edges.insert(it, e);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::string SimpleGraph::serialize() const {
  std::ostringstream out;
  out << n << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

// Elements reachable from the identity by right multiplication.
std::vector<char> closure(const AbstractGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
  std::vector<int> queue{0};
  in[0] = 1;
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int s : gens) {
      int y = G.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return in;
}

bool generates(const AbstractGroup& G, const std::vector<int>& gens) {
  auto in = closure(G, gens);
  return std::all_of(in.begin(), in.end(), [](char c) { return c != 0; });
}

}  // namespace

std::vector<int> default_generating_set(const AbstractGroup& G) {
  std::vector<int> candidates(static_cast<std::size_t>(G.order()) - 1);
  std::iota(candidates.begin(), candidates.end(), 1);
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    return G.element_order(a) > G.element_order(b);
  });

  std::vector<int> gens;
  std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
  in[0] = 1;
  for (int c : candidates) {
    if (in[c]) continue;
    gens.push_back(c);
    in = closure(G, gens);
    if (std::all_of(in.begin(), in.end(), [](char x) { return x != 0; })) break;
  }
  return gens;
}

SimpleGraph frucht_graph(const AbstractGroup& G, const std::vector<int>& generators) {
  const int order = G.order();
  for (int s : generators) {
    if (s <= 0 || s >= order)
      throw input_error("generator label out of range: " + std::to_string(s));
    if (std::count(generators.begin(), generators.end(), s) > 1)
      throw input_error("duplicate generator: " + std::to_string(s));
  }
  if (!generates(G, generators))
    throw input_error("the given set does not generate the group");

  SimpleGraph g;
  if (order == 1) {
    g.n = 1;
    return g;
  }
  if (order == 2) {
    // Gadgets on two vertices pick up extra symmetry; the 5-vertex path has
    // automorphism group C2 exactly.
    g.n = 5;
    for (int i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
    return g;
  }

  int total = order;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    int len = 2 * static_cast<int>(k) + 1;
    if (G.inverse(generators[k]) == generators[k])
      total += (order / 2) * (1 + len);
    else
      total += order * (2 + len + (len + 1));
  }
  g.n = total;

  int next = order;
  auto pendant_path = [&](int from, int length) {
    for (int i = 0; i < length; ++i) {
      g.add_edge(from, next);
      from = next++;
    }
  };

  for (std::size_t k = 0; k < generators.size(); ++k) {
    const int s = generators[k];
    const int tail_len = 2 * static_cast<int>(k) + 1;
    if (G.inverse(s) == s) {
      for (int u = 0; u < order; ++u) {
        int v = G.mul(u, s);
        if (u >= v) continue;
        int w = next++;
        g.add_edge(u, w);
        g.add_edge(w, v);
        pendant_path(w, tail_len);
      }
    } else {
      for (int u = 0; u < order; ++u) {
        int v = G.mul(u, s);
        int a = next++;
        int b = next++;
        g.add_edge(u, a);
        g.add_edge(a, b);
        g.add_edge(b, v);
        pendant_path(a, tail_len);
        pendant_path(b, tail_len + 1);
      }
    }
  }
  if (next != total) throw verification_error("gadget vertex count mismatch");
  return g;
}

SimpleGraph frucht_graph(const AbstractGroup& G) {
  return frucht_graph(G, default_generating_set(G));
}

namespace {

// One pass of neighborhood color refinement; returns true when the
// partition changed. New color ids follow the sorted signature order, so
// the refinement is independent of vertex numbering artifacts.
bool refine_once(const std::vector<std::vector<int>>& adj, std::vector<int>& color) {
  const std::size_t n = adj.size();
  std::vector<std::pair<std::vector<int>, int>> sig(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> s;
    s.reserve(adj[v].size() + 1);
    s.push_back(color[v]);
    for (int w : adj[v]) s.push_back(color[w]);
    std::sort(s.begin() + 1, s.end());
    sig[v] = {std::move(s), static_cast<int>(v)};
  }
  std::vector<std::pair<std::vector<int>, int>> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::vector<int>, int> id;
  for (const auto& [s, v] : sorted)
    id.emplace(s, static_cast<int>(id.size()));
  bool changed = false;
  for (std::size_t v = 0; v < n; ++v) {
    int c = id[sig[v].first];
    if (c != color[v]) changed = true;
    color[v] = c;
  }
  return changed;
}

}  // namespace

PermGroup graph_automorphisms(const SimpleGraph& g, int vertex_budget) {
  if (g.n > vertex_budget)
    throw resource_error("graph has " + std::to_string(g.n) +
                         " vertices, over the automorphism budget of " +
                         std::to_string(vertex_budget));
  if (g.n == 0) return PermGroup(0);

  const int n = g.n;
  auto adj = g.adjacency();
  std::vector<std::vector<char>> mat(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : g.edges) mat[u][v] = mat[v][u] = 1;

  std::vector<int> color(n, 0);
  for (int v = 0; v < n; ++v) color[v] = static_cast<int>(adj[v].size());
  while (refine_once(adj, color)) {
  }

  std::vector<int> class_size(n, 0);
  for (int v = 0; v < n; ++v) ++class_size[color[v]];

  // Assignment order: most-placed-neighbors first, then smallest color
  // class, then id. Keeps the search anchored to already-fixed vertices.
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> placed(n, 0);
  std::vector<int> placed_neighbors(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == -1 || placed_neighbors[v] > placed_neighbors[best] ||
          (placed_neighbors[v] == placed_neighbors[best] &&
           (class_size[color[v]] < class_size[color[best]] ||
            (class_size[color[v]] == class_size[color[best]] && v < best))))
        best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (int w : adj[best]) ++placed_neighbors[w];
  }

  constexpr std::size_t kEnumerationCap = 1u << 20;
  std::vector<Perm> autos;
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);

  auto search = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      if (autos.size() >= kEnumerationCap)
        throw resource_error("automorphism enumeration exceeded the internal cap");
      autos.emplace_back(img);
      return;
    }
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || color[w] != color[v]) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) {
        int u = order[j];
        if (mat[v][u] != mat[w][img[u]]) ok = false;
      }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      self(self, depth + 1);
      used[w] = 0;
      img[v] = -1;
    }
  };
  search(search, 0);

  PermGroup aut(n, autos);
  if (aut.order() != BigInt(static_cast<unsigned long>(autos.size())))
    throw verification_error("automorphism set is not closed");
  return aut;
}

std::vector<std::pair<std::string, AbstractGroup>> frucht_catalog() {
  std::vector<std::pair<std::string, AbstractGroup>> cat;
  for (int k = 1; k <= 12; ++k)
    cat.emplace_back("C" + std::to_string(k), AbstractGroup::cyclic(k));
  cat.emplace_back("V4", AbstractGroup::klein_four());
  cat.emplace_back("Q8", AbstractGroup::quaternion8());
  for (int k = 3; k <= 6; ++k)
    cat.emplace_back("D" + std::to_string(k), AbstractGroup::dihedral(k));
  cat.emplace_back("A4", AbstractGroup::alternating(4));
  return cat;
}

}  // namespace minram
