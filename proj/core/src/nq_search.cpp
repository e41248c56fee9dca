#include "minram/nq_search.hpp"

#include <algorithm>
#include <chrono>

#include "minram/errors.hpp"
#include "minram/subgroups.hpp"

namespace minram {

namespace {

std::vector<std::vector<int>> sorted_element_images(const PermGroup& g) {
  std::vector<Perm> elems = g.elements();
  std::sort(elems.begin(), elems.end());
  std::vector<std::vector<int>> out;
  out.reserve(elems.size());
  for (const Perm& p : elems) out.push_back(p.images());
  return out;
}

}  // namespace

NqSearchResult find_normalizer_quotients(const AbstractGroup& G, int n_min, int n_max,
                                         long budget_ms) {
  if (n_min < 2 || n_max < n_min) throw input_error("need 2 <= n_min <= n_max");
  if (n_max > 7) throw resource_error("subgroup classes beyond S_7 are out of budget");
  const auto t0 = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (budget_ms <= 0) return false;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    return ms > budget_ms;
  };

  NqSearchResult result;
  const BigInt target = G.order();
  for (int n = n_min; n <= n_max; ++n) {
    if (out_of_time()) {
      result.budget_exhausted = true;
      return result;
    }
    std::vector<NqHit> level;
    for (char kind : {'S', 'A'}) {
      const PermGroup gamma =
          kind == 'S' ? PermGroup::symmetric(n) : PermGroup::alternating(n);
      if (gamma.order() == 1 && kind == 'A') continue;  // degenerate A_1, A_2
      for (PermGroup& h : subgroup_class_reps(gamma)) {
        PermGroup norm = normalizer(gamma, h);
        if (norm.order() / h.order() != target) continue;
        AbstractGroup quotient = quotient_group(norm, h);
        if (!G.is_isomorphic_to(quotient)) continue;
        if (n <= 8) {
          PermGroup oracle = normalizer_exhaustive(gamma, h);
          if (oracle.order() != norm.order())
            throw verification_error("backtracking normalizer disagrees with exhaustive scan");
          for (const Perm& g : norm.generators())
            if (!oracle.contains(g))
              throw verification_error("backtracking normalizer disagrees with exhaustive scan");
        }
        NqHit hit;
        hit.n = n;
        hit.gamma_kind = kind;
        hit.gamma_index = gamma.order() / h.order();
        hit.gamma = gamma;
        hit.normalizer_group = std::move(norm);
        hit.quotient_name = quotient.describe();
        hit.quotient = std::move(quotient);
        hit.h = std::move(h);
        level.push_back(std::move(hit));
      }
    }
    std::sort(level.begin(), level.end(), [](const NqHit& a, const NqHit& b) {
      if (a.gamma_index != b.gamma_index) return a.gamma_index < b.gamma_index;
      if (a.gamma_kind != b.gamma_kind) return a.gamma_kind == 'S';
      return sorted_element_images(a.h) < sorted_element_images(b.h);
    });
    for (auto& hit : level) result.hits.push_back(std::move(hit));
    result.last_completed_n = n;
  }
  return result;
}

NqHit special_case_an_minus_1(int n) {
  if (n < 5) throw input_error("the A_(n-1) special case needs n >= 5");
  PermGroup gamma = PermGroup::symmetric(n);
  std::vector<Perm> h_gens;
  for (const Perm& g : PermGroup::alternating(n - 1).generators())
    h_gens.push_back(g.extended(n));
  PermGroup h(n, h_gens);
  std::vector<Perm> n_gens;
  for (const Perm& g : PermGroup::symmetric(n - 1).generators())
    n_gens.push_back(g.extended(n));
  PermGroup norm(n, n_gens);

  NqHit hit;
  hit.n = n;
  hit.gamma_kind = 'S';
  hit.gamma_index = gamma.order() / h.order();
  hit.quotient = quotient_group(norm, h);
  hit.quotient_name = hit.quotient.describe();
  hit.gamma = std::move(gamma);
  hit.h = std::move(h);
  hit.normalizer_group = std::move(norm);
  return hit;
}

}  // namespace minram
