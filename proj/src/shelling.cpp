#include "lagrangian/shelling.hpp"

#include <algorithm>
#include <unordered_set>

namespace lagrangian {

std::string to_string(shelling_status s) {
  switch (s) {
    case shelling_status::shellable: return "SHELLABLE";
    case shelling_status::not_shellable: return "NOT-SHELLABLE";
    default: return "UNKNOWN";
  }
}

namespace {

struct budget_exhausted {};

struct word_set_hash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t x : w) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

struct shelling_search {
  const std::vector<face>& facets;
  std::size_t t;
  std::size_t words;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  // ok[j * t + i]: bitset over k of "facet k rescues facet i against
  // candidate j", i.e. |F_k ∩ F_j| = |F_j| - 1 and F_i ∩ F_j ⊆ F_k ∩ F_j.
  std::vector<std::vector<std::uint64_t>> ok;
  std::unordered_set<std::vector<std::uint64_t>, word_set_hash> dead;
  std::vector<std::size_t> order;

  shelling_search(const std::vector<face>& fs, std::uint64_t b)
      : facets(fs), t(fs.size()), words((fs.size() + 63) / 64), budget(b) {
    std::vector<std::vector<face>> inter(t, std::vector<face>(t));
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        face x;
        std::set_intersection(facets[i].begin(), facets[i].end(), facets[j].begin(),
                              facets[j].end(), std::back_inserter(x));
        inter[i][j] = std::move(x);
      }
    ok.assign(t * t, std::vector<std::uint64_t>(words, 0));
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t k = 0; k < t; ++k)
          if (k != j && inter[k][j].size() + 1 == facets[j].size() &&
              face_contains(inter[k][j], inter[i][j]))
            ok[j * t + i][k >> 6] |= 1ull << (k & 63);
  }

  bool can_place(std::size_t j, const std::vector<std::uint64_t>& placed) const {
    for (std::size_t i = 0; i < t; ++i) {
      if (!((placed[i >> 6] >> (i & 63)) & 1)) continue;
      const auto& mask = ok[j * t + i];
      bool rescued = false;
      for (std::size_t w = 0; w < words && !rescued; ++w)
        if (mask[w] & placed[w]) rescued = true;
      if (!rescued) return false;
    }
    return true;
  }

  // Bounds memo memory on long refutation runs; the search stays correct,
  // only slower, once the table stops growing.
  static constexpr std::size_t max_dead_entries = 1 << 21;

  bool dfs(std::vector<std::uint64_t>& placed, std::size_t depth) {
    if (depth == t) return true;
    if (++nodes > budget) throw budget_exhausted{};
    if (dead.count(placed)) return false;
    for (std::size_t j = 0; j < t; ++j) {
      if ((placed[j >> 6] >> (j & 63)) & 1) continue;
      if (!can_place(j, placed)) continue;
      placed[j >> 6] |= 1ull << (j & 63);
      order.push_back(j);
      if (dfs(placed, depth + 1)) return true;
      order.pop_back();
      placed[j >> 6] &= ~(1ull << (j & 63));
    }
    if (dead.size() < max_dead_entries) dead.insert(placed);
    return false;
  }
};

}  // namespace

shelling_certificate is_shellable(const simplicial_complex& c, std::uint64_t budget) {
  if (c.vertex_count() == 0) throw error("shellability of an empty complex");

  std::vector<face> facets = c.facets();
  // Search non-pure orders with larger facets offered first; any order may
  // be tried, this is only the exploration heuristic.
  std::sort(facets.begin(), facets.end(), [&](const face& a, const face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return c.face_labels(a) < c.face_labels(b);
  });

  shelling_certificate cert;
  cert.budget = budget;

  // Memory guard for the precomputed rescue masks.
  std::size_t t = facets.size();
  if (t * t * ((t + 63) / 64) > (std::size_t{1} << 25)) {
    cert.status = shelling_status::unknown;
    return cert;
  }

  shelling_search search(facets, budget);
  std::vector<std::uint64_t> placed((t + 63) / 64, 0);
  try {
    if (search.dfs(placed, 0)) {
      cert.status = shelling_status::shellable;
      for (std::size_t j : search.order) cert.order.push_back(c.face_labels(facets[j]));
      if (!verify_shelling(c, cert.order))
        throw internal_error("search produced an order the verifier rejects");
    } else {
      cert.status = shelling_status::not_shellable;
    }
  } catch (const budget_exhausted&) {
    cert.status = shelling_status::unknown;
  }
  cert.nodes_used = search.nodes;
  return cert;
}

bool verify_shelling(const simplicial_complex& c,
                     const std::vector<std::vector<std::string>>& order) {
  std::vector<face> expected = c.facets();
  std::vector<face> got;
  got.reserve(order.size());
  for (const auto& labels : order) got.push_back(c.face_from_labels(labels));
  auto key = [](const face& a, const face& b) { return a < b; };
  std::vector<face> a = expected, b = got;
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  if (a != b) return false;

  for (std::size_t j = 1; j < got.size(); ++j) {
    std::vector<std::vector<std::string>> pieces;
    pieces.reserve(j);
    bool any_vertex = false;
    for (std::size_t i = 0; i < j; ++i) {
      face x;
      std::set_intersection(got[i].begin(), got[i].end(), got[j].begin(), got[j].end(),
                            std::back_inserter(x));
      if (!x.empty()) any_vertex = true;
      pieces.push_back(c.face_labels(x));
    }
    if (!any_vertex) {
      // The intersection complex is {∅}; it only counts as pure of dimension
      // |F_j| - 2 when the new facet is a single vertex.
      if (got[j].size() != 1) return false;
      continue;
    }
    simplicial_complex meet = simplicial_complex::from_facet_labels(pieces);
    if (!meet.is_pure()) return false;
    if (meet.max_facet_cardinality() != static_cast<int>(got[j].size()) - 1) return false;
  }
  return true;
}

}  // namespace lagrangian
