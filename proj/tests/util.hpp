#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lagrangian/biflats.hpp"
#include "lagrangian/matroid.hpp"
#include "lagrangian/simplicial_complex.hpp"

namespace testutil {

inline std::string read_fixture(const std::string& name) {
  std::string path = std::string(LAGRANGIAN_FIXTURES) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing fixture ", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline lagrangian::matroid fixture(const std::string& name) {
  return lagrangian::parse_matroid(read_fixture(name + ".matroid"));
}

// Random loopless, coloopless graphic matroid with at most max_edges edges.
inline lagrangian::matroid random_graphic(std::mt19937& rng, int max_edges) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::uniform_int_distribution<int> nv_dist(3, 5);
    int nv = nv_dist(rng);
    std::uniform_int_distribution<int> ne_dist(3, max_edges);
    int ne = ne_dist(rng);
    std::vector<lagrangian::graph_edge> edges;
    std::uniform_int_distribution<int> v_dist(0, nv - 1);
    for (int i = 1; i <= ne; ++i) {
      int u = v_dist(rng), v = v_dist(rng);
      while (v == u) v = v_dist(rng);
      edges.push_back({i, "v" + std::to_string(u), "v" + std::to_string(v)});
    }
    try {
      return lagrangian::from_graph(edges);
    } catch (const lagrangian::error&) {
      continue;  // coloop, retry
    }
  }
  throw std::runtime_error("could not sample a coloopless graphic matroid");
}

// Random bichain (possibly empty): greedy pass over a shuffled biflat list.
inline lagrangian::bichain random_bichain(std::mt19937& rng, const lagrangian::matroid& m) {
  auto biflats = lagrangian::enumerate_biflats(m);
  std::shuffle(biflats.begin(), biflats.end(), rng);
  std::vector<lagrangian::biflat> chosen;
  std::uniform_int_distribution<int> len_dist(0, static_cast<int>(m.ground_size()));
  int want = len_dist(rng);
  for (const auto& b : biflats) {
    if (static_cast<int>(chosen.size()) >= want) break;
    bool comparable = true;
    for (const auto& c : chosen)
      if (!lagrangian::biflat_leq(b, c) && !lagrangian::biflat_leq(c, b)) {
        comparable = false;
        break;
      }
    if (comparable) chosen.push_back(b);
  }
  return lagrangian::make_bichain(std::move(chosen));
}

// Random small complex: a handful of random facets, closed downward.
inline lagrangian::simplicial_complex random_complex(std::mt19937& rng, int max_vertices,
                                                     const std::string& prefix = "v") {
  std::uniform_int_distribution<int> nv_dist(1, max_vertices);
  int nv = nv_dist(rng);
  std::uniform_int_distribution<int> nf_dist(1, 6);
  std::uniform_int_distribution<int> size_dist(1, 4);
  std::uniform_int_distribution<int> v_dist(0, nv - 1);
  std::vector<std::vector<std::string>> facets;
  int nf = nf_dist(rng);
  for (int i = 0; i < nf; ++i) {
    std::vector<std::string> f;
    int sz = size_dist(rng);
    for (int j = 0; j < sz; ++j) f.push_back(prefix + std::to_string(v_dist(rng)));
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    facets.push_back(std::move(f));
  }
  return lagrangian::simplicial_complex::from_facet_labels(facets);
}

}  // namespace testutil
