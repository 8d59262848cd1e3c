#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lagrangian/errors.hpp"
#include "lagrangian/eset.hpp"

namespace lagrangian {

// A matroid given by its ground-set size and the full list of flats.
// Construction validates the flat axioms:
//   * the empty set and the ground set are flats,
//   * the family is closed under pairwise intersection,
//   * for every flat F the minimal flats strictly above F partition E \ F,
//   * rank increases by exactly one along cover relations.
// The first axiom rules out loops (the closure of the empty set must be
// empty). Coloops are permitted by validation; operations that require a
// coloopless matroid check for them explicitly.
class matroid {
 public:
  matroid(int n, std::vector<eset> flats);

  int ground_size() const { return n_; }
  eset ground() const { return eset::full(n_); }
  const std::vector<eset>& flats() const { return flats_; }
  bool is_flat(eset s) const { return index_.count(s.bits()) != 0; }

  // Intersection of all flats containing s.
  eset closure(eset s) const;
  // Lattice height of closure(s).
  int rank(eset s) const;
  int rank() const { return rank_; }
  int corank(eset flat) const { return rank_ - rank(flat); }

  int dual_rank() const { return n_ - rank_; }
  int dual_rank_of(eset s) const { return s.size() + rank(ground() - s) - rank_; }
  eset dual_closure(eset s) const;

  // Elements e with rank(E \ {e}) < rank(E); empty iff the dual is loopless.
  std::vector<int> coloops() const;
  bool has_coloops() const { return !coloops().empty(); }
  void require_coloopless() const;

  // Dual matroid. Requires the matroid to be coloopless, otherwise the dual
  // would have loops and no valid flat family.
  matroid dual() const;

  friend bool operator==(const matroid& a, const matroid& b) {
    return a.n_ == b.n_ && a.flats_ == b.flats_;
  }

 private:
  int rank_index(std::size_t i) const { return ranks_[i]; }
  void validate();

  int n_ = 0;
  int rank_ = 0;
  std::vector<eset> flats_;                       // sorted by (size, mask)
  std::vector<int> ranks_;                        // parallel to flats_
  std::unordered_map<std::uint64_t, int> index_;  // mask -> flat index
};

// Flats ordered by rank, with cover relations of the lattice of flats.
struct flat_lattice {
  std::vector<eset> flats;                     // sorted by (rank, mask)
  std::vector<int> ranks;                      // parallel to flats
  std::vector<std::pair<int, int>> covers;     // (lower index, upper index)
  int matroid_rank = 0;

  int rank_of(eset f) const;
  int corank_of(eset f) const { return matroid_rank - rank_of(f); }
};

flat_lattice flats_lattice(const matroid& m);

// Uniform matroid U_{r,n}: flats are all subsets of size < r, plus E.
// Requires 1 <= r <= n-1 so the result is loopless and coloopless.
matroid uniform(int r, int n);

struct graph_edge {
  int id;
  std::string u;
  std::string v;
};

// Cycle matroid of a multigraph. Edge ids must be exactly 1..n. Rejects
// graphs whose matroid has loops (self-loops) or coloops (bridges).
matroid from_graph(const std::vector<graph_edge>& edges);

// Text formats (line based, '#' starts a comment):
//   matroid file:  "ground <n>" then one "flat e1 e2 ..." line per flat
//                  (a bare "flat" is the empty flat)
//   graph file:    "graph" then "edge <id> <u> <v>" lines
matroid parse_matroid(const std::string& text);
std::vector<graph_edge> parse_graph(const std::string& text);
// Dispatches on the leading keyword ("ground" or "graph").
matroid parse_matroid_or_graph(const std::string& text);

std::string to_matroid_file(const matroid& m);

}  // namespace lagrangian
