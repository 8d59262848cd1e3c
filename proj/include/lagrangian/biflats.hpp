#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lagrangian/matroid.hpp"
#include "lagrangian/simplicial_complex.hpp"

namespace lagrangian {

// A biflat F|G: a flat of M and a flat of the dual, both nonempty, not both
// the ground set, with F ∪ G = E.
struct biflat {
  eset flat;  // F, a flat of M
  eset dual;  // G, a flat of M-dual

  friend bool operator==(const biflat& a, const biflat& b) {
    return a.flat == b.flat && a.dual == b.dual;
  }
};

// F|G <= F'|G'  iff  F ⊆ F' and G ⊇ G'.
inline bool biflat_leq(const biflat& a, const biflat& b) {
  return a.flat.subset_of(b.flat) && b.dual.subset_of(a.dual);
}
inline bool biflat_less(const biflat& a, const biflat& b) {
  return biflat_leq(a, b) && !(a == b);
}

// Canonical label, e.g. "1,2|3,4". No abbreviation for the ground set.
inline std::string biflat_label(const biflat& b) {
  return b.flat.label() + "|" + b.dual.label();
}

inline bool is_mixed(const biflat& b, eset ground) {
  return b.flat != ground && b.dual != ground;
}

// All biflats of m, sorted by canonical label. Requires m loopless (enforced
// at construction) and coloopless.
std::vector<biflat> enumerate_biflats(const matroid& m);

// The poset of biflats, or its restriction to the unmixed ones.
class biflat_poset {
 public:
  biflat_poset(const matroid& m, bool unmixed_only);

  const std::vector<biflat>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool less(std::size_t i, std::size_t j) const {
    return biflat_less(elements_[i], elements_[j]);
  }
  int index_of(const biflat& b) const;  // -1 if absent
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;
  poset to_poset() const;

 private:
  std::vector<biflat> elements_;  // sorted by label
};

inline biflat_poset unmixed_poset(const matroid& m) { return biflat_poset(m, true); }

simplicial_complex biflats_complex(const matroid& m);
simplicial_complex unmixed_complex(const matroid& m);

// A bichain: a chain in the biflat poset, stored ascending.
using bichain = std::vector<biflat>;

// Sorts by the biflat order and checks pairwise comparability.
bichain make_bichain(std::vector<biflat> biflats);

// A bichain is a biflag when the union of F ∩ G over its biflats is not E.
bool is_biflag(const matroid& m, const bichain& c);

// Equivalent test: padding the chain with ∅|E below and E|∅ above, some
// consecutive pair has F_j ∪ G_{j+1} != E.
bool gap_condition(const matroid& m, const bichain& c);

// Faces are the biflags; a subcomplex of the biflats complex by construction.
simplicial_complex conormal_complex(const matroid& m);

// Certified isomorphism between the unmixed biflats complex and the join of
// the two Bergman complexes. Vertices on the dual side of the join carry a
// trailing apostrophe so the two sides stay disjoint even when a flat and a
// dual flat coincide as sets.
struct join_isomorphism {
  simplicial_complex join_complex;
  std::vector<std::pair<std::string, std::string>> vertex_map;  // unmixed -> join
};
join_isomorphism unmixed_join_isomorphism(const matroid& m);

// True iff the matroid has no mixed biflats; cross-checked against the flat
// family of the uniform matroid of the same rank. Disagreement is a bug.
bool is_uniform(const matroid& m);

}  // namespace lagrangian
