#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "lagrangian/errors.hpp"
#include "lagrangian/matroid.hpp"

namespace lagrangian {

// A face is a sorted list of vertex ids (indices into a complex's vertex
// table). The empty face is {}.
using face = std::vector<std::uint16_t>;

struct face_hash {
  std::size_t operator()(const face& f) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint16_t v : f) h = (h ^ (v + 1)) * 0x100000001b3ull;
    return h;
  }
};

using face_set = std::unordered_set<face, face_hash>;

bool face_contains(const face& sup, const face& sub);
face face_union(const face& a, const face& b);
face face_minus(const face& a, const face& b);
face face_with(const face& f, std::uint16_t v);
face face_without(const face& f, std::uint16_t v);

// Finite simplicial complex over labeled vertices, stored as the explicit
// downward-closed face family (the empty face included). Vertex labels are
// kept in lexicographic order so every derived listing is deterministic.
class simplicial_complex {
 public:
  // The complex {∅}.
  simplicial_complex();

  // Builds a complex from faces over the given labels. Unused labels are
  // dropped and ids compacted; the face family must be downward closed.
  static simplicial_complex make(std::vector<std::string> labels, face_set faces);
  // Downward closure of the given faces (labels per face).
  static simplicial_complex from_facet_labels(
      const std::vector<std::vector<std::string>>& facets);

  const std::vector<std::string>& vertex_labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  const face_set& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }  // includes ∅
  bool has_face(const face& f) const { return faces_.count(f) != 0; }
  bool has_face_labels(const std::vector<std::string>& labels) const;
  int vertex_id(const std::string& label) const;  // -1 if absent

  std::vector<face> faces_sorted() const;
  std::vector<face> facets() const;  // inclusion-maximal faces, sorted
  std::vector<std::string> face_labels(const face& f) const;
  face face_from_labels(const std::vector<std::string>& labels) const;

  // f_vector()[i] counts i-dimensional faces; the empty face is not listed.
  std::vector<std::size_t> f_vector() const;
  long long euler_characteristic() const;  // alternating f-vector sum

  // The three size/shape queries below require a nonempty complex (at least
  // one vertex).
  int dimension() const;
  int max_facet_cardinality() const;
  bool is_pure() const;

  std::vector<face> minimal_nonfaces() const;
  bool is_flag() const;

  simplicial_complex link(const face& f) const;
  std::vector<face> open_star(const face& f) const;
  simplicial_complex deletion(const face& f) const;

  simplicial_complex relabeled(const std::string& suffix) const;

  // Equality as labeled face sets.
  friend bool operator==(const simplicial_complex& a, const simplicial_complex& b);

 private:
  std::vector<std::string> labels_;  // sorted, unique
  face_set faces_;
};

// Strict partial order on labeled elements.
class poset {
 public:
  // strict_pairs are (smaller, larger) label pairs; the relation is
  // transitively closed and then checked to be irreflexive and antisymmetric.
  poset(std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& strict_pairs);
  // Relation given directly as a matrix over the element order; validated.
  poset(std::vector<std::string> elements, std::vector<bool> less_matrix);

  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool less(std::size_t i, std::size_t j) const { return less_[i * elements_.size() + j]; }
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

 private:
  void validate() const;
  std::vector<std::string> elements_;
  std::vector<bool> less_;
};

// Faces are the chains of the poset.
simplicial_complex order_complex(const poset& p);

// All unions of a face of a with a face of b; vertex sets must be disjoint.
simplicial_complex join(const simplicial_complex& a, const simplicial_complex& b);

// Order complex of the proper nonempty flats.
simplicial_complex bergman_complex(const matroid& m);

// Export format: "complex <vertex-count> <facet-count>" then one facet per
// line, vertex labels space-separated. Facet lines are sorted.
std::string export_complex(const simplicial_complex& c);
simplicial_complex parse_complex(const std::string& text);

}  // namespace lagrangian
