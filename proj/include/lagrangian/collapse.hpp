#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lagrangian/biflats.hpp"
#include "lagrangian/simplicial_complex.hpp"

namespace lagrangian {

// One elementary collapse: tau is a free face, sigma its unique coface.
struct collapse_pair {
  std::vector<std::string> tau;
  std::vector<std::string> sigma;
};

struct collapse_sequence {
  std::string source;
  std::string target;
  std::vector<collapse_pair> pairs;
};

// Called for each pair as it is synthesized, so partial progress can be
// streamed to disk.
using pair_sink = std::function<void(const collapse_pair&)>;

// True iff tau and sigma are faces, sigma = tau plus one vertex, and sigma is
// the only face properly containing tau.
bool validate_pair(const simplicial_complex& c, const collapse_pair& p);

// Applies the pairs in order, validating freeness before each removal.
// Throws freeness_violation on the first invalid step.
simplicial_complex apply_sequence(const simplicial_complex& c,
                                  const collapse_sequence& seq);

// Collapse of a complex with cone vertex v down to {∅, {v}}: pairs
// (G, G ∪ {v}) for every nonempty face G avoiding v, largest first.
collapse_sequence cone_collapse_sequence(const simplicial_complex& c,
                                         const std::string& apex);

// Collapse of the open star of a face f whose link is coned at apex: the
// cone collapse of the link lifted by f, then the final pair (f, f ∪ {apex}).
collapse_sequence lifted_star_collapse(const simplicial_complex& c,
                                       const std::vector<std::string>& f,
                                       const std::string& apex);

// Removes a poset element x from an order complex. Requires the elements
// above x to have a unique minimal member, which cones the link of x.
collapse_sequence poset_element_collapse(const simplicial_complex& order_cx,
                                         const poset& p, const std::string& x);

// Collapses the biflats complex onto the unmixed biflats complex by deleting
// mixed biflats F|G stage by stage: flats by increasing corank, and for each
// flat its dual parts by increasing dual rank. Every deletion is a
// poset-element collapse with cone vertex E|G. Ends by verifying the result
// equals the unmixed complex.
collapse_sequence theorem1_sequence(const matroid& m, const pair_sink& sink = {});

// Collapses the biflats complex onto the conormal complex by removing the
// open star of each minimal bichain in a linear extension of the bichain order,
// using the cone vertex pairing the bichain's bottom flat with its second
// dual flat. Ends by verifying the result equals the conormal complex.
collapse_sequence theorem2_sequence(const matroid& m, const pair_sink& sink = {});

// Same, but with a caller-chosen processing order (must be a linear
// extension of the bichain order over exactly the minimal bichains).
collapse_sequence theorem2_sequence_with_order(const matroid& m,
                                               const std::vector<bichain>& order,
                                               const pair_sink& sink = {});

// Non-biflag bichains in which no flat or dual flat appears twice. Contains
// every inclusion-minimal non-biflag bichain (verified).
std::vector<bichain> minimal_bichains(const matroid& m);

// The partial order that schedules minimal-bichain removal: a precedes b when
// a's bottom biflat is strictly above b's, or bottoms agree and a's second
// biflat is strictly below b's, or a equals b.
bool bichain_precedes(const bichain& a, const bichain& b);

// Topological sort of the minimal bichains under bichain_precedes, ties
// broken lexicographically by label. Self-checks the relation.
std::vector<bichain> linear_extension(std::vector<bichain> chains);

std::string bichain_label(const bichain& c);

// File format: "collapse-seq <source> <target> <pair-count>" then one line
// per pair, "t1 + t2 ... -> s1 + s2 ...".
std::string to_sequence_file(const collapse_sequence& seq);
collapse_sequence parse_sequence_file(const std::string& text);

}  // namespace lagrangian
