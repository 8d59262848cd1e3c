#include "lagrangian/collapse.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace lagrangian {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += " + ";
    out += l;
  }
  return out;
}

bool face_size_lex_less(const face& a, const face& b) {
  if (a.size() != b.size()) return a.size() > b.size();  // larger first
  return a < b;
}

// Mutable face family over a fixed vertex table; collapse pairs are applied
// against it with freeness validation.
struct working_complex {
  explicit working_complex(const simplicial_complex& c)
      : labels(c.vertex_labels()), faces(c.faces()) {}

  std::vector<std::string> labels;
  face_set faces;
  std::size_t step = 0;

  std::uint16_t id_of(const std::string& label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
      throw error("unknown vertex label '" + label + "'");
    return static_cast<std::uint16_t>(it - labels.begin());
  }

  face face_of(const std::vector<std::string>& ls) const {
    face f;
    f.reserve(ls.size());
    for (const auto& l : ls) f.push_back(id_of(l));
    std::sort(f.begin(), f.end());
    return f;
  }

  std::vector<std::string> labels_of(const face& f) const {
    std::vector<std::string> out;
    out.reserve(f.size());
    for (std::uint16_t v : f) out.push_back(labels[v]);
    return out;
  }

  // Faces of size |f|+1 containing f. By downward closure, f is free with
  // unique coface sigma exactly when this list is {sigma}.
  std::vector<face> extensions(const face& f) const {
    std::vector<face> out;
    for (std::uint16_t v = 0; v < labels.size(); ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      face g = face_with(f, v);
      if (faces.count(g)) out.push_back(std::move(g));
    }
    return out;
  }

  // All faces containing f, found by growing one vertex at a time.
  std::vector<face> star(const face& f) const {
    face_set seen;
    std::vector<face> stack{f};
    seen.insert(f);
    while (!stack.empty()) {
      face g = std::move(stack.back());
      stack.pop_back();
      for (std::uint16_t v = 0; v < labels.size(); ++v) {
        if (std::binary_search(g.begin(), g.end(), v)) continue;
        face h = face_with(g, v);
        if (faces.count(h) && seen.insert(h).second) stack.push_back(std::move(h));
      }
    }
    std::vector<face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), face_size_lex_less);
    return out;
  }

  void apply_pair(const face& tau, const face& sigma) {
    ++step;
    if (!faces.count(tau))
      throw error("collapse step " + std::to_string(step) + ": tau {" +
                  join_labels(labels_of(tau)) + "} is not a face");
    if (!faces.count(sigma))
      throw error("collapse step " + std::to_string(step) + ": sigma {" +
                  join_labels(labels_of(sigma)) + "} is not a face");
    if (sigma.size() != tau.size() + 1 || !face_contains(sigma, tau))
      throw error("collapse step " + std::to_string(step) +
                  ": sigma must be tau plus one vertex");
    for (const face& g : extensions(tau))
      if (g != sigma) throw freeness_violation(step, join_labels(labels_of(g)));
    faces.erase(tau);
    faces.erase(sigma);
  }

  simplicial_complex to_complex() const {
    return simplicial_complex::make(labels, faces);
  }
};

struct sequence_builder {
  collapse_sequence seq;
  pair_sink sink;

  void add(working_complex& wc, const face& tau, const face& sigma) {
    collapse_pair p{wc.labels_of(tau), wc.labels_of(sigma)};
    wc.apply_pair(tau, sigma);
    if (sink) sink(p);
    seq.pairs.push_back(std::move(p));
  }
};

// The theorem pipelines use poset indices as complex vertex ids; both sides
// are sorted by canonical label, which this asserts.
void require_aligned(const working_complex& wc, const biflat_poset& bp) {
  if (wc.labels.size() != bp.size())
    throw internal_error("complex and poset disagree on the vertex count");
  for (std::size_t i = 0; i < bp.size(); ++i)
    if (wc.labels[i] != biflat_label(bp.elements()[i]))
      throw internal_error("complex vertex order diverges from the poset order");
}

// Removes the open star of f, whose link must be coned at apex v: the cone
// collapse of the link lifted by f, then the closing pair (f, f ∪ {v}).
void collapse_star(working_complex& wc, sequence_builder& out, const face& f,
                   std::uint16_t v) {
  if (f.empty()) throw error("star collapse needs a nonempty face");
  auto star = wc.star(f);
  face_set link;
  for (const face& g : star) link.insert(face_minus(g, f));
  face apex{v};
  if (!link.count(apex))
    throw error("'" + wc.labels[v] + "' is not in the link of {" +
                join_labels(wc.labels_of(f)) + "}");
  std::vector<face> to_pair;
  for (const face& l : link) {
    if (std::binary_search(l.begin(), l.end(), v)) continue;
    if (!link.count(face_with(l, v)))
      throw internal_error("'" + wc.labels[v] + "' is not a cone vertex of the link of {" +
                           join_labels(wc.labels_of(f)) + "}");
    if (!l.empty()) to_pair.push_back(l);
  }
  std::sort(to_pair.begin(), to_pair.end(), face_size_lex_less);
  for (const face& l : to_pair) {
    face tau = face_union(f, l);
    out.add(wc, tau, face_with(tau, v));
  }
  out.add(wc, f, face_with(f, v));
}

}  // namespace

bool validate_pair(const simplicial_complex& c, const collapse_pair& p) {
  for (const auto& l : p.tau)
    if (c.vertex_id(l) < 0) return false;
  for (const auto& l : p.sigma)
    if (c.vertex_id(l) < 0) return false;
  face tau = c.face_from_labels(p.tau);
  face sigma = c.face_from_labels(p.sigma);
  if (!c.has_face(tau) || !c.has_face(sigma)) return false;
  if (sigma.size() != tau.size() + 1 || !face_contains(sigma, tau)) return false;
  for (std::uint16_t v = 0; v < c.vertex_count(); ++v) {
    if (std::binary_search(tau.begin(), tau.end(), v)) continue;
    face g = face_with(tau, v);
    if (c.has_face(g) && g != sigma) return false;
  }
  return true;
}

simplicial_complex apply_sequence(const simplicial_complex& c,
                                  const collapse_sequence& seq) {
  working_complex wc(c);
  for (const collapse_pair& p : seq.pairs)
    wc.apply_pair(wc.face_of(p.tau), wc.face_of(p.sigma));
  return wc.to_complex();
}

collapse_sequence cone_collapse_sequence(const simplicial_complex& c,
                                         const std::string& apex) {
  working_complex wc(c);
  std::uint16_t v = wc.id_of(apex);
  if (!wc.faces.count(face{v})) throw error("apex '" + apex + "' is not a vertex face");
  std::vector<face> to_pair;
  for (const face& f : wc.faces) {
    if (std::binary_search(f.begin(), f.end(), v)) continue;
    if (!wc.faces.count(face_with(f, v)))
      throw error("'" + apex + "' is not a cone vertex: some facet avoids it");
    if (!f.empty()) to_pair.push_back(f);
  }
  std::sort(to_pair.begin(), to_pair.end(), face_size_lex_less);
  sequence_builder out{{"complex", "cone", {}}, {}};
  for (const face& f : to_pair) out.add(wc, f, face_with(f, v));
  if (wc.faces.size() != 2)
    throw internal_error("cone collapse did not end at {∅, apex}");
  return std::move(out.seq);
}

collapse_sequence lifted_star_collapse(const simplicial_complex& c,
                                       const std::vector<std::string>& f,
                                       const std::string& apex) {
  working_complex wc(c);
  sequence_builder out{{"complex", "deletion", {}}, {}};
  face ff = wc.face_of(f);
  if (!wc.faces.count(ff))
    throw error("{" + join_labels(f) + "} is not a face");
  collapse_star(wc, out, ff, wc.id_of(apex));
  return std::move(out.seq);
}

collapse_sequence poset_element_collapse(const simplicial_complex& order_cx,
                                         const poset& p, const std::string& x) {
  std::size_t xi = p.size();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.elements()[i] == x) xi = i;
  if (xi == p.size()) throw error("'" + x + "' is not a poset element");

  std::vector<std::size_t> above;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p.less(xi, j)) above.push_back(j);
  std::vector<std::size_t> minimal;
  for (std::size_t j : above) {
    bool is_min = true;
    for (std::size_t k : above)
      if (k != j && p.less(k, j)) is_min = false;
    if (is_min) minimal.push_back(j);
  }
  if (minimal.size() != 1)
    throw error("elements above '" + x + "' have " + std::to_string(minimal.size()) +
                " minimal members, need exactly one");
  return lifted_star_collapse(order_cx, {x}, p.elements()[minimal.front()]);
}

collapse_sequence theorem1_sequence(const matroid& m, const pair_sink& sink) {
  matroid md = m.dual();
  eset ground = m.ground();
  biflat_poset bp(m, false);
  working_complex wc(biflats_complex(m));
  require_aligned(wc, bp);
  sequence_builder out{{"biflats", "unmixed", {}}, sink};

  std::vector<bool> present(bp.size(), true);
  auto vertex_of = [&](const biflat& b) {
    int i = bp.index_of(b);
    if (i < 0) throw internal_error("biflat " + biflat_label(b) + " not in the poset");
    return static_cast<std::uint16_t>(i);
  };

  std::vector<eset> flats_by_label = m.flats();
  std::sort(flats_by_label.begin(), flats_by_label.end(),
            [](eset a, eset b) { return a.label() < b.label(); });
  std::vector<eset> duals_by_label = md.flats();
  std::sort(duals_by_label.begin(), duals_by_label.end(),
            [](eset a, eset b) { return a.label() < b.label(); });

  for (int k = 1; k <= m.rank() - 1; ++k) {
    for (eset f0 : flats_by_label) {
      if (f0.empty() || f0 == ground || m.corank(f0) != k) continue;
      int r0 = md.rank(ground - f0);
      for (int l = 0; l + r0 <= md.rank() - 1; ++l) {
        for (eset g : duals_by_label) {
          if (md.rank(g) != l + r0 || (f0 | g) != ground) continue;
          biflat x{f0, g};
          std::uint16_t xv = vertex_of(x);

          // The elements above x in the current poset must have the unique
          // minimal member E|G.
          std::uint16_t cone = vertex_of(biflat{ground, g});
          for (std::size_t j = 0; j < bp.size(); ++j) {
            if (!present[j] || !bp.less(xv, j) || j == cone) continue;
            if (!bp.less(cone, j))
              throw internal_error("element " + biflat_label(bp.elements()[j]) +
                                   " above " + biflat_label(x) +
                                   " is not above the cone vertex " +
                                   biflat_label(bp.elements()[cone]));
          }

          collapse_star(wc, out, face{xv}, cone);
          present[xv] = false;
        }
      }
    }
    // Stage invariant: the surviving vertices are the biflats minus the
    // mixed ones whose flat has corank at most k.
    for (std::size_t i = 0; i < bp.size(); ++i) {
      const biflat& b = bp.elements()[i];
      bool expect = !is_mixed(b, ground) || m.corank(b.flat) > k;
      if (present[i] != expect)
        throw internal_error("stage " + std::to_string(k) + ": vertex set mismatch at " +
                             biflat_label(b));
      if (wc.faces.count(face{static_cast<std::uint16_t>(i)}) != expect)
        throw internal_error("stage " + std::to_string(k) + ": complex vertex mismatch at " +
                             biflat_label(b));
    }
  }

  if (!(wc.to_complex() == unmixed_complex(m)))
    throw internal_error("collapse did not end at the unmixed biflats complex");
  return std::move(out.seq);
}

std::string bichain_label(const bichain& c) {
  std::string out;
  for (const biflat& b : c) {
    if (!out.empty()) out += " < ";
    out += biflat_label(b);
  }
  return out;
}

std::vector<bichain> minimal_bichains(const matroid& m) {
  biflat_poset bp(m, false);
  simplicial_complex cx = biflats_complex(m);
  for (std::size_t i = 0; i < bp.size(); ++i)
    if (cx.vertex_labels()[i] != biflat_label(bp.elements()[i]))
      throw internal_error("complex vertex order diverges from the poset order");

  std::vector<bichain> non_biflags;
  for (const face& f : cx.faces()) {
    if (f.empty()) continue;
    std::vector<biflat> part;
    part.reserve(f.size());
    for (std::uint16_t v : f) part.push_back(bp.elements()[v]);
    bichain c = make_bichain(std::move(part));
    if (!is_biflag(m, c)) non_biflags.push_back(std::move(c));
  }

  std::vector<bichain> out;
  for (const bichain& c : non_biflags) {
    // Flats increase and dual flats decrease along a bichain, so a repeat
    // shows up between neighbours.
    bool repeated = false;
    for (std::size_t i = 0; i + 1 < c.size() && !repeated; ++i)
      if (c[i].flat == c[i + 1].flat || c[i].dual == c[i + 1].dual) repeated = true;
    if (!repeated) out.push_back(c);
  }

  // Safety net: every inclusion-minimal non-biflag bichain must be included.
  auto contains_chain = [](const bichain& big, const bichain& small) {
    for (const biflat& b : small)
      if (std::find(big.begin(), big.end(), b) == big.end()) return false;
    return true;
  };
  for (const bichain& c : non_biflags) {
    bool minimal = true;
    for (const bichain& d : non_biflags)
      if (d.size() < c.size() && contains_chain(c, d)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    bool found = false;
    for (const bichain& d : out)
      if (d == c) {
        found = true;
        break;
      }
    if (!found)
      throw internal_error("inclusion-minimal non-biflag bichain missing: " +
                           bichain_label(c));
  }

  std::sort(out.begin(), out.end(), [](const bichain& a, const bichain& b) {
    return bichain_label(a) < bichain_label(b);
  });
  return out;
}

bool bichain_precedes(const bichain& a, const bichain& b) {
  if (a == b) return true;
  if (a.size() < 2 || b.size() < 2)
    throw error("bichain order is defined on minimal bichains (length >= 2)");
  if (biflat_less(b.front(), a.front())) return true;
  if (a.front() == b.front() && biflat_less(a[1], b[1])) return true;
  return false;
}

std::vector<bichain> linear_extension(std::vector<bichain> chains) {
  std::size_t n = chains.size();
  // The relation must be a partial order on this set.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && bichain_precedes(chains[i], chains[j]) &&
          bichain_precedes(chains[j], chains[i]))
        throw internal_error("bichain order is not antisymmetric between " +
                             bichain_label(chains[i]) + " and " + bichain_label(chains[j]));
      for (std::size_t k = 0; k < n; ++k)
        if (bichain_precedes(chains[i], chains[j]) &&
            bichain_precedes(chains[j], chains[k]) &&
            !bichain_precedes(chains[i], chains[k]))
          throw internal_error("bichain order is not transitive");
    }

  std::vector<bool> done(n, false);
  std::vector<bichain> out;
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      bool ready = true;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && j != i && bichain_precedes(chains[j], chains[i])) ready = false;
      if (!ready) continue;
      if (best == n || bichain_label(chains[i]) < bichain_label(chains[best])) best = i;
    }
    if (best == n) throw internal_error("bichain order has a cycle");
    done[best] = true;
    out.push_back(chains[best]);
  }
  return out;
}

collapse_sequence theorem2_sequence_with_order(const matroid& m,
                                               const std::vector<bichain>& order,
                                               const pair_sink& sink) {
  // The order must cover exactly the minimal bichains and respect the
  // bichain order.
  std::vector<bichain> expected = minimal_bichains(m);
  if (order.size() != expected.size())
    throw error("processing order must list every minimal bichain exactly once");
  for (const bichain& c : expected) {
    bool found = false;
    for (const bichain& d : order)
      if (c == d) found = true;
    if (!found) throw error("processing order is missing " + bichain_label(c));
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (!(order[i] == order[j]) && bichain_precedes(order[j], order[i]))
        throw error("processing order violates the bichain order: " +
                    bichain_label(order[j]) + " precedes " + bichain_label(order[i]));

  eset ground = m.ground();
  biflat_poset bp(m, false);
  working_complex wc(biflats_complex(m));
  require_aligned(wc, bp);
  sequence_builder out{{"biflats", "conormal", {}}, sink};

  for (const bichain& c : order) {
    face fc;
    for (const biflat& b : c) {
      int i = bp.index_of(b);
      if (i < 0) throw internal_error("minimal bichain uses an unknown biflat");
      fc.push_back(static_cast<std::uint16_t>(i));
    }
    std::sort(fc.begin(), fc.end());
    // An earlier star removal may already have deleted this face together
    // with its whole star; nothing is left to collapse then.
    if (!wc.faces.count(fc)) continue;

    // In every surviving chain through the face, the largest biflat with
    // dual part E must be the bichain's bottom element.
    for (const face& g : wc.star(fc))
      for (std::uint16_t v : g) {
        const biflat& b = bp.elements()[v];
        if (b.dual == ground && c.front().flat.proper_subset_of(b.flat))
          throw internal_error("chain through " + bichain_label(c) +
                               " still contains the larger biflat " + biflat_label(b));
      }

    // Predicted cone vertex: bottom flat with the second dual part.
    biflat predicted{c.front().flat, c[1].dual};
    int pv = bp.index_of(predicted);
    if (pv < 0)
      throw internal_error("predicted cone vertex " + biflat_label(predicted) +
                           " is not a biflat");

    // Independently scan the link for vertices contained in all its facets,
    // then require the prediction to be one of them.
    face_set link;
    for (const face& g : wc.star(fc)) link.insert(face_minus(g, fc));
    std::vector<face> link_facets;
    for (const face& l : link) {
      bool maximal = true;
      for (std::uint16_t v = 0; v < wc.labels.size() && maximal; ++v)
        if (!std::binary_search(l.begin(), l.end(), v) && link.count(face_with(l, v)))
          maximal = false;
      if (maximal) link_facets.push_back(l);
    }
    auto in_all_facets = [&](std::uint16_t v) {
      for (const face& l : link_facets)
        if (!std::binary_search(l.begin(), l.end(), v)) return false;
      return true;
    };
    if (!in_all_facets(static_cast<std::uint16_t>(pv)))
      throw internal_error("predicted cone vertex " + biflat_label(predicted) +
                           " is not a cone vertex of the link of " + bichain_label(c));

    collapse_star(wc, out, fc, static_cast<std::uint16_t>(pv));
  }

  if (!(wc.to_complex() == conormal_complex(m)))
    throw internal_error("collapse did not end at the conormal complex");
  return std::move(out.seq);
}

collapse_sequence theorem2_sequence(const matroid& m, const pair_sink& sink) {
  return theorem2_sequence_with_order(m, linear_extension(minimal_bichains(m)), sink);
}

std::string to_sequence_file(const collapse_sequence& seq) {
  std::string out = "collapse-seq " + seq.source + " " + seq.target + " " +
                    std::to_string(seq.pairs.size()) + "\n";
  for (const collapse_pair& p : seq.pairs)
    out += join_labels(p.tau) + " -> " + join_labels(p.sigma) + "\n";
  return out;
}

namespace {

std::vector<std::string> split_plus(const std::string& text, std::size_t line_no) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  bool expect_label = true;
  while (in >> tok) {
    if (tok == "+") {
      if (expect_label) throw parse_error(line_no, "misplaced '+'");
      expect_label = true;
      continue;
    }
    if (!expect_label) throw parse_error(line_no, "expected '+' between vertices");
    out.push_back(tok);
    expect_label = false;
  }
  if (out.empty() || expect_label) throw parse_error(line_no, "empty face in pair");
  return out;
}

}  // namespace

collapse_sequence parse_sequence_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  collapse_sequence seq;
  std::size_t expected = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_header) {
      std::istringstream ls(line);
      std::string kw;
      ls >> kw >> seq.source >> seq.target >> expected;
      if (kw != "collapse-seq" || ls.fail())
        throw parse_error(line_no, "expected 'collapse-seq <source> <target> <pair-count>'");
      have_header = true;
      continue;
    }
    auto arrow = line.find(" -> ");
    if (arrow == std::string::npos) throw parse_error(line_no, "expected 'tau -> sigma'");
    collapse_pair p;
    p.tau = split_plus(line.substr(0, arrow), line_no);
    p.sigma = split_plus(line.substr(arrow + 4), line_no);
    seq.pairs.push_back(std::move(p));
  }
  if (!have_header) throw parse_error(1, "missing collapse-seq header");
  if (seq.pairs.size() != expected)
    throw parse_error(line_no, "pair count mismatch: header says " +
                                   std::to_string(expected) + ", found " +
                                   std::to_string(seq.pairs.size()));
  return seq;
}

}  // namespace lagrangian
