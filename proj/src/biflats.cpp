#include "lagrangian/biflats.hpp"

#include <algorithm>

namespace lagrangian {

std::vector<biflat> enumerate_biflats(const matroid& m) {
  m.require_coloopless();
  matroid md = m.dual();
  eset ground = m.ground();
  std::vector<biflat> out;
  for (eset f : m.flats()) {
    if (f.empty()) continue;
    for (eset g : md.flats()) {
      if (g.empty()) continue;
      if (f == ground && g == ground) continue;
      if ((f | g) != ground) continue;
      out.push_back({f, g});
    }
  }
  std::sort(out.begin(), out.end(), [](const biflat& a, const biflat& b) {
    return biflat_label(a) < biflat_label(b);
  });
  return out;
}

biflat_poset::biflat_poset(const matroid& m, bool unmixed_only) {
  eset ground = m.ground();
  for (const biflat& b : enumerate_biflats(m))
    if (!unmixed_only || !is_mixed(b, ground)) elements_.push_back(b);
}

int biflat_poset::index_of(const biflat& b) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == b) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<std::size_t, std::size_t>> biflat_poset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < size() && cover; ++k)
        if (less(i, k) && less(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

poset biflat_poset::to_poset() const {
  std::vector<std::string> labels;
  labels.reserve(size());
  for (const biflat& b : elements_) labels.push_back(biflat_label(b));
  std::vector<bool> matrix(size() * size(), false);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (less(i, j)) matrix[i * size() + j] = true;
  return poset(std::move(labels), std::move(matrix));
}

simplicial_complex biflats_complex(const matroid& m) {
  return order_complex(biflat_poset(m, false).to_poset());
}

simplicial_complex unmixed_complex(const matroid& m) {
  return order_complex(unmixed_poset(m).to_poset());
}

bichain make_bichain(std::vector<biflat> biflats) {
  std::sort(biflats.begin(), biflats.end(), [](const biflat& a, const biflat& b) {
    if (biflat_less(a, b)) return true;
    if (biflat_less(b, a)) return false;
    return biflat_label(a) < biflat_label(b);
  });
  for (std::size_t i = 0; i + 1 < biflats.size(); ++i) {
    if (biflats[i] == biflats[i + 1])
      throw error("bichain repeats the biflat " + biflat_label(biflats[i]));
    if (!biflat_less(biflats[i], biflats[i + 1]))
      throw error("not a bichain: " + biflat_label(biflats[i]) + " and " +
                  biflat_label(biflats[i + 1]) + " are incomparable");
  }
  return biflats;
}

namespace {

void require_ascending(const bichain& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!biflat_less(c[i], c[i + 1]))
      throw error("not an ascending bichain: " + biflat_label(c[i]) + " then " +
                  biflat_label(c[i + 1]));
}

}  // namespace

bool is_biflag(const matroid& m, const bichain& c) {
  require_ascending(c);
  eset covered;
  for (const biflat& b : c) covered = covered | (b.flat & b.dual);
  return covered != m.ground();
}

bool gap_condition(const matroid& m, const bichain& c) {
  require_ascending(c);
  eset ground = m.ground();
  // Pad with the pseudo-biflats ∅|E below and E|∅ above.
  eset prev_flat;  // F_0 = ∅
  for (const biflat& b : c) {
    if ((prev_flat | b.dual) != ground) return true;
    prev_flat = b.flat;
  }
  return (prev_flat | eset()) != ground;  // F_l ∪ G_{l+1} with G_{l+1} = ∅
}

namespace {

// Enumerates the chains of the biflat poset, pruned to biflags: extending a
// bichain only grows the union of F ∩ G, so once it reaches E no extension
// can be a biflag again.
void biflag_chains(const matroid& m, const biflat_poset& bp,
                   const std::vector<std::uint16_t>& vid, face_set& faces) {
  eset ground = m.ground();
  std::vector<std::size_t> chain;
  face f;
  auto extend = [&](auto&& self, std::size_t top, eset covered) -> void {
    f.clear();
    for (std::size_t i : chain) f.push_back(vid[i]);
    std::sort(f.begin(), f.end());
    faces.insert(f);
    for (std::size_t j = 0; j < bp.size(); ++j) {
      if (!bp.less(top, j)) continue;
      eset next = covered | (bp.elements()[j].flat & bp.elements()[j].dual);
      if (next == ground) continue;
      chain.push_back(j);
      self(self, j, next);
      chain.pop_back();
    }
  };
  for (std::size_t i = 0; i < bp.size(); ++i) {
    // A single biflat is always a biflag: F ∩ G is proper since one side is.
    chain.push_back(i);
    extend(extend, i, bp.elements()[i].flat & bp.elements()[i].dual);
    chain.pop_back();
  }
}

}  // namespace

simplicial_complex conormal_complex(const matroid& m) {
  biflat_poset bp(m, false);
  std::vector<std::string> labels;
  labels.reserve(bp.size());
  for (const biflat& b : bp.elements()) labels.push_back(biflat_label(b));
  // Labels are already sorted; every biflat is itself a biflag, so all of
  // them appear as vertices.
  std::vector<std::uint16_t> vid(bp.size());
  for (std::size_t i = 0; i < bp.size(); ++i) vid[i] = static_cast<std::uint16_t>(i);

  face_set faces;
  faces.insert(face{});
  biflag_chains(m, bp, vid, faces);
  auto c = simplicial_complex::make(std::move(labels), std::move(faces));

  // The biflag family must be downward closed; 'make' verified exactly that,
  // but re-check the semantic side: every face is a biflag.
  for (const face& f : c.faces()) {
    std::vector<biflat> part;
    for (std::uint16_t v : f) part.push_back(bp.elements()[v]);
    if (!is_biflag(m, make_bichain(std::move(part))))
      throw internal_error("conormal complex contains a non-biflag face");
  }
  return c;
}

join_isomorphism unmixed_join_isomorphism(const matroid& m) {
  simplicial_complex primal = bergman_complex(m);
  simplicial_complex dual_side = bergman_complex(m.dual()).relabeled("'");
  join_isomorphism out{join(primal, dual_side), {}};

  eset ground = m.ground();
  simplicial_complex un = unmixed_complex(m);
  std::vector<std::string> image(un.vertex_count());
  for (std::size_t v = 0; v < un.vertex_count(); ++v) {
    // Unmixed vertices are F|E or E|G.
    const std::string& label = un.vertex_labels()[v];
    auto bar = label.find('|');
    std::string left = label.substr(0, bar), right = label.substr(bar + 1);
    image[v] = (right == ground.label()) ? left : right + "'";
    out.vertex_map.emplace_back(label, image[v]);
  }

  // Certify that the map is a simplicial isomorphism: a vertex bijection
  // carrying faces to faces, with equal face counts.
  if (out.vertex_map.size() != out.join_complex.vertex_count())
    throw internal_error("unmixed/join vertex counts differ");
  if (un.face_count() != out.join_complex.face_count())
    throw internal_error("unmixed/join face counts differ");
  for (std::size_t v = 0; v < image.size(); ++v)
    if (out.join_complex.vertex_id(image[v]) < 0)
      throw internal_error("vertex map image '" + image[v] + "' is not a join vertex");
  for (const face& f : un.faces()) {
    std::vector<std::string> labels;
    labels.reserve(f.size());
    for (std::uint16_t v : f) labels.push_back(image[v]);
    if (!out.join_complex.has_face_labels(labels))
      throw internal_error("unmixed face does not map to a join face");
  }
  return out;
}

bool is_uniform(const matroid& m) {
  eset ground = m.ground();
  bool no_mixed = true;
  for (const biflat& b : enumerate_biflats(m))
    if (is_mixed(b, ground)) {
      no_mixed = false;
      break;
    }

  // Second route: the flat family is exactly {S : |S| < r} ∪ {E}, which is
  // the closure description of rank(S) = min(|S|, r). Counting suffices once
  // every proper flat is small.
  int r = m.rank();
  int n = m.ground_size();
  bool uniform_family = true;
  unsigned long long expected = 1;  // the ground set
  unsigned long long binom = 1;
  for (int k = 0; k < r; ++k) {
    if (expected > m.flats().size()) break;  // cannot match, avoid overflow
    expected += binom;
    binom = static_cast<unsigned long long>(
        static_cast<unsigned __int128>(binom) * static_cast<unsigned>(n - k) /
        static_cast<unsigned>(k + 1));
  }
  for (eset f : m.flats())
    if (f != ground && f.size() >= r) uniform_family = false;
  if (m.flats().size() != expected) uniform_family = false;

  if (no_mixed != uniform_family)
    throw internal_error("uniformity criteria disagree");

  // At enumerable sizes, also check the rank criterion literally.
  if (n <= 16) {
    bool rank_route = true;
    for (std::uint64_t mask = 0; mask <= ground.bits() && rank_route; ++mask) {
      eset s(mask);
      if (m.rank(s) != std::min(s.size(), r)) rank_route = false;
    }
    if (rank_route != no_mixed)
      throw internal_error("uniformity rank criterion disagrees");
  }
  return no_mixed;
}

}  // namespace lagrangian
