#include "lagrangian/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lagrangian {

bool face_contains(const face& sup, const face& sub) {
  return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

face face_union(const face& a, const face& b) {
  face out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

face face_minus(const face& a, const face& b) {
  face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

face face_with(const face& f, std::uint16_t v) {
  face out = f;
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

face face_without(const face& f, std::uint16_t v) {
  face out = f;
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it != out.end() && *it == v) out.erase(it);
  return out;
}

simplicial_complex::simplicial_complex() { faces_.insert(face{}); }

simplicial_complex simplicial_complex::make(std::vector<std::string> labels,
                                            face_set faces) {
  if (labels.size() > 0xFFFF)
    throw error("complex exceeds 65535 vertices");
  faces.insert(face{});
  // Compact the label table to the vertices that actually occur.
  std::vector<bool> used(labels.size(), false);
  for (const face& f : faces)
    for (std::uint16_t v : f) {
      if (v >= labels.size()) throw error("face references an unknown vertex id");
      used[v] = true;
    }
  std::vector<std::uint16_t> remap(labels.size(), 0);
  std::vector<std::string> new_labels;
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (used[v]) {
      remap[v] = static_cast<std::uint16_t>(new_labels.size());
      new_labels.push_back(labels[v]);
    }
  for (std::size_t i = 0; i + 1 < new_labels.size(); ++i)
    if (!(new_labels[i] < new_labels[i + 1]))
      throw error("vertex labels must be sorted and unique");

  simplicial_complex c;
  c.labels_ = std::move(new_labels);
  c.faces_.clear();
  c.faces_.reserve(faces.size());
  for (const face& f : faces) {
    face g;
    g.reserve(f.size());
    for (std::uint16_t v : f) g.push_back(remap[v]);
    c.faces_.insert(std::move(g));
  }
  // Downward closure.
  for (const face& f : c.faces_)
    for (std::size_t i = 0; i < f.size(); ++i) {
      face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      if (!c.faces_.count(sub))
        throw error("face family is not downward closed: missing a subface of a face");
    }
  return c;
}

simplicial_complex simplicial_complex::from_facet_labels(
    const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  for (const auto& f : facets)
    for (const auto& l : f) labels.push_back(l);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto id_of = [&](const std::string& l) {
    return static_cast<std::uint16_t>(
        std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };

  face_set faces;
  faces.insert(face{});
  // Close each facet downward over its subsets.
  for (const auto& fl : facets) {
    face f;
    for (const auto& l : fl) f.push_back(id_of(l));
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    std::vector<face> stack{f};
    while (!stack.empty()) {
      face g = std::move(stack.back());
      stack.pop_back();
      if (!faces.insert(g).second) continue;
      for (std::size_t i = 0; i < g.size(); ++i) {
        face sub = g;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        stack.push_back(std::move(sub));
      }
    }
  }
  return make(std::move(labels), std::move(faces));
}

bool simplicial_complex::has_face_labels(const std::vector<std::string>& labels) const {
  for (const auto& l : labels)
    if (vertex_id(l) < 0) return false;
  return has_face(face_from_labels(labels));
}

int simplicial_complex::vertex_id(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

std::vector<face> simplicial_complex::faces_sorted() const {
  std::vector<face> out(faces_.begin(), faces_.end());
  std::sort(out.begin(), out.end(), [](const face& a, const face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<face> simplicial_complex::facets() const {
  std::vector<face> out;
  for (const face& f : faces_) {
    bool maximal = true;
    for (std::uint16_t v = 0; v < labels_.size() && maximal; ++v)
      if (!std::binary_search(f.begin(), f.end(), v) && faces_.count(face_with(f, v)))
        maximal = false;
    if (maximal) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const face& a, const face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::string> simplicial_complex::face_labels(const face& f) const {
  std::vector<std::string> out;
  out.reserve(f.size());
  for (std::uint16_t v : f) out.push_back(labels_[v]);
  return out;
}

face simplicial_complex::face_from_labels(const std::vector<std::string>& labels) const {
  face f;
  f.reserve(labels.size());
  for (const auto& l : labels) {
    int v = vertex_id(l);
    if (v < 0) throw error("unknown vertex label '" + l + "'");
    f.push_back(static_cast<std::uint16_t>(v));
  }
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<std::size_t> simplicial_complex::f_vector() const {
  std::vector<std::size_t> out;
  for (const face& f : faces_) {
    if (f.empty()) continue;
    if (f.size() > out.size()) out.resize(f.size(), 0);
    ++out[f.size() - 1];
  }
  return out;
}

long long simplicial_complex::euler_characteristic() const {
  long long chi = 0, sign = 1;
  for (std::size_t count : f_vector()) {
    chi += sign * static_cast<long long>(count);
    sign = -sign;
  }
  return chi;
}

int simplicial_complex::dimension() const { return max_facet_cardinality() - 1; }

int simplicial_complex::max_facet_cardinality() const {
  if (labels_.empty()) throw error("empty complex has no dimension");
  std::size_t best = 0;
  for (const face& f : faces_) best = std::max(best, f.size());
  return static_cast<int>(best);
}

bool simplicial_complex::is_pure() const {
  auto fs = facets();
  if (fs.empty() || fs.front().empty()) throw error("empty complex has no purity");
  for (const face& f : fs)
    if (f.size() != fs.front().size()) return false;
  return true;
}

std::vector<face> simplicial_complex::minimal_nonfaces() const {
  // Every minimal non-face is a face plus one vertex, so face-times-vertex
  // candidates cover them all.
  face_set seen;
  std::vector<face> out;
  for (const face& f : faces_)
    for (std::uint16_t v = 0; v < labels_.size(); ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      face cand = face_with(f, v);
      if (faces_.count(cand) || seen.count(cand)) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < cand.size() && minimal; ++i) {
        face sub = cand;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        if (!faces_.count(sub)) minimal = false;
      }
      if (minimal) {
        seen.insert(cand);
        out.push_back(cand);
      }
    }
  std::sort(out.begin(), out.end(), [](const face& a, const face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool simplicial_complex::is_flag() const {
  for (const face& nf : minimal_nonfaces())
    if (nf.size() != 2) return false;
  return true;
}

simplicial_complex simplicial_complex::link(const face& f) const {
  if (!has_face(f)) throw error("link of a non-face");
  face_set out;
  for (const face& g : faces_)
    if (face_contains(g, f)) out.insert(face_minus(g, f));
  return make(labels_, std::move(out));
}

std::vector<face> simplicial_complex::open_star(const face& f) const {
  if (!has_face(f)) throw error("open star of a non-face");
  std::vector<face> out;
  for (const face& g : faces_)
    if (face_contains(g, f)) out.push_back(g);
  std::sort(out.begin(), out.end(), [](const face& a, const face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

simplicial_complex simplicial_complex::deletion(const face& f) const {
  if (!has_face(f)) throw error("deletion of a non-face");
  face_set out;
  for (const face& g : faces_)
    if (!face_contains(g, f)) out.insert(g);
  return make(labels_, std::move(out));
}

simplicial_complex simplicial_complex::relabeled(const std::string& suffix) const {
  std::vector<std::string> labels;
  labels.reserve(labels_.size());
  for (const auto& l : labels_) labels.push_back(l + suffix);
  for (std::size_t i = 0; i + 1 < labels.size(); ++i)
    if (!(labels[i] < labels[i + 1]))
      throw error("relabeling broke the vertex order");
  return make(std::move(labels), faces_);
}

bool operator==(const simplicial_complex& a, const simplicial_complex& b) {
  if (a.labels_ != b.labels_) return false;
  return a.faces_ == b.faces_;
}

poset::poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& strict_pairs)
    : elements_(std::move(elements)), less_(elements_.size() * elements_.size(), false) {
  std::map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!id.emplace(elements_[i], i).second)
      throw error("duplicate poset element '" + elements_[i] + "'");
  }
  std::size_t n = elements_.size();
  for (const auto& [lo, hi] : strict_pairs) {
    auto a = id.find(lo), b = id.find(hi);
    if (a == id.end() || b == id.end())
      throw error("relation over unknown poset element");
    less_[a->second * n + b->second] = true;
  }
  // Transitive closure (Warshall).
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (less_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (less_[k * n + j]) less_[i * n + j] = true;
  validate();
}

poset::poset(std::vector<std::string> elements, std::vector<bool> less_matrix)
    : elements_(std::move(elements)), less_(std::move(less_matrix)) {
  if (less_.size() != elements_.size() * elements_.size())
    throw error("poset relation matrix has the wrong size");
  validate();
}

void poset::validate() const {
  std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (less(i, i)) throw error("poset relation is not irreflexive at '" + elements_[i] + "'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && less(i, j) && less(j, i))
        throw error("poset relation is not antisymmetric between '" + elements_[i] +
                    "' and '" + elements_[j] + "'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (less(i, j))
        for (std::size_t k = 0; k < n; ++k)
          if (less(j, k) && !less(i, k))
            throw error("poset relation is not transitive");
}

std::vector<std::pair<std::size_t, std::size_t>> poset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (less(i, k) && less(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

simplicial_complex order_complex(const poset& p) {
  std::vector<std::string> labels = p.elements();
  std::sort(labels.begin(), labels.end());
  std::vector<std::uint16_t> vid(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    vid[i] = static_cast<std::uint16_t>(
        std::lower_bound(labels.begin(), labels.end(), p.elements()[i]) - labels.begin());

  face_set faces;
  faces.insert(face{});
  // Chains, each generated once along its ascending order.
  std::vector<std::size_t> chain;
  auto emit = [&]() {
    face f;
    f.reserve(chain.size());
    for (std::size_t i : chain) f.push_back(vid[i]);
    std::sort(f.begin(), f.end());
    faces.insert(std::move(f));
  };
  auto extend = [&](auto&& self, std::size_t top) -> void {
    emit();
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.less(top, j)) {
        chain.push_back(j);
        self(self, j);
        chain.pop_back();
      }
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    chain.push_back(i);
    extend(extend, i);
    chain.pop_back();
  }
  return simplicial_complex::make(std::move(labels), std::move(faces));
}

simplicial_complex join(const simplicial_complex& a, const simplicial_complex& b) {
  std::vector<std::string> labels;
  labels.reserve(a.vertex_count() + b.vertex_count());
  for (const auto& l : a.vertex_labels()) labels.push_back(l);
  for (const auto& l : b.vertex_labels()) {
    if (a.vertex_id(l) >= 0)
      throw error("join requires disjoint vertex sets, both contain '" + l + "'");
    labels.push_back(l);
  }
  std::sort(labels.begin(), labels.end());
  auto id_of = [&](const std::string& l) {
    return static_cast<std::uint16_t>(
        std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<std::uint16_t> amap(a.vertex_count()), bmap(b.vertex_count());
  for (std::size_t v = 0; v < a.vertex_count(); ++v) amap[v] = id_of(a.vertex_labels()[v]);
  for (std::size_t v = 0; v < b.vertex_count(); ++v) bmap[v] = id_of(b.vertex_labels()[v]);

  face_set faces;
  for (const face& fa : a.faces())
    for (const face& fb : b.faces()) {
      face f;
      f.reserve(fa.size() + fb.size());
      for (std::uint16_t v : fa) f.push_back(amap[v]);
      for (std::uint16_t v : fb) f.push_back(bmap[v]);
      std::sort(f.begin(), f.end());
      faces.insert(std::move(f));
    }
  return simplicial_complex::make(std::move(labels), std::move(faces));
}

simplicial_complex bergman_complex(const matroid& m) {
  std::vector<std::string> elems;
  std::vector<eset> proper;
  for (eset f : m.flats())
    if (!f.empty() && f != m.ground()) {
      proper.push_back(f);
      elems.push_back(f.label());
    }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const eset& a : proper)
    for (const eset& b : proper)
      if (a.proper_subset_of(b)) pairs.emplace_back(a.label(), b.label());
  return order_complex(poset(std::move(elems), pairs));
}

std::string export_complex(const simplicial_complex& c) {
  auto fs = c.facets();
  std::vector<std::string> lines;
  for (const face& f : fs) {
    if (f.empty()) continue;
    std::string line;
    for (std::uint16_t v : f) {
      if (!line.empty()) line.push_back(' ');
      line += c.vertex_labels()[v];
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out = "complex " + std::to_string(c.vertex_count()) + " " +
                    std::to_string(lines.size()) + "\n";
  for (const auto& l : lines) out += l + "\n";
  return out;
}

simplicial_complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::size_t nv = 0, nf = 0;
  bool have_header = false;
  std::vector<std::vector<std::string>> facets;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "complex")
        throw parse_error(line_no, "expected 'complex <vertex-count> <facet-count>'");
      nv = std::stoul(tokens[1]);
      nf = std::stoul(tokens[2]);
      have_header = true;
    } else {
      facets.push_back(tokens);
    }
  }
  if (!have_header) throw parse_error(1, "missing complex header");
  if (facets.size() != nf)
    throw parse_error(line_no, "facet count mismatch: header says " + std::to_string(nf) +
                                   ", found " + std::to_string(facets.size()));
  auto c = simplicial_complex::from_facet_labels(facets);
  if (c.vertex_count() != nv)
    throw parse_error(line_no, "vertex count mismatch: header says " + std::to_string(nv) +
                                   ", facets use " + std::to_string(c.vertex_count()));
  return c;
}

}  // namespace lagrangian
