#include "lagrangian/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lagrangian {

namespace {

std::string witness(eset s) { return "{" + s.label() + "}"; }

}  // namespace

matroid::matroid(int n, std::vector<eset> flats) : n_(n), flats_(std::move(flats)) {
  if (n_ < 1 || n_ > 64)
    throw axiom_error("ground-set size must be between 1 and 64, got " +
                      std::to_string(n_));
  std::sort(flats_.begin(), flats_.end(), canonical_less);
  for (std::size_t i = 0; i + 1 < flats_.size(); ++i)
    if (flats_[i] == flats_[i + 1])
      throw axiom_error("duplicate flat " + witness(flats_[i]));
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (!flats_[i].subset_of(ground()))
      throw axiom_error("flat " + witness(flats_[i]) +
                        " is not contained in the ground set");
    index_.emplace(flats_[i].bits(), static_cast<int>(i));
  }
  validate();
}

void matroid::validate() {
  if (flats_.empty() || !flats_.front().empty())
    throw axiom_error(
        "the empty set must be a flat (a nonempty minimal flat means the "
        "matroid has loops)");
  if (flats_.back() != ground())
    throw axiom_error("the ground set must be a flat");

  // Closure under pairwise intersection.
  for (std::size_t i = 0; i < flats_.size(); ++i)
    for (std::size_t j = i + 1; j < flats_.size(); ++j) {
      eset meet = flats_[i] & flats_[j];
      if (!is_flat(meet))
        throw axiom_error("intersection axiom fails: " + witness(flats_[i]) +
                          " and " + witness(flats_[j]) + " meet in the non-flat " +
                          witness(meet));
    }

  // Cover relations: j covers i iff flats_[i] < flats_[j] with nothing between.
  std::size_t k = flats_.size();
  std::vector<std::vector<int>> below(k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i)
      if (flats_[i].proper_subset_of(flats_[j])) below[j].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> covers_up(k);
  for (std::size_t j = 0; j < k; ++j)
    for (int i : below[j]) {
      bool strict_between = false;
      for (int l : below[j])
        if (l != i && flats_[i].proper_subset_of(flats_[l])) {
          strict_between = true;
          break;
        }
      if (!strict_between) covers_up[i].push_back(static_cast<int>(j));
    }

  // Cover-partition axiom: for each flat F, the sets F' \ F over minimal
  // flats F' strictly above F partition E \ F.
  for (std::size_t i = 0; i < k; ++i) {
    eset seen;
    for (int j : covers_up[i]) {
      eset part = flats_[j] - flats_[i];
      if (!(seen & part).empty())
        throw axiom_error("cover-partition axiom fails at " + witness(flats_[i]) +
                          ": covers overlap on " + witness(seen & part));
      seen = seen | part;
    }
    if (flats_[i] != ground() && seen != ground() - flats_[i])
      throw axiom_error("cover-partition axiom fails at " + witness(flats_[i]) +
                        ": covers reach " + witness(seen) + " instead of " +
                        witness(ground() - flats_[i]));
  }

  // Lattice heights; gradedness along covers.
  ranks_.assign(k, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (int i : below[j]) ranks_[j] = std::max(ranks_[j], ranks_[i] + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (int j : covers_up[i])
      if (ranks_[j] != ranks_[i] + 1)
        throw axiom_error("lattice is not graded: " + witness(flats_[j]) +
                          " covers " + witness(flats_[i]) + " but their heights are " +
                          std::to_string(ranks_[j]) + " and " + std::to_string(ranks_[i]));
  rank_ = ranks_.back();
}

eset matroid::closure(eset s) const {
  eset out = ground();
  for (const eset& f : flats_)
    if (s.subset_of(f)) out = out & f;
  return out;
}

int matroid::rank(eset s) const {
  auto it = index_.find(closure(s).bits());
  return ranks_[static_cast<std::size_t>(it->second)];
}

eset matroid::dual_closure(eset s) const {
  // Fixpoint of adding elements whose insertion does not raise the dual rank.
  bool grew = true;
  while (grew) {
    grew = false;
    int rs = dual_rank_of(s);
    for (int e = 1; e <= n_; ++e)
      if (!s.contains(e) && dual_rank_of(s.with(e)) == rs) {
        s = s.with(e);
        grew = true;
      }
  }
  return s;
}

std::vector<int> matroid::coloops() const {
  std::vector<int> out;
  for (int e = 1; e <= n_; ++e)
    if (rank(ground().without(e)) < rank_) out.push_back(e);
  return out;
}

void matroid::require_coloopless() const {
  auto cl = coloops();
  if (!cl.empty())
    throw axiom_error("matroid has a coloop: element " + std::to_string(cl.front()));
}

matroid matroid::dual() const {
  require_coloopless();
  // Generate the dual lattice of flats by closing flat-plus-point sets,
  // starting from the dual closure of the empty set.
  std::set<eset> found;
  std::vector<eset> queue;
  eset bottom = dual_closure(eset());
  found.insert(bottom);
  queue.push_back(bottom);
  while (!queue.empty()) {
    eset f = queue.back();
    queue.pop_back();
    for (int e = 1; e <= n_; ++e) {
      if (f.contains(e)) continue;
      eset g = dual_closure(f.with(e));
      if (found.insert(g).second) queue.push_back(g);
    }
  }
  return matroid(n_, std::vector<eset>(found.begin(), found.end()));
}

flat_lattice flats_lattice(const matroid& m) {
  flat_lattice out;
  out.flats = m.flats();
  std::sort(out.flats.begin(), out.flats.end(), [&](eset a, eset b) {
    int ra = m.rank(a), rb = m.rank(b);
    if (ra != rb) return ra < rb;
    return a.bits() < b.bits();
  });
  out.ranks.reserve(out.flats.size());
  for (eset f : out.flats) out.ranks.push_back(m.rank(f));
  out.matroid_rank = m.rank();
  std::size_t k = out.flats.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!out.flats[i].proper_subset_of(out.flats[j])) continue;
      bool covered = true;
      for (std::size_t l = 0; l < k && covered; ++l)
        if (l != i && l != j && out.flats[i].proper_subset_of(out.flats[l]) &&
            out.flats[l].proper_subset_of(out.flats[j]))
          covered = false;
      if (covered) out.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

int flat_lattice::rank_of(eset f) const {
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (flats[i] == f) return ranks[i];
  throw error("set {" + f.label() + "} is not a flat of this lattice");
}

matroid uniform(int r, int n) {
  if (n < 2 || n > 64)
    throw error("uniform matroid needs 2 <= n <= 64, got n = " + std::to_string(n));
  if (r < 1 || r > n - 1)
    throw error("uniform rank out of range: need 1 <= r <= n-1, got r = " +
                std::to_string(r));
  std::vector<eset> flats;
  // All subsets of size < r, by direct combination enumeration.
  for (int k = 0; k < r; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      eset s;
      for (int e : pick) s = s.with(e);
      flats.push_back(s);
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  flats.push_back(eset::full(n));
  return matroid(n, std::move(flats));
}

namespace {

struct union_find {
  std::vector<int> parent;
  explicit union_find(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

matroid from_graph(const std::vector<graph_edge>& edges) {
  int n = static_cast<int>(edges.size());
  if (n < 1 || n > 64)
    throw error("graph must have between 1 and 64 edges, got " + std::to_string(n));

  std::vector<std::pair<int, int>> ends(static_cast<std::size_t>(n));
  std::map<std::string, int> vertex_id;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const graph_edge& e : edges) {
    if (e.id < 1 || e.id > n)
      throw error("edge ids must be 1.." + std::to_string(n) + ", got " +
                  std::to_string(e.id));
    if (seen[static_cast<std::size_t>(e.id - 1)])
      throw error("duplicate edge id " + std::to_string(e.id));
    seen[static_cast<std::size_t>(e.id - 1)] = true;
    auto vid = [&](const std::string& name) {
      auto [it, _] = vertex_id.emplace(name, static_cast<int>(vertex_id.size()));
      return it->second;
    };
    int u = vid(e.u), v = vid(e.v);
    if (u == v)
      throw error("edge " + std::to_string(e.id) + " is a loop");
    ends[static_cast<std::size_t>(e.id - 1)] = {u, v};
  }

  int nv = static_cast<int>(vertex_id.size());
  // Graphic closure: an edge lies in cl(S) iff its endpoints are connected
  // by S. Flats are generated by closing flat-plus-edge sets.
  auto close = [&](eset s) {
    union_find uf(static_cast<std::size_t>(nv));
    for (int e : s.elements()) uf.unite(ends[static_cast<std::size_t>(e - 1)].first,
                                        ends[static_cast<std::size_t>(e - 1)].second);
    eset out;
    for (int e = 1; e <= n; ++e)
      if (uf.find(ends[static_cast<std::size_t>(e - 1)].first) ==
          uf.find(ends[static_cast<std::size_t>(e - 1)].second))
        out = out.with(e);
    return out;
  };

  std::set<eset> found;
  std::vector<eset> queue;
  found.insert(close(eset()));
  queue.push_back(close(eset()));
  while (!queue.empty()) {
    eset f = queue.back();
    queue.pop_back();
    for (int e = 1; e <= n; ++e) {
      if (f.contains(e)) continue;
      eset g = close(f.with(e));
      if (found.insert(g).second) queue.push_back(g);
    }
  }
  matroid m(n, std::vector<eset>(found.begin(), found.end()));
  auto cl = m.coloops();
  if (!cl.empty())
    throw error("edge " + std::to_string(cl.front()) + " is a coloop");
  return m;
}

namespace {

// Strips comments, splits into whitespace tokens, keeps 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize_lines(
    const std::string& text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
  }
  return out;
}

int parse_int(std::size_t line_no, const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw parse_error(line_no, std::string("expected ") + what + ", got '" + tok + "'");
  }
}

}  // namespace

matroid parse_matroid(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw parse_error(1, "empty matroid file");
  auto& [first_no, first] = lines.front();
  if (first[0] != "ground" || first.size() != 2)
    throw parse_error(first_no, "expected 'ground <n>'");
  int n = parse_int(first_no, first[1], "ground-set size");
  if (n < 1 || n > 64) throw parse_error(first_no, "ground-set size must be 1..64");

  std::vector<eset> flats;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [line_no, tokens] = lines[i];
    if (tokens[0] != "flat")
      throw parse_error(line_no, "expected 'flat ...', got '" + tokens[0] + "'");
    eset f;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      int e = parse_int(line_no, tokens[t], "element");
      if (e < 1 || e > n)
        throw parse_error(line_no, "element " + std::to_string(e) + " outside 1.." +
                                       std::to_string(n));
      if (f.contains(e))
        throw parse_error(line_no, "repeated element " + std::to_string(e));
      f = f.with(e);
    }
    flats.push_back(f);
  }
  return matroid(n, std::move(flats));
}

std::vector<graph_edge> parse_graph(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw parse_error(1, "empty graph file");
  auto& [first_no, first] = lines.front();
  if (first[0] != "graph" || first.size() != 1)
    throw parse_error(first_no, "expected 'graph'");
  std::vector<graph_edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [line_no, tokens] = lines[i];
    if (tokens[0] != "edge" || tokens.size() != 4)
      throw parse_error(line_no, "expected 'edge <id> <u> <v>'");
    edges.push_back({parse_int(line_no, tokens[1], "edge id"), tokens[2], tokens[3]});
  }
  return edges;
}

matroid parse_matroid_or_graph(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw parse_error(1, "empty input file");
  if (lines.front().second[0] == "graph") return from_graph(parse_graph(text));
  return parse_matroid(text);
}

std::string to_matroid_file(const matroid& m) {
  std::string out = "ground " + std::to_string(m.ground_size()) + "\n";
  for (eset f : m.flats()) {
    out += "flat";
    for (int e : f.elements()) out += " " + std::to_string(e);
    out += "\n";
  }
  return out;
}

}  // namespace lagrangian
