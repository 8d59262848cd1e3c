#include "lagrangian/homology.hpp"

#include <algorithm>
#include <unordered_map>

namespace lagrangian {

gf2_matrix::gf2_matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols),
      data_(rows, std::vector<std::uint64_t>((cols + 63) / 64, 0)) {}

std::size_t gf2_matrix::rank() const {
  auto work = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t word = c >> 6;
    std::uint64_t bit = 1ull << (c & 63);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(work[pivot][word] & bit)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(work[pivot], work[rank]);
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != rank && (work[r][word] & bit))
        for (std::size_t w = 0; w < work[r].size(); ++w) work[r][w] ^= work[rank][w];
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::vector<face>> faces_by_dimension(const simplicial_complex& c) {
  std::vector<std::vector<face>> out(1);  // out[0] holds the empty face alone
  out[0].push_back(face{});
  for (const face& f : c.faces()) {
    if (f.empty()) continue;
    if (f.size() + 1 > out.size()) out.resize(f.size() + 1);
    out[f.size()].push_back(f);
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

}  // namespace

boundary_matrix boundary(const simplicial_complex& c, int dim) {
  auto levels = faces_by_dimension(c);
  auto level = [&](int d) {
    std::size_t i = static_cast<std::size_t>(d) + 1;
    return i < levels.size() ? levels[i] : std::vector<face>{};
  };
  boundary_matrix out{dim, level(dim - 1), level(dim),
                      gf2_matrix(level(dim - 1).size(), level(dim).size())};
  std::unordered_map<face, std::size_t, face_hash> row_index;
  for (std::size_t r = 0; r < out.rows.size(); ++r) row_index.emplace(out.rows[r], r);
  for (std::size_t col = 0; col < out.cols.size(); ++col)
    for (std::size_t i = 0; i < out.cols[col].size(); ++i) {
      face sub = out.cols[col];
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      out.entries.set(row_index.at(sub), col);
    }
  return out;
}

std::vector<std::size_t> betti_gf2(const simplicial_complex& c) {
  if (c.vertex_count() == 0) throw error("Betti numbers of an empty complex");
  int dim = c.dimension();

  std::vector<boundary_matrix> bnd;
  bnd.reserve(static_cast<std::size_t>(dim) + 2);
  for (int d = 0; d <= dim + 1; ++d) bnd.push_back(boundary(c, d));

  // Consecutive boundary maps must compose to zero.
  for (int d = 0; d <= dim; ++d) {
    const auto& hi = bnd[static_cast<std::size_t>(d) + 1];
    const auto& lo = bnd[static_cast<std::size_t>(d)];
    for (std::size_t col = 0; col < hi.cols.size(); ++col) {
      std::vector<std::uint64_t> acc((lo.rows.size() + 63) / 64, 0);
      for (std::size_t mid = 0; mid < hi.rows.size(); ++mid)
        if (hi.entries.get(mid, col))
          for (std::size_t r = 0; r < lo.rows.size(); ++r)
            if (lo.entries.get(r, mid)) acc[r >> 6] ^= 1ull << (r & 63);
      for (std::uint64_t w : acc)
        if (w != 0) throw internal_error("boundary maps do not compose to zero");
    }
  }

  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 2, 0);
  for (int d = 0; d <= dim + 1; ++d)
    ranks[static_cast<std::size_t>(d)] = bnd[static_cast<std::size_t>(d)].entries.rank();

  auto fvec = c.f_vector();
  std::vector<std::size_t> betti(static_cast<std::size_t>(dim) + 1, 0);
  for (int d = 0; d <= dim; ++d) {
    std::size_t fd = fvec[static_cast<std::size_t>(d)];
    betti[static_cast<std::size_t>(d)] =
        fd - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d) + 1];
  }

  // Cross-check against the f-vector: the alternating Betti sum must equal
  // the alternating face-count sum minus one.
  long long chi_b = 0, chi_f = -1, sign = 1;
  for (int d = 0; d <= dim; ++d) {
    chi_b += sign * static_cast<long long>(betti[static_cast<std::size_t>(d)]);
    chi_f += sign * static_cast<long long>(fvec[static_cast<std::size_t>(d)]);
    sign = -sign;
  }
  if (chi_b != chi_f) throw internal_error("Euler characteristic mismatch");
  return betti;
}

long long reduced_euler(const simplicial_complex& c) {
  long long chi = 0, sign = 1;
  for (std::size_t b : betti_gf2(c)) {
    chi += sign * static_cast<long long>(b);
    sign = -sign;
  }
  return chi;
}

}  // namespace lagrangian
