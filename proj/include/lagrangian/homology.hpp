#pragma once

#include <cstdint>
#include <vector>

#include "lagrangian/simplicial_complex.hpp"

namespace lagrangian {

// Dense matrix over the two-element field, rows packed into 64-bit words.
class gf2_matrix {
 public:
  gf2_matrix(std::size_t rows, std::size_t cols);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  void set(std::size_t r, std::size_t c) { data_[r][c >> 6] |= 1ull << (c & 63); }
  bool get(std::size_t r, std::size_t c) const {
    return (data_[r][c >> 6] >> (c & 63)) & 1;
  }
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<std::uint64_t>> data_;
};

// Boundary map from d-faces to (d-1)-faces; d = 0 is the augmentation onto
// the empty face.
struct boundary_matrix {
  int dim;
  std::vector<face> rows;  // (d-1)-faces
  std::vector<face> cols;  // d-faces
  gf2_matrix entries;
};

boundary_matrix boundary(const simplicial_complex& c, int dim);

// Reduced Betti numbers over the two-element field, indices 0..dimension.
// Verifies that consecutive boundary maps compose to zero and that the
// alternating Betti sum matches the f-vector Euler characteristic.
std::vector<std::size_t> betti_gf2(const simplicial_complex& c);

// Reduced Euler characteristic, computed from the Betti numbers.
long long reduced_euler(const simplicial_complex& c);

}  // namespace lagrangian
