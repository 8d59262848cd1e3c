#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lagrangian/simplicial_complex.hpp"

namespace lagrangian {

enum class shelling_status { shellable, not_shellable, unknown };

std::string to_string(shelling_status s);

struct shelling_certificate {
  shelling_status status = shelling_status::unknown;
  // Facet order witnessing shellability, as label lists; empty otherwise.
  std::vector<std::vector<std::string>> order;
  std::uint64_t nodes_used = 0;
  std::uint64_t budget = 0;
};

// Decides non-pure shellability by backtracking over facet orders, memoized
// on the set of placed facets (whether a partial order extends depends only
// on that set). The budget caps the number of search nodes; exceeding it
// yields status unknown. Affirmative answers are replayed through
// verify_shelling before being returned.
shelling_certificate is_shellable(const simplicial_complex& c, std::uint64_t budget);

// Direct check of the shelling condition: for each j >= 2 the intersection
// of facet j with the union of the earlier facets is pure of dimension
// |facet_j| - 2. Built on the complex primitives, independent of the search.
bool verify_shelling(const simplicial_complex& c,
                     const std::vector<std::vector<std::string>>& order);

}  // namespace lagrangian
