#include <random>
#include <set>

#include "doctest.h"
#include "lagrangian/biflats.hpp"
#include "util.hpp"

using namespace lagrangian;

namespace {

std::set<std::string> biflat_labels(const matroid& m) {
  std::set<std::string> out;
  for (const biflat& b : enumerate_biflats(m)) out.insert(biflat_label(b));
  return out;
}

// Bichains are exactly the nonempty faces of the biflats complex.
std::vector<bichain> all_bichains(const matroid& m) {
  biflat_poset bp(m, false);
  std::vector<bichain> out;
  simplicial_complex cx = biflats_complex(m);
  for (const face& f : cx.faces()) {
    if (f.empty()) continue;
    std::vector<biflat> part;
    for (std::uint16_t v : f) part.push_back(bp.elements()[v]);
    out.push_back(make_bichain(std::move(part)));
  }
  return out;
}

std::size_t non_biflag_count(const matroid& m) {
  std::size_t count = 0;
  for (const bichain& c : all_bichains(m))
    if (!is_biflag(m, c)) ++count;
  return count;
}

}  // namespace

TEST_CASE("biflats of the doubled-edge triangle") {
  std::set<std::string> expect = {"1,2|1,2,3,4", "1,2|3,4",   "3|1,2,3,4", "4|1,2,3,4",
                                  "1,2,3,4|1",   "1,2,3,4|2", "1,2,3,4|3,4"};
  CHECK(biflat_labels(testutil::fixture("M_A")) == expect);
}

TEST_CASE("biflats of the K4-minus-edge fixture") {
  auto labels = biflat_labels(testutil::fixture("M_B"));
  CHECK(labels.size() == 16);
  CHECK(labels.count("1,2,5|3,4"));
  CHECK(labels.count("3,4,5|1,2"));
  CHECK(labels.count("1,2,3,4,5|5"));
  CHECK(labels.count("1,3|1,2,3,4,5"));
}

TEST_CASE("biflats of the six-edge fixture") {
  auto labels = biflat_labels(testutil::fixture("M_C"));
  CHECK(labels.size() == 30);
  CHECK(labels.count("1,2,3,4|3,4,5,6"));
  CHECK(labels.count("4,5,6|1,2,3"));
  CHECK(labels.count("1,2,3,4,5,6|2,5,6"));
  CHECK(labels.count("1,2|3,4,5,6"));
  CHECK(labels.count("1,2,3,4|5,6"));
}

TEST_CASE("uniform matroids have no mixed biflats") {
  matroid u = uniform(2, 4);
  eset ground = u.ground();
  for (const biflat& b : enumerate_biflats(u)) {
    CHECK_FALSE(is_mixed(b, ground));
    CHECK((b.flat == ground || b.dual == ground));
  }
}

TEST_CASE("mixed biflats of the fixtures") {
  matroid ma = testutil::fixture("M_A");
  std::vector<std::string> mixed;
  for (const biflat& b : enumerate_biflats(ma))
    if (is_mixed(b, ma.ground())) mixed.push_back(biflat_label(b));
  CHECK(mixed == std::vector<std::string>{"1,2|3,4"});

  matroid mc = testutil::fixture("M_C");
  std::size_t mixed_c = 0;
  bool found = false;
  for (const biflat& b : enumerate_biflats(mc))
    if (is_mixed(b, mc.ground())) {
      ++mixed_c;
      if (biflat_label(b) == "1,2,3,4|3,4,5,6") found = true;
    }
  CHECK(mixed_c == 8);
  CHECK(found);
}

TEST_CASE("unmixed poset is the full poset minus the mixed biflats") {
  matroid m = testutil::fixture("M_A");
  CHECK(biflat_poset(m, false).size() == 7);
  CHECK(unmixed_poset(m).size() == 6);
  CHECK(unmixed_poset(m).index_of(biflat{eset::of({1, 2}), eset::of({3, 4})}) == -1);
}

TEST_CASE("unmixed complex of the doubled-edge triangle is complete bipartite") {
  simplicial_complex c = unmixed_complex(testutil::fixture("M_A"));
  CHECK(c.f_vector() == std::vector<std::size_t>{6, 9});
  CHECK(c.is_pure());
}

TEST_CASE("uniform matroid: all three complexes coincide") {
  matroid u = uniform(2, 4);
  simplicial_complex bf = biflats_complex(u);
  CHECK(bf == unmixed_complex(u));
  CHECK(bf == conormal_complex(u));
  CHECK(is_uniform(u));
}

TEST_CASE("non-uniform fixtures have distinct complexes") {
  for (const char* name : {"M_A", "M_B", "M_C"}) {
    matroid m = testutil::fixture(name);
    CHECK_FALSE(is_uniform(m));
    CHECK_FALSE(biflats_complex(m) == unmixed_complex(m));
    CHECK_FALSE(biflats_complex(m) == conormal_complex(m));
  }
}

TEST_CASE("unmixed-join isomorphism certifies on fixtures") {
  for (const char* name : {"M_A", "M_B", "M_C"})
    CHECK_NOTHROW(unmixed_join_isomorphism(testutil::fixture(name)));
  CHECK(unmixed_join_isomorphism(uniform(2, 4)).vertex_map.size() == 8);
  CHECK(unmixed_join_isomorphism(testutil::fixture("M_A")).vertex_map.size() == 6);
  CHECK(unmixed_join_isomorphism(testutil::fixture("M_C")).vertex_map.size() == 22);
}

TEST_CASE("biflag predicate on the doubled-edge triangle") {
  matroid m = testutil::fixture("M_A");
  biflat bottom{eset::of({1, 2}), m.ground()};
  biflat top{m.ground(), eset::of({3, 4})};
  CHECK_FALSE(is_biflag(m, make_bichain({bottom, top})));
  CHECK(is_biflag(m, bichain{}));
  for (const biflat& b : enumerate_biflats(m)) CHECK(is_biflag(m, bichain{b}));
}

TEST_CASE("gap condition on the six-edge fixture's non-flag witness") {
  matroid m = testutil::fixture("M_C");
  CHECK(gap_condition(m, bichain{}));
  biflat a{eset::of({1, 2}), m.ground()};
  biflat b{eset::of({1, 2, 3, 4}), eset::of({3, 4, 5, 6})};
  biflat c{m.ground(), eset::of({5, 6})};
  CHECK_FALSE(gap_condition(m, make_bichain({a, b, c})));
  CHECK(gap_condition(m, make_bichain({a, b})));
  CHECK(gap_condition(m, make_bichain({b, c})));
  CHECK(gap_condition(m, make_bichain({a, c})));
}

TEST_CASE("non-chain input is rejected") {
  matroid m = testutil::fixture("M_A");
  biflat x{eset::of({3}), m.ground()};
  biflat y{eset::of({4}), m.ground()};
  CHECK_THROWS_AS(make_bichain({x, y}), error);
  CHECK_THROWS_AS(is_biflag(m, bichain{x, y}), error);
  CHECK_THROWS_AS(gap_condition(m, bichain{x, y}), error);
}

TEST_CASE("biflag and gap condition agree on every fixture bichain") {
  for (const char* name : {"M_A", "M_B", "M_C"}) {
    matroid m = testutil::fixture(name);
    for (const bichain& c : all_bichains(m)) CHECK(is_biflag(m, c) == gap_condition(m, c));
  }
}

TEST_CASE("biflag and gap condition agree on random bichains") {
  std::mt19937 rng(20240707);
  for (int i = 0; i < 60; ++i) {
    matroid m = testutil::random_graphic(rng, 7);
    for (int j = 0; j < 30; ++j) {
      bichain c = testutil::random_bichain(rng, m);
      CHECK(is_biflag(m, c) == gap_condition(m, c));
    }
  }
}

TEST_CASE("non-biflag bichain counts") {
  CHECK(non_biflag_count(testutil::fixture("M_A")) == 2);
  CHECK(non_biflag_count(testutil::fixture("M_B")) == 16);
  CHECK(non_biflag_count(testutil::fixture("M_C")) == 228);
}

TEST_CASE("non-biflag count equals biflats-complex faces minus conormal faces") {
  for (const char* name : {"M_A", "M_B", "M_C"}) {
    matroid m = testutil::fixture(name);
    CHECK(non_biflag_count(m) ==
          biflats_complex(m).face_count() - conormal_complex(m).face_count());
  }
}

TEST_CASE("conormal complex of the doubled-edge triangle") {
  simplicial_complex cn = conormal_complex(testutil::fixture("M_A"));
  CHECK(cn.f_vector() == std::vector<std::size_t>{7, 10});
  CHECK_FALSE(cn.has_face_labels({"1,2|1,2,3,4", "1,2,3,4|3,4"}));
  CHECK(cn.is_flag());  // its only minimal non-face is that missing edge
}

TEST_CASE("conormal complex of the K4-minus-edge fixture deletes exactly two stars") {
  matroid m = testutil::fixture("M_B");
  simplicial_complex bf = biflats_complex(m);
  simplicial_complex cn = conormal_complex(m);
  CHECK_FALSE(cn.has_face_labels({"1,2,5|1,2,3,4,5", "1,2,3,4,5|3,4"}));
  CHECK_FALSE(cn.has_face_labels({"3,4,5|1,2,3,4,5", "1,2,3,4,5|1,2"}));
  // Every deleted chain contains one of the two minimal non-biflag bichains.
  for (const face& f : bf.faces()) {
    if (cn.has_face_labels(bf.face_labels(f))) continue;
    auto labels = bf.face_labels(f);
    std::set<std::string> s(labels.begin(), labels.end());
    bool covers = (s.count("1,2,5|1,2,3,4,5") && s.count("1,2,3,4,5|3,4")) ||
                  (s.count("3,4,5|1,2,3,4,5") && s.count("1,2,3,4,5|1,2"));
    CHECK(covers);
  }
}

TEST_CASE("the six-edge fixture's biflat poset is not ranked") {
  matroid m = testutil::fixture("M_C");
  biflat_poset bp(m, false);
  auto covers = bp.cover_pairs();
  auto is_cover = [&](const biflat& lo, const biflat& hi) {
    for (auto [i, j] : covers)
      if (bp.elements()[i] == lo && bp.elements()[j] == hi) return true;
    return false;
  };
  biflat a{eset::of({1, 2, 6}), m.ground()};
  biflat b{eset::of({1, 2, 6}), eset::of({3, 4, 5, 6})};
  biflat c{m.ground(), eset::of({3, 4, 5, 6})};
  biflat d{m.ground(), eset::of({5, 6})};
  biflat e{m.ground(), eset::of({2, 5, 6})};
  // Two saturated chains between the same endpoints with different lengths.
  CHECK(is_cover(a, b));
  CHECK(is_cover(b, c));
  CHECK(is_cover(c, d));
  CHECK(is_cover(a, e));
  CHECK(is_cover(e, d));
}

TEST_CASE("biflat poset converts to a valid poset") {
  matroid m = testutil::fixture("M_A");
  poset p = biflat_poset(m, false).to_poset();
  CHECK(p.size() == 7);
  CHECK(order_complex(p) == biflats_complex(m));
}
