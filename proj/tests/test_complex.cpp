#include <random>

#include "doctest.h"
#include "lagrangian/biflats.hpp"
#include "lagrangian/homology.hpp"
#include "lagrangian/simplicial_complex.hpp"
#include "util.hpp"

using namespace lagrangian;

namespace {

poset random_poset(std::mt19937& rng, int max_elems) {
  std::uniform_int_distribution<int> n_dist(1, max_elems);
  int n = n_dist(rng);
  std::vector<std::string> elems;
  for (int i = 0; i < n; ++i) elems.push_back("p" + std::to_string(i));
  // Random relations on a shuffled index order keep the closure acyclic.
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(0.35);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng))
        pairs.emplace_back(elems[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                           elems[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
  return poset(std::move(elems), pairs);
}

}  // namespace

TEST_CASE("order complex of an antichain is isolated points") {
  poset p({"a", "b", "c"}, std::vector<std::pair<std::string, std::string>>{});
  simplicial_complex c = order_complex(p);
  CHECK(c.f_vector() == std::vector<std::size_t>{3});
  CHECK(c.dimension() == 0);
}

TEST_CASE("order complex of a total order is a simplex") {
  poset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  simplicial_complex c = order_complex(p);
  CHECK(c.f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(c.dimension() == 2);
}

TEST_CASE("biflats complex of the doubled-edge triangle has f = (7,11,1)") {
  simplicial_complex c = biflats_complex(testutil::fixture("M_A"));
  CHECK(c.f_vector() == std::vector<std::size_t>{7, 11, 1});
}

TEST_CASE("join identities") {
  simplicial_complex a = simplicial_complex::from_facet_labels({{"x", "y"}});
  simplicial_complex empty;
  CHECK(join(a, empty) == a);

  simplicial_complex p3a = simplicial_complex::from_facet_labels({{"a0"}, {"a1"}, {"a2"}});
  simplicial_complex p3b = simplicial_complex::from_facet_labels({{"b0"}, {"b1"}, {"b2"}});
  simplicial_complex j = join(p3a, p3b);
  CHECK(j.f_vector() == std::vector<std::size_t>{6, 9});

  CHECK_THROWS_AS(join(a, a), error);
}

TEST_CASE("reduced Euler characteristic is multiplicative under join") {
  std::mt19937 rng(20240703);
  for (int i = 0; i < 25; ++i) {
    simplicial_complex a = testutil::random_complex(rng, 5, "a");
    simplicial_complex b = testutil::random_complex(rng, 5, "b");
    CHECK(reduced_euler(join(a, b)) == -reduced_euler(a) * reduced_euler(b));
  }
}

TEST_CASE("link of the empty face is the complex itself") {
  simplicial_complex c = biflats_complex(testutil::fixture("M_A"));
  CHECK(c.link(face{}) == c);
}

TEST_CASE("link of the mixed biflat in the doubled-edge triangle complex") {
  matroid m = testutil::fixture("M_A");
  simplicial_complex c = biflats_complex(m);
  simplicial_complex lk = c.link(c.face_from_labels({"1,2|3,4"}));
  CHECK(lk.face_count() == 4);  // ∅, two vertices, one edge
  CHECK(lk.has_face_labels({"1,2|1,2,3,4", "1,2,3,4|3,4"}));
}

TEST_CASE("deletion equals complex minus open star, and commutes") {
  std::mt19937 rng(20240704);
  for (int i = 0; i < 25; ++i) {
    simplicial_complex c = testutil::random_complex(rng, 6);
    auto faces = c.faces_sorted();
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    face f = faces[pick(rng)];
    face g = faces[pick(rng)];
    if (f.empty() || g.empty()) continue;

    simplicial_complex del = c.deletion(f);
    CHECK(del.face_count() + c.open_star(f).size() == c.face_count());

    auto fl = c.face_labels(f);
    auto gl = c.face_labels(g);
    simplicial_complex fg = c.deletion(f);
    simplicial_complex gf = c.deletion(g);
    if (fg.has_face_labels(gl) && gf.has_face_labels(fl))
      CHECK(fg.deletion(fg.face_from_labels(gl)) == gf.deletion(gf.face_from_labels(fl)));
  }
}

TEST_CASE("purity and dimensions of the fixture complexes") {
  matroid ma = testutil::fixture("M_A");
  simplicial_complex bf = biflats_complex(ma);
  CHECK_FALSE(bf.is_pure());  // facet cardinalities 2 and 3
  CHECK(bf.max_facet_cardinality() == 3);

  simplicial_complex cn = conormal_complex(testutil::fixture("M_B"));
  CHECK(cn.is_pure());
  CHECK(cn.max_facet_cardinality() == 3);

  simplicial_complex simplex = simplicial_complex::from_facet_labels({{"a", "b", "c", "d"}});
  CHECK(simplex.is_pure());
  CHECK(simplex.dimension() == 3);

  simplicial_complex empty;
  CHECK_THROWS_AS(empty.is_pure(), error);
  CHECK_THROWS_AS(empty.dimension(), error);
}

TEST_CASE("minimal non-faces and flagness") {
  // Boundary of a triangle: the only minimal non-face is the full 3-set.
  simplicial_complex tri =
      simplicial_complex::from_facet_labels({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto nf = tri.minimal_nonfaces();
  REQUIRE(nf.size() == 1);
  CHECK(tri.face_labels(nf[0]) == std::vector<std::string>{"a", "b", "c"});
  CHECK_FALSE(tri.is_flag());

  CHECK(biflats_complex(testutil::fixture("M_A")).is_flag());

  // Order complexes are always flag.
  std::mt19937 rng(20240705);
  for (int i = 0; i < 40; ++i) CHECK(order_complex(random_poset(rng, 7)).is_flag());
}

TEST_CASE("conormal complex of the six-edge fixture is not flag") {
  simplicial_complex cn = conormal_complex(testutil::fixture("M_C"));
  CHECK_FALSE(cn.is_flag());
  bool witness_found = false;
  for (const face& nf : cn.minimal_nonfaces()) {
    auto labels = cn.face_labels(nf);
    std::sort(labels.begin(), labels.end());
    if (labels == std::vector<std::string>{"1,2,3,4,5,6|5,6", "1,2,3,4|3,4,5,6",
                                           "1,2|1,2,3,4,5,6"})
      witness_found = true;
  }
  CHECK(witness_found);
}

TEST_CASE("Bergman complexes of the fixtures") {
  matroid ma = testutil::fixture("M_A");
  CHECK(bergman_complex(ma).f_vector() == std::vector<std::size_t>{3});
  CHECK(bergman_complex(ma.dual()).f_vector() == std::vector<std::size_t>{3});
  CHECK(bergman_complex(uniform(2, 4)).f_vector() == std::vector<std::size_t>{4});
}

TEST_CASE("join of the two Bergman complexes has max cardinality |E|-2") {
  for (const char* name : {"M_A", "M_B", "M_C"}) {
    matroid m = testutil::fixture(name);
    simplicial_complex j = unmixed_join_isomorphism(m).join_complex;
    CHECK(j.max_facet_cardinality() == m.ground_size() - 2);
  }
  matroid u = uniform(2, 4);
  CHECK(unmixed_join_isomorphism(u).join_complex.max_facet_cardinality() ==
        u.ground_size() - 2);
}

TEST_CASE("complex export and import round-trip") {
  std::mt19937 rng(20240706);
  for (int i = 0; i < 20; ++i) {
    simplicial_complex c = testutil::random_complex(rng, 6);
    CHECK(parse_complex(export_complex(c)) == c);
  }
  simplicial_complex bf = biflats_complex(testutil::fixture("M_C"));
  CHECK(parse_complex(export_complex(bf)) == bf);
}
