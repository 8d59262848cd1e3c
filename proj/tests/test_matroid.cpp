#include <random>

#include "doctest.h"
#include "lagrangian/matroid.hpp"
#include "util.hpp"

using namespace lagrangian;

namespace {

// Independent closure oracle for graphic matroids: rank of S is the number
// of touched vertices minus the number of components, closure collected by
// brute force over all edges.
struct graphic_oracle {
  std::vector<std::pair<int, int>> ends;
  int nv;

  int rank(eset s) const {
    std::vector<int> parent(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    // Touched vertices minus components = spanning-forest edges = merges.
    int merges = 0;
    for (int e : s.elements()) {
      auto [u, v] = ends[static_cast<std::size_t>(e - 1)];
      if (find(u) != find(v)) {
        parent[static_cast<std::size_t>(find(u))] = find(v);
        ++merges;
      }
    }
    return merges;
  }

  std::vector<eset> flats(int n) const {
    std::vector<eset> out;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      eset s(mask);
      bool closed = true;
      for (int e = 1; e <= n && closed; ++e)
        if (!s.contains(e) && rank(s.with(e)) == rank(s)) closed = false;
      if (closed) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }
};

}  // namespace

TEST_CASE("parsing the doubled-edge triangle fixture") {
  matroid m = testutil::fixture("M_A");
  CHECK(m.ground_size() == 4);
  CHECK(m.flats().size() == 5);
  CHECK(m.is_flat(eset::of({1, 2})));
  CHECK_FALSE(m.is_flat(eset::of({1})));
}

TEST_CASE("free matroid on two elements parses") {
  matroid m = parse_matroid("ground 2\nflat\nflat 1\nflat 2\nflat 1 2\n");
  CHECK(m.rank() == 2);
  CHECK(m.has_coloops());  // both elements are coloops; parse still accepts it
  CHECK_THROWS_AS(m.dual(), axiom_error);
}

TEST_CASE("cover-partition violation is reported with a witness") {
  CHECK_THROWS_WITH_AS(parse_matroid("ground 4\nflat\nflat 1 2\nflat 1 2 3 4\n"),
                       doctest::Contains("cover-partition"), axiom_error);
}

TEST_CASE("syntax errors carry line numbers") {
  try {
    parse_matroid("ground 4\nflat 1\nflats 2\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("missing empty flat means loops") {
  CHECK_THROWS_WITH_AS(parse_matroid("ground 2\nflat 1\nflat 1 2\n"),
                       doctest::Contains("loops"), axiom_error);
}

TEST_CASE("intersection axiom violation names the witnesses") {
  // {1,2} and {2,3} meet in {2}, which is missing.
  CHECK_THROWS_WITH_AS(
      parse_matroid("ground 3\nflat\nflat 1 2\nflat 2 3\nflat 1 2 3\n"),
      doctest::Contains("intersection"), axiom_error);
}

TEST_CASE("graphic matroid of the doubled-edge triangle") {
  matroid m = from_graph(parse_graph(testutil::read_fixture("M_A.graph")));
  CHECK(m == testutil::fixture("M_A"));

  // Brute-force closure oracle over all 16 edge subsets.
  graphic_oracle oracle{{{0, 1}, {0, 1}, {1, 2}, {2, 0}}, 3};
  CHECK(m.flats() == oracle.flats(4));
}

TEST_CASE("graph fixtures reproduce the matroid fixtures") {
  for (const char* name : {"M_B", "M_C"}) {
    matroid from_g =
        from_graph(parse_graph(testutil::read_fixture(std::string(name) + ".graph")));
    CHECK(from_g == testutil::fixture(name));
  }
}

TEST_CASE("single edge is rejected as a coloop") {
  CHECK_THROWS_WITH_AS(from_graph({{1, "u", "v"}}), doctest::Contains("coloop"), error);
}

TEST_CASE("self-loop is rejected") {
  CHECK_THROWS_WITH_AS(from_graph({{1, "u", "u"}, {2, "u", "v"}, {3, "u", "v"}}),
                       doctest::Contains("loop"), error);
}

TEST_CASE("four-cycle is the rank-3 uniform matroid") {
  matroid m = from_graph({{1, "a", "b"}, {2, "b", "c"}, {3, "c", "d"}, {4, "d", "a"}});
  CHECK(m == uniform(3, 4));
  CHECK(m.rank() == 3);

  graphic_oracle oracle{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4};
  CHECK(m.flats() == oracle.flats(4));
}

TEST_CASE("uniform matroids") {
  matroid u24 = uniform(2, 4);
  CHECK(u24.flats().size() == 6);  // empty, four singletons, ground
  CHECK(u24 == testutil::fixture("U24"));
  CHECK(uniform(1, 2).flats().size() == 2);
  CHECK_THROWS_AS(uniform(0, 3), error);
  CHECK_THROWS_AS(uniform(3, 3), error);
}

TEST_CASE("closure on the fixtures") {
  matroid m = testutil::fixture("M_A");
  CHECK(m.closure(eset::of({1})) == eset::of({1, 2}));
  CHECK(m.closure(eset()) == eset());
  CHECK(m.closure(m.ground()) == m.ground());
}

TEST_CASE("rank on the fixtures") {
  matroid m = testutil::fixture("M_A");
  CHECK(m.rank(eset::of({1, 2})) == 1);
  CHECK(m.rank(m.ground()) == 2);
  CHECK(m.rank(eset()) == 0);
}

TEST_CASE("dual of the doubled-edge triangle") {
  matroid md = testutil::fixture("M_A").dual();
  std::vector<eset> expect = {eset(), eset::of({1}), eset::of({2}), eset::of({3, 4}),
                              eset::full(4)};
  std::sort(expect.begin(), expect.end(), canonical_less);
  CHECK(md.flats() == expect);
  CHECK(testutil::fixture("M_A").dual_rank_of(eset::of({3, 4})) == 1);
}

TEST_CASE("uniform(2,4) is self-dual") {
  matroid u = uniform(2, 4);
  CHECK(u.dual() == u);
}

TEST_CASE("lattice of flats") {
  matroid m = testutil::fixture("M_A");
  flat_lattice lat = flats_lattice(m);
  CHECK(lat.rank_of(eset()) == 0);
  CHECK(lat.rank_of(eset::of({1, 2})) == 1);
  CHECK(lat.rank_of(eset::of({3})) == 1);
  CHECK(lat.rank_of(m.ground()) == 2);
  CHECK(lat.corank_of(eset::of({3})) == 1);

  flat_lattice u = flats_lattice(uniform(2, 4));
  int atoms = 0;
  for (std::size_t i = 0; i < u.flats.size(); ++i) atoms += u.ranks[i] == 1;
  CHECK(atoms == 4);
  CHECK(u.matroid_rank == 2);
}

TEST_CASE("the dual lattice of the six-edge fixture") {
  matroid md = testutil::fixture("M_C").dual();
  std::vector<eset> proper;
  for (eset f : md.flats())
    if (!f.empty() && f != md.ground()) proper.push_back(f);
  std::vector<eset> expect = {
      eset::of({1}),          eset::of({2}),       eset::of({3}),
      eset::of({4}),          eset::of({5, 6}),    eset::of({1, 4}),
      eset::of({2, 4}),       eset::of({1, 2, 3}), eset::of({1, 5, 6}),
      eset::of({2, 5, 6}),    eset::of({3, 4, 5, 6})};
  std::sort(expect.begin(), expect.end(), canonical_less);
  CHECK(proper == expect);
}

TEST_CASE("dual involution and rank identity on fixtures and random matroids") {
  std::mt19937 rng(20240701);
  std::vector<matroid> samples = {testutil::fixture("M_A"), testutil::fixture("M_B"),
                                  testutil::fixture("M_C"), uniform(2, 4)};
  for (int i = 0; i < 100; ++i) samples.push_back(testutil::random_graphic(rng, 7));
  for (const matroid& m : samples) {
    matroid md = m.dual();
    CHECK(md.dual() == m);
    CHECK(m.rank() + md.rank() == m.ground_size());
  }
}

TEST_CASE("closure is extensive, monotone and idempotent") {
  std::mt19937 rng(20240702);
  for (int i = 0; i < 30; ++i) {
    matroid m = testutil::random_graphic(rng, 7);
    std::uniform_int_distribution<std::uint64_t> dist(0, m.ground().bits());
    for (int j = 0; j < 20; ++j) {
      eset s(dist(rng) & m.ground().bits());
      eset t(dist(rng) & m.ground().bits());
      eset cs = m.closure(s);
      CHECK(s.subset_of(cs));
      CHECK(m.is_flat(cs));
      CHECK(m.closure(cs) == cs);
      if (s.subset_of(t)) CHECK(cs.subset_of(m.closure(t)));
    }
  }
}

TEST_CASE("adding a point to a flat raises rank") {
  for (const char* name : {"M_A", "M_B", "M_C"}) {
    matroid m = testutil::fixture(name);
    for (eset f : m.flats())
      for (int e = 1; e <= m.ground_size(); ++e)
        if (!f.contains(e)) CHECK(m.rank(f.with(e)) == m.rank(f) + 1);
  }
}

TEST_CASE("validation accepts every small uniform matroid") {
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; r <= n - 1; ++r) CHECK_NOTHROW(uniform(r, n));
}

TEST_CASE("matroid file round-trips") {
  for (const char* name : {"M_A", "M_B", "M_C"}) {
    matroid m = testutil::fixture(name);
    CHECK(parse_matroid(to_matroid_file(m)) == m);
    CHECK(parse_matroid(to_matroid_file(m.dual())) == m.dual());
  }
}
