#include "brute_force.hpp"
#include "toric/triangulation.hpp"
#include "toric/weight_polytope.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace toric;

namespace {

struct Setup {
  LatticePolytope q;
  PointConfiguration a;
  explicit Setup(std::vector<Point> v)
      : q(LatticePolytope::from_vertices(v)), a(lattice_points(q)) {}
};

std::vector<Point> segment() { return {{0}, {2}}; }
std::vector<Point> segment3() { return {{0}, {3}}; }
std::vector<Point> square() { return {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; }
std::vector<Point> doubled() { return {{0, 0}, {2, 0}, {0, 2}}; }
std::vector<Point> grid3() { return {{0, 0}, {2, 0}, {0, 2}, {2, 2}}; }

using Key = std::vector<Cell>;

std::set<Key> keys(const std::vector<RegularTriangulation>& r) {
  std::set<Key> out;
  for (const auto& t : r) out.insert(t.triangulation.key());
  return out;
}

}  // namespace

TEST_CASE("placing triangulations") {
  const Setup s(segment());
  const std::vector<std::size_t> in_order{0, 1, 2}, midpoint_last{0, 2, 1};
  CHECK(placing_triangulation(s.a, in_order).key() == Key{{0, 1}, {1, 2}});
  CHECK(placing_triangulation(s.a, midpoint_last).key() == Key{{0, 2}});

  // Lexicographic placing on the square cones (1,1) over the edge {(0,1),(1,0)}.
  const Setup sq(square());
  CHECK(placing_triangulation(sq.a).key() == Key{{0, 1, 2}, {1, 2, 3}});

  const Setup d(doubled());
  const auto t = placing_triangulation(d.a);
  CHECK(t.total_volume() == 4);
  CHECK(t.used_points().size() == 6);
}

TEST_CASE("lower hull subdivisions") {
  const Setup s(segment());
  auto hull = [&](std::vector<std::int64_t> h) {
    return lower_hull_subdivision(s.a, Lifting::normalized(std::span<const std::int64_t>(h)));
  };
  auto fine = hull({0, -1, 0});
  CHECK(fine.is_triangulation);
  CHECK(fine.cells == Key{{0, 1}, {1, 2}});
  auto flat = hull({0, 0, 0});
  CHECK_FALSE(flat.is_triangulation);
  CHECK(flat.cells == Key{{0, 1, 2}});
  auto coarse = hull({0, 1, 0});
  CHECK(coarse.is_triangulation);
  CHECK(coarse.cells == Key{{0, 2}});
  REQUIRE(coarse.affine.size() == 1);
  CHECK(coarse.affine[0] == RationalVector{0, -1});

  CHECK(Lifting::normalized(std::vector<Integer>{0, 1, 0}).heights ==
        std::vector<Integer>{-1, 0, -1});
}

TEST_CASE("barycentric coordinates") {
  const Setup d(doubled());
  const Cell big{0, 2, 5};  // (0,0) (0,2) (2,0)
  const auto b = barycentric(d.a, big, std::vector<std::int64_t>{1, 1});
  REQUIRE(b);
  CHECK(*b == RationalVector{0, make_rational(1, 2), make_rational(1, 2)});
  CHECK_FALSE(barycentric(d.a, Cell{0, 1, 3}, std::vector<std::int64_t>{2, 0}));
}

TEST_CASE("regularity certificates on [0,2]") {
  const Setup s(segment());
  const auto fine = make_triangulation({{0, 1}, {1, 2}}, s.a);
  const auto c1 = is_regular(fine, s.a);
  REQUIRE(c1.regular);
  // 2 l1 < l0 + l2
  CHECK(2 * c1.witness.heights[1] < c1.witness.heights[0] + c1.witness.heights[2]);
  const auto coarse = make_triangulation({{0, 2}}, s.a);
  const auto c2 = is_regular(coarse, s.a);
  REQUIRE(c2.regular);
  CHECK(2 * c2.witness.heights[1] > c2.witness.heights[0] + c2.witness.heights[2]);
  for (const auto* c : {&c1, &c2})
    CHECK(*std::ranges::max_element(c->witness.heights) == 0);
}

TEST_CASE("an irregular triangulation found by exhaustive search") {
  // Outer triangle conv{(0,0),(4,0),(0,4)} and the inner triangle
  // (1,1),(2,1),(1,2): the two twisted triangulations are not regular.
  const auto q = LatticePolytope::from_vertices(std::vector<Point>{{0, 0}, {4, 0}, {0, 4}});
  const PointConfiguration a({{0, 0}, {4, 0}, {0, 4}, {1, 1}, {2, 1}, {1, 2}});
  // a: 0 (0,0)  1 (0,4)  2 (1,1)  3 (1,2)  4 (2,1)  5 (4,0)
  const auto all = oracle::all_triangulations(q, a);
  CHECK(all.size() == 18);
  std::set<Key> irregular;
  for (const auto& cells : all) {
    const auto t = make_triangulation(cells, a);
    const auto cert = is_regular(t, a);
    if (cert.regular) {
      const auto sub = lower_hull_subdivision(a, cert.witness);
      CHECK(sub.is_triangulation);
      CHECK(make_triangulation(sub.cells, a) == t);
      continue;
    }
    irregular.insert(t.key());
    REQUIRE_FALSE(cert.infeasible.empty());
    LinearSystem core(cert.system.dim());
    for (auto i : cert.infeasible) {
      const auto& c = cert.system.constraints()[i];
      core.add(c.coeffs, c.relation, c.rhs);
    }
    CHECK_FALSE(feasible_strict(core));
  }
  const std::set<Key> expected{
      {{0, 1, 2}, {0, 2, 4}, {0, 4, 5}, {1, 2, 3}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}},
      {{0, 1, 3}, {0, 2, 3}, {0, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}}};
  CHECK(irregular == expected);
}

TEST_CASE("circuits") {
  const Setup sq(square());
  const auto c = circuits(sq.a);
  REQUIRE(c.size() == 1);
  CHECK(c[0].positive == Cell{0, 3});
  CHECK(c[0].negative == Cell{1, 2});
  const Setup s(segment());
  const auto cs = circuits(s.a);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].support() == Cell{0, 1, 2});
  CHECK(circuits(Setup(segment3()).a).size() == 4);
}

TEST_CASE("flips") {
  const Setup sq(square());
  const auto t = placing_triangulation(sq.a);
  const auto f = flips(t, sq.a);
  REQUIRE(f.size() == 1);
  CHECK(f[0].result.key() == Key{{0, 1, 3}, {0, 2, 3}});

  const Setup s(segment());
  const auto fine = make_triangulation({{0, 1}, {1, 2}}, s.a);
  const auto fs = flips(fine, s.a);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].result.key() == Key{{0, 2}});
  CHECK_FALSE(fs[0].result.uses(1));
}

TEST_CASE("flip twice is the identity") {
  for (const auto& v : {segment(), segment3(), square(), doubled(), grid3()}) {
    const Setup s(v);
    const auto all = circuits(s.a);
    for (const auto& r : enumerate_regular(s.q, s.a)) {
      for (const auto& f : flips(r.triangulation, s.a, all)) {
        CHECK(f.result.total_volume() == volume(s.q));
        const auto back = flip(f.result, s.a, f.circuit.reversed());
        REQUIRE(back);
        CHECK(*back == r.triangulation);
      }
    }
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_regular(Setup(segment()).q, Setup(segment()).a).size() == 2);
  CHECK(enumerate_regular(Setup(square()).q, Setup(square()).a).size() == 2);
  CHECK(enumerate_regular(Setup(segment3()).q, Setup(segment3()).a).size() == 4);
  const Setup d(doubled());
  CHECK(enumerate_regular(d.q, d.a).size() == 14);
  const Setup g(grid3());
  CHECK(enumerate_regular(g.q, g.a).size() == 387);
}

TEST_CASE("enumeration agrees with exhaustive search on small configurations") {
  for (const auto& v : {segment(), segment3(), square(), doubled(), grid3()}) {
    const Setup s(v);
    std::set<Key> regular;
    for (const auto& cells : oracle::all_triangulations(s.q, s.a)) {
      CHECK(oracle::is_triangulation(cells, s.q, s.a));
      if (is_regular(make_triangulation(cells, s.a), s.a).regular) regular.insert(cells);
    }
    CHECK(keys(enumerate_regular(s.q, s.a)) == regular);
  }
}

TEST_CASE("certificates reproduce their triangulation") {
  for (const auto& v : {segment(), segment3(), square(), doubled(), grid3()}) {
    const Setup s(v);
    for (const auto& r : enumerate_regular(s.q, s.a)) {
      CHECK(r.triangulation.total_volume() == volume(s.q));
      CHECK(*std::ranges::max_element(r.witness.heights) == 0);
      const auto sub = lower_hull_subdivision(s.a, r.witness);
      CHECK(sub.is_triangulation);
      CHECK(make_triangulation(sub.cells, s.a) == r.triangulation);
    }
  }
}

TEST_CASE("the enumerated set does not depend on the seed") {
  SeededRng rng(3);
  for (const auto& v : {segment3(), square(), doubled(), grid3()}) {
    const Setup s(v);
    const auto reference = keys(enumerate_regular(s.q, s.a));
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::size_t> order(s.a.size());
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
      EnumerationOptions opt;
      opt.seed_order = order;
      CHECK(keys(enumerate_regular(s.q, s.a, opt)) == reference);
    }
  }
}

TEST_CASE("random liftings induce enumerated triangulations") {
  const Setup d(doubled());
  const auto reference = keys(enumerate_regular(d.q, d.a));
  SeededRng rng(5);
  int simplicial = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> h(d.a.size());
    for (auto& x : h) x = rng.uniform(-10, 0);
    const auto sub = lower_hull_subdivision(d.a, Lifting::normalized(std::span<const std::int64_t>(h)));
    if (!sub.is_triangulation) continue;
    ++simplicial;
    CHECK(reference.contains(make_triangulation(sub.cells, d.a).key()));
  }
  CHECK(simplicial >= 100);
}

TEST_CASE("caps are reported, never truncated silently") {
  const Setup sq(square());
  EnumerationOptions opt;
  opt.max_triangulations = 1;
  CHECK_THROWS_AS(enumerate_regular(sq.q, sq.a, opt), IncompleteEnumeration);
  opt.max_triangulations = 2;
  CHECK(enumerate_regular(sq.q, sq.a, opt).size() == 2);
  EnumerationOptions timed;
  timed.time_budget = std::chrono::duration<double>(0);
  const Setup g(grid3());
  CHECK_THROWS_AS(enumerate_regular(g.q, g.a, timed), IncompleteEnumeration);
}

TEST_CASE("skeletons and walls") {
  const Setup sq(square());
  const auto t = placing_triangulation(sq.a);
  CHECK(t.faces(0).size() == 4);
  CHECK(t.faces(1).size() == 5);
  CHECK(t.faces(2).size() == 2);
  const auto walls = t.interior_walls();
  REQUIRE(walls.size() == 1);
  CHECK(walls[0].face == Cell{1, 2});
  CHECK(std::set<std::size_t>{walls[0].apex_left, walls[0].apex_right} ==
        std::set<std::size_t>{0, 3});
}
