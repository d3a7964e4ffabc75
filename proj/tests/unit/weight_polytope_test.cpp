#include "toric/weight_polytope.hpp"

#include <doctest.h>

#include <algorithm>

using namespace toric;

namespace {

ToricData data_for(std::vector<Point> v) {
  return ToricData::compute(LatticePolytope::from_vertices(v));
}

Lifting lift(std::vector<std::int64_t> h) {
  return Lifting::normalized(std::span<const std::int64_t>(h));
}

}  // namespace

TEST_CASE("weight polytopes of [0,2]") {
  const auto d = data_for({{0}, {2}});
  CHECK(d.regular.size() == 2);
  CHECK(d.chow.vertices == std::vector<IntVector>{{1, 2, 1}, {2, 0, 2}});
  CHECK(d.hurwitz.vertices == std::vector<IntVector>{{0, 2, 0}, {1, 0, 1}});
  CHECK(d.chow.affine_dim == 1);
  CHECK(d.chow.ambient_dim == 3);
  CHECK(contains(d.chow, IntVector{3, 2, 3}) == false);
  CHECK(contains(d.chow, IntVector{1, 2, 1}));
  CHECK_FALSE(contains(d.chow, IntVector{1, 1, 1}));

  const auto hu = support_min(d.hurwitz, lift({0, -1, 0}).heights);
  CHECK(hu.value == -2);
  CHECK(hu.argmin == std::vector<IntVector>{{0, 2, 0}});
  const auto ch = support_min(d.chow, lift({0, -1, 0}).heights);
  CHECK(ch.value == -2);
  CHECK(ch.argmin == std::vector<IntVector>{{1, 2, 1}});
  const auto zero = support_min(d.chow, std::vector<Integer>{0, 0, 0});
  CHECK(zero.value == 0);
  CHECK(zero.argmin == d.chow.vertices);
}

TEST_CASE("weight polytopes of the unit square") {
  const auto d = data_for({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(d.hurwitz.vertices == std::vector<IntVector>{{0, 2, 2, 0}, {2, 0, 0, 2}});
  CHECK(d.chow.vertices == std::vector<IntVector>{{1, 2, 2, 1}, {2, 1, 1, 2}});
}

TEST_CASE("every regular triangulation of a segment gives a vertex") {
  const auto d = data_for({{0}, {4}});
  CHECK(d.regular.size() == 8);
  CHECK(d.chow.vertices.size() == 8);
  CHECK(d.chow.affine_dim == 3);
}

TEST_CASE("support checks") {
  const auto seg = data_for({{0}, {2}});
  const auto c = verify_chow_support(seg, lift({0, -1, 0}));
  CHECK(c.status == CheckStatus::pass);
  CHECK(c.polytope_min == -2);
  CHECK(c.triangulation_value == -2);
  const auto h = verify_hurwitz_support(seg, lift({0, -1, 0}));
  CHECK(h.status == CheckStatus::pass);
  CHECK(h.polytope_min == -2);
  CHECK(verify_chow_support(seg, lift({0, 0, 0})).status == CheckStatus::inapplicable);
  CHECK(verify_hurwitz_support(seg, lift({0, 0, 0})).status == CheckStatus::inapplicable);

  const auto sq = data_for({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto diag = verify_hurwitz_support(sq, lift({-1, 0, 0, -1}));
  CHECK(diag.status == CheckStatus::pass);
  CHECK(diag.argmin == std::vector<IntVector>{{2, 0, 0, 2}});
}

TEST_CASE("witness liftings select exactly their own vertex") {
  for (const auto& v : {std::vector<Point>{{0}, {3}}, std::vector<Point>{{0, 0}, {2, 0}, {0, 2}}}) {
    const auto d = data_for(v);
    for (const auto& r : d.regular) {
      const auto c = verify_chow_support(d, r.witness);
      REQUIRE(c.status == CheckStatus::pass);
      CHECK(c.argmin == std::vector<IntVector>{gkz_vector(r.triangulation).entries});
      CHECK(verify_hurwitz_support(d, r.witness).status == CheckStatus::pass);
    }
  }
}

TEST_CASE("identity suites") {
  for (const auto& v : {std::vector<Point>{{0}, {2}}, std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {1, 1}},
                        std::vector<Point>{{0, 0}, {2, 0}, {0, 2}}}) {
    const auto d = data_for(v);
    const auto rep = verify_identities(d, 10, 1);
    CHECK(rep.passed());
    CHECK(rep.checks > 0);
    const auto sweep = verify_support_random(d, 50, 2);
    CHECK(sweep.applicable == 50);
    CHECK(sweep.report.passed());
  }
}

TEST_CASE("identity sides for the hand-traced examples") {
  const auto seg = data_for({{0}, {2}});
  const auto fine = make_triangulation({{0, 1}, {1, 2}}, seg.points);
  const auto s = identity_sides(seg, fine, pl_on_triangulation(fine, seg.points, {0, 0, 1}));
  CHECK(s.holds());
  CHECK(s.f_scaled == 2);  // 2! * 2 * 1/2
  CHECK(s.hurwitz_pairing == 2);

  const auto d = data_for({{0, 0}, {2, 0}, {0, 2}});
  for (const auto& r : d.regular) {
    RationalVector x1;
    for (const auto& p : d.points.points()) x1.emplace_back(static_cast<long>(p[0]));
    const auto t = identity_sides(d, r.triangulation, pl_on_triangulation(r.triangulation, d.points, x1));
    CHECK(t.holds());
    CHECK(t.f_scaled == 0);
    CHECK(t.hurwitz_pairing == 0);
  }
}

TEST_CASE("seeded generator is reproducible") {
  SeededRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform(-5, 5) == b.uniform(-5, 5));
  SeededRng c(1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = c.uniform(-3, 2);
    CHECK(x >= -3);
    CHECK(x <= 2);
  }
}
