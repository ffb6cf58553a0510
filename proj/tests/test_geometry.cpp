#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace coamoeba;
using coamoeba::fixtures::example_i;
using coamoeba::fixtures::example_ii;
using coamoeba::fixtures::example_iii;

namespace {

PolyCycle unit_square() { return PolyCycle{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}; }

PiPoint pt(long long x, long long y) { return {Rat(x), Rat(y)}; }

// Scan a rational grid for a point of Gamma_0 multiplicity `want`.
std::optional<PiPoint> find_multiplicity(const CoamoebaChain& chain, int want) {
  for (int i = -60; i <= 60; ++i)
    for (int j = -60; j <= 60; ++j) {
      const PiPoint p{Rat(2 * i + 1, 20), Rat(2 * j + 1, 20)};
      try {
        if (chain.principal_multiplicity(p) == want) return p;
      } catch (const Error&) {
      }
    }
  return std::nullopt;
}

PiPoint random_point(std::mt19937_64& rng, int span) {
  std::uniform_int_distribution<int> num(-span * 97, span * 97);
  return {Rat(num(rng), 97), Rat(num(rng), 97)};
}

}  // namespace

TEST(StartPoint, QZero) {
  EXPECT_EQ(start_point_q0(example_i()), pt(-1, -1));
  EXPECT_EQ(start_point_q0(example_ii()), pt(-3, -2));
  EXPECT_EQ(start_point_q0(example_iii()), pt(0, -5));
}

TEST(StartPoint, PZero) {
  EXPECT_EQ(start_point_p0(example_i()), TorusPoint(1, 1));
  EXPECT_EQ(start_point_p0(example_ii()), TorusPoint(1, 0));
  EXPECT_EQ(start_point_p0(example_iii()), TorusPoint(0, 1));
  EXPECT_EQ(p0_lift(example_iii()), pt(0, 1));
}

TEST(TorusPoint, ReducesToFundamentalDomain) {
  const TorusPoint t(Rat(-1, 3), Rat(17, 5));
  EXPECT_EQ(t.theta1(), Rat(5, 3));
  EXPECT_EQ(t.theta2(), Rat(7, 5));
  EXPECT_EQ(TorusPoint(2, -2), TorusPoint(0, 0));
}

TEST(Gamma, ExampleOneTriangle) {
  const BMatrix b = example_i();
  const GammaCycles g = build_gamma(b, clockwise_order(b));
  EXPECT_EQ(g.plus.vertices, (std::vector<PiPoint>{pt(1, 1), pt(1, 2), pt(0, 1)}));
  EXPECT_EQ(g.minus.vertices, (std::vector<PiPoint>{pt(1, 1), pt(1, 0), pt(2, 1)}));
}

TEST(Gamma, ExampleThreeCycle) {
  const BMatrix b = example_iii();
  const GammaCycles g = build_gamma(b, clockwise_order(b));
  EXPECT_EQ(g.plus.vertices, (std::vector<PiPoint>{pt(0, 1), pt(1, 0), pt(0, 2), pt(0, 0), pt(1, 3)}));
}

TEST(Gamma, ZeroSumClassIsDropped) {
  const BMatrix b = validate_b(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {1, 1}, {-1, -2}});
  const GammaCycles g = build_gamma(b, clockwise_order(b));
  EXPECT_EQ(g.plus.edge_vectors(), (std::vector<PiPoint>{pt(0, 1), pt(-1, -2), pt(1, 1)}));
}

TEST(Gamma, AllClassesCancel) {
  const BMatrix b = validate_b(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  const CoamoebaChain chain(b);
  EXPECT_TRUE(chain.gamma().plus.vertices.empty());
  EXPECT_EQ(chain.multiplicity(), 1);
  EXPECT_EQ(chain.principal_multiplicity({Rat(1, 3), Rat(1, 5)}), 0);
  EXPECT_TRUE(cycle_identity_check(chain, 50, 3).ok());
}

TEST(Gamma, RandomStructure) {
  for (const BMatrix& b : fixtures::random_bs(200, 7, 3, 7, 5)) {
    const GammaCycles g = build_gamma(b, clockwise_order(b));
    ASSERT_EQ(g.plus.size(), g.minus.size());
    if (g.plus.vertices.empty()) continue;
    EXPECT_EQ(g.plus.vertices.front(), g.p0);
    PiPoint sum{0, 0};
    for (const PiPoint& e : g.plus.edge_vectors()) {
      EXPECT_FALSE(e.x == 0 && e.y == 0);
      sum = sum + e;
    }
    EXPECT_EQ(sum, pt(0, 0));
    for (std::size_t i = 0; i < g.plus.size(); ++i) {
      const PiPoint& v = g.plus.vertices[i];
      EXPECT_EQ(g.minus.vertices[i], (PiPoint{2 * g.p0.x - v.x, 2 * g.p0.y - v.y}));
    }
    EXPECT_TRUE(g.p0.x == 0 || g.p0.x == 1);
    EXPECT_TRUE(g.p0.y == 0 || g.p0.y == 1);
  }
}

TEST(Zonotope, ExampleOneHexagon) {
  const Zonotope z = build_zonotope(example_i());
  EXPECT_EQ(z.vertex_cycle.size(), 6u);
  EXPECT_EQ(z.vertex_cycle.twice_signed_area(), 6);
  EXPECT_EQ(z.q0, pt(-1, -1));
  EXPECT_EQ(z.vertex_cycle.vertices.front(), z.q0);
  EXPECT_EQ(z.halfplanes.size(), 3u);
}

TEST(Zonotope, ExampleTwoArea) {
  const Zonotope z = build_zonotope(example_ii());
  EXPECT_EQ(z.vertex_cycle.twice_signed_area(), 20);
}

TEST(Zonotope, RandomSymmetryAndMembership) {
  std::mt19937_64 rng(99);
  for (const BMatrix& b : fixtures::random_bs(60, 13, 3, 6, 4)) {
    const Zonotope z = build_zonotope(b);
    EXPECT_GT(z.vertex_cycle.twice_signed_area(), 0);
    EXPECT_EQ(Rat(z.vertex_cycle.twice_signed_area() / 2), Rat(area_zonotope(b)));
    auto verts = z.vertex_cycle.vertices;
    auto negated = verts;
    for (PiPoint& v : negated) v = PiPoint{-v.x, -v.y};
    auto key = [](const PiPoint& a, const PiPoint& c) { return a.x < c.x || (a.x == c.x && a.y < c.y); };
    std::sort(verts.begin(), verts.end(), key);
    std::sort(negated.begin(), negated.end(), key);
    EXPECT_EQ(verts, negated);
    EXPECT_NE(std::find(z.vertex_cycle.vertices.begin(), z.vertex_cycle.vertices.end(), z.q0),
              z.vertex_cycle.vertices.end());
    for (int s = 0; s < 50; ++s) {
      const PiPoint p = random_point(rng, 12);
      int w = 0;
      bool boundary = false;
      try {
        w = winding_number(z.vertex_cycle, p);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::OnBoundary);
        boundary = true;
      }
      const Location loc = z.locate(p);
      if (boundary) EXPECT_EQ(loc, Location::Boundary);
      else EXPECT_EQ(loc, w == 1 ? Location::Inside : Location::Outside);
    }
  }
}

TEST(Winding, UnitSquare) {
  EXPECT_EQ(winding_number(unit_square(), {Rat(1, 2), Rat(1, 2)}), 1);
  EXPECT_EQ(winding_number(unit_square(), {Rat(5), Rat(1, 2)}), 0);
  PolyCycle cw = unit_square();
  std::reverse(cw.vertices.begin(), cw.vertices.end());
  EXPECT_EQ(winding_number(cw, {Rat(1, 2), Rat(1, 2)}), -1);
}

TEST(Winding, BoundaryIsAnError) {
  for (const PiPoint& p : {PiPoint{Rat(1, 2), 0}, PiPoint{1, 1}, PiPoint{0, Rat(1, 3)}}) {
    try {
      (void)winding_number(unit_square(), p);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OnBoundary);
    }
  }
}

TEST(Winding, LargeCoordinatesUseExactFallback) {
  const Int big = Int(1) << 80;
  PolyCycle c{{{Rat(-big), Rat(-big)}, {Rat(big), Rat(-big)}, {Rat(big), Rat(big)}, {Rat(-big), Rat(big)}}};
  EXPECT_EQ(winding_number(c, {Rat(1, 3), Rat(-1, 7)}), 1);
  EXPECT_EQ(winding_number(c, {Rat(big) + 1, 0}), 0);
}

TEST(PrincipalMultiplicity, ExampleOne) {
  EXPECT_EQ(principal_multiplicity(example_i(), {Rat(2, 3), Rat(4, 3)}), 1);
  EXPECT_EQ(principal_multiplicity(example_i(), {Rat(4, 3), Rat(2, 3)}), 1);
  EXPECT_EQ(principal_multiplicity(example_i(), pt(40, -7)), 0);
}

TEST(PrincipalMultiplicity, ExampleThreeHasDoubleCover) {
  const CoamoebaChain chain(example_iii());
  const auto p = find_multiplicity(chain, 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(winding_number(chain.gamma().plus, *p) + winding_number(chain.gamma().minus, *p), 2);
}

TEST(PrincipalMultiplicity, NeverNegative) {
  std::mt19937_64 rng(4);
  for (const BMatrix& b : fixtures::random_bs(60, 19, 3, 6, 5)) {
    const CoamoebaChain chain(b);
    for (int s = 0; s < 100; ++s) {
      try {
        EXPECT_GE(chain.principal_multiplicity(random_point(rng, 10)), 0);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OnBoundary);
      }
    }
  }
}

TEST(Areas, Examples) {
  EXPECT_EQ(area_coamoeba(clockwise_order(example_i())), 1);
  EXPECT_EQ(area_coamoeba(clockwise_order(example_ii())), 2);
  EXPECT_EQ(area_coamoeba(clockwise_order(example_iii())), 2);
  EXPECT_EQ(area_zonotope(example_i()), 3);
  EXPECT_EQ(area_zonotope(example_ii()), 10);
  EXPECT_EQ(area_zonotope(example_iii()), 26);
  EXPECT_EQ(multiplicity_m(clockwise_order(example_i())), 1);
  EXPECT_EQ(multiplicity_m(clockwise_order(example_ii())), 3);
  EXPECT_EQ(multiplicity_m(clockwise_order(example_iii())), 7);
}

TEST(Areas, CyclicRotationInvariance) {
  for (const BMatrix& b : fixtures::random_bs(100, 21, 3, 7, 5)) {
    std::vector<Vec2> rows = clockwise_order(b).rows;
    const Int base = area_coamoeba(rows);
    for (std::size_t r = 1; r < rows.size(); ++r) {
      std::rotate(rows.begin(), rows.begin() + 1, rows.end());
      EXPECT_EQ(area_coamoeba(rows), base);
    }
  }
}

TEST(Areas, MultiplicityFormulas) {
  for (const BMatrix& b : fixtures::random_bs(300, 37, 3, 6, 5)) {
    const SlopeOrder o = clockwise_order(b);
    const Int m = multiplicity_m(o);
    EXPECT_GE(m, 1);
    EXPECT_EQ(4 * m, area_coamoeba(o) + area_zonotope(b));
    EXPECT_EQ(2 * m, sum_det_plus(o.rows));
    EXPECT_EQ(m, d_via_cones(b, Ray::Lplus));
  }
}

TEST(TorusMultiplicity, ExampleOneNearPZero) {
  const TorusPoint theta(Rat(8, 7), Rat(8, 7));
  const BMatrix b = example_i();
  EXPECT_EQ(torus_multiplicity(b, theta, ChainKind::Coamoeba) + torus_multiplicity(b, theta, ChainKind::Zonotope), 1);
}

TEST(TorusMultiplicity, BoundaryIsAnError) {
  // (1, 3/2) lies on the edge from (1,1) to (1,2) of Gamma_+.
  try {
    (void)torus_multiplicity(example_i(), TorusPoint(1, Rat(3, 2)), ChainKind::Coamoeba);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OnBoundary);
  }
}

TEST(TorusMultiplicity, ExampleThreeRandomPoints) {
  const CoamoebaChain chain(example_iii());
  TorusSampler sampler(2024);
  int checked = 0;
  while (checked < 100) {
    const TorusPoint theta = sampler.next();
    try {
      EXPECT_EQ(chain.torus_multiplicity(theta, ChainKind::Coamoeba) + chain.torus_multiplicity(theta, ChainKind::Zonotope), 7);
      ++checked;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::OnBoundary);
    }
  }
}

TEST(TorusMultiplicity, FastAndExactPathsAgree) {
  const CoamoebaChain chain(example_iii());
  // Denominators above 2^30 force the arbitrary-precision path.
  const Int big_den = (Int(1) << 31) + 11;
  TorusSampler sampler(5);
  for (int s = 0; s < 40; ++s) {
    const TorusPoint t = sampler.next();
    const TorusPoint nudged(t.theta1() + make_rat(1, big_den), t.theta2() + make_rat(1, big_den));
    try {
      EXPECT_EQ(chain.torus_multiplicity(nudged, ChainKind::Coamoeba) +
                    chain.torus_multiplicity(nudged, ChainKind::Zonotope),
                7);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OnBoundary);
    }
  }
}

TEST(CycleIdentity, Examples) {
  const auto r1 = cycle_identity_check(example_i(), 200, 1);
  EXPECT_TRUE(r1.ok());
  EXPECT_EQ(r1.samples, 200u);
  EXPECT_EQ(r1.expected, 1);
  const auto r2 = cycle_identity_check(example_ii(), 200, 2);
  EXPECT_TRUE(r2.ok());
  EXPECT_EQ(r2.expected, 3);
}

TEST(CycleIdentity, DeterministicGivenSeed) {
  const auto a = cycle_identity_check(example_iii(), 50, 77);
  const auto b = cycle_identity_check(example_iii(), 50, 77);
  EXPECT_EQ(a.redraws, b.redraws);
  EXPECT_EQ(a.failures.size(), b.failures.size());
}

TEST(CycleIdentity, RandomFiveRowMatrices) {
  for (const BMatrix& b : fixtures::random_bs(20, 53, 5, 5, 4)) {
    const auto r = cycle_identity_check(b, 200, 9);
    EXPECT_TRUE(r.ok()) << r.failures.size() << " failures";
  }
}

TEST(IntegrateWinding, UnitSquareAndExamples) {
  EXPECT_EQ(integrate_winding({unit_square()}), 1);
  for (const auto& b : fixtures::examples()) {
    const CoamoebaChain chain(b);
    EXPECT_EQ(integrate_winding({chain.gamma().plus, chain.gamma().minus}), Rat(area_coamoeba(chain.order())));
  }
}
