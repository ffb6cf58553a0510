#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace coamoeba;
using coamoeba::fixtures::example_i;
using coamoeba::fixtures::example_ii;
using coamoeba::fixtures::example_iii;

namespace {

ErrorCode validation_code(const IntMatrix& m) {
  try {
    (void)validate_b(m);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::vector<std::string> beta_strings(const SlopeOrder& o) {
  std::vector<std::string> out;
  for (const Slope& s : o.betas) out.push_back(to_string(s));
  return out;
}

// Absolute values of all maximal minors, sorted.
std::vector<Int> maximal_minors(const IntMatrix& a) {
  const std::size_t k = a.rows(), n = a.cols();
  std::vector<Int> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    IntMatrix sub(k, k);
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (pick[j]) {
        for (std::size_t r = 0; r < k; ++r) sub(r, c) = a(r, j);
        ++c;
      }
    out.push_back(abs(determinant(sub)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

BMatrix permuted(const BMatrix& b, const std::vector<std::size_t>& perm) {
  IntMatrix m(b.size(), 2);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    m(i, 0) = b[perm[i]].x;
    m(i, 1) = b[perm[i]].y;
  }
  return validate_b(m);
}

}  // namespace

TEST(Validate, AcceptsExamples) {
  EXPECT_EQ(example_i().size(), 3u);
  EXPECT_EQ(example_ii().size(), 4u);
  EXPECT_EQ(example_iii().size(), 5u);
}

TEST(Validate, DistinctErrorCodes) {
  EXPECT_EQ(validation_code(IntMatrix{{1, 0}, {-1, 0}, {0, 0}}), ErrorCode::ZeroRow);
  EXPECT_EQ(validation_code(IntMatrix{{2, 0}, {0, 2}, {-2, -2}}), ErrorCode::MinorGcdNotOne);
  EXPECT_EQ(validation_code(IntMatrix{{1, 0}, {0, 1}, {1, 1}}), ErrorCode::NonzeroColumnSum);
  EXPECT_EQ(validation_code(IntMatrix{{1, 0}, {-1, 0}}), ErrorCode::TooFewRows);
  EXPECT_EQ(validation_code(IntMatrix{{1, 0, 0}, {-1, 0, 0}, {0, 0, 0}}), ErrorCode::InvalidShape);
  EXPECT_EQ(validation_code(IntMatrix{{1, 2}, {2, 4}, {-3, -6}}), ErrorCode::MinorGcdNotOne);
}

TEST(ClockwiseOrder, ExampleOne) {
  const SlopeOrder o = clockwise_order(example_i());
  EXPECT_EQ(o.perm, (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_EQ(o.rows[0], (Vec2{0, 1}));
  EXPECT_EQ(o.rows[1], (Vec2{-1, -1}));
  EXPECT_EQ(o.rows[2], (Vec2{1, 0}));
  EXPECT_EQ(beta_strings(o), (std::vector<std::string>{"0", "-1", "inf"}));
}

TEST(ClockwiseOrder, ExampleTwo) {
  const SlopeOrder o = clockwise_order(example_ii());
  EXPECT_EQ(o.perm, (std::vector<std::size_t>{1, 2, 3, 0}));
  EXPECT_EQ(beta_strings(o), (std::vector<std::string>{"0", "-3/2", "-2", "inf"}));
}

TEST(ClockwiseOrder, ExampleThreeIsIdentity) {
  const SlopeOrder o = clockwise_order(example_iii());
  EXPECT_EQ(o.perm, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(beta_strings(o), (std::vector<std::string>{"1", "1/2", "0", "-1/3", "-1/2"}));
  EXPECT_EQ(o.parallel_classes.size(), 5u);
}

TEST(ClockwiseOrder, ParallelRowsFormOneClass) {
  const BMatrix b = validate_b(IntMatrix{{1, 2}, {2, 4}, {-3, -6}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  const SlopeOrder o = clockwise_order(b);
  EXPECT_EQ(beta_strings(o), (std::vector<std::string>{"0", "0", "-1/2", "-1/2", "-1/2", "inf", "inf"}));
  ASSERT_EQ(o.parallel_classes.size(), 3u);
  EXPECT_EQ(o.parallel_classes[1], (std::pair<std::size_t, std::size_t>{2, 5}));
  // ties keep input order
  EXPECT_EQ(o.perm, (std::vector<std::size_t>{5, 6, 0, 1, 2, 3, 4}));
}

TEST(ClockwiseOrder, RandomInvariants) {
  for (const BMatrix& b : fixtures::random_bs(200, 17, 3, 7, 5)) {
    const SlopeOrder o = clockwise_order(b);
    std::vector<std::size_t> sorted = o.perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);
    bool seen_inf = false;
    for (std::size_t i = 0; i < o.betas.size(); ++i) {
      if (!o.betas[i]) {
        seen_inf = true;
        continue;
      }
      EXPECT_FALSE(seen_inf);
      if (i > 0 && o.betas[i - 1]) EXPECT_GE(*o.betas[i - 1], *o.betas[i]);
    }
    for (const auto& [first, last] : o.parallel_classes)
      for (std::size_t i = first; i < last; ++i) {
        EXPECT_EQ(o.betas[i], o.betas[first]);
        if (i + 1 < last) EXPECT_LT(o.perm[i], o.perm[i + 1]);
      }
  }
}

TEST(GaleDual, ExampleOneIsTrivial) {
  const AMatrix a = gale_dual(example_i());
  EXPECT_EQ(a.a, (IntMatrix{{1, 1, 1}}));
  EXPECT_EQ(a.dimension(), 0u);
  EXPECT_EQ(normalized_volume_direct(a), 1);
}

TEST(GaleDual, ExampleTwoReorderedMatchesLattice) {
  const BMatrix b = validate_b(IntMatrix{{0, 1}, {-3, -2}, {2, 1}, {1, 0}});
  const AMatrix a = gale_dual(b);
  ASSERT_EQ(a.a.rows(), 2u);
  ASSERT_EQ(a.a.cols(), 4u);
  for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(a.a(0, c), 1);
  const IntMatrix prod = a.a * b.to_matrix();
  for (std::size_t r = 0; r < prod.rows(); ++r) EXPECT_TRUE(prod.row_is_zero(r));
  const IntMatrix reference{{1, 1, 1, 1}, {1, 2, 3, 0}};
  EXPECT_EQ(hermite_normal_form(a.a).H, hermite_normal_form(reference).H);
  EXPECT_EQ(normalized_volume_direct(a), 3);
}

TEST(GaleDual, ExampleTwoCanonicalForm) {
  EXPECT_EQ(gale_dual(example_ii()).a, (IntMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}}));
}

TEST(GaleDual, ExampleThreeMatchesLattice) {
  const AMatrix a = gale_dual(example_iii());
  const IntMatrix reference{{1, 1, 1, 1, 1}, {2, 1, 0, 2, 3}, {3, 2, 0, 1, 2}};
  EXPECT_EQ(hermite_normal_form(a.a).H, hermite_normal_form(reference).H);
  EXPECT_EQ(maximal_minors(a.a), maximal_minors(reference));
  EXPECT_EQ(normalized_volume_direct(a), 7);
}

TEST(GaleDual, RandomInvariants) {
  for (const BMatrix& b : fixtures::random_bs(150, 23, 3, 7, 5)) {
    const AMatrix a = gale_dual(b);
    ASSERT_EQ(a.a.rows(), b.size() - 2);
    for (std::size_t c = 0; c < a.a.cols(); ++c) EXPECT_EQ(a.a(0, c), 1);
    const IntMatrix prod = a.a * b.to_matrix();
    for (std::size_t r = 0; r < prod.rows(); ++r) EXPECT_TRUE(prod.row_is_zero(r));
    Int g = 0;
    for (const Int& m : maximal_minors(a.a)) g = gcd(g, m);
    EXPECT_EQ(g, 1);
  }
}

TEST(GaleDual, PermutationInvariance) {
  std::mt19937_64 rng(29);
  for (const BMatrix& b : fixtures::random_bs(60, 31, 3, 6, 5)) {
    std::vector<std::size_t> perm(b.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const BMatrix pb = permuted(b, perm);
    EXPECT_EQ(maximal_minors(gale_dual(b).a), maximal_minors(gale_dual(pb).a));
    EXPECT_EQ(normalized_volume_direct(gale_dual(b)), normalized_volume_direct(gale_dual(pb)));
    EXPECT_EQ(d_via_cones(b, Ray::Lplus), d_via_cones(pb, Ray::Lplus));
  }
}

TEST(NormalizedVolume, PaperConfigurations) {
  EXPECT_EQ(detail::normalized_volume_1d({0, 1, 2, 3}), 3);
  EXPECT_EQ(detail::normalized_volume_2d({{0, 0}, {2, 1}, {1, 2}, {3, 2}, {2, 3}}), 7);
  EXPECT_EQ(detail::normalized_volume_3d({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1);
  EXPECT_EQ(detail::normalized_volume_3d({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
                                          {1, 1, 1}}),
            6);
}

TEST(NormalizedVolume, HigherDimensionRejected) {
  const BMatrix b = validate_b(IntMatrix{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}, {2, 1}, {-2, -1}});
  try {
    (void)normalized_volume_direct(gale_dual(b));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedDimension);
  }
}

TEST(DViaCones, Examples) {
  EXPECT_EQ(d_via_cones(example_i(), Ray::Lplus), 1);
  EXPECT_EQ(d_via_cones(example_i(), Ray::Lminus), 1);
  EXPECT_EQ(d_via_cones(example_ii(), Ray::Lplus), 3);
  EXPECT_EQ(d_via_cones(example_ii(), Ray::Lminus), 3);
  EXPECT_EQ(d_via_cones(example_iii(), Ray::Lplus), 7);
  EXPECT_EQ(d_via_cones(example_iii(), Ray::Lminus), 7);
}

TEST(DViaCones, ConeContainment) {
  EXPECT_TRUE(cone_contains_ray({1, 1}, {0, -1}, Ray::Lplus));
  EXPECT_TRUE(cone_contains_ray({0, -1}, {1, 1}, Ray::Lplus));
  EXPECT_FALSE(cone_contains_ray({1, 1}, {0, 1}, Ray::Lplus));
  EXPECT_TRUE(cone_contains_ray({1, 0}, {0, -1}, Ray::Lplus));
  EXPECT_FALSE(cone_contains_ray({1, 0}, {0, 1}, Ray::Lplus));
  EXPECT_FALSE(cone_contains_ray({1, 0}, {2, 0}, Ray::Lplus));
  EXPECT_TRUE(cone_contains_ray({-1, 0}, {0, 1}, Ray::Lminus));
}

TEST(DViaCones, RandomMatchesVolumeAndIdentity) {
  for (const BMatrix& b : fixtures::random_bs(300, 41, 3, 6, 5)) {
    const SlopeOrder o = clockwise_order(b);
    const Int dp = d_via_cones(o.rows, Ray::Lplus);
    const Int dm = d_via_cones(o.rows, Ray::Lminus);
    EXPECT_EQ(dp, dm);
    EXPECT_EQ(dp + dm, sum_det_plus(o.rows));
    EXPECT_EQ(normalized_volume_direct(gale_dual(b)), dp);
  }
}
