#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coamoeba/coamoeba.hpp"

namespace coamoeba::fixtures {

inline BMatrix example_i() { return validate_b(IntMatrix{{-1, -1}, {1, 0}, {0, 1}}); }
inline BMatrix example_ii() { return validate_b(IntMatrix{{1, 0}, {0, 1}, {-3, -2}, {2, 1}}); }
inline BMatrix example_iii() { return validate_b(IntMatrix{{1, -1}, {-1, 2}, {0, -2}, {1, 3}, {-1, -2}}); }

inline std::vector<BMatrix> examples() { return {example_i(), example_ii(), example_iii()}; }

// Rejection sampler: N-1 random rows, the last row closes the column sums.
inline BMatrix random_b(std::mt19937_64& rng, int min_rows, int max_rows, int bound) {
  std::uniform_int_distribution<int> rows(min_rows, max_rows), entry(-bound, bound);
  for (;;) {
    const int n = rows(rng);
    IntMatrix m(static_cast<std::size_t>(n), 2);
    long long sx = 0, sy = 0;
    for (int j = 0; j + 1 < n; ++j) {
      const int x = entry(rng), y = entry(rng);
      m(j, 0) = x;
      m(j, 1) = y;
      sx += x;
      sy += y;
    }
    if (sx < -bound || sx > bound || sy < -bound || sy > bound) continue;
    m(n - 1, 0) = -sx;
    m(n - 1, 1) = -sy;
    try {
      return validate_b(m);
    } catch (const Error&) {
    }
  }
}

inline std::vector<BMatrix> random_bs(std::size_t count, std::uint64_t seed, int min_rows, int max_rows, int bound) {
  std::mt19937_64 rng(seed);
  std::vector<BMatrix> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(random_b(rng, min_rows, max_rows, bound));
  return out;
}

inline std::array<Complex, 2> closed_form_i(Complex t) { return {-1.0 / (1.0 + t), -t / (1.0 + t)}; }

inline std::array<Complex, 2> closed_form_ii(Complex t) {
  return {-std::pow(2.0 + t, 2) / std::pow(3.0 + 2.0 * t, 3), t * (2.0 + t) / std::pow(3.0 + 2.0 * t, 2)};
}

inline std::array<Complex, 2> closed_form_iii(Complex t) {
  return {-(1.0 - t) * (1.0 + 3.0 * t) / ((-1.0 + 2.0 * t) * (1.0 + 2.0 * t)),
          std::pow(-1.0 + 2.0 * t, 2) * std::pow(1.0 + 3.0 * t, 3) /
              (std::pow(1.0 + 2.0 * t, 2) * (1.0 - t) * 4.0 * t * t)};
}

inline double relative_error(const std::array<Complex, 2>& a, const std::array<Complex, 2>& b) {
  return std::max(std::abs(a[0] - b[0]) / std::abs(b[0]), std::abs(a[1] - b[1]) / std::abs(b[1]));
}

}  // namespace coamoeba::fixtures
