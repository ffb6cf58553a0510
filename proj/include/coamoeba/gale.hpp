#pragma once

// The Gale matrix B (N x 2 integer rows summing to zero), its clockwise
// projective ordering, a reconstructed dual configuration A, and the
// normalized volume d_B computed from A directly and from cones of B.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coamoeba/error.hpp"
#include "coamoeba/exact.hpp"

namespace coamoeba {

/// A row b_j = (b_{j1}, b_{j2}) of B.
struct Vec2 {
  Int x;
  Int y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  [[nodiscard]] bool is_zero() const { return x == 0 && y == 0; }
};

inline Int det(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline Int det_plus(const Vec2& u, const Vec2& v) {
  Int d = det(u, v);
  return d > 0 ? d : Int(0);
}

/// A validated Gale matrix. Only `validate_b` constructs one.
class BMatrix {
 public:
  [[nodiscard]] std::span<const Vec2> rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
  [[nodiscard]] const Vec2& operator[](std::size_t j) const { return rows_[j]; }

  [[nodiscard]] IntMatrix to_matrix() const {
    IntMatrix m(rows_.size(), 2);
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      m(j, 0) = rows_[j].x;
      m(j, 1) = rows_[j].y;
    }
    return m;
  }

 private:
  explicit BMatrix(std::vector<Vec2> rows) : rows_(std::move(rows)) {}
  friend BMatrix validate_b(const IntMatrix& raw);

  std::vector<Vec2> rows_;
};

/// Checks shape, N >= 3, no zero row, zero column sums and coprime 2x2 minors.
inline BMatrix validate_b(const IntMatrix& raw) {
  if (raw.cols() != 2) throw Error(ErrorCode::InvalidShape, "B must have exactly two columns");
  if (raw.rows() < 3)
    throw Error(ErrorCode::TooFewRows, "B must have at least 3 rows, got " + std::to_string(raw.rows()));
  std::vector<Vec2> rows;
  rows.reserve(raw.rows());
  Vec2 sum{0, 0};
  for (std::size_t j = 0; j < raw.rows(); ++j) {
    Vec2 b{raw(j, 0), raw(j, 1)};
    if (b.is_zero()) throw Error(ErrorCode::ZeroRow, "row " + std::to_string(j + 1) + " is (0,0)");
    sum = sum + b;
    rows.push_back(std::move(b));
  }
  if (!sum.is_zero())
    throw Error(ErrorCode::NonzeroColumnSum,
                "column sums are (" + sum.x.str() + "," + sum.y.str() + "), expected (0,0)");
  const Int g = minor_gcd_2x2(raw);
  if (g != 1) throw Error(ErrorCode::MinorGcdNotOne, "gcd of 2x2 minors is " + g.str());
  return BMatrix(std::move(rows));
}

inline BMatrix validate_b(const std::vector<std::array<long long, 2>>& rows) {
  IntMatrix m(rows.size(), 2);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    m(j, 0) = rows[j][0];
    m(j, 1) = rows[j][1];
  }
  return validate_b(m);
}

/// Normal slope beta_j = -b_{j1}/b_{j2}; nullopt encodes infinity (b_{j2} = 0).
using Slope = std::optional<Rat>;

inline Slope normal_slope(const Vec2& b) {
  if (b.y == 0) return std::nullopt;
  return make_rat(-b.x, b.y);
}

inline std::string to_string(const Slope& s) { return s ? to_string(*s) : std::string("inf"); }

/// Rows of B permuted into decreasing normal slope, infinite slopes last.
struct SlopeOrder {
  std::vector<std::size_t> perm;  ///< perm[i] = original (0-based) index of the i-th ordered row
  std::vector<Slope> betas;       ///< slope of each ordered row
  std::vector<Vec2> rows;         ///< the ordered rows themselves
  /// Maximal runs [first, last) of equal slope, in ordered positions.
  std::vector<std::pair<std::size_t, std::size_t>> parallel_classes;
};

inline SlopeOrder clockwise_order(const BMatrix& b) {
  SlopeOrder out;
  const std::size_t n = b.size();
  out.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.perm[i] = i;
  std::vector<Slope> slopes(n);
  for (std::size_t i = 0; i < n; ++i) slopes[i] = normal_slope(b[i]);
  std::stable_sort(out.perm.begin(), out.perm.end(), [&](std::size_t a, std::size_t c) {
    const Slope& sa = slopes[a];
    const Slope& sc = slopes[c];
    if (!sa) return false;
    if (!sc) return true;
    return *sa > *sc;
  });
  for (std::size_t i : out.perm) {
    out.betas.push_back(slopes[i]);
    out.rows.push_back(b[i]);
  }
  std::size_t first = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || out.betas[i] != out.betas[first]) {
      out.parallel_classes.emplace_back(first, i);
      first = i;
    }
  }
  return out;
}

/// Gale dual configuration: first row all ones, remaining rows the
/// coordinates of alpha_1..alpha_N.
struct AMatrix {
  IntMatrix a;

  [[nodiscard]] std::size_t dimension() const { return a.rows() - 1; }
  [[nodiscard]] std::size_t num_points() const { return a.cols(); }
  [[nodiscard]] std::vector<Int> point(std::size_t k) const {
    std::vector<Int> p;
    for (std::size_t r = 1; r < a.rows(); ++r) p.push_back(a(r, k));
    return p;
  }
};

/// Canonical form: the all-ones row, then the Hermite basis of the kernel
/// sublattice whose first coordinate vanishes (so alpha_1 = 0).
inline AMatrix gale_dual(const BMatrix& b) {
  const std::size_t n = b.size();
  const IntMatrix kernel = left_kernel_basis(b.to_matrix());
  {
    Vec2 s{0, 0};
    for (const Vec2& row : b.rows()) s = s + row;
    if (!s.is_zero()) throw Error(ErrorCode::Internal, "(1,...,1) is not in the left kernel of B");
  }
  IntMatrix reduced = kernel;
  for (std::size_t i = 0; i < reduced.rows(); ++i) {
    const Int lead = reduced(i, 0);
    for (std::size_t c = 0; c < n; ++c) reduced(i, c) -= lead;
  }
  const HermiteResult hr = hermite_normal_form(reduced);
  if (hr.rank + 1 != kernel.rows())
    throw Error(ErrorCode::Internal, "kernel lattice does not split off the all-ones vector");
  IntMatrix a(hr.rank + 1, n);
  for (std::size_t c = 0; c < n; ++c) a(0, c) = 1;
  for (std::size_t i = 0; i < hr.rank; ++i)
    for (std::size_t c = 0; c < n; ++c) a(i + 1, c) = hr.H(i, c);
  return AMatrix{std::move(a)};
}

namespace detail {

using Pt2 = std::array<Int, 2>;
using Pt3 = std::array<Int, 3>;

inline Int cross(const Pt2& o, const Pt2& a, const Pt2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Gift wrapping; returns hull vertex indices counterclockwise, collinear points skipped.
inline std::vector<std::size_t> gift_wrap(const std::vector<Pt2>& pts) {
  std::vector<std::size_t> hull;
  if (pts.empty()) return hull;
  if (pts.size() == 1) return {0};
  std::size_t start = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i][1] < pts[start][1] || (pts[i][1] == pts[start][1] && pts[i][0] < pts[start][0])) start = i;
  auto dist2 = [&](std::size_t a, std::size_t b) {
    const Int dx = pts[a][0] - pts[b][0];
    const Int dy = pts[a][1] - pts[b][1];
    return Int(dx * dx + dy * dy);
  };
  std::size_t cur = start;
  do {
    hull.push_back(cur);
    std::size_t next = cur == 0 ? 1 : 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == cur || pts[i] == pts[cur]) continue;
      if (pts[next] == pts[cur]) {
        next = i;
        continue;
      }
      const Int c = cross(pts[cur], pts[next], pts[i]);
      if (c < 0 || (c == 0 && dist2(cur, i) > dist2(cur, next))) next = i;
    }
    cur = next;
    if (hull.size() > pts.size()) throw Error(ErrorCode::Internal, "gift wrapping did not close");
  } while (cur != start);
  return hull;
}

inline Pt3 sub(const Pt3& a, const Pt3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Pt3 cross3(const Pt3& a, const Pt3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Int dot3(const Pt3& a, const Pt3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Int normalized_volume_1d(const std::vector<Int>& xs) {
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return *hi - *lo;
}

inline Int normalized_volume_2d(const std::vector<Pt2>& pts) {
  const auto hull = gift_wrap(pts);
  Int twice_area = 0;
  for (std::size_t i = 1; i + 1 < hull.size(); ++i)
    twice_area += cross(pts[hull[0]], pts[hull[i]], pts[hull[i + 1]]);
  return abs(twice_area);
}

/// 3! * volume: enumerate supporting planes, order each facet by a planar
/// gift wrap and fan-triangulate from a fixed hull vertex.
inline Int normalized_volume_3d(const std::vector<Pt3>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::vector<std::size_t>> facets;
  std::vector<Pt3> normals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Pt3 nrm = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0) continue;
        int pos = 0, neg = 0;
        std::vector<std::size_t> on;
        for (std::size_t l = 0; l < n; ++l) {
          const int s = sign(dot3(nrm, sub(pts[l], pts[i])));
          if (s > 0) ++pos;
          else if (s < 0) ++neg;
          else on.push_back(l);
        }
        if (pos > 0 && neg > 0) continue;
        if (pos == 0 && neg == 0) return 0;  // all coplanar
        if (std::find(facets.begin(), facets.end(), on) == facets.end()) {
          facets.push_back(on);
          normals.push_back(nrm);
        }
      }
  if (facets.empty()) return 0;
  const std::size_t apex = facets.front().front();
  Int total = 0;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const auto& on = facets[f];
    if (std::find(on.begin(), on.end(), apex) != on.end()) continue;
    // Drop the coordinate where the normal is largest; the projection is injective on the plane.
    std::size_t drop = 0;
    for (std::size_t c = 1; c < 3; ++c)
      if (abs(normals[f][c]) > abs(normals[f][drop])) drop = c;
    std::vector<Pt2> proj;
    for (std::size_t idx : on) {
      Pt2 p;
      std::size_t w = 0;
      for (std::size_t c = 0; c < 3; ++c)
        if (c != drop) p[w++] = pts[idx][c];
      proj.push_back(p);
    }
    const auto ring = gift_wrap(proj);
    for (std::size_t t = 1; t + 1 < ring.size(); ++t) {
      const Pt3 a = sub(pts[on[ring[0]]], pts[apex]);
      const Pt3 b = sub(pts[on[ring[t]]], pts[apex]);
      const Pt3 c = sub(pts[on[ring[t + 1]]], pts[apex]);
      total += abs(dot3(a, cross3(b, c)));
    }
  }
  return total;
}

}  // namespace detail

/// n! Vol(conv(A)) for n <= 3, with the convention d = 1 for n = 0.
inline Int normalized_volume_direct(const AMatrix& a) {
  const std::size_t n = a.dimension();
  const std::size_t npts = a.num_points();
  switch (n) {
    case 0:
      return 1;
    case 1: {
      std::vector<Int> xs;
      for (std::size_t k = 0; k < npts; ++k) xs.push_back(a.a(1, k));
      return detail::normalized_volume_1d(xs);
    }
    case 2: {
      std::vector<detail::Pt2> pts;
      for (std::size_t k = 0; k < npts; ++k) pts.push_back({a.a(1, k), a.a(2, k)});
      return detail::normalized_volume_2d(pts);
    }
    case 3: {
      std::vector<detail::Pt3> pts;
      for (std::size_t k = 0; k < npts; ++k) pts.push_back({a.a(1, k), a.a(2, k), a.a(3, k)});
      return detail::normalized_volume_3d(pts);
    }
    default:
      throw Error(ErrorCode::UnsupportedDimension,
                  "direct volume supports n <= 3 (got n = " + std::to_string(n) + "); use d_via_cones");
  }
}

/// The two rays of the line through the origin with slope -eps.
enum class Ray { Lplus, Lminus };

/// Whether the ray lies in the closed cone spanned by u and v (exact, eps-perturbed).
inline bool cone_contains_ray(const Vec2& u0, const Vec2& v0, Ray ray) {
  if (det(u0, v0) == 0) return false;
  const bool swap = det(u0, v0) < 0;
  const Vec2& u = swap ? v0 : u0;
  const Vec2& v = swap ? u0 : v0;
  // ray direction l = s * (1, -eps) with s = +1 (L+) or -1 (L-)
  const int s = ray == Ray::Lplus ? 1 : -1;
  // det(u, l) = s * (-u.y - eps * u.x); det(l, v) = s * (v.y + eps * v.x)
  const EpsQuantity du{Rat(-s * u.y), Rat(-s * u.x)};
  const EpsQuantity dv{Rat(s * v.y), Rat(s * v.x)};
  return eps_sign(du) >= 0 && eps_sign(dv) >= 0;
}

/// Sum of |det(b_j,b_k)| over pairs whose cone contains the chosen ray.
inline Int d_via_cones(std::span<const Vec2> rows, Ray ray) {
  Int total = 0;
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t k = j + 1; k < rows.size(); ++k)
      if (cone_contains_ray(rows[j], rows[k], ray)) total += abs(det(rows[j], rows[k]));
  return total;
}

inline Int d_via_cones(const BMatrix& b, Ray ray) { return d_via_cones(clockwise_order(b).rows, ray); }

/// Sum of det+(b_j,b_k) over j < k in the given order.
inline Int sum_det_plus(std::span<const Vec2> rows) {
  Int total = 0;
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t k = j + 1; k < rows.size(); ++k) total += det_plus(rows[j], rows[k]);
  return total;
}

}  // namespace coamoeba
