#pragma once

// Boundary cycles of the principal coamoeba chain, the zonotope, and their
// multiplicity functions on the plane and on the torus. All coordinates are
// exact and measured in units of pi; the torus is [0,2)^2 in those units.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coamoeba/error.hpp"
#include "coamoeba/exact.hpp"
#include "coamoeba/gale.hpp"

namespace coamoeba {

/// A point of R^2 in units of pi.
struct PiPoint {
  Rat x;
  Rat y;

  friend bool operator==(const PiPoint&, const PiPoint&) = default;
  friend PiPoint operator+(const PiPoint& a, const PiPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend PiPoint operator-(const PiPoint& a, const PiPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend PiPoint operator-(const PiPoint& a) { return {-a.x, -a.y}; }
  friend PiPoint operator+(const PiPoint& a, const Vec2& v) { return {a.x + v.x, a.y + v.y}; }
};

inline std::string to_string(const PiPoint& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

/// Reduces r into [0, 2).
inline Rat reduce_mod2(const Rat& r) {
  const Int k = floor_div(numerator(r), 2 * denominator(r));
  return r - Rat(2 * k);
}

/// A point of the torus (R/2Z)^2 in pi-units.
class TorusPoint {
 public:
  TorusPoint(Rat t1, Rat t2) : t1_(reduce_mod2(t1)), t2_(reduce_mod2(t2)) {}
  explicit TorusPoint(const PiPoint& p) : TorusPoint(p.x, p.y) {}

  [[nodiscard]] const Rat& theta1() const noexcept { return t1_; }
  [[nodiscard]] const Rat& theta2() const noexcept { return t2_; }
  [[nodiscard]] PiPoint lift() const { return {t1_, t2_}; }

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  Rat t1_;
  Rat t2_;
};

/// Closed oriented polygon; the last vertex connects back to the first.
struct PolyCycle {
  std::vector<PiPoint> vertices;

  [[nodiscard]] std::size_t size() const noexcept { return vertices.size(); }
  [[nodiscard]] std::vector<PiPoint> edge_vectors() const {
    std::vector<PiPoint> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      out.push_back(vertices[(i + 1) % vertices.size()] - vertices[i]);
    return out;
  }
  /// Twice the signed (shoelace) area, in pi^2-units.
  [[nodiscard]] Rat twice_signed_area() const {
    Rat s = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const PiPoint& a = vertices[i];
      const PiPoint& b = vertices[(i + 1) % vertices.size()];
      s += a.x * b.y - a.y * b.x;
    }
    return s;
  }
};

namespace detail {

using i128 = __int128;

/// p = (X/D, Y/D) with D > 0.
template <class T>
struct Scaled {
  T X;
  T Y;
  T D;
};

inline Int lcm(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

inline Scaled<Int> scale_point(const PiPoint& p) {
  const Int d = lcm(denominator(p.x), denominator(p.y));
  return {numerator(p.x) * (d / denominator(p.x)), numerator(p.y) * (d / denominator(p.y)), d};
}

constexpr std::int64_t kFastCoordLimit = std::int64_t{1} << 20;
constexpr std::int64_t kFastScaleLimit = std::int64_t{1} << 40;

inline bool fits_fast(const Scaled<Int>& s) {
  const Int lim = kFastScaleLimit;
  return abs(s.X) < lim && abs(s.Y) < lim && s.D < lim;
}

inline Scaled<i128> to_fast(const Scaled<Int>& s) {
  return {static_cast<i128>(s.X.convert_to<std::int64_t>()), static_cast<i128>(s.Y.convert_to<std::int64_t>()),
          static_cast<i128>(s.D.convert_to<std::int64_t>())};
}

/// Crossing-number winding of a closed polygon whose vertices, multiplied by
/// `vscale`, share the point's denominator. Throws OnBoundary on an edge.
template <class T, class V>
int winding_kernel(std::span<const std::array<V, 2>> verts, const T& vscale, const T& X, const T& Y) {
  int w = 0;
  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = verts[i];
    const auto& b = verts[(i + 1) % n];
    const T ax = T(a[0]) * vscale, ay = T(a[1]) * vscale;
    const T bx = T(b[0]) * vscale, by = T(b[1]) * vscale;
    const T cross = (bx - ax) * (Y - ay) - (by - ay) * (X - ax);
    if (cross == 0 && std::min(ax, bx) <= X && X <= std::max(ax, bx) && std::min(ay, by) <= Y &&
        Y <= std::max(ay, by))
      throw Error(ErrorCode::OnBoundary, "point lies on an edge of the cycle");
    if (ay <= Y) {
      if (by > Y && cross > 0) ++w;
    } else {
      if (by <= Y && cross < 0) --w;
    }
  }
  return w;
}

/// A cycle ready for repeated exact point queries.
class PreparedCycle {
 public:
  explicit PreparedCycle(const PolyCycle& c) {
    fast_ = true;
    Int d = 1;
    for (const PiPoint& v : c.vertices) {
      d = lcm(d, denominator(v.x));
      d = lcm(d, denominator(v.y));
    }
    denom_ = d;
    for (const PiPoint& v : c.vertices) {
      const Int x = numerator(v.x) * (d / denominator(v.x));
      const Int y = numerator(v.y) * (d / denominator(v.y));
      exact_.push_back({x, y});
      if (d != 1 || abs(x) >= kFastCoordLimit || abs(y) >= kFastCoordLimit) fast_ = false;
    }
    if (fast_) {
      for (const auto& v : exact_) fastv_.push_back({v[0].convert_to<std::int64_t>(), v[1].convert_to<std::int64_t>()});
    }
    if (!exact_.empty()) {
      lo_ = hi_ = exact_.front();
      for (const auto& v : exact_)
        for (int k = 0; k < 2; ++k) {
          if (v[k] < lo_[k]) lo_[k] = v[k];
          if (v[k] > hi_[k]) hi_[k] = v[k];
        }
    }
  }

  [[nodiscard]] int winding(const PiPoint& p) const { return winding(scale_point(p)); }

  [[nodiscard]] int winding(const Scaled<Int>& s) const {
    if (exact_.empty()) return 0;
    if (fast_ && fits_fast(s)) return winding(to_fast(s));
    // p = (X/D) with vertices v/denom_: bring both to denominator D*denom_.
    const Int X = s.X * denom_, Y = s.Y * denom_;
    if (outside_box(X, Y, s.D)) return 0;
    return winding_kernel<Int, Int>(exact_, s.D, X, Y);
  }

  [[nodiscard]] int winding(const Scaled<i128>& s) const {
    if (fastv_.empty()) return winding(Scaled<Int>{to_int(s.X), to_int(s.Y), to_int(s.D)});
    const i128 lx = static_cast<i128>(lo_[0].convert_to<std::int64_t>()) * s.D;
    const i128 ly = static_cast<i128>(lo_[1].convert_to<std::int64_t>()) * s.D;
    const i128 hx = static_cast<i128>(hi_[0].convert_to<std::int64_t>()) * s.D;
    const i128 hy = static_cast<i128>(hi_[1].convert_to<std::int64_t>()) * s.D;
    if (s.X < lx || s.X > hx || s.Y < ly || s.Y > hy) return 0;
    return winding_kernel<i128, std::int64_t>(fastv_, s.D, s.X, s.Y);
  }

  [[nodiscard]] bool is_fast() const noexcept { return fast_; }

 private:
  static Int to_int(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Int out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? Int(-out) : out;
  }

  [[nodiscard]] bool outside_box(const Int& X, const Int& Y, const Int& D) const {
    return X < lo_[0] * D || X > hi_[0] * D || Y < lo_[1] * D || Y > hi_[1] * D;
  }

  bool fast_ = false;
  Int denom_ = 1;
  std::vector<std::array<Int, 2>> exact_;
  std::vector<std::array<std::int64_t, 2>> fastv_;
  std::array<Int, 2> lo_{}, hi_{};
};

}  // namespace detail

/// Exact winding number of `c` around `p`; OnBoundary if p is on an edge.
inline int winding_number(const PolyCycle& c, const PiPoint& p) { return detail::PreparedCycle(c).winding(p); }

/// q0: sum of rows with b_{j2} < 0 plus rows with b_{j2} = 0, b_{j1} < 0.
inline PiPoint start_point_q0(const BMatrix& b) {
  PiPoint q{0, 0};
  for (const Vec2& r : b.rows())
    if (r.y < 0 || (r.y == 0 && r.x < 0)) q = q + r;
  return q;
}

inline TorusPoint start_point_p0(const BMatrix& b) { return TorusPoint(start_point_q0(b)); }

/// The lift of p0 with coordinates in {0, 1}.
inline PiPoint p0_lift(const BMatrix& b) { return start_point_p0(b).lift(); }

struct GammaCycles {
  PolyCycle plus;
  PolyCycle minus;
  PiPoint p0;
};

/// Class sums of the parallel classes, in order, with zero sums dropped.
inline std::vector<Vec2> merged_edges(const SlopeOrder& order) {
  std::vector<Vec2> out;
  for (const auto& [first, last] : order.parallel_classes) {
    Vec2 s{0, 0};
    for (std::size_t i = first; i < last; ++i) s = s + order.rows[i];
    if (!s.is_zero()) out.push_back(s);
  }
  return out;
}

inline GammaCycles build_gamma(const SlopeOrder& order, const PiPoint& p0) {
  GammaCycles g{{}, {}, p0};
  const auto edges = merged_edges(order);
  PiPoint cp = p0, cm = p0;
  for (const Vec2& e : edges) {
    g.plus.vertices.push_back(cp);
    g.minus.vertices.push_back(cm);
    cp = cp + e;
    cm = cm + (-e);
  }
  if (cp != p0 || cm != p0) throw Error(ErrorCode::Internal, "gamma cycle does not close");
  return g;
}

inline GammaCycles build_gamma(const BMatrix& b, const SlopeOrder& order) { return build_gamma(order, p0_lift(b)); }

/// |<theta, normal>| <= bound, everything in pi-units.
struct Halfplane {
  Vec2 normal;
  Rat bound;
};

enum class Location { Inside, Boundary, Outside };

struct Zonotope {
  PolyCycle vertex_cycle;  ///< counterclockwise, starting at q0
  std::vector<Halfplane> halfplanes;
  PiPoint q0;

  [[nodiscard]] Location locate(const PiPoint& p) const {
    bool on_boundary = false;
    for (const Halfplane& h : halfplanes) {
      Rat s = p.x * h.normal.x + p.y * h.normal.y;
      if (s < 0) s = -s;
      if (s > h.bound) return Location::Outside;
      if (s == h.bound) on_boundary = true;
    }
    return on_boundary ? Location::Boundary : Location::Inside;
  }
};

namespace detail {

/// 0 for directions in [0, pi), 1 for [pi, 2pi).
inline int half_of(const Vec2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

inline bool angle_less(const Vec2& u, const Vec2& v) {
  const int hu = half_of(u), hv = half_of(v);
  if (hu != hv) return hu < hv;
  return det(u, v) > 0;
}

inline Vec2 primitive_normal(const Vec2& b) {
  Vec2 xi{b.y, -b.x};
  const Int g = gcd(xi.x, xi.y);
  xi.x /= g;
  xi.y /= g;
  if (xi.x < 0 || (xi.x == 0 && xi.y < 0)) xi = -xi;
  return xi;
}

}  // namespace detail

/// Minkowski sum of the segments [0, b_k] (pi-units), vertex and halfplane forms.
inline Zonotope build_zonotope(const BMatrix& b) {
  Zonotope z;
  z.q0 = start_point_q0(b);
  std::vector<Vec2> gens;
  for (const Vec2& r : b.rows()) {
    gens.push_back(r);
    gens.push_back(-r);
  }
  std::stable_sort(gens.begin(), gens.end(), detail::angle_less);
  std::vector<Vec2> edges;
  for (const Vec2& g : gens) {
    if (!edges.empty() && det(edges.back(), g) == 0 && detail::half_of(edges.back()) == detail::half_of(g))
      edges.back() = edges.back() + g;
    else
      edges.push_back(g);
  }
  PiPoint cur = z.q0;
  for (const Vec2& e : edges) {
    z.vertex_cycle.vertices.push_back(cur);
    cur = cur + e;
  }
  if (cur != z.q0) throw Error(ErrorCode::Internal, "zonotope boundary does not close");

  std::vector<Vec2> normals;
  for (const Vec2& r : b.rows()) {
    const Vec2 xi = detail::primitive_normal(r);
    if (std::find(normals.begin(), normals.end(), xi) == normals.end()) normals.push_back(xi);
  }
  for (const Vec2& xi : normals) {
    Int s = 0;
    for (const Vec2& r : b.rows()) s += abs(r.x * xi.x + r.y * xi.y);
    z.halfplanes.push_back({xi, make_rat(s, 2)});
  }
  return z;
}

/// Sum_{j<k} det(b_j, b_k) in the given order (pi^2-units).
inline Int area_coamoeba(std::span<const Vec2> rows) {
  Int s = 0;
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t k = j + 1; k < rows.size(); ++k) s += det(rows[j], rows[k]);
  return s;
}
inline Int area_coamoeba(const SlopeOrder& order) { return area_coamoeba(order.rows); }

/// Sum_{j<k} |det(b_j, b_k)| (pi^2-units); independent of order.
inline Int area_zonotope(std::span<const Vec2> rows) {
  Int s = 0;
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t k = j + 1; k < rows.size(); ++k) s += abs(det(rows[j], rows[k]));
  return s;
}
inline Int area_zonotope(const BMatrix& b) { return area_zonotope(b.rows()); }

/// (area_coamoeba + area_zonotope) / 4 for clockwise-ordered rows.
inline Int multiplicity_m(std::span<const Vec2> ordered_rows) {
  const Int total = area_coamoeba(ordered_rows) + area_zonotope(ordered_rows);
  if (total % 4 != 0)
    throw Error(ErrorCode::Internal, "chain area " + total.str() + " is not a multiple of 4; rows not clockwise?");
  return total / 4;
}
inline Int multiplicity_m(const SlopeOrder& order) { return multiplicity_m(order.rows); }

enum class ChainKind { Coamoeba, Zonotope };

/// Everything derived from one B, prepared for repeated exact queries.
class CoamoebaChain {
 public:
  explicit CoamoebaChain(const BMatrix& b)
      : order_(clockwise_order(b)),
        gamma_(build_gamma(b, order_)),
        zonotope_(build_zonotope(b)),
        plus_(gamma_.plus),
        minus_(gamma_.minus),
        m_(multiplicity_m(order_)) {
    bool first = true;
    for (const PolyCycle* c : {&gamma_.plus, &gamma_.minus})
      for (const PiPoint& v : c->vertices) {
        const Int x = numerator(v.x), y = numerator(v.y);
        if (first || x < lo_[0]) lo_[0] = x;
        if (first || y < lo_[1]) lo_[1] = y;
        if (first || x > hi_[0]) hi_[0] = x;
        if (first || y > hi_[1]) hi_[1] = y;
        first = false;
      }
    for (int k = 0; k < 2; ++k) {
      lo_[k] -= 2;
      hi_[k] += 2;
    }
    for (const Halfplane& h : zonotope_.halfplanes) {
      zfast_.push_back({h.normal.x.convert_to<std::int64_t>(), h.normal.y.convert_to<std::int64_t>(),
                        numerator(2 * h.bound).convert_to<std::int64_t>()});
    }
    for (const PiPoint& v : zonotope_.vertex_cycle.vertices) {
      const Int x = numerator(v.x), y = numerator(v.y);
      zlo_[0] = std::min(zlo_[0], x);
      zlo_[1] = std::min(zlo_[1], y);
      zhi_[0] = std::max(zhi_[0], x);
      zhi_[1] = std::max(zhi_[1], y);
    }
  }

  [[nodiscard]] const SlopeOrder& order() const noexcept { return order_; }
  [[nodiscard]] const GammaCycles& gamma() const noexcept { return gamma_; }
  [[nodiscard]] const Zonotope& zonotope() const noexcept { return zonotope_; }
  [[nodiscard]] const Int& multiplicity() const noexcept { return m_; }
  /// Lift-enumeration box of Gamma_0, widened by 2 on every side.
  [[nodiscard]] std::array<Int, 2> box_lo() const { return lo_; }
  [[nodiscard]] std::array<Int, 2> box_hi() const { return hi_; }

  /// Winding of Gamma_+ plus winding of Gamma_-.
  [[nodiscard]] int principal_multiplicity(const PiPoint& p) const {
    const auto s = detail::scale_point(p);
    return plus_.winding(s) + minus_.winding(s);
  }

  [[nodiscard]] int torus_multiplicity(const TorusPoint& theta, ChainKind which) const {
    const auto s = detail::scale_point(theta.lift());
    if (detail::fits_fast(s) && s.D < (std::int64_t{1} << 30)) {
      const auto f = detail::to_fast(s);
      return which == ChainKind::Coamoeba ? coamoeba_fast(f) : zonotope_fast(f);
    }
    return which == ChainKind::Coamoeba ? coamoeba_exact(s) : zonotope_exact(s);
  }

 private:
  template <class T, class F>
  static void for_each_lift(const T& X, const T& Y, const T& D, const T& lox, const T& loy, const T& hix,
                            const T& hiy, F&& f) {
    // lifts X + 2kD within [lo*D, hi*D]; X in [0, 2D)
    for (T x = X; x >= lox * D; x -= 2 * D) {
      for (T y = Y; y >= loy * D; y -= 2 * D) f(x, y);
      for (T y = Y + 2 * D; y <= hiy * D; y += 2 * D) f(x, y);
    }
    for (T x = X + 2 * D; x <= hix * D; x += 2 * D) {
      for (T y = Y; y >= loy * D; y -= 2 * D) f(x, y);
      for (T y = Y + 2 * D; y <= hiy * D; y += 2 * D) f(x, y);
    }
  }

  [[nodiscard]] int coamoeba_fast(const detail::Scaled<detail::i128>& s) const {
    using detail::i128;
    int total = 0;
    auto cvt = [](const Int& v) { return static_cast<i128>(v.convert_to<std::int64_t>()); };
    for_each_lift<i128>(s.X, s.Y, s.D, cvt(lo_[0]), cvt(lo_[1]), cvt(hi_[0]), cvt(hi_[1]),
                        [&](i128 x, i128 y) {
                          const detail::Scaled<i128> q{x, y, s.D};
                          total += plus_.winding(q) + minus_.winding(q);
                        });
    return total;
  }

  [[nodiscard]] int coamoeba_exact(const detail::Scaled<Int>& s) const {
    int total = 0;
    for_each_lift<Int>(s.X, s.Y, s.D, lo_[0], lo_[1], hi_[0], hi_[1], [&](const Int& x, const Int& y) {
      const detail::Scaled<Int> q{x, y, s.D};
      total += plus_.winding(q) + minus_.winding(q);
    });
    return total;
  }

  [[nodiscard]] int zonotope_fast(const detail::Scaled<detail::i128>& s) const {
    using detail::i128;
    int count = 0;
    auto cvt = [](const Int& v) { return static_cast<i128>(v.convert_to<std::int64_t>()); };
    for_each_lift<i128>(s.X, s.Y, s.D, cvt(zlo_[0]), cvt(zlo_[1]), cvt(zhi_[0]), cvt(zhi_[1]),
                        [&](i128 x, i128 y) {
                          bool boundary = false;
                          for (const auto& h : zfast_) {
                            i128 v = static_cast<i128>(h[0]) * x + static_cast<i128>(h[1]) * y;
                            if (v < 0) v = -v;
                            const i128 lhs = 2 * v, rhs = static_cast<i128>(h[2]) * s.D;
                            if (lhs > rhs) return;
                            if (lhs == rhs) boundary = true;
                          }
                          if (boundary) throw Error(ErrorCode::OnBoundary, "lift lies on the zonotope boundary");
                          ++count;
                        });
    return count;
  }

  [[nodiscard]] int zonotope_exact(const detail::Scaled<Int>& s) const {
    int count = 0;
    for_each_lift<Int>(s.X, s.Y, s.D, zlo_[0], zlo_[1], zhi_[0], zhi_[1], [&](const Int& x, const Int& y) {
      const Location loc = zonotope_.locate({make_rat(x, s.D), make_rat(y, s.D)});
      if (loc == Location::Boundary) throw Error(ErrorCode::OnBoundary, "lift lies on the zonotope boundary");
      if (loc == Location::Inside) ++count;
    });
    return count;
  }

  SlopeOrder order_;
  GammaCycles gamma_;
  Zonotope zonotope_;
  detail::PreparedCycle plus_;
  detail::PreparedCycle minus_;
  Int m_;
  std::array<Int, 2> lo_{}, hi_{};
  std::array<Int, 2> zlo_{}, zhi_{};
  std::vector<std::array<std::int64_t, 3>> zfast_;
};

inline int principal_multiplicity(const BMatrix& b, const PiPoint& p) { return CoamoebaChain(b).principal_multiplicity(p); }

inline int torus_multiplicity(const BMatrix& b, const TorusPoint& theta, ChainKind which) {
  return CoamoebaChain(b).torus_multiplicity(theta, which);
}

/// Pseudo-random rational torus points with odd denominators in [7, 99].
class TorusSampler {
 public:
  explicit TorusSampler(std::uint64_t seed) : rng_(seed) {}

  TorusPoint next() {
    std::uniform_int_distribution<int> den(3, 49);
    const int d1 = 2 * den(rng_) + 1;
    const int d2 = 2 * den(rng_) + 1;
    std::uniform_int_distribution<int> n1(0, 2 * d1 - 1), n2(0, 2 * d2 - 1);
    return TorusPoint(Rat(n1(rng_), d1), Rat(n2(rng_), d2));
  }

 private:
  std::mt19937_64 rng_;
};

struct CycleIdentityFailure {
  TorusPoint theta;
  int coamoeba;
  int zonotope;
};

struct CycleIdentityReport {
  Int expected;
  std::size_t samples = 0;
  std::size_t redraws = 0;
  std::vector<CycleIdentityFailure> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Checks coamoeba + zonotope torus multiplicity == m_B at `samples` random points.
inline CycleIdentityReport cycle_identity_check(const CoamoebaChain& chain, std::size_t samples, std::uint64_t seed) {
  CycleIdentityReport rep;
  rep.expected = chain.multiplicity();
  TorusSampler sampler(seed);
  while (rep.samples < samples) {
    const TorusPoint theta = sampler.next();
    int c = 0, z = 0;
    try {
      c = chain.torus_multiplicity(theta, ChainKind::Coamoeba);
      z = chain.torus_multiplicity(theta, ChainKind::Zonotope);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OnBoundary) throw;
      ++rep.redraws;
      continue;
    }
    ++rep.samples;
    if (Int(c + z) != rep.expected) rep.failures.push_back({theta, c, z});
  }
  return rep;
}

inline CycleIdentityReport cycle_identity_check(const BMatrix& b, std::size_t samples, std::uint64_t seed) {
  return cycle_identity_check(CoamoebaChain(b), samples, seed);
}

/// Integral of the summed winding function of `cycles` over R^2, computed
/// exactly on the vertical-slab decomposition of the edge arrangement.
inline Rat integrate_winding(const std::vector<PolyCycle>& cycles) {
  struct Seg {
    PiPoint a, b;
  };
  std::vector<Seg> segs;
  for (const PolyCycle& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      const PiPoint& a = c.vertices[i];
      const PiPoint& b = c.vertices[(i + 1) % c.size()];
      if (a != b) segs.push_back({a, b});
    }
  std::vector<Rat> xs;
  for (const Seg& s : segs) {
    xs.push_back(s.a.x);
    xs.push_back(s.b.x);
  }
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const PiPoint r = segs[i].b - segs[i].a;
      const PiPoint q = segs[j].b - segs[j].a;
      const Rat denom = r.x * q.y - r.y * q.x;
      if (denom == 0) continue;
      const PiPoint w = segs[j].a - segs[i].a;
      const Rat t = (w.x * q.y - w.y * q.x) / denom;
      const Rat u = (w.x * r.y - w.y * r.x) / denom;
      if (t < 0 || t > 1 || u < 0 || u > 1) continue;
      xs.push_back(segs[i].a.x + t * r.x);
    }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<detail::PreparedCycle> prepared;
  for (const PolyCycle& c : cycles) prepared.emplace_back(c);

  Rat total = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rat& x0 = xs[i];
    const Rat& x1 = xs[i + 1];
    const Rat xm = (x0 + x1) / 2;
    std::vector<Rat> ys;
    for (const Seg& s : segs) {
      const Rat lo = std::min(s.a.x, s.b.x), hi = std::max(s.a.x, s.b.x);
      if (lo == hi || lo > x0 || hi < x1) continue;
      ys.push_back(s.a.y + (s.b.y - s.a.y) * (xm - s.a.x) / (s.b.x - s.a.x));
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
      const PiPoint probe{xm, (ys[k] + ys[k + 1]) / 2};
      int w = 0;
      for (const auto& pc : prepared) w += pc.winding(probe);
      if (w != 0) total += Rat(w) * (x1 - x0) * (ys[k + 1] - ys[k]);
    }
  }
  return total;
}

}  // namespace coamoeba
