#pragma once

// Floating-point side: the Horn-Kapranov map Psi[1:t], its principal
// argument branch, contour tracing and the numerical checks built on them.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coamoeba/error.hpp"
#include "coamoeba/exact.hpp"
#include "coamoeba/gale.hpp"
#include "coamoeba/geometry.hpp"

namespace coamoeba {

using Complex = std::complex<double>;
using Point2d = std::array<double, 2>;

inline constexpr double kPi = std::numbers::pi;

namespace detail {

struct RowD {
  double x;
  double y;
  std::optional<double> beta;
};

inline std::vector<RowD> rows_as_double(std::span<const Vec2> rows) {
  std::vector<RowD> out;
  for (const Vec2& r : rows) {
    RowD d{to_double(r.x), to_double(r.y), std::nullopt};
    if (r.y != 0) d.beta = to_double(make_rat(-r.x, r.y));
    out.push_back(d);
  }
  return out;
}

inline void check_nonsingular(const RowD& r, Complex z, Complex t) {
  const double scale = std::abs(r.x) + std::abs(r.y) * std::abs(t);
  if (std::abs(z) <= 8.0 * std::numeric_limits<double>::epsilon() * scale)
    throw Error(ErrorCode::Singular, "t hits the singularity beta = " +
                                         (r.beta ? std::to_string(*r.beta) : std::string("inf")));
}

}  // namespace detail

/// Psi[1:t] = (prod_j <b_j,(1,t)>^{b_j1}, prod_j <b_j,(1,t)>^{b_j2}), evaluated through logarithms.
inline std::array<Complex, 2> psi_eval(const BMatrix& b, Complex t) {
  Complex l1 = 0.0, l2 = 0.0;
  for (const auto& r : detail::rows_as_double(b.rows())) {
    const Complex z = r.x + r.y * t;
    detail::check_nonsingular(r, z, t);
    const Complex lz = std::log(z);
    l1 += r.x * lz;
    l2 += r.y * lz;
  }
  return {std::exp(l1), std::exp(l2)};
}

/// The principal branch of Arg o Psi, normalized so that real t > beta_1
/// maps to the lift of p0 with coordinates in {0, pi}.
class BranchEvaluator {
 public:
  explicit BranchEvaluator(const BMatrix& b) : order_(clockwise_order(b)), p0_(p0_lift(b)) {
    rows_ = detail::rows_as_double(order_.rows);
    for (const auto& r : rows_)
      if (r.beta) {
        if (!beta_max_ || *r.beta > *beta_max_) beta_max_ = r.beta;
        if (!beta_min_ || *r.beta < *beta_min_) beta_min_ = r.beta;
      }
    // Upper-half-plane factor arguments tend to 0 (b2 > 0), -pi (b2 < 0) or
    // 0/pi by sign(b1) (b2 = 0) as t -> +inf along the reals.
    Vec2 raw{0, 0};
    for (const Vec2& r : order_.rows) {
      if (r.y < 0) raw = raw + (-r);
      else if (r.y == 0 && r.x < 0) raw = raw + r;
    }
    const Rat sx = p0_.x - Rat(raw.x), sy = p0_.y - Rat(raw.y);
    if (!is_integer(sx / 2) || !is_integer(sy / 2))
      throw Error(ErrorCode::Internal, "branch normalization is not in 2*pi*Z^2");
    shift_ = {kPi * to_double(sx), kPi * to_double(sy)};
    p0d_ = {kPi * to_double(p0_.x), kPi * to_double(p0_.y)};
  }

  [[nodiscard]] const SlopeOrder& order() const noexcept { return order_; }
  [[nodiscard]] const PiPoint& p0() const noexcept { return p0_; }
  /// p0 in radians.
  [[nodiscard]] Point2d p0_radians() const noexcept { return p0d_; }
  [[nodiscard]] std::optional<double> beta_max() const noexcept { return beta_max_; }
  [[nodiscard]] std::optional<double> beta_min() const noexcept { return beta_min_; }

  /// Distinct finite normal slopes, decreasing.
  [[nodiscard]] std::vector<double> distinct_betas() const {
    std::vector<double> out;
    for (const auto& r : rows_)
      if (r.beta && (out.empty() || *r.beta != out.back())) out.push_back(*r.beta);
    return out;
  }

  /// Value for Im t > 0, or real t approached from above.
  [[nodiscard]] Point2d upper_closure(Complex t) const {
    double a1 = shift_[0], a2 = shift_[1];
    const bool real = t.imag() == 0.0;
    for (const auto& r : rows_) {
      double arg;
      if (r.y == 0.0) {
        arg = r.x > 0 ? 0.0 : kPi;
      } else {
        const Complex z = r.x + r.y * t;
        detail::check_nonsingular(r, z, t);
        if (real) {
          arg = z.real() > 0 ? 0.0 : (r.y > 0 ? kPi : -kPi);
        } else {
          arg = std::arg(z);
          if (r.y < 0 && arg > 0) arg -= 2 * kPi;
        }
      }
      a1 += r.x * arg;
      a2 += r.y * arg;
    }
    return {a1, a2};
  }

  /// [Arg o Psi]_0(t); the lower half plane is the reflection through p0.
  [[nodiscard]] Point2d operator()(Complex t) const {
    if (t.imag() > 0) return upper_closure(t);
    if (t.imag() < 0) {
      const Point2d v = upper_closure(std::conj(t));
      return {2 * p0d_[0] - v[0], 2 * p0d_[1] - v[1]};
    }
    if (beta_max_ && t.real() <= *beta_max_)
      throw Error(ErrorCode::BranchCut, "real t = " + std::to_string(t.real()) + " lies on the cut");
    return p0d_;
  }

 private:
  SlopeOrder order_;
  PiPoint p0_;
  std::vector<detail::RowD> rows_;
  std::optional<double> beta_max_, beta_min_;
  Point2d shift_{};
  Point2d p0d_{};
};

inline Point2d arg_psi_principal(const BranchEvaluator& ev, Complex t) { return ev(t); }

struct ContourSpec {
  double delta = 0.0;
  double radius = 0.0;
  std::size_t samples_per_arc = 512;
};

inline double min_beta_gap(const BranchEvaluator& ev) {
  const auto betas = ev.distinct_betas();
  if (betas.size() < 2) return 1.0;
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < betas.size(); ++i) gap = std::min(gap, betas[i] - betas[i + 1]);
  return gap;
}

inline double max_abs_beta(const BranchEvaluator& ev) {
  double m = 0.0;
  for (double b : ev.distinct_betas()) m = std::max(m, std::abs(b));
  return m;
}

/// delta = 1e-3 * (minimal beta gap), R = max(1e3, 1e3 * max|beta|), 512 samples per arc.
inline ContourSpec default_contour(const BranchEvaluator& ev) {
  return {1e-3 * min_beta_gap(ev), std::max(1e3, 1e3 * max_abs_beta(ev)), 512};
}

inline void check_contour(const BranchEvaluator& ev, const ContourSpec& spec) {
  if (!(spec.delta > 0) || spec.delta >= 0.5 * min_beta_gap(ev))
    throw Error(ErrorCode::InvalidArgument, "indentation radius must lie in (0, gap/2)");
  if (!(spec.radius > 2 * max_abs_beta(ev)) || spec.radius <= spec.delta)
    throw Error(ErrorCode::InvalidArgument, "outer radius must exceed 2 max|beta|");
  if (spec.samples_per_arc < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 samples per arc");
}

struct TracedContour {
  std::vector<Point2d> points;  ///< image polyline in radians, first == last up to rounding
};

namespace detail {

inline constexpr std::size_t kMaxArcSamples = std::size_t{1} << 16;

template <class Param>
void trace_arc(const BranchEvaluator& ev, Param&& t_of, std::size_t samples, const char* name,
               std::vector<Point2d>& out) {
  for (std::size_t n = samples;; n *= 2) {
    if (n > kMaxArcSamples)
      throw Error(ErrorCode::SamplingFailure, std::string("refinement cap exceeded on ") + name);
    std::vector<Point2d> pts;
    pts.reserve(n + 1);
    bool ok = true;
    for (std::size_t i = 0; i <= n; ++i) {
      pts.push_back(ev.upper_closure(t_of(static_cast<double>(i) / static_cast<double>(n))));
      if (i > 0) {
        const Point2d& a = pts[i - 1];
        const Point2d& b = pts[i];
        if (std::abs(a[0] - b[0]) >= kPi / 2 || std::abs(a[1] - b[1]) >= kPi / 2) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (!out.empty()) pts.erase(pts.begin());
    out.insert(out.end(), pts.begin(), pts.end());
    return;
  }
}

}  // namespace detail

/// Image of the indented upper-half-plane contour: the real axis from R to
/// -R with half-circle detours of radius delta over each distinct beta, then
/// the half circle of radius R back to R.
inline TracedContour trace_contour(const BranchEvaluator& ev, const ContourSpec& spec) {
  check_contour(ev, spec);
  TracedContour tc;
  const double d = spec.delta, R = spec.radius;
  const std::size_t n = spec.samples_per_arc;
  auto segment = [&](double from, double to) {
    detail::trace_arc(ev, [=](double s) { return Complex(from + (to - from) * s, 0.0); }, 8, "real segment",
                      tc.points);
  };
  double cur = R;
  for (double beta : ev.distinct_betas()) {
    segment(cur, beta + d);
    detail::trace_arc(ev, [=](double s) { return beta + d * std::polar(1.0, kPi * s); }, n, "indentation",
                      tc.points);
    cur = beta - d;
  }
  segment(cur, -R);
  detail::trace_arc(ev, [=](double s) { return -R * std::polar(1.0, -kPi * s); }, n, "outer half circle",
                    tc.points);
  return tc;
}

namespace detail {

inline double segment_distance(const Point2d& p, const Point2d& a, const Point2d& b) {
  const double vx = b[0] - a[0], vy = b[1] - a[1];
  const double wx = p[0] - a[0], wy = p[1] - a[1];
  const double len2 = vx * vx + vy * vy;
  double s = len2 > 0 ? (wx * vx + wy * vy) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(wx - s * vx, wy - s * vy);
}

inline std::vector<Point2d> to_radians(const PolyCycle& c) {
  std::vector<Point2d> out;
  for (const PiPoint& v : c.vertices) out.push_back({kPi * to_double(v.x), kPi * to_double(v.y)});
  return out;
}

inline double distance_to_closed_polyline(const Point2d& p, const std::vector<Point2d>& poly) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i)
    best = std::min(best, segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
  return best;
}

/// Crossing-number winding of an open polyline closed by joining last to first.
inline int winding_double(const std::vector<Point2d>& poly, const Point2d& p) {
  int w = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2d& a = poly[i];
    const Point2d& b = poly[(i + 1) % n];
    const double cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
    if (a[1] <= p[1]) {
      if (b[1] > p[1] && cross > 0) ++w;
    } else if (b[1] <= p[1] && cross < 0) {
      --w;
    }
  }
  return w;
}

}  // namespace detail

/// Largest distance (radians) from a traced point to the edge set of `cycle`.
inline double sup_deviation(const TracedContour& tc, const PolyCycle& cycle) {
  const auto poly = detail::to_radians(cycle);
  double worst = 0.0;
  for (const Point2d& p : tc.points) worst = std::max(worst, detail::distance_to_closed_polyline(p, poly));
  return worst;
}

struct WindingComparison {
  PiPoint point;
  int exact = 0;
  int traced = 0;
  bool skipped = false;
  std::string notice;
};

struct WindingEquivalenceReport {
  double sup_deviation = 0.0;
  std::vector<WindingComparison> points;

  [[nodiscard]] std::size_t compared() const {
    return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const auto& c) { return !c.skipped; }));
  }
  [[nodiscard]] bool ok() const {
    return std::all_of(points.begin(), points.end(), [](const auto& c) { return c.skipped || c.exact == c.traced; });
  }
};

/// Compares the winding of the traced contour image with the exact winding of Gamma_+.
inline WindingEquivalenceReport verify_winding_equivalence(const BMatrix& b, const ContourSpec& spec,
                                                           const std::vector<PiPoint>& test_points) {
  const BranchEvaluator ev(b);
  const GammaCycles gamma = build_gamma(b, ev.order());
  const TracedContour tc = trace_contour(ev, spec);
  WindingEquivalenceReport rep;
  rep.sup_deviation = sup_deviation(tc, gamma.plus);
  const auto poly = detail::to_radians(gamma.plus);
  for (const PiPoint& p : test_points) {
    WindingComparison cmp{p};
    const Point2d pr{kPi * to_double(p.x), kPi * to_double(p.y)};
    if (detail::distance_to_closed_polyline(pr, poly) <= rep.sup_deviation) {
      cmp.skipped = true;
      cmp.notice = "point closer to Gamma_+ than the traced deviation";
    } else {
      try {
        cmp.exact = winding_number(gamma.plus, p);
        cmp.traced = detail::winding_double(tc.points, pr);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OnBoundary) throw;
        cmp.skipped = true;
        cmp.notice = "point lies on Gamma_+";
      }
    }
    rep.points.push_back(std::move(cmp));
  }
  return rep;
}

enum class HalfPlane { Upper, Lower };

struct CoamoebaSample {
  Complex t;
  Point2d image;
};

/// Images of n random t in one half plane: Re t uniform in [-radius, radius],
/// |Im t| log-uniform in [1e-3, radius].
inline std::vector<CoamoebaSample> sample_coamoeba(const BranchEvaluator& ev, std::size_t n, HalfPlane half,
                                                   std::uint64_t seed, double radius = 10.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-radius, radius);
  std::uniform_real_distribution<double> logim(std::log(1e-3), std::log(radius));
  std::vector<CoamoebaSample> out;
  out.reserve(n);
  while (out.size() < n) {
    Complex t(re(rng), std::exp(logim(rng)));
    if (half == HalfPlane::Lower) t = std::conj(t);
    try {
      out.push_back({t, ev(t)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Singular) throw;
    }
  }
  return out;
}

/// Sign of the central-difference Jacobian of the principal branch in (Re t, Im t).
inline int jacobian_sign(const BranchEvaluator& ev, Complex t, double h) {
  if (t.imag() == 0.0) throw Error(ErrorCode::InvalidArgument, "jacobian_sign needs Im t != 0");
  if (!(h > 0) || h > 1e-5 * std::abs(t.imag()))
    throw Error(ErrorCode::InvalidArgument, "finite-difference step must satisfy 0 < h <= 1e-5 |Im t|");
  const Point2d xp = ev(t + Complex(h, 0)), xm = ev(t - Complex(h, 0));
  const Point2d yp = ev(t + Complex(0, h)), ym = ev(t - Complex(0, h));
  const double a = (xp[0] - xm[0]) / (2 * h), c = (xp[1] - xm[1]) / (2 * h);
  const double bb = (yp[0] - ym[0]) / (2 * h), d = (yp[1] - ym[1]) / (2 * h);
  const double jac = a * d - bb * c;
  const double scale = std::hypot(a, c) * std::hypot(bb, d);
  if (std::abs(jac) < 1e3 * std::numeric_limits<double>::epsilon() * scale || scale == 0.0) return 0;
  return jac > 0 ? 1 : -1;
}

struct Monomial {
  long long coef;
  int e1;
  int e2;
};
using Polynomial = std::vector<Monomial>;

/// max_t |P(Psi(t))| / (1 + sum |monomials|).
inline double discriminant_residual(const BMatrix& b, const Polynomial& poly, const std::vector<Complex>& t_samples) {
  double worst = 0.0;
  for (Complex t : t_samples) {
    const auto x = psi_eval(b, t);
    Complex sum = 0.0;
    double mag = 0.0;
    for (const Monomial& m : poly) {
      const Complex v = static_cast<double>(m.coef) * std::pow(x[0], m.e1) * std::pow(x[1], m.e2);
      sum += v;
      mag += std::abs(v);
    }
    worst = std::max(worst, std::abs(sum) / (1.0 + mag));
  }
  return worst;
}

}  // namespace coamoeba
