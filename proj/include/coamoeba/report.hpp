#pragma once

// Job specification, report assembly and JSON (de)serialization used by the
// command-line tool.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "coamoeba/analytic.hpp"
#include "coamoeba/error.hpp"
#include "coamoeba/exact.hpp"
#include "coamoeba/gale.hpp"
#include "coamoeba/geometry.hpp"

namespace coamoeba {

using json = nlohmann::json;

struct JobOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 200;          ///< torus samples for the cycle identity
  std::size_t winding_points = 24;    ///< test points for the contour comparison
  std::size_t jacobian_samples = 100; ///< random upper-half-plane parameters
  std::optional<double> delta;        ///< contour indentation override
  std::optional<double> radius;       ///< contour outer radius override
  std::size_t grid = 400;             ///< torus render resolution
  double pixels_per_pi = 120.0;
};

struct JobSpec {
  std::string name;
  IntMatrix b;
  std::optional<Polynomial> poly;
  JobOptions options;
};

/// Matrices of the three running examples, with their reduced discriminants.
inline std::vector<JobSpec> builtin_examples() {
  std::vector<JobSpec> out;
  out.push_back({"example-i", IntMatrix{{-1, -1}, {1, 0}, {0, 1}}, Polynomial{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}, {}});
  out.push_back({"example-ii", IntMatrix{{1, 0}, {0, 1}, {-3, -2}, {2, 1}},
                 Polynomial{{27, 2, 0}, {4, 1, 0}, {4, 0, 3}, {-18, 1, 1}, {-1, 0, 2}}, {}});
  out.push_back({"example-iii", IntMatrix{{1, -1}, {-1, 2}, {0, -2}, {1, 3}, {-1, -2}},
                 Polynomial{{1024, 0, 1},
                            {-1280, 1, 1},
                            {-3125, 3, 0},
                            {40, 2, 1},
                            {432, 1, 2},
                            {40, 3, 1},
                            {-864, 2, 2},
                            {-1280, 4, 1},
                            {432, 3, 2},
                            {1024, 5, 1}},
                 {}});
  return out;
}

inline std::optional<JobSpec> find_builtin(const std::string& name) {
  for (auto& e : builtin_examples())
    if (e.name == name) return e;
  return std::nullopt;
}

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  json detail;
};

struct Report {
  std::string name;
  std::vector<std::size_t> perm;  ///< 1-based original row indices in clockwise order
  std::vector<std::string> betas;
  PiPoint p0;
  PiPoint q0;
  Rat area_coamoeba;
  Rat area_zonotope;
  Int m_b;
  Int d_cones_plus;
  Int d_cones_minus;
  std::optional<Int> d_direct;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

/// Rational grid points near Gamma_+ at least `min_distance` radians from its
/// edges, chosen round-robin over the winding values that occur.
inline std::vector<PiPoint> winding_test_points(const PolyCycle& cycle, std::size_t count, double min_distance) {
  Rat lox = cycle.vertices.front().x, hix = lox, loy = cycle.vertices.front().y, hiy = loy;
  for (const PiPoint& v : cycle.vertices) {
    lox = std::min(lox, v.x);
    hix = std::max(hix, v.x);
    loy = std::min(loy, v.y);
    hiy = std::max(hiy, v.y);
  }
  const auto poly = detail::to_radians(cycle);
  std::vector<std::vector<PiPoint>> by_winding;
  std::vector<int> values;
  constexpr int kSteps = 11;
  const Rat sx = (hix - lox + 2) / kSteps, sy = (hiy - loy + 2) / kSteps;
  for (int i = 0; i < kSteps; ++i)
    for (int j = 0; j < kSteps; ++j) {
      const PiPoint p{lox - 1 + sx * Rat(2 * i + 1, 2), loy - 1 + sy * Rat(2 * j + 1, 2)};
      const Point2d pr{kPi * to_double(p.x), kPi * to_double(p.y)};
      if (detail::distance_to_closed_polyline(pr, poly) < min_distance) continue;
      const int w = winding_number(cycle, p);
      const auto it = std::find(values.begin(), values.end(), w);
      if (it == values.end()) {
        values.push_back(w);
        by_winding.push_back({p});
      } else {
        by_winding[static_cast<std::size_t>(it - values.begin())].push_back(p);
      }
    }
  std::vector<PiPoint> out;
  for (std::size_t round = 0; out.size() < count; ++round) {
    bool any = false;
    for (auto& bucket : by_winding)
      if (round < bucket.size() && out.size() < count) {
        out.push_back(bucket[round]);
        any = true;
      }
    if (!any) break;
  }
  return out;
}

/// Random parameters with Im t > 0, Re t in [-scale, scale], Im t log-uniform in [1e-2, scale].
inline std::vector<Complex> random_upper_parameters(std::size_t n, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-scale, scale), logim(std::log(1e-2), std::log(scale));
  std::vector<Complex> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(re(rng), std::exp(logim(rng)));
  return out;
}

struct JacobianSummary {
  std::size_t upper_negative = 0;
  std::size_t lower_positive = 0;
  std::size_t total = 0;
  [[nodiscard]] bool ok() const { return upper_negative == total && lower_positive == total; }
};

inline JacobianSummary jacobian_summary(const BranchEvaluator& ev, std::size_t n, std::uint64_t seed) {
  JacobianSummary s;
  const double scale = std::max(2.0, 2.0 * max_abs_beta(ev));
  for (Complex t : random_upper_parameters(n, seed, scale)) {
    const double h = 1e-6 * std::abs(t.imag());
    int up = 0, down = 0;
    try {
      up = jacobian_sign(ev, t, h);
      down = jacobian_sign(ev, std::conj(t), h);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Singular) throw;
    }
    ++s.total;
    if (up == -1) ++s.upper_negative;
    if (down == 1) ++s.lower_positive;
  }
  return s;
}

inline constexpr double kMaxContourDeviation = 0.05;
inline constexpr double kResidualTolerance = 1e-8;

inline Report run_report(const JobSpec& spec) {
  const BMatrix b = validate_b(spec.b);
  const CoamoebaChain chain(b);
  const SlopeOrder& order = chain.order();
  Report r;
  r.name = spec.name;
  for (std::size_t i : order.perm) r.perm.push_back(i + 1);
  for (const Slope& s : order.betas) r.betas.push_back(to_string(s));
  r.p0 = p0_lift(b);
  r.q0 = start_point_q0(b);
  r.area_coamoeba = Rat(area_coamoeba(order));
  r.area_zonotope = Rat(area_zonotope(b));
  r.m_b = chain.multiplicity();
  r.d_cones_plus = d_via_cones(order.rows, Ray::Lplus);
  r.d_cones_minus = d_via_cones(order.rows, Ray::Lminus);
  if (b.size() <= 6) r.d_direct = normalized_volume_direct(gale_dual(b));

  {
    const bool ok = r.m_b == r.d_cones_plus && r.m_b == r.d_cones_minus && (!r.d_direct || *r.d_direct == r.m_b);
    r.checks.push_back({"m_B == d_B", ok ? CheckStatus::Pass : CheckStatus::Fail,
                        json{{"m_B", r.m_b.str()},
                             {"d_cones_plus", r.d_cones_plus.str()},
                             {"d_cones_minus", r.d_cones_minus.str()},
                             {"d_direct", r.d_direct ? json(r.d_direct->str()) : json(nullptr)}}});
  }
  {
    const CycleIdentityReport cr = cycle_identity_check(chain, spec.options.samples, spec.options.seed);
    json failures = json::array();
    for (const auto& f : cr.failures)
      failures.push_back({{"theta", {to_string(f.theta.theta1()), to_string(f.theta.theta2())}},
                          {"coamoeba", f.coamoeba},
                          {"zonotope", f.zonotope}});
    r.checks.push_back({"cycle_identity", cr.ok() ? CheckStatus::Pass : CheckStatus::Fail,
                        json{{"samples", cr.samples}, {"redraws", cr.redraws}, {"failures", failures}}});
  }
  {
    const Rat integral = integrate_winding({chain.gamma().plus, chain.gamma().minus});
    r.checks.push_back({"area_vs_winding", integral == r.area_coamoeba ? CheckStatus::Pass : CheckStatus::Fail,
                        json{{"integral", to_string(integral)}, {"area_coamoeba", to_string(r.area_coamoeba)}}});
  }
  const BranchEvaluator ev(b);
  {
    ContourSpec cs = default_contour(ev);
    if (spec.options.delta) cs.delta = *spec.options.delta;
    if (spec.options.radius) cs.radius = *spec.options.radius;
    const auto pts = winding_test_points(chain.gamma().plus, spec.options.winding_points, 0.1);
    const WindingEquivalenceReport wr = verify_winding_equivalence(b, cs, pts);
    const bool ok = wr.ok() && wr.sup_deviation < kMaxContourDeviation;
    r.checks.push_back({"winding_equivalence", ok ? CheckStatus::Pass : CheckStatus::Fail,
                        json{{"delta", cs.delta},
                             {"radius", cs.radius},
                             {"sup_deviation", wr.sup_deviation},
                             {"compared", wr.compared()},
                             {"points", wr.points.size()}}});
  }
  {
    const JacobianSummary js = jacobian_summary(ev, spec.options.jacobian_samples, spec.options.seed);
    r.checks.push_back({"jacobian_signs", js.ok() ? CheckStatus::Pass : CheckStatus::Fail,
                        json{{"samples", js.total},
                             {"upper_negative", js.upper_negative},
                             {"lower_positive", js.lower_positive}}});
  }
  if (spec.poly) {
    const auto ts = random_upper_parameters(50, spec.options.seed, std::max(2.0, 2.0 * max_abs_beta(ev)));
    const double res = discriminant_residual(b, *spec.poly, ts);
    r.checks.push_back({"discriminant_residual", res < kResidualTolerance ? CheckStatus::Pass : CheckStatus::Fail,
                        json{{"residual", res}, {"tolerance", kResidualTolerance}}});
  }
  return r;
}

inline json to_json(const PiPoint& p) { return json::array({to_string(p.x), to_string(p.y)}); }

inline json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return json{
      {"name", r.name},
      {"units", {{"points", "pi"}, {"areas", "pi^2"}}},
      {"order", {{"perm", r.perm}, {"betas", r.betas}}},
      {"p0", to_json(r.p0)},
      {"q0", to_json(r.q0)},
      {"area_coamoeba", to_string(r.area_coamoeba)},
      {"area_zonotope", to_string(r.area_zonotope)},
      {"m_B", r.m_b.str()},
      {"d_B",
       {{"cones_plus", r.d_cones_plus.str()},
        {"cones_minus", r.d_cones_minus.str()},
        {"direct", r.d_direct ? json(r.d_direct->str()) : json(nullptr)}}},
      {"checks", checks},
      {"status", r.ok() ? "PASS" : "FAIL"},
  };
}

namespace detail {

inline Int json_int(const json& v) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) return Int(v.get<std::string>());
  throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + v.dump());
}

}  // namespace detail

/// {"name"?, "B": [[b11,b12],...], "poly"?: [[coef,e1,e2],...], "options"?: {...}}
inline JobSpec job_from_json(const json& j) {
  JobSpec s;
  if (!j.is_object() || !j.contains("B") || !j.at("B").is_array())
    throw Error(ErrorCode::InvalidArgument, "job must be an object with an array field \"B\"");
  s.name = j.value("name", std::string());
  const json& rows = j.at("B");
  std::size_t cols = rows.empty() ? 2 : rows.front().size();
  s.b = IntMatrix(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols)
      throw Error(ErrorCode::InvalidShape, "row " + std::to_string(r + 1) + " of B has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) s.b(r, c) = detail::json_int(rows[r][c]);
  }
  if (j.contains("poly")) {
    Polynomial p;
    for (const json& t : j.at("poly")) {
      if (!t.is_array() || t.size() != 3) throw Error(ErrorCode::InvalidArgument, "poly terms are [coef, e1, e2]");
      p.push_back({t[0].get<long long>(), t[1].get<int>(), t[2].get<int>()});
    }
    s.poly = std::move(p);
  }
  if (j.contains("options")) {
    const json& o = j.at("options");
    if (o.contains("seed")) s.options.seed = o.at("seed").get<std::uint64_t>();
    if (o.contains("samples")) s.options.samples = o.at("samples").get<std::size_t>();
    if (o.contains("winding_points")) s.options.winding_points = o.at("winding_points").get<std::size_t>();
    if (o.contains("jacobian_samples")) s.options.jacobian_samples = o.at("jacobian_samples").get<std::size_t>();
    if (o.contains("delta")) s.options.delta = o.at("delta").get<double>();
    if (o.contains("radius")) s.options.radius = o.at("radius").get<double>();
    if (o.contains("grid")) s.options.grid = o.at("grid").get<std::size_t>();
    if (o.contains("pixels_per_pi")) s.options.pixels_per_pi = o.at("pixels_per_pi").get<double>();
  }
  return s;
}

inline json to_json(const JobSpec& s) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.b.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < s.b.cols(); ++c) {
      const Int& v = s.b(r, c);
      if (fits_int64(v)) row.push_back(v.convert_to<long long>());
      else row.push_back(v.str());
    }
    rows.push_back(row);
  }
  json j{{"name", s.name}, {"B", rows}};
  if (s.poly) {
    json p = json::array();
    for (const Monomial& m : *s.poly) p.push_back({m.coef, m.e1, m.e2});
    j["poly"] = p;
  }
  return j;
}

}  // namespace coamoeba
