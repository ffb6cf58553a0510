// coamoeba: validate a Gale matrix, produce a JSON report, or render SVG pictures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coamoeba/coamoeba.hpp"

namespace {

enum Exit : int { kOk = 0, kChecksFailed = 1, kValidation = 2, kUsage = 3, kInternal = 4 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw coamoeba::Error(coamoeba::ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw coamoeba::Error(coamoeba::ErrorCode::InvalidArgument, "cannot open '" + path + "' for writing");
  out << text;
}

struct Common {
  std::string input;
  std::string example;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<double> delta;
  std::optional<double> radius;
  std::optional<std::size_t> grid;
  std::string out;
};

coamoeba::JobSpec load_job(const Common& c) {
  coamoeba::JobSpec job;
  if (!c.example.empty()) {
    auto e = coamoeba::find_builtin(c.example);
    if (!e) throw coamoeba::Error(coamoeba::ErrorCode::InvalidArgument, "no built-in example named '" + c.example + "'");
    job = *e;
  } else if (!c.input.empty()) {
    coamoeba::json j;
    try {
      j = coamoeba::json::parse(read_input(c.input));
    } catch (const coamoeba::json::exception& e) {
      throw coamoeba::Error(coamoeba::ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
    }
    job = coamoeba::job_from_json(j);
  } else {
    throw coamoeba::Error(coamoeba::ErrorCode::InvalidArgument, "give an input file (or '-') or --example NAME");
  }
  if (c.seed) job.options.seed = *c.seed;
  if (c.samples) job.options.samples = *c.samples;
  if (c.delta) job.options.delta = *c.delta;
  if (c.radius) job.options.radius = *c.radius;
  if (c.grid) job.options.grid = *c.grid;
  return job;
}

void add_common(CLI::App* cmd, Common& c, bool analysis) {
  cmd->add_option("input", c.input, "job JSON file, or - for stdin");
  cmd->add_option("--example", c.example, "use a built-in example (example-i, example-ii, example-iii)");
  cmd->add_option("--out,-o", c.out, "output file (default stdout)");
  if (analysis) {
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_option("--samples", c.samples, "torus samples for the cycle identity");
    cmd->add_option("--delta", c.delta, "contour indentation radius")->check(CLI::PositiveNumber);
    cmd->add_option("--radius", c.radius, "contour outer radius")->check(CLI::PositiveNumber);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coamoebas of reduced A-discriminants in two variables"};
  app.require_subcommand(1);

  Common c;
  std::string what = "gamma";
  double ppp = 120.0;

  auto* validate = app.add_subcommand("validate", "check that a matrix B is a valid Gale dual");
  add_common(validate, c, false);
  auto* report = app.add_subcommand("report", "compute the full JSON report");
  add_common(report, c, true);
  auto* render = app.add_subcommand("render", "write an SVG picture");
  add_common(render, c, false);
  render->add_option("--what", what, "gamma, zonotope or torus")->check(CLI::IsMember({"gamma", "zonotope", "torus"}));
  render->add_option("--grid", c.grid, "torus grid resolution")->check(CLI::PositiveNumber);
  render->add_option("--pixels-per-pi", ppp, "scale")->check(CLI::PositiveNumber);
  auto* examples = app.add_subcommand("examples", "print the built-in example jobs as JSON");
  examples->add_option("--out,-o", c.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*examples) {
      coamoeba::json all = coamoeba::json::array();
      for (const auto& e : coamoeba::builtin_examples()) all.push_back(coamoeba::to_json(e));
      write_output(c.out, all.dump(2) + "\n");
      return kOk;
    }
    const coamoeba::JobSpec job = load_job(c);
    const coamoeba::BMatrix b = coamoeba::validate_b(job.b);
    if (*validate) {
      const auto order = coamoeba::clockwise_order(b);
      coamoeba::json out{{"valid", true}, {"rows", b.size()}, {"m_B", coamoeba::multiplicity_m(order).str()}};
      write_output(c.out, out.dump(2) + "\n");
      return kOk;
    }
    if (*report) {
      const coamoeba::Report r = coamoeba::run_report(job);
      write_output(c.out, coamoeba::to_json(r).dump(2) + "\n");
      return r.ok() ? kOk : kChecksFailed;
    }
    if (*render) {
      coamoeba::SvgOptions opt;
      opt.grid = job.options.grid;
      opt.pixels_per_pi = ppp;
      write_output(c.out, coamoeba::render_svg(b, coamoeba::parse_view(what), opt));
      return kOk;
    }
  } catch (const coamoeba::Error& e) {
    const coamoeba::json err{{"error", std::string(coamoeba::to_string(e.code()))}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    if (coamoeba::is_validation_error(e.code())) return kValidation;
    return e.code() == coamoeba::ErrorCode::InvalidArgument ? kUsage : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
