// visidim: command-line front end.
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "visidim/dimension.hpp"
#include "visidim/error.hpp"
#include "visidim/ifs.hpp"
#include "visidim/projection.hpp"
#include "visidim/render.hpp"
#include "visidim/scenarios.hpp"
#include "visidim/separation.hpp"
#include "visidim/visibility.hpp"

using namespace visidim;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitExpectation = 1;
constexpr int kExitInput = 2;

struct ScaleRange {
  int from = 6;
  int to = 12;
};

ScaleRange parse_scales(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorKind::Parse, "scales must look like a..b");
  ScaleRange r;
  try {
    r.from = std::stoi(text.substr(0, dots));
    r.to = std::stoi(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad scale range '" + text + "'");
  }
  if (r.from < 0 || r.to <= r.from || r.to > 40) throw Error(ErrorKind::ScaleOrder, "need 0 <= a < b <= 40");
  return r;
}

Rational power_scale(long base, int k) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(k));
  return Rational(mpz_class(1), d);
}

std::vector<Rational> scale_list(long base, const ScaleRange& r) {
  std::vector<Rational> out;
  for (int k = r.from; k <= r.to; ++k) out.push_back(power_scale(base, k));
  return out;
}

ViewSpec view_for(const IFSystem& ifs, const Direction& theta, const std::optional<double>& y) {
  return y ? make_view(ifs, theta, *y) : default_view(ifs, theta);
}

json group_json(const IFSystem& ifs) {
  json j;
  j["system"] = ifs.name();
  j["order"] = ifs.group().size();
  auto& el = j["elements"] = json::array();
  for (const auto& g : ifs.group().elements()) el.push_back(g.str());
  j["open_set"] = std::string(to_string(ifs.open_set_status()));
  return j;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projections, visible parts and dimensions of planar self-similar sets.\n"
               "Systems are builtin names (meng-3.1, fourcorner-3.2, ville-3.3, integral-3.4) or JSON spec files.\n"
               "Flags override spec contents; spec contents override defaults."};
  app.require_subcommand(1);

  std::string spec = "fourcorner-3.2";
  std::string theta_text = "1,0";
  std::optional<double> y;
  int depth = 12;
  long base = 2;
  std::string scales = "6..12";
  int levels = kDefaultRefinement;

  auto* verify = app.add_subcommand("verify", "Run a builtin scenario and compare every expectation");
  std::string scenario;
  std::string report_path;
  verify->add_option("name", scenario, "Scenario name")->required();
  verify->add_option("--report", report_path, "JSON report path (default: visidim-<name>.json)");

  auto* group = app.add_subcommand("group", "Rotation group generated by the orthogonal parts");
  group->add_option("--spec", spec, "System name or spec file")->capture_default_str();

  auto* project = app.add_subcommand("project", "Interval structure of P_theta(K) on every orbit direction");
  project->add_option("--spec", spec, "System name or spec file")->capture_default_str();
  project->add_option("--theta", theta_text, "Direction: 'a,b' vector or 'p/q pi' angle")->capture_default_str();
  project->add_option("--depth", depth, "Refinement depth")->capture_default_str()->check(CLI::Range(0, kMaxClassifyDepth));

  auto* visible = app.add_subcommand("visible", "Visible part from a line outside K");
  std::string csv_path, pgm_path;
  visible->add_option("--spec", spec, "System name or spec file")->capture_default_str();
  visible->add_option("--theta", theta_text, "Viewing direction")->capture_default_str();
  visible->add_option("--y", y, "Line offset <x, theta/|theta|> = y (default: just outside K)");
  visible->add_option("--scales", scales, "Exponent range a..b: delta = base^-a .. base^-b")->capture_default_str();
  visible->add_option("--base", base, "Scale base")->capture_default_str()->check(CLI::Range(2, 16));
  visible->add_option("--levels", levels, "Maximal refinement level m")->capture_default_str()->check(CLI::Range(1, 10));
  visible->add_option("--csv", csv_path, "Write the finest envelope as CSV");
  visible->add_option("--pgm", pgm_path, "Write the finest occupancy grid as PGM");

  auto* dim = app.add_subcommand("dim", "Dimension estimates");
  dim->require_subcommand(1);
  auto* dim_box = dim->add_subcommand("box", "Box-counting slope of K, or of its visible part with --theta");
  auto* dim_assouad = dim->add_subcommand("assouad", "Assouad-type estimate of the visible part");
  std::optional<std::string> dim_theta;
  for (auto* sub : {dim_box, dim_assouad}) {
    sub->add_option("--spec", spec, "System name or spec file")->capture_default_str();
    sub->add_option("--theta", dim_theta, "Viewing direction");
    sub->add_option("--y", y, "Line offset");
    sub->add_option("--scales", scales, "Exponent range a..b")->capture_default_str();
    sub->add_option("--base", base, "Scale base")->capture_default_str()->check(CLI::Range(2, 16));
  }

  auto* wsc = app.add_subcommand("wsc", "Weak separation scan of the projected line system");
  wsc->add_option("--spec", spec, "System name or spec file")->capture_default_str();
  wsc->add_option("--theta", theta_text, "Direction")->capture_default_str();
  wsc->add_option("--depth", depth, "Word length")->capture_default_str()->check(CLI::Range(1, kMaxWscDepth));

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of p/q under x -> n x mod 1");
  long orbit_n = 2;
  std::string orbit_theta;
  orbit_cmd->add_option("--n", orbit_n, "Multiplier")->capture_default_str();
  orbit_cmd->add_option("--theta", orbit_theta, "Rational p/q in [0,1)")->required();

  auto* render_cmd = app.add_subcommand("render", "Write an SVG or PGM picture");
  std::string what = "attractor", out_path, delta_text = "1/27";
  render_cmd->add_option("--spec", spec, "System name or spec file")->capture_default_str();
  render_cmd->add_option("--what", what, "attractor | projection | envelope")->capture_default_str();
  render_cmd->add_option("--theta", theta_text, "Direction (projection, envelope)")->capture_default_str();
  render_cmd->add_option("--delta", delta_text, "Scale p/q (relative to diam K for attractor)")->capture_default_str();
  render_cmd->add_option("--out", out_path, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*verify) {
      const ScenarioReport rep = verify_example(scenario);
      for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "pass" : "FAIL") << "  [" << to_string(c.provenance) << "] " << c.operation << ": "
                  << c.claim << "\n      expected " << c.expected << "\n      observed " << c.observed << '\n';
      }
      const std::string path = report_path.empty() ? "visidim-" + rep.name + ".json" : report_path;
      std::ofstream out(path);
      if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
      out << rep.to_json().dump(2) << '\n';
      std::cout << rep.name << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.seconds << " s), report "
                << path << '\n';
      return rep.passed() ? kExitPass : kExitExpectation;
    }

    const IFSystem ifs = resolve_spec(spec);

    if (*group) {
      print(group_json(ifs));
    } else if (*project) {
      const ProjectionGraph g = build_projection_graph(ifs, Direction::parse(theta_text));
      json j;
      j["system"] = ifs.name();
      j["theta"] = theta_text;
      j["vertices"] = g.size();
      auto& list = j["projections"] = json::array();
      for (const auto& c : classify_all(g, depth)) list.push_back(to_json(c));
      j["perron_dimension"] = perron_dimension(digraph_of(g));
      print(j);
    } else if (*visible) {
      const Direction theta = Direction::parse(theta_text);
      const ViewSpec view = view_for(ifs, theta, y);
      const auto deltas = scale_list(base, parse_scales(scales));
      const auto series = visible_cover_series(ifs, view, deltas, levels);
      std::vector<Sample> samples;
      json j;
      j["system"] = ifs.name();
      j["theta"] = theta_text;
      j["y"] = view.y;
      auto& list = j["covers"] = json::array();
      for (const auto& v : series) {
        list.push_back(to_json(v));
        samples.push_back({v.delta.get_d(), static_cast<double>(v.count)});
      }
      if (samples.size() >= 2) j["fit"] = to_json(fit_box_dimension(samples, "visible"));
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw Error(ErrorKind::Io, "cannot write " + csv_path);
        write_envelope_csv(out, fine_envelope(ifs, view, deltas.back()));
      }
      if (!pgm_path.empty()) {
        std::ofstream out(pgm_path, std::ios::binary);
        if (!out) throw Error(ErrorKind::Io, "cannot write " + pgm_path);
        write_pgm(out, rasterize(ifs, view, deltas.back()));
      }
      print(j);
    } else if (*dim) {
      const ScaleRange range = parse_scales(scales);
      std::vector<Rational> ratios;
      for (const auto& m : ifs.maps()) ratios.push_back(m.ratio);
      json j;
      j["system"] = ifs.name();
      j["moran_dimension"] = moran_dimension(ratios);
      if (*dim_box) {
        std::vector<Sample> samples;
        if (dim_theta) {
          const ViewSpec view = view_for(ifs, Direction::parse(*dim_theta), y);
          for (const auto& v : visible_cover_series(ifs, view, scale_list(base, range))) {
            samples.push_back({v.delta.get_d(), static_cast<double>(v.count)});
          }
          j["fit"] = to_json(fit_box_dimension(samples, "visible"));
        } else {
          std::size_t multiplicity = 0;
          for (const auto& d : scale_list(base, range)) {
            const CylinderCover cov = cover_relative(ifs, d);
            samples.push_back({d.get_d(), static_cast<double>(cov.size())});
            multiplicity = std::max(multiplicity, cube_multiplicity(cov, d.get_d() * ifs.diameter()));
          }
          j["cube_multiplicity"] = multiplicity;
          j["fit"] = to_json(fit_box_dimension(samples, "cylinders"));
        }
      } else {
        if (!dim_theta) throw Error(ErrorKind::Validation, "dim assouad needs --theta");
        if (range.to - range.from < 5) throw Error(ErrorKind::ScaleOrder, "assouad needs b - a >= 5");
        const ViewSpec view = view_for(ifs, Direction::parse(*dim_theta), y);
        const Rational finest = power_scale(base, range.to);
        const VisibleCover v = visible_cover(ifs, view, finest);
        const double res = finest.get_d();
        const std::vector<double> r_list{power_scale(base, range.to - 2).get_d()};
        std::vector<double> R_list;
        // R/r >= base^3 keeps tiny windows from dominating the maximum.
        for (int k = range.from; k <= range.to - 5; ++k) R_list.push_back(power_scale(base, k).get_d());
        j["fit"] = to_json(assouad_estimate(v.cells, res, R_list, r_list));
      }
      print(j);
    } else if (*wsc) {
      print(to_json(wsc_scan(project_system(ifs, Direction::parse(theta_text)), depth)));
    } else if (*orbit_cmd) {
      print(to_json(rational_orbit(orbit_n, parse_rational(orbit_theta))));
    } else if (*render_cmd) {
      RenderOptions opt;
      opt.kind = parse_render_kind(what);
      opt.delta = parse_rational(delta_text);
      opt.theta = Direction::parse(theta_text);
      render(ifs, opt, out_path);
      std::cout << out_path << '\n';
    }
    return kExitPass;
  } catch (const Error& e) {
    std::cerr << "visidim: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "visidim: " << e.what() << '\n';
    return kExitInput;
  }
}
