// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pfcurv/checks.hpp"
#include "pfcurv/curvature.hpp"
#include "pfcurv/errors.hpp"
#include "pfcurv/io.hpp"
#include "pfcurv/meshgen.hpp"

namespace pfcurv::cli {

namespace {

MetricComplex load(const std::string& path) {
  if (path == "-") return make_metric_complex(read_mesh(std::cin));
  return make_metric_complex(read_mesh_file(path));
}

// Writes to `path`, or to `out` when no path was given.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty()) {
    fn(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UnsupportedRequest("cannot write " + path);
  fn(file);
}

std::string skeleton_name(int k) {
  static const char* names[] = {"V", "E", "F", "T"};
  return k < 4 ? names[k] : "C" + std::to_string(k);
}

void info(const MetricComplex& m, std::ostream& out) {
  const SimplicialComplex& c = m.complex();
  const int d = c.dimension();
  out << "d=" << d;
  for (int k = 0; k <= d; ++k) out << ' ' << skeleton_name(k) << '=' << c.size(k);
  out << " χ=" << c.euler_characteristic() << " boundary=" << c.boundary_size(d - 1) << '\n';
  out << "boundary simplexes:";
  for (int k = 0; k < d; ++k) out << ' ' << skeleton_name(k) << '=' << c.boundary_size(k);
  out << '\n';
  out << "orientable=" << (c.orientable() ? "yes" : "no") << '\n';
  const double frac = m.well_centered_fraction();
  const auto inside = static_cast<long long>(std::llround(frac * static_cast<double>(c.size(d))));
  out << "well-centered=" << format_number(100.0 * frac) << "% (" << inside << '/' << c.size(d)
      << " top cells contain their circumcenter)\n";
  out << "total_volume=" << format_number(m.total_volume()) << '\n';
}

void volumes(const MetricComplex& m, int only, std::ostream& out) {
  const SimplicialComplex& c = m.complex();
  out << "dim,index,vertices,volume,dual_volume,hybrid_volume,circumradius_sq\n";
  for (int k = 0; k <= c.dimension(); ++k) {
    if (only >= 0 && k != only) continue;
    for (std::size_t i = 0; i < c.size(k); ++i) {
      const SimplexId s{k, static_cast<int>(i)};
      out << k << ',' << i << ',';
      bool first = true;
      for (int v : c.vertices(s)) {
        out << (first ? "" : " ") << v;
        first = false;
      }
      out << ',' << format_number(m.volume(s)) << ',' << format_number(m.dual_volume(s)) << ','
          << format_number(hybrid_volume(m, s)) << ',' << format_number(m.circumradius_sq(s))
          << '\n';
    }
  }
}

}  // namespace

int run_checks_command(const MetricComplex& m, const std::string& suite, std::ostream& out) {
  const auto results = run_checks(m, parse_check_suite(suite));
  for (const CheckResult& r : results) {
    out << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << "  " << r.name
        << "  residual=" << format_number(r.residual) << "  tolerance=" << format_number(r.tolerance);
    if (!r.note.empty()) out << "  (" << r.note << ')';
    out << '\n';
  }
  const bool ok = all_passed(results);
  out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  return ok ? kOk : kCheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Piecewise-flat curvature and discrete exterior calculus on simplicial meshes",
               "pfcurv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pfcurv 0.1.0");

  std::string mesh_path;
  std::string output;
  bool include_boundary = false;

  auto* info_cmd = app.add_subcommand("info", "Counts, Euler characteristic, well-centeredness");
  info_cmd->add_option("mesh", mesh_path, "Mesh JSON ('-' for stdin)")->required();

  std::string target = "hinges";
  std::string format = "csv";
  bool normalized = false;
  auto* curv_cmd = app.add_subcommand("curvature", "Per-element curvature report");
  curv_cmd->add_option("mesh", mesh_path, "Mesh JSON ('-' for stdin)")->required();
  curv_cmd->add_option("--at", target, "Elements to report on")
      ->check(CLI::IsMember({"hinges", "dual-edges", "edges", "vertices", "dual-vertices"}));
  curv_cmd->add_flag("--normalized", normalized, "Report normalized values");
  curv_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  curv_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  curv_cmd->add_flag("--include-boundary", include_boundary,
                     "Give boundary hinges the deficit pi - sum(theta) and include them");

  std::optional<double> prefactor;
  auto* action_cmd = app.add_subcommand("action", "Regge action");
  action_cmd->add_option("mesh", mesh_path, "Mesh JSON ('-' for stdin)")->required();
  action_cmd->add_option("--prefactor", prefactor, "Multiply the action (e.g. c^4/8piG)");
  action_cmd->add_flag("--include-boundary", include_boundary, "Include boundary hinges");

  int only_dim = -1;
  auto* volumes_cmd = app.add_subcommand("volumes", "Primal, dual and hybrid volumes");
  volumes_cmd->add_option("mesh", mesh_path, "Mesh JSON ('-' for stdin)")->required();
  volumes_cmd->add_option("--dim", only_dim, "Only simplexes of this dimension");
  volumes_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string cochain_path;
  auto* hodge_cmd = app.add_subcommand("hodge", "Apply the Hodge star to a cochain");
  hodge_cmd->add_option("mesh", mesh_path, "Mesh JSON")->required();
  hodge_cmd->add_option("cochain", cochain_path, "Cochain JSON")->required()->check(CLI::ExistingFile);
  hodge_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string suite = "all";
  auto* check_cmd = app.add_subcommand("check", "Run invariant suites; exit 5 on failure");
  check_cmd->add_option("mesh", mesh_path, "Mesh JSON ('-' for stdin)")->required();
  check_cmd->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"volumes", "dec", "curvature", "all"}));

  MeshSpec spec;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a verification mesh");
  gen_cmd->add_option("generator", spec.generator, "Generator")
      ->required()
      ->check(CLI::IsMember({"flat-grid", "simplex-boundary", "icosphere"}));
  gen_cmd->add_option("--dim", spec.dimension,
                      "flat-grid: 2 or 3; simplex-boundary: ambient simplex dimension");
  gen_cmd->add_option("--size", spec.size, "flat-grid: cells per axis");
  gen_cmd->add_option("--level", spec.level, "icosphere: subdivision level (0-6)");
  gen_cmd->add_option("--radius", spec.radius, "icosphere: sphere radius");
  gen_cmd->add_option("--amplitude", spec.amplitude, "Relative perturbation of squared lengths");
  gen_cmd->add_option("--seed", spec.seed, "Perturbation seed");
  gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, ee;
    const int code = app.exit(e, o, ee);
    out << o.str();
    err << ee.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    CurvatureOptions copts;
    copts.include_boundary = include_boundary;

    if (*info_cmd) {
      info(load(mesh_path), out);
    } else if (*curv_cmd) {
      const MetricComplex m = load(mesh_path);
      const ReportTarget t = parse_report_target(target);
      if ((t == ReportTarget::edges || t == ReportTarget::dual_edges) && m.dimension() < 3) {
        throw UnsupportedRequest("--at " + target + " needs a mesh of dimension >= 3");
      }
      const CurvatureReport r = compute_curvature_report(m, copts);
      emit(output, out, [&](std::ostream& o) {
        if (format == "json") {
          o << report_to_json(m, r, t, normalized).dump(2) << '\n';
        } else {
          write_report_csv(o, m, r, t, normalized);
        }
      });
    } else if (*action_cmd) {
      const MetricComplex m = load(mesh_path);
      out << "S=" << format_number(regge_action(m, prefactor, copts)) << '\n';
    } else if (*volumes_cmd) {
      const MetricComplex m = load(mesh_path);
      emit(output, out, [&](std::ostream& o) { volumes(m, only_dim, o); });
    } else if (*hodge_cmd) {
      const MetricComplex m = load(mesh_path);
      std::ifstream in(cochain_path);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw UnsupportedRequest(std::string("malformed cochain JSON: ") + e.what());
      }
      const Cochain w = hodge(m, cochain_from_json(j));
      emit(output, out, [&](std::ostream& o) { o << cochain_to_json(w).dump() << '\n'; });
    } else if (*check_cmd) {
      return run_checks_command(load(mesh_path), suite, out);
    } else if (*gen_cmd) {
      const MeshData mesh = generate(spec);
      emit(output, out, [&](std::ostream& o) { write_mesh(o, mesh); });
    }
    return kOk;
  } catch (const InvalidMesh& e) {
    err << "invalid mesh: " << e.what() << '\n';
    return kInvalidMesh;
  } catch (const DuplicateCell& e) {
    err << "invalid mesh: " << e.what() << '\n';
    return kInvalidMesh;
  } catch (const NonManifold& e) {
    err << "invalid mesh: " << e.what() << '\n';
    return kInvalidMesh;
  } catch (const InconsistentOrientation& e) {
    err << "invalid mesh: " << e.what() << '\n';
    return kInvalidMesh;
  } catch (const BrokenCycle& e) {
    err << "invalid mesh: " << e.what() << '\n';
    return kInvalidMesh;
  } catch (const DegenerateSimplex& e) {
    err << "degenerate geometry: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ZeroMeasureElement& e) {
    err << "degenerate geometry: " << e.what() << '\n';
    return kDegenerate;
  } catch (const Error& e) {
    err << "unsupported request: " << e.what() << '\n';
    return kUnsupported;
  }
}

}  // namespace pfcurv::cli
