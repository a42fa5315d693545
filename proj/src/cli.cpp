// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgraph/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgraph/convergence.hpp"
#include "qgraph/io.hpp"
#include "qgraph/resolvent.hpp"

namespace qgraph {

namespace {

using nlohmann::json;

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file " + path);
  f << text;
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

SpectralPoint spectral_point(const STForm& f, double kappa_override) {
  if (kappa_override > 0.0) return SpectralPoint{Complex(kappa_override, 0.0)};
  return default_spectral_point(f);
}

std::string ag_label(const AgIndex& i) {
  if (i.is_segment) {
    return std::to_string(i.l + 1) + ":" + std::to_string(i.h + 1);
  }
  return std::to_string(i.j + 1);
}

void sample_kernel_csv(const STForm& f, double d, double kappa_override,
                       std::ostream& os) {
  const SpectralPoint sp = spectral_point(f, kappa_override);
  const double scale = 1.0 / sp.kappa.real();
  const std::vector<double> half_xs = {0.25 * scale, 0.5 * scale, 1.0 * scale,
                                       2.0 * scale};

  os << "row_index,col_index,x,y,re,im\n";
  os << std::setprecision(17);

  const auto emit = [&](const std::string& ri, const std::string& ci, double x,
                        double y, Complex v) {
    os << ri << "," << ci << "," << x << "," << y << "," << v.real() << ","
       << v.imag() << "\n";
  };

  if (d <= 0.0) {
    const ResolventAd r = lambda_ad(f, sp);
    for (std::size_t j = 0; j < f.n; ++j) {
      for (std::size_t l = 0; l < f.n; ++l) {
        for (double x : half_xs) {
          for (double y : half_xs) {
            emit(std::to_string(j + 1), std::to_string(l + 1), x, y,
                 eval_kernel_ad(r, j, l, x, y));
          }
        }
      }
    }
    return;
  }

  const ApproxParams params = build_params(f, d);
  const ResolventAg r = assemble_m(params, sp);
  std::vector<AgIndex> indices;
  for (std::size_t j = 0; j < f.n; ++j) indices.push_back(AgIndex::halfline(j));
  for (const auto& [l, h] : r.halves) indices.push_back(AgIndex::segment(l, h));
  const std::vector<double> seg_xs = {0.2 * d, 0.4 * d, 0.6 * d, 0.8 * d};

  for (const AgIndex& row : indices) {
    for (const AgIndex& col : indices) {
      const auto& xs = row.is_segment ? seg_xs : half_xs;
      const auto& ys = col.is_segment ? seg_xs : half_xs;
      for (double x : xs) {
        for (double y : ys) {
          emit(ag_label(row), ag_label(col), x, y,
               eval_kernel_ag(r, row, col, x, y));
        }
      }
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"quantum-graph vertex couplings: admissibility, canonical "
               "form, delta-network approximation, resolvent comparison"};
  app.require_subcommand(1);

  std::string input, output;
  double kappa_override = 0.0;
  double d_value = 0.0;
  std::vector<double> d_list;
  double xmax = 0.0;
  std::size_t nodes = 64;
  double tol = kDefaultTol;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check admissibility of a coupling file");
  validate_cmd->add_option("input", input, "coupling JSON file")->required();
  validate_cmd->add_option("--tol", tol, "decision tolerance");

  CLI::App* normalize_cmd = app.add_subcommand(
      "normalize", "reduce a coupling file to its canonical form");
  normalize_cmd->add_option("input", input, "coupling JSON file")->required();
  normalize_cmd->add_option("-o,--output", output, "output path");
  normalize_cmd->add_option("--tol", tol, "decision tolerance");

  CLI::App* build_cmd = app.add_subcommand(
      "build", "emit the approximating-network design at a given d");
  build_cmd->add_option("input", input, "coupling or canonical-form JSON file")
      ->required();
  build_cmd->add_option("--d", d_value, "edge half-length")->required();
  build_cmd->add_option("-o,--output", output, "output path");

  CLI::App* kernel_cmd = app.add_subcommand(
      "kernel", "sample resolvent kernels as CSV (star graph, or the "
                "approximating graph when --d is given)");
  kernel_cmd->add_option("input", input, "coupling or canonical-form JSON file")
      ->required();
  kernel_cmd->add_option("--d", d_value, "edge half-length (approximating)");
  kernel_cmd->add_option("--kappa", kappa_override, "spectral parameter");
  kernel_cmd->add_option("-o,--output", output, "output path");

  bool converge_json = false;
  CLI::App* converge_cmd = app.add_subcommand(
      "converge", "sweep d, report Hilbert-Schmidt norms and the fitted rate");
  converge_cmd->add_option("input", input, "coupling or canonical-form JSON file")
      ->required();
  converge_cmd->add_option("--d-list", d_list, "decreasing d values")
      ->required()
      ->delimiter(',');
  converge_cmd->add_option("--kappa", kappa_override, "spectral parameter");
  converge_cmd->add_option("--xmax", xmax, "halfline truncation");
  converge_cmd->add_option("--nodes", nodes, "quadrature nodes per panel");
  converge_cmd->add_flag("--json", converge_json, "emit JSON instead of CSV");
  converge_cmd->add_option("-o,--output", output, "output path");

  std::vector<const char*> argv;
  argv.push_back("qgraph");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate_cmd)) {
      const Coupling c = coupling_from_json(load_json(input));
      const AdmissibilityReport rep = validate(c, tol);
      out << admissibility_to_json(rep).dump(2) << "\n";
      return rep.admissible() ? 0 : 1;
    }

    if (app.got_subcommand(normalize_cmd)) {
      const Coupling c = coupling_from_json(load_json(input));
      const STForm f = to_st_form(c, tol);
      write_output(st_form_to_json(f).dump(2) + "\n", output, out);
      return 0;
    }

    if (app.got_subcommand(build_cmd)) {
      const STForm f = st_form_from_document(load_json(input));
      const ApproxParams p = build_params(f, d_value);
      write_output(approx_params_to_json(p).dump(2) + "\n", output, out);
      return 0;
    }

    if (app.got_subcommand(kernel_cmd)) {
      const STForm f = st_form_from_document(load_json(input));
      std::ostringstream ss;
      sample_kernel_csv(f, d_value, kappa_override, ss);
      write_output(ss.str(), output, out);
      return 0;
    }

    if (app.got_subcommand(converge_cmd)) {
      const STForm f = st_form_from_document(load_json(input));
      QuadConfig q;
      q.x_max = xmax;
      q.nodes_halfline = nodes;
      q.nodes_segment = nodes;
      const ConvergenceReport rep =
          convergence_sweep(f, d_list, spectral_point(f, kappa_override), q);
      std::ostringstream ss;
      if (converge_json) {
        ss << convergence_to_json(rep).dump(2) << "\n";
      } else {
        write_convergence_csv(rep, ss);
      }
      write_output(ss.str(), output, out);
      if (!rep.envelope_ok) {
        err << "sqrt(d) envelope anchored at d = " << rep.d_values.front()
            << " is violated\n";
        return 1;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotAdmissible& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const RankAmbiguous& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateDenominator& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qgraph
