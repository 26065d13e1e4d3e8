// Copyright 2026 The uncert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "uncert/bounds.hpp"
#include "uncert/channels.hpp"
#include "uncert/gallery.hpp"
#include "uncert/io.hpp"
#include "uncert/measures.hpp"

namespace uncert {

namespace {

// Aggregated interior-point statistics over every program a command solved.
// `ran` false means the document carries no solver statistics (closed forms,
// or results whose gaps are internal to a pass/fail check).
struct SolverInfo {
  double gap = 0.0;
  int iterations = 0;
  bool ran = false;

  void absorb(const MeasureResult& r) {
    gap = std::max(gap, std::abs(r.gap));
    iterations = std::max(iterations, r.iterations);
    ran = true;
  }
};

struct ResultDoc {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::string> reports;  // prerendered, four-space base indent
  std::string table;                 // prerendered, figure-data only
  SolverInfo solver;
  double tolerance = 0.0;
};

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string render(const ResultDoc& doc, bool with_meta) {
  std::string s = "{\n";
  s += "  \"command\": " + json_quote(doc.command) + ",\n";

  s += "  \"inputs\": {";
  for (std::size_t i = 0; i < doc.inputs.size(); ++i) {
    s += i == 0 ? "\n" : ",\n";
    s += "    " + json_quote(doc.inputs[i].first) + ": " +
         json_quote(doc.inputs[i].second);
  }
  s += doc.inputs.empty() ? "},\n" : "\n  },\n";

  s += "  \"values\": {";
  for (std::size_t i = 0; i < doc.values.size(); ++i) {
    s += i == 0 ? "\n" : ",\n";
    s += "    " + json_quote(doc.values[i].first) + ": " +
         json_number(doc.values[i].second);
  }
  s += doc.values.empty() ? "},\n" : "\n  },\n";

  if (!doc.table.empty()) s += "  \"table\": " + doc.table + ",\n";

  s += "  \"reports\": [";
  for (std::size_t i = 0; i < doc.reports.size(); ++i) {
    s += i == 0 ? "\n" : ",\n";
    s += doc.reports[i];
  }
  s += doc.reports.empty() ? "],\n" : "\n  ],\n";

  s += "  \"solver\": {\n";
  s += "    \"gap\": " + json_number(doc.solver.gap) + ",\n";
  s += "    \"iterations\": " + std::to_string(doc.solver.iterations) + ",\n";
  s += "    \"status\": " + json_quote(doc.solver.ran ? "optimal" : "none") +
       ",\n";
  s += "    \"tolerance\": " + json_number(doc.tolerance) + "\n";
  s += "  }";

  if (with_meta) {
    s += ",\n  \"meta\": {\n    \"generated_at\": " + json_quote(timestamp()) +
         "\n  }";
  }
  s += "\n}\n";
  return s;
}

std::string render_bound_report(const std::string& name,
                                const BoundReport& r) {
  std::string s = "    {\n";
  s += "      \"name\": " + json_quote(name) + ",\n";
  s += "      \"lhs\": " + json_number(r.lhs) + ",\n";
  s += "      \"rhs\": " + json_number(r.rhs) + ",\n";
  s += "      \"slack\": " + json_number(r.slack) + ",\n";
  s += std::string("      \"satisfied\": ") +
       (r.satisfied ? "true" : "false") + ",\n";
  s += "      \"components\": {";
  std::size_t i = 0;
  for (const auto& [key, value] : r.components) {
    s += i++ == 0 ? "\n" : ",\n";
    s += "        " + json_quote(key) + ": " + json_number(value);
  }
  s += r.components.empty() ? "}\n" : "\n      }\n";
  s += "    }";
  return s;
}

std::string render_gallery_report(const GalleryReport& g) {
  std::string s = "    {\n";
  s += "      \"name\": " + json_quote(g.name) + ",\n";
  s += std::string("      \"pass\": ") + (g.pass ? "true" : "false") + ",\n";
  s += "      \"checks\": [";
  for (std::size_t i = 0; i < g.checks.size(); ++i) {
    const GalleryCheck& c = g.checks[i];
    s += i == 0 ? "\n" : ",\n";
    s += "        {\"name\": " + json_quote(c.name);
    s += ", \"computed\": " + json_number(c.computed);
    s += ", \"expected\": " + json_number(c.expected);
    s += ", \"tolerance\": " + json_number(c.tolerance);
    s += ", \"source\": " + json_quote(c.source);
    s += std::string(", \"floor\": ") + (c.floor ? "true" : "false");
    s += std::string(", \"pass\": ") + (c.pass ? "true" : "false") + "}";
  }
  s += g.checks.empty() ? "]\n" : "\n      ]\n";
  s += "    }";
  return s;
}

double resolve_tolerance() {
  const char* s = std::getenv("UNCERT_SDP_TOL");
  if (s == nullptr || *s == '\0') return tol().sdp;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !(v > 0.0) ||
      !(v < std::numeric_limits<double>::infinity())) {
    throw SchemaError(std::string("UNCERT_SDP_TOL=\"") + s +
                      "\": expected a positive number");
  }
  return v;
}

ChannelDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("channel file \"" + path + "\": cannot read");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_channel_document(buf.str());
}

int emit(const std::string& out_path, const std::string& payload,
         std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (f) f << payload;
  if (!f) {
    err << "error: cannot write \"" << out_path << "\"\n";
    return 2;
  }
  return 0;
}

// All option storage for one invocation.
struct Options {
  std::string out_path;
  bool no_meta = false;
  std::string channel;
  std::string channel2;
  std::string basis;
  std::string basis_x;
  std::string basis_z;
  std::string kind;
  std::string variant = "uniform";
  std::string theorem;
  std::string which;
  std::string format = "csv";
  std::string only;
  bool all = false;
  bool raw = false;
  double sigma_q = 0.0;
  double sigma_p = 0.0;
  int grid = 0;
};

int run_validate(const Options& opt, double tolerance, std::ostream& out,
                 std::ostream& err) {
  const ChannelDocument doc = load_document(opt.channel);
  double herm = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  Matrix sum = Matrix::Zero(doc.dim_in, doc.dim_in);
  for (const Matrix& b : doc.blocks) {
    herm = std::max(herm, (b - b.adjoint()).cwiseAbs().maxCoeff());
    const Matrix sym = 0.5 * (b + b.adjoint());
    min_eig = std::min(min_eig, min_eig_hermitian(sym));
    sum += partial_trace(sym, {doc.dim_out, doc.dim_in}, {1});
  }
  const double tp =
      (sum - Matrix::Identity(doc.dim_in, doc.dim_in)).cwiseAbs().maxCoeff();
  const bool valid =
      herm <= tol().io && min_eig >= -tol().io && tp <= tol().io;
  // Reproduces the exact first-violation message of the enforcing load.
  if (!opt.raw && !valid) document_to_device(doc, true);

  ResultDoc r;
  r.command = "validate";
  r.inputs = {{"channel", opt.channel}, {"raw", opt.raw ? "true" : "false"}};
  r.values = {{"dim_in", static_cast<double>(doc.dim_in)},
              {"dim_out", static_cast<double>(doc.dim_out)},
              {"blocks", static_cast<double>(doc.blocks.size())},
              {"hermiticity_residual", herm},
              {"min_eigenvalue", min_eig},
              {"trace_residual", tp},
              {"valid", valid ? 1.0 : 0.0}};
  r.tolerance = tolerance;
  return emit(opt.out_path, render(r, !opt.no_meta), out, err);
}

int run_diamond(const Options& opt, double tolerance, std::ostream& out,
                std::ostream& err) {
  const Device e1 = document_to_device(load_document(opt.channel));
  const Device e2 = document_to_device(load_document(opt.channel2));
  const MeasureResult m = diamond_distance(e1, e2, tolerance);

  ResultDoc r;
  r.command = "diamond";
  r.inputs = {{"channel", opt.channel}, {"channel2", opt.channel2}};
  r.values = {{"value", m.value}};
  r.solver.absorb(m);
  r.tolerance = tolerance;
  return emit(opt.out_path, render(r, !opt.no_meta), out, err);
}

int run_measure(const Options& opt, double tolerance, std::ostream& out,
                std::ostream& err) {
  const Device e = document_to_device(load_document(opt.channel));
  const Basis b = parse_basis_spec(opt.basis);
  MeasureResult m;
  if (opt.kind == "epsilon") {
    m = epsilon(e, b, tolerance);
  } else if (opt.kind == "nu") {
    m = nu(e, b, tolerance);
  } else if (opt.kind == "eta") {
    m = eta(e, b, tolerance);
  } else {
    m = eta_hat(e, b, tolerance);
  }

  ResultDoc r;
  r.command = "measure";
  r.inputs = {{"kind", opt.kind},
              {"channel", opt.channel},
              {"basis", opt.basis}};
  r.values = {{"value", m.value}};
  r.solver.absorb(m);
  r.tolerance = tolerance;
  return emit(opt.out_path, render(r, !opt.no_meta), out, err);
}

int run_complementarity(const Options& opt, double tolerance,
                        std::ostream& out, std::ostream& err) {
  const Basis x = parse_basis_spec(opt.basis_x);
  const Basis z = parse_basis_spec(opt.basis_z);
  const Complementarity c = complementarity(x, z, tolerance);

  ResultDoc r;
  r.command = "complementarity";
  r.inputs = {{"basis-x", opt.basis_x}, {"basis-z", opt.basis_z}};
  r.values = {{"c_m", c.c_m.value},
              {"c_p", c.c_p.value},
              {"c_p_hat", c.c_p_hat.value}};
  r.solver.absorb(c.c_m);
  r.solver.absorb(c.c_p);
  r.solver.absorb(c.c_p_hat);
  r.tolerance = tolerance;
  return emit(opt.out_path, render(r, !opt.no_meta), out, err);
}

int run_bound(const Options& opt, double tolerance, std::ostream& out,
              std::ostream& err) {
  const Basis x = parse_basis_spec(opt.basis_x);
  const Basis z = parse_basis_spec(opt.basis_z);

  ResultDoc r;
  r.command = "bound";
  r.inputs = {{"kind", opt.kind},
              {"basis-x", opt.basis_x},
              {"basis-z", opt.basis_z}};
  if (opt.kind == "overlap") {
    r.values = {{"value", overlap_bound(x, z)}};
  } else {
    r.inputs.emplace_back("variant", opt.variant);
    const DemeritVariant variant = opt.variant == "row-p"
                                       ? DemeritVariant::RowP
                                       : DemeritVariant::Uniform;
    r.values = {{"value", demerit_bound(x, z, variant)}};
  }
  r.tolerance = tolerance;
  return emit(opt.out_path, render(r, !opt.no_meta), out, err);
}

int run_verify(const Options& opt, double tolerance, std::ostream& out,
               std::ostream& err) {
  const Device e = document_to_device(load_document(opt.channel));
  const Basis x = parse_basis_spec(opt.basis_x);
  const Basis z = parse_basis_spec(opt.basis_z);

  std::vector<std::pair<std::string, BoundReport>> checks;
  if (opt.theorem == "1") {
    const auto [first, second] = check_theorem1(e, x, z, tolerance);
    checks.emplace_back("sqrt(2 eps_X) + nu_Z >= c_M(X,Z)", first);
    checks.emplace_back("eps_X + sqrt(2 nu_Z) >= c_M(Z,X)", second);
  } else if (opt.theorem == "2") {
    const auto [first, second] = check_theorem2(e, x, z, tolerance);
    checks.emplace_back("sqrt(2 eps_X) + eta_Z >= c_P(X,Z)", first);
    checks.emplace_back("sqrt(2 eps_X) + eta_hat_Z >= c_hat_P(X,Z)", second);
  } else {
    checks.emplace_back(
        "sqrt(2 eps) + (d-1)/d - c_hat_P >= complement radius",
        check_corollary1(e, x, z, tolerance));
  }

  ResultDoc r;
  r.command = "verify";
  r.inputs = {{"theorem", opt.theorem},
              {"channel", opt.channel},
              {"basis-x", opt.basis_x},
              {"basis-z", opt.basis_z}};
  bool all_satisfied = true;
  for (const auto& [name, report] : checks) {
    all_satisfied = all_satisfied && report.satisfied;
    r.reports.push_back(render_bound_report(name, report));
    r.solver.gap =
        std::max(r.solver.gap, report.components.at("solver_gap"));
    r.solver.iterations = std::max(
        r.solver.iterations,
        static_cast<int>(report.components.at("solver_iterations")));
    r.solver.ran = true;
  }
  r.values = {{"satisfied", all_satisfied ? 1.0 : 0.0}};
  r.tolerance = tolerance;
  const int code = emit(opt.out_path, render(r, !opt.no_meta), out, err);
  if (code != 0) return code;
  return all_satisfied ? 0 : 1;
}

int run_gaussian(const Options& opt, double tolerance, std::ostream& out,
                 std::ostream& err) {
  const GaussianParams p = make_gaussian_params(opt.sigma_q, opt.sigma_p);
  const GaussianBoundKind kind = opt.kind == "measurement"
                                     ? GaussianBoundKind::Measurement
                                     : GaussianBoundKind::Preparation;

  ResultDoc r;
  r.command = "gaussian";
  char sq[40];
  char sp[40];
  std::snprintf(sq, sizeof(sq), "%.17g", opt.sigma_q);
  std::snprintf(sp, sizeof(sp), "%.17g", opt.sigma_p);
  r.inputs = {{"sigma-q", sq}, {"sigma-p", sp}, {"kind", opt.kind}};
  r.values = {{"c", p.c}, {"value", gaussian_bound(p, kind)}};
  if (p.c < 1.0) r.values.emplace_back("optimal_sigma_f", optimal_sigma_f(p));
  r.tolerance = tolerance;
  return emit(opt.out_path, render(r, !opt.no_meta), out, err);
}

int run_gallery(const Options& opt, double tolerance, std::ostream& out,
                std::ostream& err) {
  const double pi = std::acos(-1.0);
  std::vector<std::pair<std::string, std::function<GalleryReport()>>> items;
  items.emplace_back("entangled-advantage",
                     [] { return entangled_advantage(); });
  for (const int d : {2, 4}) {
    items.emplace_back("calibration-counterexample d=" + std::to_string(d),
                       [d] { return calibration_counterexample(d); });
  }
  for (const double theta : {0.0, pi / 4, pi / 3, pi / 2}) {
    char label[32];
    std::snprintf(label, sizeof(label), "%.6g", theta);
    items.emplace_back(std::string("wave-particle-duality theta=") + label,
                       [theta] { return wave_particle_duality(theta, 0.0); });
  }

  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (opt.only.empty() || items[i].first.find(opt.only) != std::string::npos)
      selected.push_back(i);
  }
  if (selected.empty()) {
    err << "error: no gallery entry matches \"" << opt.only << "\"\n";
    return 2;
  }

  // Entries are independent; fan out and collect in input order.
  std::vector<std::future<GalleryReport>> futures;
  futures.reserve(selected.size());
  for (const std::size_t i : selected) {
    futures.push_back(std::async(std::launch::async, items[i].second));
  }

  ResultDoc r;
  r.command = "gallery";
  r.inputs = {{"only", opt.only.empty() ? "[all]" : opt.only}};
  int passed = 0;
  for (auto& f : futures) {
    const GalleryReport report = f.get();
    passed += report.pass ? 1 : 0;
    r.reports.push_back(render_gallery_report(report));
  }
  const int total = static_cast<int>(futures.size());
  r.values = {{"total", static_cast<double>(total)},
              {"passed", static_cast<double>(passed)}};
  r.tolerance = tolerance;
  const int code = emit(opt.out_path, render(r, !opt.no_meta), out, err);
  if (code != 0) return code;
  return passed == total ? 0 : 1;
}

int run_figure_data(const Options& opt, double tolerance, std::ostream& out,
                    std::ostream& err) {
  const bool fig5 = opt.which == "fig5";
  const CurveKind kind =
      fig5 ? CurveKind::ErrorDisturbanceRegion : CurveKind::PrecisionBounds;
  const int grid = opt.grid > 0 ? opt.grid : (fig5 ? 33 : 13);
  const CurveTable table = figure_data(kind, grid);

  if (opt.format == "csv") {
    std::string csv;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i > 0) csv += ",";
      csv += table.columns[i];
    }
    csv += "\n";
    for (const std::vector<double>& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) csv += ",";
        csv += json_number(row[i]);
      }
      csv += "\n";
    }
    return emit(opt.out_path, csv, out, err);
  }

  std::string t = "{\n    \"columns\": [";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) t += ", ";
    t += json_quote(table.columns[i]);
  }
  t += "],\n    \"rows\": [";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    t += i == 0 ? "\n" : ",\n";
    t += "      [";
    for (std::size_t k = 0; k < table.rows[i].size(); ++k) {
      if (k > 0) t += ", ";
      t += json_number(table.rows[i][k]);
    }
    t += "]";
  }
  t += table.rows.empty() ? "]\n  }" : "\n    ]\n  }";

  ResultDoc r;
  r.command = "figure-data";
  r.inputs = {{"which", opt.which},
              {"grid", std::to_string(grid)},
              {"format", opt.format}};
  r.table = std::move(t);
  r.tolerance = tolerance;
  return emit(opt.out_path, render(r, !opt.no_meta), out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"Operational error and disturbance measures for quantum "
               "devices",
               "uncert"};
  app.require_subcommand(1);

  const auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--out", opt.out_path,
                    "Write the result to this file instead of stdout");
    sub->add_flag("--no-meta", opt.no_meta,
                  "Omit the timestamp block; reruns are byte-identical");
  };

  CLI::App* validate =
      app.add_subcommand("validate", "Check a channel document's invariants");
  validate->add_option("--channel", opt.channel, "Channel document (JSON)")
      ->required();
  validate->add_flag("--raw", opt.raw,
                     "Report residuals without enforcing them");
  add_common(validate);

  CLI::App* diamond = app.add_subcommand(
      "diamond", "Distance between two devices, half the cb norm");
  diamond->add_option("--channel", opt.channel, "First channel document")
      ->required();
  diamond->add_option("--channel2", opt.channel2, "Second channel document")
      ->required();
  add_common(diamond);

  CLI::App* measure = app.add_subcommand(
      "measure", "Error or disturbance of a device against a basis");
  measure
      ->add_option("--kind", opt.kind,
                   "epsilon (needs an X basis), nu, eta, or eta-hat (need Z)")
      ->required()
      ->check(CLI::IsMember({"epsilon", "nu", "eta", "eta-hat"}));
  measure->add_option("--channel", opt.channel, "Channel document (JSON)")
      ->required();
  measure
      ->add_option("--basis", opt.basis,
                   "conjugate:D:X, conjugate:D:Z, or file:PATH")
      ->required();
  add_common(measure);

  CLI::App* complementarity_cmd = app.add_subcommand(
      "complementarity", "c_M, c_P, c_hat_P of a basis pair");
  complementarity_cmd
      ->add_option("--basis-x", opt.basis_x, "Measured basis spec")
      ->required();
  complementarity_cmd
      ->add_option("--basis-z", opt.basis_z, "Disturbed basis spec")
      ->required();
  add_common(complementarity_cmd);

  CLI::App* bound = app.add_subcommand(
      "bound", "Closed-form complementarity lower bounds");
  bound->add_option("--kind", opt.kind, "overlap or demerit")
      ->required()
      ->check(CLI::IsMember({"overlap", "demerit"}));
  bound->add_option("--basis-x", opt.basis_x, "Measured basis spec")
      ->required();
  bound->add_option("--basis-z", opt.basis_z, "Disturbed basis spec")
      ->required();
  bound->add_option("--variant", opt.variant,
                    "demerit only: uniform or row-p")
      ->check(CLI::IsMember({"uniform", "row-p"}));
  add_common(bound);

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the uncertainty relations on a device");
  verify->add_option("--theorem", opt.theorem, "1, 2, or corollary1")
      ->required()
      ->check(CLI::IsMember({"1", "2", "corollary1"}));
  verify->add_option("--channel", opt.channel, "Channel document (JSON)")
      ->required();
  verify->add_option("--basis-x", opt.basis_x, "Measured basis spec")
      ->required();
  verify->add_option("--basis-z", opt.basis_z, "Disturbed basis spec")
      ->required();
  add_common(verify);

  CLI::App* gaussian = app.add_subcommand(
      "gaussian", "Precision-limited position/momentum bounds");
  gaussian->add_option("--sigma-q", opt.sigma_q, "Position precision")
      ->required()
      ->check(CLI::PositiveNumber);
  gaussian->add_option("--sigma-p", opt.sigma_p, "Momentum precision")
      ->required()
      ->check(CLI::PositiveNumber);
  gaussian->add_option("--kind", opt.kind, "measurement or preparation")
      ->required()
      ->check(CLI::IsMember({"measurement", "preparation"}));
  add_common(gaussian);

  CLI::App* gallery = app.add_subcommand(
      "gallery", "Run the worked examples and report every check");
  gallery->add_flag("--all", opt.all, "Run every entry (the default)");
  gallery
      ->add_option("--only", opt.only,
                   "Run entries whose name contains this substring")
      ->excludes("--all");
  add_common(gallery);

  CLI::App* figure = app.add_subcommand(
      "figure-data", "Tabulate the bound curves for plotting");
  figure->add_option("--which", opt.which, "fig5 or fig7")
      ->required()
      ->check(CLI::IsMember({"fig5", "fig7"}));
  figure->add_option("--grid", opt.grid, "Number of rows (0 = default)")
      ->check(CLI::NonNegativeNumber);
  figure->add_option("--format", opt.format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_common(figure);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("uncert");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const double tolerance = resolve_tolerance();
    if (validate->parsed()) return run_validate(opt, tolerance, out, err);
    if (diamond->parsed()) return run_diamond(opt, tolerance, out, err);
    if (measure->parsed()) return run_measure(opt, tolerance, out, err);
    if (complementarity_cmd->parsed())
      return run_complementarity(opt, tolerance, out, err);
    if (bound->parsed()) return run_bound(opt, tolerance, out, err);
    if (verify->parsed()) return run_verify(opt, tolerance, out, err);
    if (gaussian->parsed()) return run_gaussian(opt, tolerance, out, err);
    if (gallery->parsed()) return run_gallery(opt, tolerance, out, err);
    if (figure->parsed()) return run_figure_data(opt, tolerance, out, err);
    err << "error: no subcommand\n";
    return 2;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace uncert
