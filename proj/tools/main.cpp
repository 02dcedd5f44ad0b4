// Command-line front end: protocol runs, Monte-Carlo sweeps, figure data,
// attack scenarios, cloner analysis, and the self-check report.
//
// Exit codes: 0 success or clean protocol abort, 1 failed self-check
// invariant, 2 usage or domain error. All outputs are deterministic for
// fixed flags and seed.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wqsdc/attacks.hpp"
#include "wqsdc/cloning.hpp"
#include "wqsdc/protocol.hpp"
#include "wqsdc/reports.hpp"
#include "wqsdc/svg.hpp"
#include "wqsdc/sweeptable.hpp"
#include "wqsdc/tradeoff.hpp"

namespace {

using wqsdc::Convention;
using wqsdc::Cx;

std::string fmt12(double v) { return wqsdc::format_value(v); }

Convention parse_convention(const std::string& name) {
  if (name == "paper-literal" || name == "literal") return Convention::literal;
  if (name == "physical") return Convention::physical;
  throw std::domain_error("unknown convention '" + name +
                          "' (expected paper-literal, literal, or physical)");
}

// "re" or "re,im" for one amplitude.
Cx parse_component(const std::string& text) {
  std::size_t comma = text.find(',');
  std::size_t pos = 0;
  if (comma == std::string::npos) {
    double re = std::stod(text, &pos);
    if (pos != text.size()) {
      throw std::domain_error("malformed amplitude '" + text + "'");
    }
    return Cx{re, 0.0};
  }
  std::string re_s = text.substr(0, comma);
  std::string im_s = text.substr(comma + 1);
  double re = std::stod(re_s, &pos);
  if (pos != re_s.size()) {
    throw std::domain_error("malformed amplitude '" + text + "'");
  }
  double im = std::stod(im_s, &pos);
  if (pos != im_s.size()) {
    throw std::domain_error("malformed amplitude '" + text + "'");
  }
  return Cx{re, im};
}

// Components separated by ':' (each "re" or "re,im"); the bare form
// "x,y" is shorthand for two real amplitudes.
wqsdc::SecretState parse_secret(const std::string& text) {
  Cx a, b;
  std::size_t colon = text.find(':');
  if (colon != std::string::npos) {
    a = parse_component(text.substr(0, colon));
    b = parse_component(text.substr(colon + 1));
  } else {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
      throw std::domain_error("secret needs two components, got '" + text +
                              "'");
    }
    a = parse_component(text.substr(0, comma));
    b = parse_component(text.substr(comma + 1));
  }
  double norm = std::norm(a) + std::norm(b);
  if (std::abs(norm - 1.0) > 1e-6) {
    throw std::domain_error("secret amplitudes must satisfy |a|^2+|b|^2=1 "
                            "within 1e-6");
  }
  double s = std::sqrt(norm);
  return wqsdc::SecretState::validated(a / s, b / s);
}

wqsdc::WStateParams parse_triple(double alpha2, double beta2, double gamma2) {
  for (double v : {alpha2, beta2, gamma2}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::domain_error("squared weights must lie in [0,1]");
    }
  }
  double sum = alpha2 + beta2 + gamma2;
  if (std::abs(sum - 1.0) > 1e-6) {
    throw std::domain_error(
        "squared weights must sum to 1 within 1e-6 (got " + fmt12(sum) + ")");
  }
  return wqsdc::WStateParams::validated(Cx{std::sqrt(alpha2 / sum), 0.0},
                                        Cx{std::sqrt(beta2 / sum), 0.0},
                                        Cx{std::sqrt(gamma2 / sum), 0.0});
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << content;
}

void write_json_file(const std::string& path,
                     const nlohmann::ordered_json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

void write_table(const std::string& csv_path, const wqsdc::SweepTable& table,
                 bool svg, const std::string& x_column,
                 const std::vector<std::string>& y_columns,
                 const std::string& title) {
  write_text_file(csv_path, wqsdc::to_csv_string(table));
  for (const std::string& w : table.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  std::cout << "wrote " << csv_path << " (" << table.rows.size() << " rows)"
            << "\n";
  if (svg) {
    std::string svg_path = csv_path;
    std::size_t dot = svg_path.find_last_of('.');
    if (dot != std::string::npos) svg_path.resize(dot);
    svg_path += ".svg";
    write_text_file(svg_path,
                    wqsdc::render_line_chart(table, x_column, y_columns,
                                             title));
    std::cout << "wrote " << svg_path << "\n";
  }
}

struct SharedFlags {
  double alpha2 = 0.0, beta2 = 0.0, gamma2 = 0.0;
  std::string secret_text;
  std::string convention_text = "paper-literal";
  std::uint64_t seed = 0;
  std::uint64_t shots = 10000;
  std::string out;
};

wqsdc::SecretState secret_or_default(const std::string& text) {
  if (text.empty()) {
    double r = 1.0 / std::sqrt(2.0);
    return wqsdc::SecretState::validated(Cx{r, 0.0}, Cx{r, 0.0});
  }
  return parse_secret(text);
}

int cmd_run(const SharedFlags& f, int max_retries) {
  wqsdc::RunConfig config;
  config.secret = secret_or_default(f.secret_text);
  config.wparams = parse_triple(f.alpha2, f.beta2, f.gamma2);
  config.convention = parse_convention(f.convention_text);
  config.seed = f.seed;
  config.max_retries = max_retries;
  wqsdc::Transcript t = wqsdc::run_protocol(config);
  std::string path = f.out.empty() ? "transcript.json" : f.out;
  write_json_file(path, wqsdc::transcript_to_json(t));
  std::cout << "outcome=" << (t.succeeded ? "succeeded" : "aborted")
            << " fidelity="
            << (t.succeeded ? fmt12(t.fidelity) : std::string("n/a"))
            << " retries=" << (t.attempts - 1) << " transcript=" << path
            << "\n";
  return 0;
}

int cmd_sweep(const SharedFlags& f, std::size_t points, bool svg) {
  if (!(f.beta2 >= 0.0 && f.beta2 < 1.0)) {
    throw std::domain_error("sweep needs --beta2 in [0,1)");
  }
  wqsdc::SecretState secret = secret_or_default(f.secret_text);
  Convention conv = parse_convention(f.convention_text);
  wqsdc::SweepTable table;
  table.columns = {"alpha_sq", "beta_sq", "gamma_sq", "ps_analytic",
                   "ps_enumerate", "ps_mc", "mc_std_error"};
  double rest = 1.0 - f.beta2;
  for (std::size_t i = 1; i <= points; ++i) {
    double alpha_sq =
        rest * static_cast<double>(i) / static_cast<double>(points + 1);
    double gamma_sq = rest - alpha_sq;
    wqsdc::WStateParams w = wqsdc::WStateParams::validated(
        Cx{std::sqrt(alpha_sq), 0.0}, Cx{std::sqrt(f.beta2), 0.0},
        Cx{std::sqrt(gamma_sq), 0.0});
    double analytic = wqsdc::success_probability_analytic(w);
    double enumerated =
        wqsdc::success_probability_enumerate(w, secret, conv);
    wqsdc::McEstimate mc = wqsdc::success_probability_monte_carlo(
        w, secret, conv, f.shots, f.seed);
    table.rows.push_back({alpha_sq, f.beta2, gamma_sq, analytic, enumerated,
                          mc.estimate, mc.std_error});
  }
  std::string path = f.out.empty() ? "sweep.csv" : f.out;
  write_table(path, table, svg, "alpha_sq", {"ps_analytic", "ps_mc"},
              "success probability vs alpha_sq");
  return 0;
}

int cmd_figures(const std::string& fig, const SharedFlags& f,
                std::size_t points, std::uint64_t n_max, bool svg) {
  if (fig == "fig1") {
    if (points == 0) points = 101;
    wqsdc::WStateParams w = parse_triple(f.alpha2, f.beta2, f.gamma2);
    std::vector<std::array<double, 3>> triples = {
        {std::norm(w.alpha), std::norm(w.beta), std::norm(w.gamma)}};
    wqsdc::SweepTable table = wqsdc::figure_dbar_vs_ps(triples, points);
    std::string path = f.out.empty() ? "fig1.csv" : f.out;
    write_table(path, table, svg, "ps", {"dbar", "reference"},
                "average distance vs success probability");
  } else if (fig == "fig2") {
    wqsdc::SweepTable table = wqsdc::figure_wn_fill(n_max);
    std::string path = f.out.empty() ? "fig2.csv" : f.out;
    write_table(path, table, svg, "n", {"fill"},
                "fill of the one-parameter family");
  } else {
    if (points == 0) points = 50;
    wqsdc::SweepTable table = wqsdc::figure_ps_vs_fill(f.beta2, points);
    std::string path = f.out.empty() ? "fig3.csv" : f.out;
    write_table(path, table, svg, "fill", {"ps"},
                "success probability vs fill");
  }
  return 0;
}

int cmd_attack(const std::string& kind_name, const SharedFlags& f) {
  wqsdc::AttackKind kind;
  if (kind_name == "receiver") {
    kind = wqsdc::AttackKind::receiver;
  } else if (kind_name == "controller") {
    kind = wqsdc::AttackKind::controller;
  } else {
    kind = wqsdc::AttackKind::eve;
  }
  wqsdc::RunConfig config;
  config.secret = secret_or_default(f.secret_text);
  config.wparams = parse_triple(f.alpha2, f.beta2, f.gamma2);
  config.convention = parse_convention(f.convention_text);
  config.seed = f.seed;
  wqsdc::AttackReport report =
      wqsdc::simulate_attack(kind, config, f.shots, f.seed);
  std::string path = f.out.empty() ? ("attack_" + kind_name + ".json") : f.out;
  write_json_file(path, wqsdc::attack_report_to_json(report));
  switch (kind) {
    case wqsdc::AttackKind::receiver:
      std::cout << "receiver blind-guess mean=" << fmt12(report.analytic_mean)
                << " sampled=" << fmt12(report.sampled.estimate) << " +/- "
                << fmt12(report.sampled.std_error) << " report=" << path
                << "\n";
      break;
    case wqsdc::AttackKind::controller:
      std::cout << "controller identity_mean=" << fmt12(report.identity_mean)
                << " with_bits_mean=" << fmt12(report.with_bits_mean)
                << " honest=" << fmt12(report.honest_fidelity)
                << " report=" << path << "\n";
      break;
    case wqsdc::AttackKind::eve:
      std::cout << "eve runs=" << report.runs << " classical_b_to_c="
                << report.classical_messages_bob_to_charlie
                << " quantum_b_to_c="
                << report.quantum_events_bob_to_charlie << " report=" << path
                << "\n";
      break;
  }
  return 0;
}

int cmd_clone_analysis(const SharedFlags& f, std::size_t points) {
  if (!(f.alpha2 >= 0.0 && f.alpha2 <= 1.0 && f.gamma2 >= 0.0 &&
        f.gamma2 <= 1.0)) {
    throw std::domain_error(
        "clone-analysis needs --alpha2 and --gamma2 in [0,1]");
  }
  if (points < 2) throw std::domain_error("--points must be at least 2");
  Convention conv = parse_convention(f.convention_text);
  wqsdc::CloneSpec spec{Cx{std::sqrt(f.alpha2), 0.0},
                        Cx{std::sqrt(f.gamma2), 0.0}, conv};
  wqsdc::CloneMap literal_map = wqsdc::build_clone_map(
      wqsdc::CloneSpec{spec.p, spec.q, Convention::literal});
  wqsdc::CloneMap physical_map = wqsdc::build_clone_map(
      wqsdc::CloneSpec{spec.p, spec.q, Convention::physical});
  nlohmann::ordered_json j;
  j["config"] = {{"p_sq", f.alpha2},
                 {"q_sq", f.gamma2},
                 {"convention", f.convention_text == "literal"
                                    ? "paper-literal"
                                    : f.convention_text}};
  j["machine_norms"] = {{"n0", 1.0 / (1.0 + 2.0 * f.alpha2)},
                        {"n1", 1.0 / (1.0 + 2.0 * f.gamma2)}};
  j["average_distance"] = {
      {"closed_form", wqsdc::average_hs_distance(spec)},
      {"quadrature", wqsdc::average_hs_distance_quadrature(spec)}};
  j["isometry"] = {
      {"literal_is_isometry", literal_map.is_isometry(1e-10)},
      {"physical_is_isometry", physical_map.is_isometry(1e-10)}};
  nlohmann::ordered_json curve = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < points; ++i) {
    double m = static_cast<double>(i) / static_cast<double>(points - 1);
    curve.push_back({m, wqsdc::analytic_hs_distance(m, spec)});
  }
  j["distance_curve"] = curve;
  std::string path = f.out.empty() ? "clone_analysis.json" : f.out;
  write_json_file(path, j);
  std::cout << "average_distance=" << fmt12(wqsdc::average_hs_distance(spec))
            << " report=" << path << "\n";
  return 0;
}

int cmd_selfcheck(std::uint64_t seed, const std::string& out_dir) {
  wqsdc::SelfCheckReport report = wqsdc::run_selfcheck(seed);
  std::string dir = out_dir.empty() ? "." : out_dir;
  wqsdc::write_errata_files(report, dir + "/errata.json",
                            dir + "/errata.txt");
  for (const wqsdc::CheckEntry& e : report.entries) {
    std::cout << (e.pass ? "PASS " : "FAIL ") << e.id << "\n";
  }
  std::cout << (report.all_pass ? "all checks passed" : "SOME CHECKS FAILED")
            << " (" << report.entries.size() << " entries)"
            << "\n";
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "simulator and analysis toolkit for a controlled direct-communication "
      "protocol with a two-parameter cloning machine"};
  app.require_subcommand(1);

  SharedFlags f;
  int max_retries = 16;
  std::size_t points = 0;
  std::uint64_t n_max = 50;
  bool svg = false;
  std::string fig;
  std::string attack_kind;
  std::string out_dir;

  auto add_triple = [&](CLI::App* cmd, bool required) {
    auto* a = cmd->add_option("--alpha2", f.alpha2, "|alpha|^2 weight");
    auto* b = cmd->add_option("--beta2", f.beta2, "|beta|^2 weight");
    auto* g = cmd->add_option("--gamma2", f.gamma2, "|gamma|^2 weight");
    if (required) {
      a->required();
      b->required();
      g->required();
    }
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--secret", f.secret_text,
                    "secret amplitudes 're,im:re,im' or 'x,y' (two reals); "
                    "default equal superposition");
    cmd->add_option("--convention", f.convention_text,
                    "paper-literal (default), literal (alias), or physical");
    cmd->add_option("--seed", f.seed, "RNG seed");
    cmd->add_option("--out", f.out, "output path");
  };

  CLI::App* run = app.add_subcommand("run", "single protocol round");
  add_triple(run, true);
  add_common(run);
  run->add_option("--max-retries", max_retries, "retry budget after aborts");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "success probability over alpha_sq at fixed beta_sq");
  sweep->add_option("--beta2", f.beta2, "|beta|^2 weight")->required();
  sweep->add_option("--points", points, "interior grid points")
      ->default_val(19);
  sweep->add_option("--shots", f.shots, "Monte-Carlo shots per point");
  add_common(sweep);
  sweep->add_flag("--svg", svg, "also render an SVG chart");

  CLI::App* figures = app.add_subcommand("figures", "figure data tables");
  figures->add_option("fig", fig, "fig1, fig2, or fig3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  add_triple(figures, false);
  add_common(figures);
  figures->add_option("--points", points,
                      "grid points (default 101 for fig1, 50 for fig3)");
  figures->add_option("--n-max", n_max, "largest n for fig2");
  figures->add_flag("--svg", svg, "also render an SVG chart");

  CLI::App* attack = app.add_subcommand("attack", "adversary scenarios");
  attack->add_option("kind", attack_kind, "receiver, controller, or eve")
      ->required()
      ->check(CLI::IsMember({"receiver", "controller", "eve"}));
  add_triple(attack, true);
  add_common(attack);
  attack->add_option("--shots", f.shots, "samples (receiver) or runs (eve)");

  CLI::App* clone_cmd = app.add_subcommand(
      "clone-analysis", "cloning-machine distance analytics");
  clone_cmd->add_option("--alpha2", f.alpha2, "|p|^2 machine strength")
      ->required();
  clone_cmd->add_option("--gamma2", f.gamma2, "|q|^2 machine strength")
      ->required();
  clone_cmd->add_option("--convention", f.convention_text,
                        "paper-literal (default), literal, or physical");
  clone_cmd->add_option("--points", points, "m-grid points")->default_val(21);
  clone_cmd->add_option("--out", f.out, "output path");

  CLI::App* selfcheck = app.add_subcommand(
      "selfcheck", "reconcile quoted forms against the implemented math");
  selfcheck->add_option("--seed", f.seed, "RNG seed for spot-check grids");
  selfcheck->add_option("--out", out_dir, "output directory")
      ->default_val(".");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(f, max_retries);
    if (sweep->parsed()) return cmd_sweep(f, points, svg);
    if (figures->parsed()) return cmd_figures(fig, f, points, n_max, svg);
    if (attack->parsed()) return cmd_attack(attack_kind, f);
    if (clone_cmd->parsed()) return cmd_clone_analysis(f, points);
    if (selfcheck->parsed()) return cmd_selfcheck(f.seed, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
