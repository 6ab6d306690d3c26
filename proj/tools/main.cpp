// Command-line front end: classify Riemann data, construct and certify fan
// subsolutions, estimate thresholds, sweep parameters, and export wave-fan
// geometry for plotting.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fansub/parallel.hpp"
#include "fansub/serialization.hpp"

namespace {

using fansub::json;

constexpr int kExitFound = 0;
constexpr int kExitNoFindings = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericError = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double lo = 0.0, hi = 0.0;
  int n = 0;
};

GridSpec parse_grid_spec(const std::string& s, const char* what) {
  GridSpec g;
  char tail;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &g.lo, &g.hi, &g.n, &tail) != 3 || g.n < 0)
    throw InputError(std::string(what) + ": expected lo:hi:n, got '" + s + "'");
  return g;
}

std::vector<double> linear_grid(const GridSpec& g) {
  std::vector<double> xs;
  if (g.n == 0) return xs;
  if (g.n == 1) return {g.lo};
  xs.reserve(static_cast<std::size_t>(g.n));
  for (int k = 0; k < g.n; ++k)
    xs.push_back(g.lo + (g.hi - g.lo) * k / (g.n - 1));
  return xs;
}

// Raw command-line values; unset numeric flags stay NaN / negative sentinels.
struct CliValues {
  std::string input, output, format;
  double rho_minus = NAN, rho_plus = NAN, gamma = NAN, gap = NAN;
  std::vector<double> v_minus, v_plus;
  std::string eps1_spec, gap_range;
  int quad_res = -1;
  long long seed = -1;
  int n_test = -1;
  double tol_eq = NAN, tol_strict = NAN, bisect_tol = NAN;
};

struct JobConfig {
  fansub::RiemannData data;
  std::vector<double> eps1_grid = fansub::default_eps1_grid();
  int quad_res = 256;
  std::uint64_t seed = 0;
  int n_test = 64;
  fansub::Tolerances tol;
  std::optional<double> bisect_tol;
  std::optional<GridSpec> gap_range;
  json document;  // full parsed input file, for verify
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

JobConfig resolve_config(const CliValues& cli) {
  JobConfig cfg;
  try {
    if (!cli.input.empty()) {
      cfg.document = read_json_file(cli.input);
      const json& j = cfg.document;
      if (j.contains("rho_minus")) cfg.data.rho_minus = j.at("rho_minus").get<double>();
      if (j.contains("rho_plus")) cfg.data.rho_plus = j.at("rho_plus").get<double>();
      if (j.contains("v_minus")) j.at("v_minus").get_to(cfg.data.v_minus);
      if (j.contains("v_plus")) j.at("v_plus").get_to(cfg.data.v_plus);
      if (j.contains("gamma")) cfg.data.gamma = j.at("gamma").get<double>();
      if (j.contains("data")) j.at("data").get_to(cfg.data);
      if (j.contains("options")) {
        const json& o = j.at("options");
        if (o.contains("eps1_grid")) {
          if (o.at("eps1_grid").is_string()) {
            const GridSpec g = parse_grid_spec(o.at("eps1_grid").get<std::string>(),
                                               "options.eps1_grid");
            cfg.eps1_grid = fansub::geometric_grid(g.lo, g.hi, g.n);
          } else {
            o.at("eps1_grid").get_to(cfg.eps1_grid);
          }
        }
        if (o.contains("quad_res")) cfg.quad_res = o.at("quad_res").get<int>();
        if (o.contains("seed")) cfg.seed = o.at("seed").get<std::uint64_t>();
        if (o.contains("n_test")) cfg.n_test = o.at("n_test").get<int>();
        if (o.contains("tol_eq")) cfg.tol.eq = o.at("tol_eq").get<double>();
        if (o.contains("tol_strict")) cfg.tol.strict = o.at("tol_strict").get<double>();
        if (o.contains("bisect_tol")) cfg.bisect_tol = o.at("bisect_tol").get<double>();
        if (o.contains("gap_range"))
          cfg.gap_range = parse_grid_spec(o.at("gap_range").get<std::string>(),
                                          "options.gap_range");
        if (o.contains("gap"))
          cfg.data.v_minus[1] = cfg.data.v_plus[1] + o.at("gap").get<double>();
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid input document: ") + e.what());
  }

  // Flags override file values.
  if (!std::isnan(cli.rho_minus)) cfg.data.rho_minus = cli.rho_minus;
  if (!std::isnan(cli.rho_plus)) cfg.data.rho_plus = cli.rho_plus;
  if (!std::isnan(cli.gamma)) cfg.data.gamma = cli.gamma;
  if (cli.v_minus.size() == 2) cfg.data.v_minus = {cli.v_minus[0], cli.v_minus[1]};
  if (cli.v_plus.size() == 2) cfg.data.v_plus = {cli.v_plus[0], cli.v_plus[1]};
  if (!std::isnan(cli.gap)) cfg.data.v_minus[1] = cfg.data.v_plus[1] + cli.gap;
  if (!cli.eps1_spec.empty()) {
    const GridSpec g = parse_grid_spec(cli.eps1_spec, "--eps1-grid");
    cfg.eps1_grid = fansub::geometric_grid(g.lo, g.hi, g.n);
  }
  if (cli.quad_res > 0) cfg.quad_res = cli.quad_res;
  if (cli.seed >= 0) cfg.seed = static_cast<std::uint64_t>(cli.seed);
  if (cli.n_test > 0) cfg.n_test = cli.n_test;
  if (!std::isnan(cli.tol_eq)) cfg.tol.eq = cli.tol_eq;
  if (!std::isnan(cli.tol_strict)) cfg.tol.strict = cli.tol_strict;
  if (!std::isnan(cli.bisect_tol)) cfg.bisect_tol = cli.bisect_tol;
  if (!cli.gap_range.empty())
    cfg.gap_range = parse_grid_spec(cli.gap_range, "--gap-range");

  if (cfg.eps1_grid.empty()) throw InputError("eps1 grid must be non-empty");
  if (!(cfg.tol.eq > 0.0) || !(cfg.tol.strict > 0.0))
    throw InputError("tolerances must be positive");
  return cfg;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string fmt(double x) { return fansub::format_double(x); }

std::string wave_text(const fansub::Wave& w) {
  switch (w.kind) {
    case fansub::WaveKind::Shock:
      return "shock speed=" + fmt(w.speed_lo);
    case fansub::WaveKind::Rarefaction:
      return "rarefaction speeds=[" + fmt(w.speed_lo) + ", " + fmt(w.speed_hi) + "]";
    default:
      return "none";
  }
}

int run_classify(const JobConfig& cfg, Output& out, const std::string& format) {
  const fansub::WaveFan fan = fansub::solve_riemann(cfg.data);
  const fansub::PatternLabel lbl = fansub::label_of(fan);
  if (format == "json") {
    json j;
    j["data"] = cfg.data;
    j["fan"] = fan;
    out.stream() << j.dump(2) << "\n";
    return kExitFound;
  }
  std::ostream& os = out.stream();
  const bool no_waves = !fan.vacuum && lbl.left == fansub::WaveKind::None &&
                        lbl.right == fansub::WaveKind::None;
  std::string head = no_waves ? std::string("no waves") : lbl.str();
  if (!fan.vacuum && !no_waves)
    head = lbl.str().substr(0, 2) + std::string(", contact=") +
           (fan.contact ? "present" : "absent") + ", rho_m=" +
           fmt(fan.middle_density.value());
  os << head << "\n";
  if (fan.middle_density) {
    os << "middle: rho=" << fmt(*fan.middle_density)
       << " v2=" << fmt(*fan.middle_normal_velocity) << "\n";
  }
  os << "left: " << wave_text(fan.left) << "\n";
  os << "right: " << wave_text(fan.right) << "\n";
  if (fan.contact) os << "contact: speed=" << fmt(fan.contact_speed) << "\n";
  if (fan.vacuum) os << "vacuum: yes\n";
  return kExitFound;
}

int run_riemann(const JobConfig& cfg, Output& out, const std::string& format) {
  if (format == "text") return run_classify(cfg, out, "text");
  const fansub::WaveFan fan = fansub::solve_riemann(cfg.data);
  json j;
  j["data"] = cfg.data;
  j["fan"] = fan;
  const fansub::Eos eos = cfg.data.eos();
  j["threshold"] = fansub::two_shock_threshold(eos, cfg.data.rho_minus, cfg.data.rho_plus);
  out.stream() << j.dump(2) << "\n";
  return kExitFound;
}

int run_find_subsolution(const JobConfig& cfg, Output& out) {
  const fansub::Eos eos = cfg.data.eos();
  const fansub::SearchResult result =
      fansub::search(eos, cfg.data, cfg.eps1_grid, cfg.tol);
  json j;
  j["data"] = cfg.data;
  j["threshold"] =
      fansub::two_shock_threshold(eos, cfg.data.rho_minus, cfg.data.rho_plus);
  j["eps1_grid"] = cfg.eps1_grid;
  j["subsolutions"] = result.hits;
  j["diagnostics"] = result.diagnostics;
  out.stream() << j.dump(2) << "\n";
  return result.found() ? kExitFound : kExitNoFindings;
}

void require_outer_match(const fansub::FanSubsolution& sub,
                         const fansub::RiemannData& data) {
  const auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  const bool ok = close(sub.outer_minus.rho, data.rho_minus) &&
                  close(sub.outer_plus.rho, data.rho_plus) &&
                  close(sub.outer_minus.v[0], data.v_minus[0]) &&
                  close(sub.outer_minus.v[1], data.v_minus[1]) &&
                  close(sub.outer_plus.v[0], data.v_plus[0]) &&
                  close(sub.outer_plus.v[1], data.v_plus[1]);
  if (!ok)
    throw InputError("subsolution outer states do not match the Riemann data");
}

int run_verify(const JobConfig& cfg, Output& out, bool weak_check) {
  std::vector<fansub::FanSubsolution> subs;
  try {
    const json& doc = cfg.document;
    if (doc.contains("subsolution")) {
      subs.push_back(doc.at("subsolution").get<fansub::FanSubsolution>());
    } else if (doc.contains("subsolutions")) {
      for (const json& item : doc.at("subsolutions")) {
        if (item.contains("subsolution"))
          subs.push_back(item.at("subsolution").get<fansub::FanSubsolution>());
        else
          subs.push_back(item.get<fansub::FanSubsolution>());
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid subsolution document: ") + e.what());
  }
  if (subs.empty())
    throw InputError("verify: input must contain 'subsolution' or 'subsolutions'");

  const fansub::Eos eos = cfg.data.eos();
  json results = json::array();
  bool all_pass = true;
  for (const fansub::FanSubsolution& sub : subs) {
    require_outer_match(sub, cfg.data);
    const fansub::Certificate cert = fansub::certify(eos, sub, cfg.data, cfg.tol);
    json item;
    item["certificate"] = cert;
    if (weak_check) {
      const fansub::WeakFormReport wf = fansub::weak_form_residual(
          eos, sub, cfg.data, cfg.n_test, cfg.quad_res, cfg.seed);
      item["weak_form"] = {{"max_eq_residual", wf.max_eq_residual},
                           {"min_ineq_value", wf.min_ineq_value}};
    }
    all_pass = all_pass && cert.pass;
    results.push_back(item);
  }
  json j;
  j["data"] = cfg.data;
  j["results"] = results;
  out.stream() << j.dump(2) << "\n";
  return all_pass ? kExitFound : kExitNoFindings;
}

int run_threshold(const JobConfig& cfg, Output& out) {
  const fansub::Eos eos = cfg.data.eos();
  json j;
  j["data"] = cfg.data;
  if (cfg.data.rho_minus == cfg.data.rho_plus) {
    fansub::ThresholdReport report;
    report.T = 0.0;
    j["report"] = report;
    j["note"] = "equal densities: T = 0 and Vbar is undefined";
    out.stream() << j.dump(2) << "\n";
    return kExitFound;
  }
  const double T = fansub::two_shock_threshold(eos, cfg.data.rho_minus, cfg.data.rho_plus);
  const double bisect_tol = cfg.bisect_tol.value_or(1e-2 * T);
  const fansub::ThresholdReport report = fansub::estimate_vbar(
      eos, cfg.data.rho_minus, cfg.data.rho_plus, cfg.data.v_plus,
      cfg.data.v_minus[0], bisect_tol, cfg.eps1_grid, cfg.tol);
  j["report"] = report;
  out.stream() << j.dump(2) << "\n";
  return kExitFound;
}

int run_sweep(const JobConfig& cfg, Output& out) {
  std::vector<double> gaps;
  if (cfg.gap_range) {
    gaps = linear_grid(*cfg.gap_range);
  } else {
    gaps = {cfg.data.v_minus[1] - cfg.data.v_plus[1]};
  }

  std::ostream& os = out.stream();
  os << "gamma,rho_minus,rho_plus,v_minus_1,v_minus_2,v_plus_1,v_plus_2,gap,"
        "pattern,threshold,feasible,n_found,worst_rh_residual,worst_strict_margin,"
        "error\n";
  std::vector<std::string> rows(gaps.size());
  fansub::parallel_for(gaps.size(), [&](std::size_t i) {
    fansub::RiemannData d = cfg.data;
    d.v_minus[1] = d.v_plus[1] + gaps[i];
    std::ostringstream row;
    row << fmt(d.gamma) << ',' << fmt(d.rho_minus) << ',' << fmt(d.rho_plus) << ','
        << fmt(d.v_minus[0]) << ',' << fmt(d.v_minus[1]) << ',' << fmt(d.v_plus[0])
        << ',' << fmt(d.v_plus[1]) << ',' << fmt(gaps[i]) << ',';
    // Tail columns built separately so a mid-row failure cannot skew the CSV.
    std::ostringstream tail;
    try {
      const fansub::Eos eos = d.eos();
      const fansub::PatternLabel lbl = fansub::classify(d);
      const double T = fansub::two_shock_threshold(eos, d.rho_minus, d.rho_plus);
      const fansub::SearchResult result = fansub::search(eos, d, cfg.eps1_grid, cfg.tol);
      tail << lbl.str() << ',' << fmt(T) << ',' << (result.found() ? 1 : 0) << ','
           << result.hits.size() << ',';
      if (result.found()) {
        double worst_rh = 0.0;
        double best_margin = -std::numeric_limits<double>::infinity();
        for (const fansub::SearchHit& h : result.hits) {
          double m = std::numeric_limits<double>::infinity();
          for (double x : h.certificate.subsolution_margins) m = std::min(m, x);
          m = std::min({m, h.certificate.admissibility_margins[0],
                        h.certificate.admissibility_margins[2]});
          if (m > best_margin) {
            best_margin = m;
            worst_rh = 0.0;
            for (double r : h.certificate.rh_residuals)
              worst_rh = std::max(worst_rh, std::abs(r));
          }
        }
        tail << fmt(worst_rh) << ',' << fmt(best_margin) << ',';
      } else {
        tail << ",,";
      }
      row << tail.str();
    } catch (const std::exception& e) {
      std::string msg = e.what();
      for (char& ch : msg)
        if (ch == ',' || ch == '\n') ch = ';';
      row << ",,,,,," << msg;
    }
    rows[i] = row.str();
  });
  for (const std::string& row : rows) os << row << "\n";
  return kExitFound;
}

int run_plot_data(const JobConfig& cfg, Output& out) {
  const fansub::WaveFan fan = fansub::solve_riemann(cfg.data);
  json lines = json::array();
  const auto add_line = [&](const std::string& kind, const std::string& label,
                            double slope) {
    lines.push_back({{"kind", kind},
                     {"label", label},
                     {"slope", slope},
                     {"points", json::array({json::array({0.0, 0.0}),
                                             json::array({slope, 1.0})})}});
  };
  const auto add_wave = [&](const fansub::Wave& w, const std::string& side) {
    if (w.kind == fansub::WaveKind::Shock) {
      add_line("shock", "S", w.speed_lo);
    } else if (w.kind == fansub::WaveKind::Rarefaction) {
      json rays = json::array();
      constexpr int kRays = 5;
      for (int k = 0; k < kRays; ++k) {
        const double slope =
            w.speed_lo + (w.speed_hi - w.speed_lo) * k / (kRays - 1);
        rays.push_back(slope);
      }
      lines.push_back({{"kind", "rarefaction"},
                       {"label", "R"},
                       {"side", side},
                       {"slopes", rays}});
    }
  };
  add_wave(fan.left, "left");
  if (fan.contact) add_line("contact", "contact", fan.contact_speed);
  add_wave(fan.right, "right");
  json j;
  j["data"] = cfg.data;
  j["pattern"] = fansub::label_of(fan).str();
  j["lines"] = lines;
  if (fan.vacuum)
    j["vacuum_wedge"] = json{{"slope_lo", fan.left.speed_hi},
                             {"slope_hi", fan.right.speed_lo}};
  out.stream() << j.dump(2) << "\n";
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemann-fan classifier and admissible fan-subsolution toolkit"};
  app.require_subcommand(1);

  CliValues cli;
  app.add_option("--input", cli.input, "JSON input file");
  app.add_option("--output", cli.output, "output file (default stdout)");
  app.add_option("--format", cli.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--rho-minus", cli.rho_minus, "density below the interface");
  app.add_option("--rho-plus", cli.rho_plus, "density above the interface");
  app.add_option("--gamma", cli.gamma, "pressure-law exponent");
  app.add_option("--v-minus", cli.v_minus, "velocity (v1 v2) below")->expected(2);
  app.add_option("--v-plus", cli.v_plus, "velocity (v1 v2) above")->expected(2);
  app.add_option("--gap", cli.gap, "sets v_minus2 = v_plus2 + gap");
  app.add_option("--eps1-grid", cli.eps1_spec, "geometric eps1 grid lo:hi:n");
  app.add_option("--quad-res", cli.quad_res, "weak-form quadrature resolution");
  app.add_option("--seed", cli.seed, "weak-form RNG seed");
  app.add_option("--n-test", cli.n_test, "weak-form test functions per family");
  app.add_option("--tol-eq", cli.tol_eq, "relative tolerance on equations");
  app.add_option("--tol-strict", cli.tol_strict, "strict-inequality margin");
  app.add_option("--bisect-tol", cli.bisect_tol, "threshold bisection tolerance");
  app.add_option("--gap-range", cli.gap_range, "sweep range lo:hi:n");

  CLI::App* cmd_classify = app.add_subcommand("classify", "wave-pattern label and middle state");
  CLI::App* cmd_riemann = app.add_subcommand("riemann", "full self-similar wave fan");
  CLI::App* cmd_find = app.add_subcommand("find-subsolution", "search for certified fan subsolutions");
  CLI::App* cmd_verify = app.add_subcommand("verify", "re-certify subsolutions from a JSON document");
  bool weak_check = false;
  cmd_verify->add_flag("--weak-form", weak_check, "also run the weak-form quadrature oracle");
  CLI::App* cmd_threshold = app.add_subcommand("threshold", "two-shock threshold and Vbar estimate");
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "CSV sweep over the velocity gap");
  CLI::App* cmd_plot = app.add_subcommand("plot-data", "interface polylines for plotting");
  for (CLI::App* sub : {cmd_classify, cmd_riemann, cmd_find, cmd_verify,
                        cmd_threshold, cmd_sweep, cmd_plot})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    const JobConfig cfg = resolve_config(cli);
    cfg.data.validate();
    Output out(cli.output);
    std::string format = cli.format;
    if (app.got_subcommand(cmd_classify))
      return run_classify(cfg, out, format.empty() ? "text" : format);
    if (app.got_subcommand(cmd_riemann))
      return run_riemann(cfg, out, format.empty() ? "json" : format);
    if (app.got_subcommand(cmd_find)) return run_find_subsolution(cfg, out);
    if (app.got_subcommand(cmd_verify)) return run_verify(cfg, out, weak_check);
    if (app.got_subcommand(cmd_threshold)) return run_threshold(cfg, out);
    if (app.got_subcommand(cmd_sweep)) return run_sweep(cfg, out);
    if (app.got_subcommand(cmd_plot)) return run_plot_data(cfg, out);
    std::cerr << "no subcommand selected\n";
    return kExitInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const fansub::DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const fansub::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericError;
  }
}
