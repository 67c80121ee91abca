#include "zca/cli.hpp"

#include "zca/carleson.hpp"
#include "zca/counterexample.hpp"
#include "zca/output_energy.hpp"
#include "zca/resolvent_weiss.hpp"
#include "zca/sufficient_conditions.hpp"
#include "zca/system_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace zca::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kHeuristicNote =
    "heuristic: computed on a finite truncation over a finite grid; zero-class behaviour is "
    "asymptotic and not certified";

Real parse_real(const std::string& token) {
  std::size_t used = 0;
  Real v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("not a number: \"" + token + "\"");
  }
  if (used != token.size()) throw InvalidArgument("not a number: \"" + token + "\"");
  return v;
}

std::vector<Real> parse_list(const std::string& spec) {
  std::vector<Real> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_real(tok));
  if (out.empty()) throw InvalidArgument("empty number list");
  return out;
}

struct Grid {
  std::vector<Real> values;
  json provenance;
};

Grid list_grid(const std::vector<Real>& values) {
  return {values, {{"kind", "list"}, {"values", values}}};
}

Grid geometric(Real lo, Real hi, int ppd) {
  return {geometric_grid(lo, hi, ppd),
          {{"kind", "geometric"}, {"min", lo}, {"max", hi}, {"points_per_decade", ppd}}};
}

/// "min,max,points-per-decade"
Grid parse_grid(const std::string& spec) {
  const auto v = parse_list(spec);
  if (v.size() != 3 || v[2] < 1 || v[2] != std::floor(v[2])) {
    throw InvalidArgument("grid must be given as min,max,points-per-decade: \"" + spec + "\"");
  }
  return geometric(v[0], v[1], static_cast<int>(v[2]));
}

std::string fmt(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Collects CSV profiles and the JSON report for one command.
class Output {
 public:
  Output(std::string command, const std::string& dir, std::ostream& out)
      : dir_(dir), out_(out) {
    report_ = {{"tool", "zca"},
               {"version", kVersion},
               {"command", std::move(command)},
               {"system_label", ""},
               {"profiles", json::object()},
               {"verdicts", json::object()},
               {"values", json::object()},
               {"provenance", {{"threads", worker_count()}}}};
  }

  json& report() { return report_; }

  void system(const DiagonalSystem& s) {
    report_["system_label"] = s.label();
    report_["provenance"]["truncation_modes"] = s.size();
    report_["provenance"]["truncation_note"] = s.truncation_note();
  }

  void csv(const std::string& name, const std::string& header,
           const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream body;
    body << header << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) body << (i ? "," : "") << row[i];
      body << '\n';
    }
    pending_.emplace_back(name + ".csv", body.str());
    report_["profiles"][name] = name + ".csv";
  }

  void verdict(const std::string& name, std::string_view verdict, const json& grid,
               json extra = json::object()) {
    json v = {{"verdict", std::string(verdict)},
              {"heuristic", true},
              {"grid", grid},
              {"note", kHeuristicNote}};
    v.update(extra);
    report_["verdicts"][name] = v;
    out_ << name << ": " << verdict << " (heuristic; grid " << grid.dump() << ")\n";
  }

  void value(const std::string& name, const json& v) { report_["values"][name] = v; }

  void finish() {
    fs::create_directories(dir_);
    for (const auto& [file, contents] : pending_) write_file_atomic(dir_ / file, contents);
    write_file_atomic(dir_ / "report.json", report_.dump(2) + "\n");
    out_ << "report written to " << (dir_ / "report.json").string() << '\n';
  }

  void extra_file(const std::string& file, const std::string& contents) {
    pending_.emplace_back(file, contents);
  }

 private:
  fs::path dir_;
  std::ostream& out_;
  json report_;
  std::vector<std::pair<std::string, std::string>> pending_;
};

bool is_truncation(const DiagonalSystem& s) { return !s.truncation_note().empty(); }

struct Options {
  std::string out_dir = ".";
  // builtin
  std::string builtin_name;
  int modes = 0;
  // shared inputs
  std::string system_file;
  std::string measure_file;
  std::string etas = "1,0.1,0.01,0.001";
  std::string eta_grid;
  std::string r_grid;
  std::string tau_grid;
  std::string small_grid;
  Real threshold = 0.5;
  std::optional<Real> single_r;
  Real epsilon = 1e-2;
  std::string r_cap = "auto";
  // sufficient
  Real exponent = 0.75;
  Real base = 2.0;
  int n_max = 1000;
  Real tail_tol = 0.1;
  std::optional<Real> m_const;
  Real s_norm = 1.0;
  Real semigroup_const = 1.0;
  Real alpha = 0.25;
  Real eta = 0.01;
  Real a = 0.0;
  Real b = 0.0;
  Real sector_beta = 1.0;
  Real c2 = 1.0;
  // counterexample
  Real beta = 0.4;
  Real alpha_exp = 0.25;
  int max_n = 10;
  Real r_min = 1.0;
  Real r_max = 1e8;
  int ppd = 9;
  std::string slope_ns = "8,16,32,64,128";
  Real sharp_alpha = 0.4;
};

void cmd_builtin(const Options& o, std::ostream& out) {
  const DiagonalSystem sys = system_from_json({{"builtin", o.builtin_name}, {"modes", o.modes}});
  Output rep("builtin", o.out_dir, out);
  rep.system(sys);
  rep.extra_file("system.json", system_to_json(sys).dump(2) + "\n");
  rep.value("system_file", "system.json");
  rep.value("modes", sys.size());
  out << "built " << sys.label() << " with " << sys.size() << " modes\n";
  rep.finish();
}

void cmd_analyze(const Options& o, std::ostream& out) {
  const DiagonalSystem sys = load_system(o.system_file);
  Grid g;
  if (!o.eta_grid.empty()) {
    g = parse_grid(o.eta_grid);
    std::reverse(g.values.begin(), g.values.end());
  } else {
    g = list_grid(parse_list(o.etas));
  }
  const KProfile prof = k_profile(sys, g.values, o.threshold);
  Output rep("analyze", o.out_dir, out);
  rep.system(sys);
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : prof.samples) rows.push_back({fmt(s.eta), fmt(s.K)});
  rep.csv("k_profile", "eta,K", rows);
  rep.verdict("k_profile", to_string(prof.verdict), g.provenance,
              {{"ratio_Kmin_over_Kmax", prof.ratio}, {"decay_ratio_threshold", o.threshold}});
  rep.finish();
}

Grid default_r_grid(const Options& o, const DiagonalSystem& sys) {
  if (!o.r_grid.empty()) return parse_grid(o.r_grid);
  const Real hi = is_truncation(sys) ? std::min(1e6, reliable_r_max(sys)) : 1e6;
  return geometric(1e-2, std::max(hi, 1.0), 9);
}

void cmd_weiss(const Options& o, std::ostream& out) {
  const DiagonalSystem sys = load_system(o.system_file);
  const Grid g = default_r_grid(o, sys);
  const MProfile prof = weiss_m_profile(sys, g.values, o.threshold);
  Output rep("weiss", o.out_dir, out);
  rep.system(sys);
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : prof.samples) rows.push_back({fmt(s.r), fmt(s.m)});
  rep.csv("m_profile", "r,m", rows);
  rep.verdict("m_profile", to_string(prof.verdict), g.provenance,
              {{"end_ratio", prof.end_ratio},
               {"uniform_bound", prof.uniform_bound},
               {"candidates", prof.candidates},
               {"refinement_residual", prof.refinement_residual}});
  rep.finish();
}

void cmd_b2(const Options& o, std::ostream& out) {
  const DiagonalSystem sys = load_system(o.system_file);
  Grid g;
  if (!o.tau_grid.empty()) {
    g = parse_grid(o.tau_grid);
  } else {
    const Real lo = is_truncation(sys) ? std::max(1e-4, reliable_tau_min(sys)) : 1e-4;
    g = geometric(std::min(lo, 1.0), 10.0, 9);
  }
  const TauProfile prof = b2_profile(sys, g.values, o.threshold);
  Output rep("b2", o.out_dir, out);
  rep.system(sys);
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : prof.samples) rows.push_back({fmt(s.tau), fmt(s.K)});
  rep.csv("tau_profile", "tau,K", rows);
  rep.verdict("tau_profile", to_string(prof.verdict), g.provenance,
              {{"end_ratio", prof.end_ratio},
               {"uniform_bound", prof.uniform_bound},
               {"candidates", prof.candidates},
               {"refinement_residual", prof.refinement_residual}});
  rep.finish();
}

void cmd_carleson(const Options& o, std::ostream& out) {
  PointMeasure mu;
  std::optional<DiagonalSystem> sys;
  if (!o.measure_file.empty()) {
    mu = load_measure(o.measure_file);
  } else if (!o.system_file.empty()) {
    sys = load_system(o.system_file);
    mu = to_point_measure(*sys);
  } else {
    throw InvalidArgument("carleson needs a system file or --measure");
  }
  Output rep("carleson", o.out_dir, out);
  if (sys) rep.system(*sys);
  rep.value("atoms", mu.atoms.size());

  if (o.single_r) {
    const Real h = sup_box_ratio(mu, *o.single_r);
    rep.csv("h_profile", "r,h", {{fmt(*o.single_r), fmt(h)}});
    rep.value("h", h);
    rep.value("r", *o.single_r);
    out << "h(" << fmt(*o.single_r) << ") = " << fmt(h) << '\n';
    rep.finish();
    return;
  }

  Real cap = std::numeric_limits<Real>::infinity();
  if (o.r_cap == "auto") {
    if (sys && is_truncation(*sys)) cap = sys->spectral_radius();
  } else if (o.r_cap != "none") {
    cap = parse_real(o.r_cap);
  }
  const Grid g = o.r_grid.empty() ? geometric(1e-2, std::isfinite(cap) ? std::max(cap, 1.0) : 1e6, 9)
                                  : parse_grid(o.r_grid);
  const Grid small = o.small_grid.empty() ? geometric(1e-4, 1e-2, 9) : parse_grid(o.small_grid);
  const BoxRatioProfile prof = classify(mu, g.values, small.values, o.epsilon, cap, o.threshold);
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : prof.samples) rows.push_back({fmt(s.r), fmt(s.h)});
  rep.csv("h_profile", "r,h", rows);
  json grid = {{"r_grid", g.provenance}, {"small_box_grid", small.provenance}};
  rep.verdict("carleson", to_string(prof.classification), grid,
              {{"sup_h", prof.sup_h},
               {"end_ratio", prof.end_ratio},
               {"vanishing_probe", prof.vanishing_probe},
               {"near_origin_ratio", prof.near_origin_ratio},
               {"epsilon", o.epsilon},
               {"reliable_r_max", std::isfinite(cap) ? json(cap) : json(nullptr)}});
  rep.finish();
}

void cmd_zwart(const Options& o, std::ostream& out) {
  const GrowthFunction g = GrowthFunction::log_power(o.exponent);
  const SummabilityReport s = zwart_summability(g, o.base, o.n_max, o.tail_tol);
  Output rep("sufficient zwart", o.out_dir, out);
  json grid = {{"kind", "summation"}, {"base", o.base}, {"n_max", s.n_max}};
  rep.verdict("zwart_summability", to_string(s.verdict), grid,
              {{"g", g.description},
               {"partial_sum", s.partial_sum},
               {"tail_slope", s.tail_slope},
               {"tail_estimate", std::isfinite(s.tail_estimate) ? json(s.tail_estimate) : json(nullptr)}});
  if (!o.system_file.empty()) {
    const DiagonalSystem sys = load_system(o.system_file);
    rep.system(sys);
    const Grid rg = o.r_grid.empty() ? geometric(1.0, 1e4, 9) : parse_grid(o.r_grid);
    const auto grid_s = zwart_grid(sys, rg.values);
    const ZwartBoundReport zb = check_zwart_bound(sys, o.m_const.value_or(1.0), g, grid_s);
    rep.value("zwart_bound", {{"m", o.m_const ? json(*o.m_const) : json(nullptr)},
                              {"smallest_m_on_grid", zb.smallest_m},
                              {"worst_ratio", zb.worst_ratio},
                              {"holds", o.m_const ? json(zb.holds) : json(nullptr)},
                              {"worst_s", {zb.worst_s.real(), zb.worst_s.imag()}},
                              {"grid", rg.provenance}});
    out << "smallest m on grid: " << fmt(zb.smallest_m) << '\n';
  }
  rep.finish();
}

void cmd_analytic(const Options& o, std::ostream& out) {
  const Real bound = analytic_alpha_bound(o.s_norm, o.semigroup_const, o.alpha, o.eta);
  Output rep("sufficient analytic", o.out_dir, out);
  rep.value("analytic_alpha_bound", {{"s_norm", o.s_norm},
                                     {"M", o.semigroup_const},
                                     {"alpha", o.alpha},
                                     {"eta", o.eta},
                                     {"bound", bound}});
  out << "K_eta bound: " << fmt(bound) << '\n';
  rep.finish();
}

void cmd_sector(const Options& o, std::ostream& out) {
  const SectorRegion region{o.a, o.b, o.sector_beta};
  const Real bound = sector_bound(region, o.alpha, o.eta, o.c2);
  Output rep("sufficient sector", o.out_dir, out);
  json v = {{"a", o.a},     {"b", o.b},     {"beta", o.sector_beta}, {"alpha", o.alpha},
            {"eta", o.eta}, {"c2", o.c2},   {"bound", bound}};
  if (!o.system_file.empty()) {
    const DiagonalSystem sys = load_system(o.system_file);
    rep.system(sys);
    v["spectrum_in_region"] = spectrum_in_region(sys, region);
    out << "spectrum in region: " << (v["spectrum_in_region"].get<bool>() ? "yes" : "no") << '\n';
  }
  rep.value("sector_bound", v);
  out << "K_eta bound: " << fmt(bound) << '\n';
  rep.finish();
}

Real loglog_slope(const std::vector<Real>& x, const std::vector<Real>& y) {
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<Real>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Real lx = std::log(x[i]);
    const Real ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void cmd_counterexample(const Options& o, std::ostream& out) {
  if (o.max_n < 2 || o.max_n > 30) throw InvalidArgument("--max-n must lie in [2, 30]");
  std::vector<int> ns;
  for (int n = 2; n <= o.max_n; ++n) ns.push_back(n);
  const auto blocks = blow_up_sequence(o.beta, ns);
  const NonBesselianBasis basis = basis_gram(o.beta, std::min(o.max_n, 12));

  Output rep("counterexample", o.out_dir, out);
  std::vector<std::vector<std::string>> rows;
  for (const auto& b : blocks) {
    std::string ratio;
    if (b.N <= 12) ratio = fmt(block_energy(b.alphas, basis) / b.x_norm_sq);
    rows.push_back({std::to_string(b.N), fmt(b.c_N), ratio});
  }
  rep.csv("blowup", "N,c_N,energy_ratio", rows);

  std::vector<int> slope_ns;
  for (Real v : parse_list(o.slope_ns)) slope_ns.push_back(static_cast<int>(v));
  const auto slope_blocks = blow_up_sequence(o.beta, slope_ns);
  std::vector<Real> sx, sy;
  rows.clear();
  for (const auto& b : slope_blocks) {
    sx.push_back(b.N);
    sy.push_back(b.c_N);
    rows.push_back({std::to_string(b.N), fmt(b.c_N)});
  }
  rep.csv("cn_growth", "N,c_N", rows);
  const Real cn_slope = slope_blocks.size() >= 2 ? loglog_slope(sx, sy) : 0.0;

  const Grid rg = geometric(o.r_min, o.r_max, o.ppd);
  const auto betas = growth_weights(blocks, o.alpha_exp);
  const AssembledCounterexample asm_ce = assemble(o.alpha_exp, blocks, betas, rg.values);
  rows.clear();
  for (const auto& s : asm_ce.M_samples) rows.push_back({fmt(s.r), fmt(s.M)});
  rep.csv("m_assembled", "r,M", rows);
  rep.verdict("assembled_b1", to_string(assembled_b1_verdict(asm_ce)), rg.provenance,
              {{"M_ratio", asm_ce.M_samples.back().M / asm_ce.M_samples.front().M}});

  const SharpnessProfile sharp = sharpness_profile(o.beta, o.sharp_alpha, geometric(1e2, 1e10, 10).values);
  rows.clear();
  for (const auto& s : sharp.samples) rows.push_back({fmt(s.r), fmt(s.bound), std::to_string(s.argmax_N)});
  rep.csv("sharpness", "r,bound,argmax_N", rows);

  rep.value("beta", o.beta);
  rep.value("alpha", o.alpha_exp);
  rep.value("weights", betas);
  rep.value("energy_lower_bounds", asm_ce.energy_lower_bounds);
  rep.value("fitted_exponents", {{"c_N_loglog_slope", cn_slope},
                                 {"c_N_expected", 4 * o.beta - 1},
                                 {"c_N_Ns", slope_ns},
                                 {"sharpness_alpha", o.sharp_alpha},
                                 {"sharpness_gamma_expected", sharp.gamma},
                                 {"sharpness_gamma_fit", sharp.gamma_fit},
                                 {"sharpness_offset_fit", sharp.offset_fit},
                                 {"sharpness_gamma_fit_no_offset", sharp.gamma_fit_plain}});
  out << "c_N log-log slope " << fmt(cn_slope) << " (expected " << fmt(4 * o.beta - 1) << ")\n";
  out << "sharpness exponent fit " << fmt(sharp.gamma_fit) << " (expected " << fmt(sharp.gamma)
      << ")\n";
  rep.finish();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<void()> action;

  CLI::App app{"Admissibility, zero-class and Carleson diagnostics for diagonal semigroup systems",
               "zca"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_dir, "Output directory for report.json and CSV profiles");
  };
  auto add_system = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("system", o.system_file, "System description (JSON)");
    if (required) opt->required();
  };

  auto* builtin = app.add_subcommand("builtin", "Write a builtin system description");
  builtin->add_option("name", o.builtin_name, "heat or wave")
      ->required()
      ->check(CLI::IsMember({"heat", "wave"}));
  builtin->add_option("--modes", o.modes, "Number of modes")->required();
  add_out(builtin);
  builtin->callback([&] { action = [&] { cmd_builtin(o, out); }; });

  auto* analyze = app.add_subcommand("analyze", "K_eta profile and zero-class verdict");
  add_system(analyze, true);
  analyze->add_option("--etas", o.etas, "Decreasing list of horizons");
  analyze->add_option("--eta-grid", o.eta_grid, "min,max,points-per-decade");
  analyze->add_option("--threshold", o.threshold, "Decay ratio threshold");
  add_out(analyze);
  analyze->callback([&] { action = [&] { cmd_analyze(o, out); }; });

  auto* weiss = app.add_subcommand("weiss", "m_r profile of the modified Weiss condition");
  add_system(weiss, true);
  weiss->add_option("--r-grid", o.r_grid, "min,max,points-per-decade");
  weiss->add_option("--threshold", o.threshold, "Decay ratio threshold");
  add_out(weiss);
  weiss->callback([&] { action = [&] { cmd_weiss(o, out); }; });

  auto* b2 = app.add_subcommand("b2", "K_tau profile of the windowed oscillatory output integral");
  add_system(b2, true);
  b2->add_option("--tau-grid", o.tau_grid, "min,max,points-per-decade");
  b2->add_option("--threshold", o.threshold, "Decay ratio threshold");
  add_out(b2);
  b2->callback([&] { action = [&] { cmd_b2(o, out); }; });

  auto* carleson = app.add_subcommand("carleson", "Carleson box ratios and classification");
  add_system(carleson, false);
  carleson->add_option("--measure", o.measure_file, "Measure description (JSON)");
  carleson->add_option("--r", o.single_r, "Evaluate h at a single box side");
  carleson->add_option("--r-grid", o.r_grid, "min,max,points-per-decade");
  carleson->add_option("--small-grid", o.small_grid, "min,max,points-per-decade for boundary boxes");
  carleson->add_option("--epsilon", o.epsilon, "Vanishing-Carleson tolerance");
  carleson->add_option("--r-cap", o.r_cap, "Largest reliable r: auto, none or a number");
  carleson->add_option("--threshold", o.threshold, "Decay ratio threshold");
  add_out(carleson);
  carleson->callback([&] { action = [&] { cmd_carleson(o, out); }; });

  auto* sufficient = app.add_subcommand("sufficient", "Sufficient conditions for zero-class admissibility");
  sufficient->require_subcommand(1);
  auto* zwart = sufficient->add_subcommand("zwart", "Log-factor resolvent criterion");
  zwart->add_option("--exponent", o.exponent, "g(t) = (log(2+t))^exponent");
  zwart->add_option("--base", o.base, "Geometric base of the summation nodes");
  zwart->add_option("--n-max", o.n_max, "Last summation index");
  zwart->add_option("--tail-tol", o.tail_tol, "Relative tail tolerance");
  zwart->add_option("--system", o.system_file, "Check the resolvent bound on this system");
  zwart->add_option("--m", o.m_const, "Constant m of the resolvent bound");
  zwart->add_option("--r-grid", o.r_grid, "min,max,points-per-decade for Re s");
  add_out(zwart);
  zwart->callback([&] { action = [&] { cmd_zwart(o, out); }; });

  auto* analytic = sufficient->add_subcommand("analytic", "C = S(-A)^alpha with A analytic");
  analytic->add_option("--s-norm", o.s_norm, "||S||");
  analytic->add_option("--M", o.semigroup_const, "Constant in ||(-A)^alpha T(t)|| <= M t^-alpha");
  analytic->add_option("--alpha", o.alpha, "Fractional power in (0, 1/2)");
  analytic->add_option("--eta", o.eta, "Horizon");
  add_out(analytic);
  analytic->callback([&] { action = [&] { cmd_analytic(o, out); }; });

  auto* sector = sufficient->add_subcommand("sector", "Normal semigroup with spectrum in a sector region");
  sector->add_option("--a", o.a, "Region offset a");
  sector->add_option("--b", o.b, "Region slope b");
  sector->add_option("--beta", o.sector_beta, "Region exponent beta");
  sector->add_option("--alpha", o.alpha, "Fractional power");
  sector->add_option("--eta", o.eta, "Horizon");
  sector->add_option("--c2", o.c2, "Pointwise bound constant");
  sector->add_option("--system", o.system_file, "Check spectrum membership for this system");
  add_out(sector);
  sector->callback([&] { action = [&] { cmd_sector(o, out); }; });

  auto* ce = app.add_subcommand("counterexample", "Non-Besselian block counterexample");
  ce->add_option("--beta", o.beta, "Basis exponent in (1/4, 1/2)");
  ce->add_option("--alpha", o.alpha_exp, "Weight exponent in (0, 1/2)");
  ce->add_option("--max-n", o.max_n, "Largest block N (2..30)");
  ce->add_option("--r-min", o.r_min, "Smallest r of the M_r grid");
  ce->add_option("--r-max", o.r_max, "Largest r of the M_r grid");
  ce->add_option("--points-per-decade", o.ppd, "M_r grid density");
  ce->add_option("--slope-ns", o.slope_ns, "Block sizes for the c_N growth fit");
  ce->add_option("--sharpness-alpha", o.sharp_alpha, "alpha used for the sharpness envelope");
  add_out(ce);
  ce->callback([&] { action = [&] { cmd_counterexample(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (action) action();
    return kOk;
  } catch (const InvalidArgument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const fs::filesystem_error& e) {
    err << "file error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
}

}  // namespace zca::cli
