#include "effradius/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "effradius/coincidence.hpp"
#include "effradius/errors.hpp"
#include "effradius/estimators.hpp"
#include "effradius/format.hpp"
#include "effradius/series_io.hpp"
#include "effradius/svg.hpp"
#include "effradius/taylor.hpp"

namespace effradius::cli {

namespace {

struct JobConfig {
  std::string expr;
  std::string series_path;
  double center = 0.0;
  int degree = -1;  // -1: not given
  std::optional<double> epsilon;
  double a = 0.0;
  double b = 0.0;
  int n_points = 100;
  std::string norm = "linf";
  std::string convention = "empirical";
  bool intercept = false;
  std::string window;  // "lo:hi", empty: whole series
  double r_max = 10.0;
  std::string out_path;
  std::string format;  // empty: per-command default
  int precision = 4;
  std::string side = "sym";
  std::string kind = "overlay";
  std::string parity = "all";
};

Norm parse_norm(const std::string& s) {
  if (s == "l1") return Norm::L1;
  if (s == "l2") return Norm::L2;
  return Norm::LInf;
}

Convention parse_convention(const std::string& s) {
  return s == "stated" ? Convention::Stated : Convention::Empirical;
}

IntervalSide parse_side(const std::string& s) {
  if (s == "right") return IntervalSide::Right;
  if (s == "left") return IntervalSide::Left;
  return IntervalSide::Symmetric;
}

ParityFilter parse_parity(const std::string& s) {
  if (s == "even") return ParityFilter::Even;
  if (s == "odd") return ParityFilter::Odd;
  return ParityFilter::All;
}

std::optional<IndexWindow> parse_window(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--window expects n_min:n_max");
  long lo = 0, hi = 0;
  const auto r1 = std::from_chars(s.data(), s.data() + colon, lo);
  const auto r2 = std::from_chars(s.data() + colon + 1, s.data() + s.size(), hi);
  if (r1.ec != std::errc{} || r1.ptr != s.data() + colon ||
      r2.ec != std::errc{} || r2.ptr != s.data() + s.size())
    throw std::invalid_argument("--window expects n_min:n_max");
  return IndexWindow{lo, hi};
}

// ---- input resolution ----------------------------------------------------

// For commands whose only input is the polynomial itself.
PowerSeries series_input(const JobConfig& cfg) {
  const bool have_file = !cfg.series_path.empty();
  const bool have_expr = !cfg.expr.empty();
  if (have_file == have_expr)
    throw std::invalid_argument("exactly one of --series or --expr is required");
  if (have_file) return read_series_file(cfg.series_path);
  if (cfg.degree < 0)
    throw std::invalid_argument("--degree is required when expanding --expr");
  return taylor(parse_expression(cfg.expr), cfg.center, cfg.degree);
}

// For commands that compare a function f against a polynomial: --expr names
// f, and the polynomial comes from --series or from expanding f itself.
std::pair<Expression, PowerSeries> function_and_series(const JobConfig& cfg) {
  if (cfg.expr.empty()) throw std::invalid_argument("--expr is required");
  Expression f = parse_expression(cfg.expr);
  if (!cfg.series_path.empty()) {
    if (cfg.degree >= 0)
      throw std::invalid_argument("--series and --degree are mutually exclusive");
    PowerSeries p = read_series_file(cfg.series_path);
    return {std::move(f), std::move(p)};
  }
  if (cfg.degree < 0)
    throw std::invalid_argument("need --series, or --degree to expand --expr");
  PowerSeries p = taylor(f, cfg.center, cfg.degree);
  return {std::move(f), std::move(p)};
}

void write_output(const JobConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
  file << payload;
  if (!file) throw std::invalid_argument("failed writing output file: " + cfg.out_path);
}

std::string json_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json to_json(const Eigen::VectorXi& v) {
  return std::vector<int>(v.data(), v.data() + v.size());
}

nlohmann::json to_json(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

// ---- commands ------------------------------------------------------------

std::string cmd_taylor(const JobConfig& cfg) {
  if (cfg.expr.empty()) throw std::invalid_argument("--expr is required");
  if (cfg.degree < 0) throw std::invalid_argument("--degree is required");
  const PowerSeries p = taylor(parse_expression(cfg.expr), cfg.center, cfg.degree);

  std::ostringstream os;
  if (cfg.format == "json") {
    write_series_json(os, p);
  } else if (cfg.format == "csv") {
    write_series_csv(os, p);
  } else {
    os << "taylor series of " << cfg.expr << "\n";
    os << "center: " << format_sig(p.center(), cfg.precision) << "\n";
    os << "degree: " << p.degree() << "\n";
    os << "     n  a_n\n";
    for (Eigen::Index n = 0; n <= p.degree(); ++n) {
      os << std::setw(6) << n << "  " << format_sig(p.coeff(n), cfg.precision) << "\n";
    }
  }
  return os.str();
}

nlohmann::json branch_json(const PowerSeries& p, Convention conv, ParityFilter f,
                           const std::optional<double>& terminal, bool suspect) {
  if (!terminal) return nullptr;
  const RadiusSequence s = root_sequence(p, conv, f);
  nlohmann::json j;
  j["terminal"] = *terminal;
  j["suspect_divergent"] = suspect;
  j["indices"] = to_json(s.indices);
  j["values"] = to_json(s.values);
  return j;
}

std::string cmd_radius(const JobConfig& cfg) {
  const PowerSeries p = series_input(cfg);
  const Convention conv = parse_convention(cfg.convention);
  const RootEstimate est = root_estimate(p, conv);

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["convention"] = to_string(conv);
    j["parity"] = to_string(est.parity);
    j["branches"]["all"] = branch_json(p, conv, ParityFilter::All, est.r_all, est.suspect_all);
    j["branches"]["even"] =
        branch_json(p, conv, ParityFilter::Even, est.r_even, est.suspect_even);
    j["branches"]["odd"] = branch_json(p, conv, ParityFilter::Odd, est.r_odd, est.suspect_odd);
    j["selected"]["branch"] = to_string(est.selected_branch);
    j["selected"]["value"] = est.selected;
    j["selected"]["reason"] = est.selected_reason;
    os << json_dump(j);
  } else {
    const int prec = cfg.precision;
    os << "root-test radius estimate (" << to_string(conv) << " convention)\n";
    os << "series degree: " << p.degree() << ", parity: " << to_string(est.parity) << "\n";
    const auto line = [&](const char* name, const std::optional<double>& r, bool suspect) {
      os << std::setw(6) << name << "  ";
      if (r)
        os << format_sig(*r, prec) << (suspect ? "  (suspect divergent)" : "");
      else
        os << "(no terms)";
      os << "\n";
    };
    os << "terminal estimate per branch:\n";
    line("all", est.r_all, est.suspect_all);
    line("even", est.r_even, est.suspect_even);
    line("odd", est.r_odd, est.suspect_odd);
    os << "selected: " << to_string(est.selected_branch)
       << " branch, R = " << format_sig(est.selected, prec) << "\n";
    os << "reason: " << est.selected_reason << "\n";
    const RadiusSequence s = root_sequence(p, conv, est.selected_branch);
    os << "sequence (" << to_string(est.selected_branch) << " branch):\n";
    os << "     n  R_n\n";
    for (Eigen::Index i = 0; i < s.size(); ++i)
      os << std::setw(6) << s.indices(i) << "  " << format_sig(s.values(i), prec) << "\n";
  }
  return os.str();
}

std::string cmd_ols(const JobConfig& cfg) {
  const PowerSeries p = series_input(cfg);
  const std::optional<IndexWindow> window = parse_window(cfg.window);
  const FitResult fit = ols_estimate(p, cfg.intercept, window);

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["model"] = cfg.intercept ? "with-intercept" : "through-origin";
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept ? nlohmann::json(*fit.intercept) : nlohmann::json(nullptr);
    j["radius"] = fit.radius;
    j["rss"] = fit.rss;
    j["indices"] = to_json(fit.indices);
    j["log_abs_coeffs"] = to_json(fit.log_abs_coeffs);
    j["window"] = window ? nlohmann::json::array({window->lo, window->hi})
                         : nlohmann::json(nullptr);
    os << json_dump(j);
  } else {
    const int prec = cfg.precision;
    os << "log-coefficient OLS fit ("
       << (cfg.intercept ? "with intercept" : "through origin") << ")\n";
    os << "points used: " << fit.indices.size();
    if (window) os << " (window " << window->lo << ":" << window->hi << ")";
    os << "\n";
    os << "slope: " << format_sig(fit.slope, prec) << "\n";
    if (fit.intercept) os << "intercept: " << format_sig(*fit.intercept, prec) << "\n";
    os << "radius estimate: " << format_sig(fit.radius, prec) << "\n";
    os << "rss: " << format_sig(fit.rss, prec) << "\n";
  }
  return os.str();
}

std::string cmd_coincide(const JobConfig& cfg, bool a_set, bool b_set) {
  if (!a_set || !b_set) throw std::invalid_argument("--a and --b are required");
  auto [f, p] = function_and_series(cfg);
  const Norm norm = parse_norm(cfg.norm);
  const CoincidenceReport rep = graph_distance(f, p, cfg.a, cfg.b, cfg.n_points, norm);
  std::optional<bool> verdict;
  if (cfg.epsilon) {
    if (!(*cfg.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    verdict = rep.distance < *cfg.epsilon;
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["a"] = rep.a;
    j["b"] = rep.b;
    j["n_points"] = static_cast<int>(rep.n_points);
    j["norm"] = to_string(rep.norm);
    j["distance"] = rep.distance;
    j["argmax_x"] = rep.argmax_x;
    j["epsilon"] = cfg.epsilon ? nlohmann::json(*cfg.epsilon) : nlohmann::json(nullptr);
    j["coincide"] = verdict ? nlohmann::json(*verdict) : nlohmann::json(nullptr);
    os << json_dump(j);
  } else {
    const int prec = cfg.precision;
    os << "graph distance between f and the series\n";
    os << "interval: [" << format_sig(rep.a, prec) << ", " << format_sig(rep.b, prec)
       << "], grid points: " << rep.n_points << ", norm: " << to_string(rep.norm) << "\n";
    os << "distance: " << format_sig(rep.distance, prec) << "\n";
    os << "largest gap at x = " << format_sig(rep.argmax_x, prec) << "\n";
    if (verdict)
      os << "epsilon: " << format_sig(*cfg.epsilon, prec)
         << " -> coincide: " << (*verdict ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string cmd_effective(const JobConfig& cfg) {
  if (!cfg.epsilon) throw std::invalid_argument("--epsilon is required");
  auto [f, p] = function_and_series(cfg);
  const Norm norm = parse_norm(cfg.norm);
  const IntervalSide side = parse_side(cfg.side);
  const EffectiveRadius er = effective_radius(f, p, p.center(), *cfg.epsilon,
                                              cfg.n_points, norm, cfg.r_max, side);

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["x0"] = p.center();
    j["epsilon"] = er.epsilon;
    j["n_points"] = static_cast<int>(er.n_points);
    j["norm"] = to_string(er.norm);
    j["side"] = to_string(er.side);
    j["r_max"] = cfg.r_max;
    j["value"] = er.value;
    j["bracket"] = nlohmann::json::array({er.bracket_lo, er.bracket_hi});
    j["binding"] = er.binding;
    os << json_dump(j);
  } else {
    const int prec = cfg.precision;
    os << "effective radius of convergence\n";
    os << "epsilon: " << format_sig(er.epsilon, prec) << ", norm: " << to_string(er.norm)
       << ", grid points: " << er.n_points << ", side: " << to_string(er.side)
       << ", r_max: " << format_sig(cfg.r_max, prec) << "\n";
    os << "R_ef = " << format_sig(er.value, prec) << "\n";
    if (er.binding)
      os << "bracket: [" << format_sig(er.bracket_lo, prec) << ", "
         << format_sig(er.bracket_hi, prec) << "]\n";
    else
      os << "not binding: the discrepancy stays below epsilon out to r_max\n";
  }
  return os.str();
}

std::string cmd_plot(const JobConfig& cfg, bool a_set, bool b_set) {
  std::ostringstream os;
  const bool svg = cfg.format == "svg";

  if (cfg.kind == "overlay") {
    if (!a_set || !b_set) throw std::invalid_argument("--a and --b are required");
    auto [f, p] = function_and_series(cfg);
    const Grid grid = make_grid(cfg.a, cfg.b, cfg.n_points);
    Eigen::VectorXd fv(grid.size()), pv(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      fv(i) = eval_ast(f, grid[i]);
      pv(i) = evaluate(p, grid[i]);
    }
    if (svg) {
      write_svg_chart(os, "overlay: " + cfg.expr, "x", "value",
                      {{"f", grid.points(), fv, false}, {"series", grid.points(), pv, false}});
    } else {
      os << "x,f,p\n";
      for (Eigen::Index i = 0; i < grid.size(); ++i)
        os << dtoa(grid[i]) << ',' << dtoa(fv(i)) << ',' << dtoa(pv(i)) << '\n';
    }
    return os.str();
  }

  if (cfg.kind == "ols") {
    const PowerSeries p = series_input(cfg);
    const std::optional<IndexWindow> window = parse_window(cfg.window);
    if (svg) {
      const FitResult fit = ols_estimate(p, cfg.intercept, window);
      const Eigen::VectorXd n_vals = fit.indices.cast<double>();
      Eigen::VectorXd fit_x(2), fit_y(2);
      fit_x << n_vals(0), n_vals(n_vals.size() - 1);
      const double b0 = fit.intercept.value_or(0.0);
      fit_y << b0 + fit.slope * fit_x(0), b0 + fit.slope * fit_x(1);
      write_svg_chart(os, "log-coefficient fit", "n", "ln|a_n|",
                      {{"ln|a_n|", n_vals, fit.log_abs_coeffs, true},
                       {"OLS fit", fit_x, fit_y, false}});
    } else {
      // The CSV carries the fit's input data, not the fit itself.
      const Eigen::VectorXd& a = p.coeffs();
      Eigen::Index lo = window ? window->lo : 0;
      Eigen::Index hi = window ? window->hi : a.size() - 1;
      if (lo < 0 || hi > a.size() - 1 || lo > hi)
        throw std::invalid_argument("fit window out of range");
      os << "n,ln_abs_a\n";
      for (Eigen::Index n = lo; n <= hi; ++n)
        if (a(n) != 0.0) os << n << ',' << dtoa(std::log(std::abs(a(n)))) << '\n';
    }
    return os.str();
  }

  if (cfg.kind == "roots") {
    const PowerSeries p = series_input(cfg);
    const Convention conv = parse_convention(cfg.convention);
    const RadiusSequence s = root_sequence(p, conv, parse_parity(cfg.parity));
    if (s.size() == 0)
      throw std::invalid_argument("root sequence has no terms for this branch");
    if (svg) {
      const Eigen::VectorXd n_vals = s.indices.cast<double>();
      Eigen::VectorXd ref_x(2), ref_y(2);
      ref_x << n_vals(0), n_vals(n_vals.size() - 1);
      ref_y << s.values(s.size() - 1), s.values(s.size() - 1);
      write_svg_chart(os, "root-test sequence (" + cfg.parity + " branch)", "n", "R_n",
                      {{"R_n", n_vals, s.values, true}, {"terminal", ref_x, ref_y, false}});
    } else {
      os << "n,R_n\n";
      for (Eigen::Index i = 0; i < s.size(); ++i)
        os << s.indices(i) << ',' << dtoa(s.values(i)) << '\n';
    }
    return os.str();
  }

  throw std::invalid_argument("unknown plot kind: " + cfg.kind);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  CLI::App app{"truncated Taylor expansions and their effective radius of convergence"};
  app.require_subcommand(1);

  const auto add_source = [&](CLI::App* c) {
    c->add_option("--expr", cfg.expr, "expression in x");
    c->add_option("--series", cfg.series_path, "series file (.json or .csv)");
    c->add_option("--center", cfg.center, "expansion point (default 0)");
    c->add_option("--degree", cfg.degree, "expansion degree (0..1000)");
  };
  const auto add_format = [&](CLI::App* c, std::vector<std::string> choices) {
    c->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(choices));
    c->add_option("--out", cfg.out_path, "write the report to this file");
    c->add_option("--precision", cfg.precision, "significant digits in text output")
        ->check(CLI::Range(1, 17));
  };
  const auto add_grid = [&](CLI::App* c) {
    c->add_option("--n-points", cfg.n_points, "grid points (default 100)");
    c->add_option("--norm", cfg.norm, "difference norm (default linf)")
        ->check(CLI::IsMember({"l1", "l2", "linf"}));
  };

  CLI::App* c_taylor = app.add_subcommand("taylor", "expand an expression into a Taylor series");
  c_taylor->add_option("--expr", cfg.expr, "expression in x")->required();
  c_taylor->add_option("--center", cfg.center, "expansion point (default 0)");
  c_taylor->add_option("--degree", cfg.degree, "expansion degree (0..1000)")->required();
  add_format(c_taylor, {"text", "json", "csv"});

  CLI::App* c_radius = app.add_subcommand("radius", "root-test radius estimate");
  add_source(c_radius);
  c_radius->add_option("--convention", cfg.convention, "root-test indexing convention")
      ->check(CLI::IsMember({"stated", "empirical"}));
  add_format(c_radius, {"text", "json"});

  CLI::App* c_ols = app.add_subcommand("ols", "least-squares radius estimate from ln|a_n|");
  add_source(c_ols);
  c_ols->add_flag("--intercept", cfg.intercept, "fit an intercept too");
  c_ols->add_option("--window", cfg.window, "coefficient index window n_min:n_max");
  add_format(c_ols, {"text", "json"});

  CLI::App* c_coincide = app.add_subcommand("coincide", "graph distance on an interval");
  add_source(c_coincide);
  CLI::Option* opt_a = c_coincide->add_option("--a", cfg.a, "interval start");
  CLI::Option* opt_b = c_coincide->add_option("--b", cfg.b, "interval end");
  opt_a->required();
  opt_b->required();
  c_coincide->add_option("--epsilon", cfg.epsilon, "coincidence threshold");
  add_grid(c_coincide);
  add_format(c_coincide, {"text", "json"});

  CLI::App* c_effective = app.add_subcommand("effective", "effective radius of convergence");
  add_source(c_effective);
  c_effective->add_option("--epsilon", cfg.epsilon, "coincidence threshold")->required();
  c_effective->add_option("--r-max", cfg.r_max, "solver scan limit (default 10)");
  c_effective->add_option("--side", cfg.side, "interval placement around the center")
      ->check(CLI::IsMember({"sym", "right", "left"}));
  add_grid(c_effective);
  add_format(c_effective, {"text", "json"});

  CLI::App* c_plot = app.add_subcommand("plot", "CSV/SVG plot data");
  add_source(c_plot);
  c_plot->add_option("--kind", cfg.kind, "what to plot")
      ->check(CLI::IsMember({"overlay", "ols", "roots"}));
  CLI::Option* plot_a = c_plot->add_option("--a", cfg.a, "interval start (overlay)");
  CLI::Option* plot_b = c_plot->add_option("--b", cfg.b, "interval end (overlay)");
  c_plot->add_option("--convention", cfg.convention, "root-test indexing convention (roots)")
      ->check(CLI::IsMember({"stated", "empirical"}));
  c_plot->add_option("--parity", cfg.parity, "root-sequence branch (roots)")
      ->check(CLI::IsMember({"all", "even", "odd"}));
  c_plot->add_flag("--intercept", cfg.intercept, "fit an intercept too (ols)");
  c_plot->add_option("--window", cfg.window, "coefficient index window n_min:n_max (ols)");
  c_plot->add_option("--n-points", cfg.n_points, "grid points (default 100)");
  add_format(c_plot, {"csv", "svg"});

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("effradius");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    std::string payload;
    if (app.got_subcommand(c_taylor)) {
      if (cfg.format.empty()) cfg.format = "json";
      payload = cmd_taylor(cfg);
    } else if (app.got_subcommand(c_radius)) {
      if (cfg.format.empty()) cfg.format = "text";
      payload = cmd_radius(cfg);
    } else if (app.got_subcommand(c_ols)) {
      if (cfg.format.empty()) cfg.format = "text";
      payload = cmd_ols(cfg);
    } else if (app.got_subcommand(c_coincide)) {
      if (cfg.format.empty()) cfg.format = "text";
      payload = cmd_coincide(cfg, opt_a->count() > 0, opt_b->count() > 0);
    } else if (app.got_subcommand(c_effective)) {
      if (cfg.format.empty()) cfg.format = "text";
      payload = cmd_effective(cfg);
    } else {
      if (cfg.format.empty()) cfg.format = "csv";
      payload = cmd_plot(cfg, plot_a->count() > 0, plot_b->count() > 0);
    }
    write_output(cfg, payload, out);
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace effradius::cli
