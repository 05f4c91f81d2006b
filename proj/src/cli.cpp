#include "vlcrange/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vlcrange/bounds.hpp"
#include "vlcrange/decimal.hpp"
#include "vlcrange/error.hpp"
#include "vlcrange/mle.hpp"
#include "vlcrange/noise.hpp"
#include "vlcrange/serialize.hpp"
#include "vlcrange/sweep.hpp"
#include "vlcrange/sysparams.hpp"

#include <unistd.h>

namespace vlcrange {

namespace {

/// Failure in flag/config handling; maps to kExitValidation.
struct InvocationError : Error {
  using Error::Error;
};

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output = "json";
  std::string out_path;
  int verbosity = 0;
};

struct GeometryOptions {
  double h = 0.0;
  double ell = 0.0;
  std::optional<double> m;
};

struct SweepOptions {
  std::string repro;
  std::string quantity;
  std::string ell_range;
  std::string h_range;
  std::vector<double> p_t;
  std::vector<double> m;
  std::string reduce = "none";
  unsigned threads = 0;
};

struct MleOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  std::optional<double> d_lo;
  std::optional<double> d_hi;
  unsigned threads = 0;
};

struct MoptOptions {
  double m_lo = 1.0;
  double m_hi = 200.0;
  double tol = 1e-6;
};

using Provenance = std::map<std::string, std::string>;

void add_common(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--config", o.config_path, "JSON parameter file (unit-suffixed keys)");
  cmd.add_option("--set", o.overrides, "Parameter override KEY=VALUE, repeatable; wins over --config")
      ->take_all()
      ->allow_extra_args(false);
  cmd.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd.add_option("--out", o.out_path, "Write output to PATH atomically instead of stdout");
  cmd.add_flag("-v,--verbose", o.verbosity, "Log progress to stderr (repeat for more)");
}

void add_geometry(CLI::App& cmd, GeometryOptions& o, bool with_m) {
  cmd.add_option("--h", o.h, "Vertical LED-receiver distance [m]")->required();
  cmd.add_option("--ell", o.ell, "Horizontal LED-receiver distance [m]")->capture_default_str();
  if (with_m) cmd.add_option("--m", o.m, "Lambertian order (overrides parameters)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvocationError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SystemParameters load_parameters(const CommonOptions& o, Provenance* provenance,
                                 std::ostream& err) {
  SystemParameters p = default_parameters();
  if (provenance) {
    for (const auto& f : parameter_schema()) (*provenance)[std::string(f.key)] = "default";
  }
  if (!o.config_path.empty()) {
    const std::string doc = read_file(o.config_path);
    p = parse_parameters(doc);
    if (provenance) {
      const auto parsed = nlohmann::json::parse(doc);
      for (const auto& item : parsed.items()) (*provenance)[item.key()] = "file";
    }
    if (o.verbosity > 0) err << "vlcrange: parameters from " << o.config_path << "\n";
  }
  for (const auto& item : o.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvocationError("--set expects KEY=VALUE, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    apply_override(p, key, item.substr(eq + 1));
    if (provenance) (*provenance)[key] = "override";
  }
  validate(p);
  return p;
}

AxisRange parse_range(const std::string& flag, const std::string& text) {
  // min:max:steps
  const auto fail = [&]() -> AxisRange {
    throw InvocationError(flag + ": expected MIN:MAX:STEPS, got '" + text + "'");
  };
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) return fail();
  AxisRange r;
  try {
    r.min = to_double(parse_decimal(text.substr(0, c1)));
    r.max = to_double(parse_decimal(text.substr(c1 + 1, c2 - c1 - 1)));
  } catch (const Error&) {
    return fail();
  }
  const std::string steps = text.substr(c2 + 1);
  const auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), r.steps);
  if (ec != std::errc{} || ptr != steps.data() + steps.size()) return fail();
  return r;
}

void emit(const CommonOptions& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    out.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(o.out_path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + tmp.string() + "' for writing");
    f << text;
    f.flush();
    if (!f) throw Error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot move output into '" + o.out_path + "': " + ec.message());
  }
}

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string out;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out += ',';
    first = false;
    out += c;
  }
  return out + "\n";
}

std::string f(double v) { return format_double(v); }

// ---------------------------------------------------------------------------
// Subcommands. Each returns the rendered document; flag/config problems
// throw InvocationError or a validation-class library error.

std::string cmd_params(const CommonOptions& o, std::ostream& err) {
  Provenance provenance;
  const SystemParameters p = load_parameters(o, &provenance, err);
  if (o.output == "csv") {
    std::string out = "key,value,unit,field,si_value,si_unit,source\n";
    for (const auto& s : parameter_schema()) {
      out += csv_line({std::string(s.key), external_value_text(p, s.key), std::string(s.unit),
                       std::string(s.field), f(si_value(p, s.key)), std::string(s.si_unit),
                       provenance[std::string(s.key)]});
    }
    return out;
  }
  JsonWriter w;
  w.begin_object().key("parameters").begin_array();
  for (const auto& s : parameter_schema()) {
    w.begin_object()
        .field("key", s.key)
        .key("value")
        .number_literal(external_value_text(p, s.key))
        .field("unit", s.unit)
        .field("field", s.field)
        .field("si_value", si_value(p, s.key))
        .field("si_unit", s.si_unit)
        .field("source", provenance[std::string(s.key)])
        .end_object();
  }
  w.end_array().end_object();
  return w.str();
}

struct Prepared {
  SystemParameters p;
  Geometry g;
};

Prepared prepare_point(const CommonOptions& o, const GeometryOptions& go, std::ostream& err) {
  SystemParameters p = load_parameters(o, nullptr, err);
  if (go.m) {
    p.m = *go.m;
    validate(p);
  }
  return {p, Geometry(go.h, go.ell)};
}

std::string cmd_noise(const Prepared& in, const CommonOptions& o) {
  const double power = received_power_total(in.p, in.g);
  const NoiseBreakdown n = total_noise(in.p, in.g);
  if (o.output == "csv") {
    return "h_m,ell_m,d_m,received_power_W,var_thermal,var_background,var_dark,var_shot,var_floor,"
           "var_total\n" +
           csv_line({f(in.g.h()), f(in.g.ell()), f(in.g.d()), f(power), f(n.var_thermal),
                     f(n.var_background), f(n.var_dark), f(n.var_shot), f(n.var_floor),
                     f(n.var_total)});
  }
  JsonWriter w;
  w.begin_object().key("geometry");
  write_json(w, in.g);
  w.field("received_power_W", power).key("noise");
  write_json(w, n);
  w.end_object();
  return w.str();
}

std::string cmd_bound(const Prepared& in, const CommonOptions& o) {
  const BoundResult b = bound_at(in.p, in.g);
  if (o.output == "csv") {
    return "h_m,ell_m,d_m,fisher,crlb_sqrt,crlb_sqrt_legacy,ratio,var_floor,var_shot,var_total\n" +
           csv_line({f(in.g.h()), f(in.g.ell()), f(in.g.d()), f(b.fisher), f(b.crlb_sqrt),
                     f(b.crlb_sqrt_legacy), f(b.ratio), f(b.noise.var_floor), f(b.noise.var_shot),
                     f(b.noise.var_total)});
  }
  JsonWriter w;
  w.begin_object().key("geometry");
  write_json(w, in.g);
  w.key("bound");
  write_json(w, b);
  w.end_object();
  return w.str();
}

SweepSpec build_sweep_spec(const SystemParameters& p, const SweepOptions& so) {
  SweepSpec spec;
  if (!so.repro.empty()) {
    spec = repro_spec(so.repro);
  } else {
    spec.ell_range = {1.0, 2.0, 11};
    spec.h_range = {1.0, 3.0, 11};
    spec.p_t_list = {p.P_t};
    spec.m_list = {p.m};
    spec.quantity = SweepQuantity::CrlbSqrt;
  }
  if (!so.quantity.empty()) spec.quantity = parse_quantity(so.quantity);
  if (!so.ell_range.empty()) spec.ell_range = parse_range("--ell-range", so.ell_range);
  if (!so.h_range.empty()) spec.h_range = parse_range("--h-range", so.h_range);
  if (!so.p_t.empty()) spec.p_t_list = so.p_t;
  if (!so.m.empty()) spec.m_list = so.m;
  validate(spec);
  return spec;
}

std::string cmd_sweep(const SystemParameters& p, const SweepSpec& spec, const SweepOptions& so,
                      const CommonOptions& o) {
  const SweepResult r = run_sweep(p, spec, so.threads);
  if (so.reduce == "mean-ell") {
    const EllMean mean = mean_over_ell(r);
    return o.output == "csv" ? ell_mean_to_csv(mean) : ell_mean_to_json(mean, r);
  }
  return o.output == "csv" ? sweep_to_csv(r) : sweep_to_json(r);
}

std::string cmd_mle(const Prepared& in, const MleOptions& mo, const CommonOptions& o) {
  SearchInterval search = default_search_interval(in.g.h());
  if (mo.d_lo) search.lo = *mo.d_lo;
  if (mo.d_hi) search.hi = *mo.d_hi;
  const McReport r = run_monte_carlo(in.p, in.g, mo.trials, mo.seed, search, mo.tol, mo.threads);
  if (o.output == "csv") {
    return "trials,seed,true_d,mean_estimate,bias,rmse,crlb_sqrt_ref,efficiency,failures,search_lo,"
           "search_hi,tol\n" +
           csv_line({std::to_string(r.trials), std::to_string(r.seed), f(r.true_d),
                     f(r.mean_estimate), f(r.bias), f(r.rmse), f(r.crlb_sqrt_ref), f(r.efficiency),
                     std::to_string(r.failures), f(r.search.lo), f(r.search.hi), f(r.tol)});
  }
  JsonWriter w;
  w.begin_object().key("geometry");
  write_json(w, in.g);
  w.key("report");
  write_json(w, r);
  w.end_object();
  return w.str();
}

std::string cmd_mopt(const Prepared& in, const MoptOptions& mo, const CommonOptions& o) {
  const MOptResult r = find_m_opt(in.p, in.g, mo.m_lo, mo.m_hi, mo.tol);
  const double phi = in.g.angle();
  const double approx = m_opt_approximation(phi);
  const double deviation = (approx - r.m_opt) / r.m_opt;
  if (o.output == "csv") {
    return "h_m,ell_m,d_m,m_opt,crlb_sqrt,at_boundary,m_lo,m_hi,tol,phi_rad,m_opt_approx,"
           "relative_deviation\n" +
           csv_line({f(in.g.h()), f(in.g.ell()), f(in.g.d()), f(r.m_opt), f(r.crlb_sqrt),
                     r.at_boundary ? "true" : "false", f(mo.m_lo), f(mo.m_hi), f(mo.tol), f(phi),
                     f(approx), f(deviation)});
  }
  JsonWriter w;
  w.begin_object().key("geometry");
  write_json(w, in.g);
  w.field("m_opt", r.m_opt).field("crlb_sqrt", r.crlb_sqrt).field("at_boundary", r.at_boundary);
  w.key("m_range").begin_array().value(mo.m_lo).value(mo.m_hi).end_array();
  w.field("tol", mo.tol);
  w.key("approximation")
      .begin_object()
      .field("phi_rad", phi)
      .field("m_opt", approx)
      .field("relative_deviation", deviation)
      .end_object();
  w.end_object();
  return w.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ranging accuracy limits for RSS-based visible light positioning", "vlcrange"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  CommonOptions common;
  GeometryOptions geo;
  SweepOptions sweep_opts;
  MleOptions mle_opts;
  MoptOptions mopt_opts;

  auto* params = app.add_subcommand("params", "Print effective parameters with units and source");
  add_common(*params, common);

  auto* noise = app.add_subcommand("noise", "Noise variance breakdown at one geometry");
  add_common(*noise, common);
  add_geometry(*noise, geo, true);

  auto* bound = app.add_subcommand("bound", "Fisher information and ranging bounds at one geometry");
  add_common(*bound, common);
  add_geometry(*bound, geo, true);

  auto* sweep = app.add_subcommand("sweep", "Evaluate a quantity on an (m, P_t, h, ell) grid");
  add_common(*sweep, common);
  sweep->add_option("--repro", sweep_opts.repro, "Canonical figure grid")
      ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5"}));
  sweep->add_option("--quantity", sweep_opts.quantity,
                    "noise_total | crlb_sqrt | crlb_sqrt_legacy | ratio | fisher");
  sweep->add_option("--ell-range", sweep_opts.ell_range, "Horizontal distance MIN:MAX:STEPS [m]");
  sweep->add_option("--h-range", sweep_opts.h_range, "Vertical distance MIN:MAX:STEPS [m]");
  sweep->add_option("--pt", sweep_opts.p_t, "Comma-separated transmit powers [W]")->delimiter(',');
  sweep->add_option("--m", sweep_opts.m, "Comma-separated Lambertian orders")->delimiter(',');
  sweep->add_option("--reduce", sweep_opts.reduce, "Optional reduction of the ell axis")
      ->check(CLI::IsMember({"none", "mean-ell"}));
  sweep->add_option("--threads", sweep_opts.threads, "Worker threads (0 = all cores)");

  auto* mle = app.add_subcommand("mle", "Monte Carlo of the maximum-likelihood range estimator");
  add_common(*mle, common);
  add_geometry(*mle, geo, true);
  mle->add_option("--trials", mle_opts.trials, "Number of trials (>= 100)")->capture_default_str();
  mle->add_option("--seed", mle_opts.seed, "Random seed")->required();
  mle->add_option("--tol", mle_opts.tol, "Estimator tolerance [m]")->capture_default_str();
  mle->add_option("--d-lo", mle_opts.d_lo, "Search interval lower end [m] (default h)");
  mle->add_option("--d-hi", mle_opts.d_hi, "Search interval upper end [m] (default 10 h)");
  mle->add_option("--threads", mle_opts.threads, "Worker threads (0 = all cores)");

  auto* mopt = app.add_subcommand("mopt", "Lambertian order that minimizes the ranging bound");
  add_common(*mopt, common);
  add_geometry(*mopt, geo, false);
  mopt->add_option("--m-lo", mopt_opts.m_lo, "Lower end of the m range")->capture_default_str();
  mopt->add_option("--m-hi", mopt_opts.m_hi, "Upper end of the m range")->capture_default_str();
  mopt->add_option("--tol", mopt_opts.tol, "Tolerance on m")->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("vlcrange");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  // Phase 1: flags, config and geometry. Phase 2: computation and output.
  std::string document;
  std::optional<Prepared> point;
  SweepSpec spec;
  SystemParameters sweep_params;
  try {
    if (*noise || *bound || *mle || *mopt) point = prepare_point(common, geo, err);
    if (*sweep) {
      sweep_params = load_parameters(common, nullptr, err);
      spec = build_sweep_spec(sweep_params, sweep_opts);
    }
    if (*params) document = cmd_params(common, err);
  } catch (const std::exception& e) {
    err << "vlcrange: error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (*noise) document = cmd_noise(*point, common);
    if (*bound) document = cmd_bound(*point, common);
    if (*sweep) document = cmd_sweep(sweep_params, spec, sweep_opts, common);
    if (*mle) document = cmd_mle(*point, mle_opts, common);
    if (*mopt) document = cmd_mopt(*point, mopt_opts, common);
    emit(common, document, out);
  } catch (const std::exception& e) {
    err << "vlcrange: error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace vlcrange
