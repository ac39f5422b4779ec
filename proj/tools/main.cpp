// berglab command-line interface: integral means, growth fits, smoothness
// profiles, extremal solves, and the theorem verification battery.
//
// Parameters come from flags or from a single JSON config file; flags
// override the file.  Every output file embeds a metadata header with the
// library version, the hash of the effective configuration, and the
// configuration itself, and is written atomically.  Outputs are byte-stable
// for a fixed configuration and seed.
//
// Exit codes: 0 all checks pass, 1 error or failed check,
// 2 hypothesis violation, 64 malformed usage or config.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "berglab/battery.hpp"
#include "berglab/extremal.hpp"
#include "berglab/growth.hpp"
#include "berglab/means.hpp"
#include "berglab/serialize.hpp"
#include "berglab/version.hpp"

using namespace berglab;

namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(const json& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(cfg.dump())));
  return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

void write_json_report(const std::string& path, const json& cfg, const json& result) {
  json doc;
  doc["meta"] = {{"version", version_string}, {"config_hash", hash_hex(cfg)}, {"config", cfg}};
  doc["result"] = result;
  write_atomic(path, doc.dump(2) + "\n");
}

std::string csv_header(const json& cfg) {
  std::ostringstream os;
  os << "# version=" << version_string << "\n# config_hash=" << hash_hex(cfg) << "\n";
  for (auto it = cfg.begin(); it != cfg.end(); ++it)
    os << "# " << it.key() << "=" << it.value().dump() << "\n";
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

/// Function specs: monomial:N | polepower:G | randpoly:DEG:DECAY:SEED |
/// truncpole:G:DEG | logseries:DEG | powerseries:S:DEG | exp | poly:c0,c1,...
AnalyticFunction parse_function(const std::string& spec, std::uint64_t default_seed) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw parameter_error("empty function spec");
  const std::string& kind = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() < n + 1)
      throw parameter_error("function spec '" + spec + "' needs " + std::to_string(n) +
                            " parameter(s)");
  };
  if (kind == "monomial") {
    need(1);
    return AnalyticFunction::monomial(std::stoi(parts[1]));
  }
  if (kind == "polepower") {
    need(1);
    return AnalyticFunction::pole_power(std::stod(parts[1]));
  }
  if (kind == "randpoly") {
    need(2);
    std::uint64_t seed = parts.size() > 3 ? std::stoull(parts[3]) : default_seed;
    return random_polynomial(std::stoi(parts[1]), std::stod(parts[2]), seed);
  }
  if (kind == "truncpole") {
    need(2);
    return truncate(AnalyticFunction::pole_power(std::stod(parts[1])), std::stoi(parts[2]));
  }
  if (kind == "logseries") {
    need(1);
    return battery::log_series(std::stoi(parts[1]));
  }
  if (kind == "powerseries") {
    need(2);
    double s = std::stod(parts[1]);
    int deg = std::stoi(parts[2]);
    return truncate(AnalyticFunction::custom(
                        [s](int n) { return n == 0 ? cplx(0.0) : cplx(std::pow(double(n), -s)); },
                        deg, "n^-" + parts[1] + "-series"),
                    deg);
  }
  if (kind == "exp") return AnalyticFunction::exponential();
  if (kind == "poly") {
    need(1);
    std::vector<cplx> c;
    for (const auto& tok : split(parts[1], ',')) c.push_back(std::stod(tok));
    return AnalyticFunction::polynomial(std::move(c));
  }
  throw parameter_error("unknown function kind '" + kind + "'");
}

MeanKind parse_kind(const std::string& s) {
  if (s == "circle") return MeanKind::CircleMp;
  if (s == "area") return MeanKind::AreaA;
  if (s == "area-tilde") return MeanKind::AreaATilde;
  if (s == "area-hat") return MeanKind::AreaAHat;
  if (s == "area-hat-tilde") return MeanKind::AreaAHatTilde;
  throw parameter_error("unknown mean kind '" + s + "' (circle, area, area-tilde, area-hat, "
                        "area-hat-tilde)");
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw parameter_error("cannot open config file " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& e) {
    throw parameter_error(std::string("malformed config: ") + e.what());
  }
  return cfg;
}

template <class T>
void merge(const CLI::Option* opt, const json& cfg, const char* key, T& val) {
  if (opt->count() == 0 && cfg.contains(key)) val = cfg.at(key).get<T>();
}

struct CommonArgs {
  std::string config_path;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
};

int run_verify(const std::string& name, const std::string& out_dir, const json& cfg_echo) {
  std::vector<std::string> names;
  if (name == "all")
    names = suite_names();
  else
    names.push_back(name);
  bool all_ok = true;
  std::printf("%-22s %8s %8s  %s\n", "suite", "reports", "passed", "status");
  for (const auto& n : names) {
    SuiteReport suite = run_suite(n);
    int passed = 0;
    for (const auto& r : suite.reports) passed += r.all_satisfied ? 1 : 0;
    std::printf("%-22s %8zu %8d  %s\n", suite.name.c_str(), suite.reports.size(), passed,
                suite.all_satisfied ? "ok" : "FAIL");
    for (const auto& r : suite.reports)
      if (!r.all_satisfied)
        std::printf("    failing: %s\n",
                    r.notes.empty() ? r.theorem_id.c_str() : r.notes.front().c_str());
    all_ok = all_ok && suite.all_satisfied;
    if (!out_dir.empty()) {
      json reports = json::array();
      for (const auto& r : suite.reports) reports.push_back(to_json(r));
      json cfg = cfg_echo;
      cfg["suite"] = suite.name;
      write_json_report(out_dir + "/" + suite.name + ".json", cfg,
                        json{{"all_satisfied", suite.all_satisfied}, {"reports", reports}});
    }
  }
  std::printf("overall: %s\n", all_ok ? "PASS" : "FAIL");
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"berglab: area integral means, Bergman-norm smoothness and extremal problems "
               "on the unit disc"};
  app.require_subcommand(1);

  CommonArgs common;
  app.add_option("--config", common.config_path, "JSON config file (flags override it)");
  app.add_option("--out", common.out, "output file (or directory for verify)");
  app.add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", common.seed, "seed for randomized function specs (default 0)");

  // means
  auto* cm = app.add_subcommand("means", "integral means along radii");
  cm->fallthrough();
  std::string m_fn = "monomial:1", m_kind = "circle";
  double m_p = 2.0, m_alpha = 0.0;
  std::vector<double> m_r;
  auto* om_fn = cm->add_option("--fn", m_fn, "function spec");
  auto* om_kind = cm->add_option("--kind", m_kind, "mean kind");
  auto* om_p = cm->add_option("--p", m_p, "exponent p > 0");
  auto* om_alpha = cm->add_option("--alpha", m_alpha, "weight exponent alpha > -1");
  auto* om_r = cm->add_option("--r", m_r, "radii (default: ladder 1-2^-j, j=3..12)");

  // growth
  auto* cg = app.add_subcommand("growth", "fitted growth exponent of a mean");
  cg->fallthrough();
  std::string g_fn = "monomial:1", g_kind = "circle";
  double g_p = 2.0, g_alpha = 0.0;
  auto* og_fn = cg->add_option("--fn", g_fn, "function spec");
  auto* og_kind = cg->add_option("--kind", g_kind, "mean kind");
  auto* og_p = cg->add_option("--p", g_p, "exponent");
  auto* og_alpha = cg->add_option("--alpha", g_alpha, "weight exponent");

  // holder
  auto* ch = app.add_subcommand("holder", "second-difference smoothness profile");
  ch->fallthrough();
  std::string h_fn = "monomial:1";
  double h_p = 2.0, h_alpha = 0.0, h_beta = 1.0;
  auto* oh_fn = ch->add_option("--fn", h_fn, "function spec");
  auto* oh_p = ch->add_option("--p", h_p, "exponent");
  auto* oh_alpha = ch->add_option("--alpha", h_alpha, "weight exponent");
  auto* oh_beta = ch->add_option("--beta", h_beta, "smoothness order in (0,2]");

  // extremal
  auto* ce = app.add_subcommand("extremal", "solve the unit-sphere extremal problem");
  ce->fallthrough();
  std::string e_k = "monomial:1", e_trace;
  double e_p = 2.0, e_alpha = 0.0, e_tol = 1e-8;
  int e_N = 16, e_iters = 4000;
  auto* oe_k = ce->add_option("--k", e_k, "kernel spec");
  auto* oe_p = ce->add_option("--p", e_p, "exponent p > 1");
  auto* oe_alpha = ce->add_option("--alpha", e_alpha, "weight exponent");
  auto* oe_N = ce->add_option("--N", e_N, "truncation degree");
  auto* oe_tol = ce->add_option("--tol", e_tol, "stationarity tolerance");
  auto* oe_iters = ce->add_option("--max-iters", e_iters, "iteration cap");
  ce->add_option("--trace-out", e_trace, "CSV file for the solver trace");

  // verify
  auto* cv = app.add_subcommand("verify", "run theorem verifiers (name or 'all')");
  cv->fallthrough();
  std::string v_name = "all";
  cv->add_option("name", v_name, "suite name, 'all', or 'list'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    json cfg = load_config(common.config_path);
    if (cfg.contains("seed") && common.seed == 0) common.seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("output") && common.out.empty()) common.out = cfg["output"];
    if (cfg.contains("format") && common.format == "csv")
      common.format = cfg["format"].get<std::string>();

    if (cm->parsed()) {
      merge(om_fn, cfg, "fn", m_fn);
      merge(om_kind, cfg, "kind", m_kind);
      merge(om_p, cfg, "p", m_p);
      merge(om_alpha, cfg, "alpha", m_alpha);
      merge(om_r, cfg, "r", m_r);
      auto f = parse_function(m_fn, common.seed);
      MeanKind kind = parse_kind(m_kind);
      std::vector<double> radii = m_r.empty() ? default_radii() : m_r;
      json cfg_echo = {{"command", "means"}, {"fn", m_fn},       {"kind", m_kind},
                       {"p", m_p},           {"alpha", m_alpha}, {"r", radii},
                       {"seed", common.seed}};
      std::vector<double> values;
      for (double r : radii) values.push_back(mean(kind, f, m_p, m_alpha, r));
      for (std::size_t i = 0; i < radii.size(); ++i)
        std::printf("%.17g %.17g\n", radii[i], values[i]);
      if (!common.out.empty()) {
        if (common.format == "json") {
          write_json_report(common.out, cfg_echo, json{{"r", radii}, {"value", values}});
        } else {
          std::ostringstream os;
          os << csv_header(cfg_echo) << "r,value\n";
          for (std::size_t i = 0; i < radii.size(); ++i) {
            char line[80];
            std::snprintf(line, sizeof line, "%.17g,%.17g\n", radii[i], values[i]);
            os << line;
          }
          write_atomic(common.out, os.str());
        }
      }
      return 0;
    }

    if (cg->parsed()) {
      merge(og_fn, cfg, "fn", g_fn);
      merge(og_kind, cfg, "kind", g_kind);
      merge(og_p, cfg, "p", g_p);
      merge(og_alpha, cfg, "alpha", g_alpha);
      auto f = parse_function(g_fn, common.seed);
      auto rep = fit_growth_exponent(f, parse_kind(g_kind), g_p, g_alpha);
      json cfg_echo = {{"command", "growth"}, {"fn", g_fn},       {"kind", g_kind},
                       {"p", g_p},            {"alpha", g_alpha}, {"seed", common.seed}};
      std::printf("fitted_slope %.12g\nfit_constant %.12g\nmax_rel_residual %.3g\nlog_flag %d\n",
                  rep.fitted_slope, rep.fit_constant, rep.max_rel_residual, int(rep.log_flag));
      if (!common.out.empty()) write_json_report(common.out, cfg_echo, to_json(rep));
      return 0;
    }

    if (ch->parsed()) {
      merge(oh_fn, cfg, "fn", h_fn);
      merge(oh_p, cfg, "p", h_p);
      merge(oh_alpha, cfg, "alpha", h_alpha);
      merge(oh_beta, cfg, "beta", h_beta);
      auto f = parse_function(h_fn, common.seed);
      auto est = lambda_star_seminorm(f, h_p, h_alpha, h_beta);
      json cfg_echo = {{"command", "holder"}, {"fn", h_fn},       {"p", h_p},
                       {"alpha", h_alpha},    {"beta", h_beta},   {"seed", common.seed}};
      std::printf("constant_estimate %.12g (grid lower bound)\n", est.constant_estimate);
      if (!common.out.empty()) {
        if (common.format == "json") {
          write_json_report(common.out, cfg_echo, to_json(est));
        } else {
          std::ostringstream os;
          os << csv_header(cfg_echo) << "t,value\n";
          for (std::size_t i = 0; i < est.t_grid.size(); ++i) {
            char line[80];
            std::snprintf(line, sizeof line, "%.17g,%.17g\n", est.t_grid[i],
                          est.per_t_values[i]);
            os << line;
          }
          write_atomic(common.out, os.str());
        }
      }
      return 0;
    }

    if (ce->parsed()) {
      merge(oe_k, cfg, "k", e_k);
      merge(oe_p, cfg, "p", e_p);
      merge(oe_alpha, cfg, "alpha", e_alpha);
      merge(oe_N, cfg, "N", e_N);
      merge(oe_tol, cfg, "tol", e_tol);
      merge(oe_iters, cfg, "max_iters", e_iters);
      ExtremalProblem prob;
      prob.k = parse_function(e_k, common.seed);
      prob.p = e_p;
      prob.alpha = e_alpha;
      prob.degree = e_N;
      prob.tol = e_tol;
      prob.max_iters = e_iters;
      auto sol = solve_extremal(prob);
      json cfg_echo = {{"command", "extremal"}, {"k", e_k},   {"p", e_p},
                       {"alpha", e_alpha},      {"N", e_N},   {"tol", e_tol},
                       {"max_iters", e_iters},  {"seed", common.seed}};
      std::printf("value %.12g\nresidual %.3g\niterations %d\nconverged %d\n", sol.value,
                  sol.stationarity_residual, sol.iterations, int(sol.converged));
      if (!common.out.empty()) write_json_report(common.out, cfg_echo, to_json(sol));
      if (!e_trace.empty()) {
        std::ostringstream os;
        os << csv_header(cfg_echo) << "iteration,value,residual\n";
        for (const auto& t : sol.trace) {
          char line[96];
          std::snprintf(line, sizeof line, "%d,%.17g,%.17g\n", t.iteration, t.value, t.residual);
          os << line;
        }
        write_atomic(e_trace, os.str());
      }
      return sol.converged ? 0 : 1;
    }

    if (cv->parsed()) {
      if (cfg.contains("verify") && v_name == "all") v_name = cfg["verify"].get<std::string>();
      if (v_name == "list") {
        for (const auto& n : suite_names()) std::printf("%s\n", n.c_str());
        return 0;
      }
      json cfg_echo = {{"command", "verify"}, {"name", v_name}, {"seed", common.seed}};
      return run_verify(v_name, common.out, cfg_echo);
    }
  } catch (const hypothesis_violation& e) {
    std::fprintf(stderr, "hypothesis violation: %s\n", e.what());
    return 2;
  } catch (const parameter_error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 64;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 64;
}
