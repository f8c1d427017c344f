#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "repcur/report.hpp"
#include "repcur/suite.hpp"

namespace repcur::cli {

/// Invalid command line. what() is the one-line diagnostic.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// --help was given; text holds the help output.
struct HelpRequested {
  std::string text;
};

inline const std::vector<std::string>& check_commands() {
  static const std::vector<std::string> c = {
      "ad-invariance", "commutant",      "casimir",          "schur-weyl",         "span",
      "irreducibility", "cycle-generation", "eval-irreducibility", "all"};
  return c;
}

struct RunConfig {
  std::string command;
  Family family = Family::GL;
  size_t n = 2;
  std::vector<Weight> weights;
  std::string weights_text;
  std::vector<Rat> points;
  size_t k = 2;
  bool k_given = false;
  std::optional<Permutation> sigma;
  std::string sigma_text;
  std::optional<std::pair<size_t, size_t>> tau;
  std::optional<size_t> degree_cap;  // nullopt = auto (d - 1)
  std::optional<size_t> max_tensor_degree;
  std::vector<Poly> polys;
  std::optional<Poly> poly_p, poly_q;
  std::string output_path;
  std::uint64_t seed = 1;
  std::string profile = "desk";
  bool expect_fail = false;

  size_t factor_count() const { return points.size(); }
};

namespace detail {

inline long parse_long(const std::string& tok, const std::string& what) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (tok.empty() || pos != tok.size()) throw UsageError("malformed " + what + ": '" + tok + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

inline std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

inline std::vector<Rat> parse_points(const std::string& text) {
  try {
    return parse_rational_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline Poly parse_poly_arg(const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// "r,s" or "(r s)".
inline std::pair<size_t, size_t> parse_tau(const std::string& text, size_t k) {
  std::string t = trim(text);
  size_t r = 0, s = 0;
  if (!t.empty() && t.front() == '(') {
    Permutation p(std::vector<size_t>{});
    try {
      p = parse_cycles(t, k);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::vector<size_t> moved;
    for (size_t i = 1; i <= k; ++i)
      if (p(i) != i) moved.push_back(i);
    if (moved.size() != 2) throw UsageError("not a transposition: '" + text + "'");
    r = moved[0];
    s = moved[1];
  } else {
    auto parts = split(t, ',');
    if (parts.size() != 2) throw UsageError("malformed transposition: '" + text + "'");
    r = static_cast<size_t>(parse_long(trim(parts[0]), "transposition"));
    s = static_cast<size_t>(parse_long(trim(parts[1]), "transposition"));
  }
  if (r > s) std::swap(r, s);
  if (r < 1 || s > k || r == s)
    throw UsageError("transposition '" + text + "' is not a transposition of 1.." +
                     std::to_string(k));
  return {r, s};
}

}  // namespace detail

/// Parses and validates a command line. Throws UsageError with a one-line
/// diagnostic, or HelpRequested.
inline RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Exact checks for invariant currents of classical Lie algebras", "repcur"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "run a check and write a report");
  std::string command, family = "gl", weights, points, sigma, tau, degree_cap = "auto", polys,
                       poly_p, poly_q, output, profile = "desk";
  long n = 2, k = -1, d = -1, max_tensor = -1;
  std::uint64_t seed = 1;
  bool expect_fail = false;
  verify->add_option("check", command, "check to run")
      ->required()
      ->check(CLI::IsMember(check_commands()));
  verify->add_option("--family", family, "gl | sp | so");
  verify->add_option("--n", n, "rank parameter: gl(n), sp(2n), so(n)");
  verify->add_option("--k", k, "tensor degree, or number of factors for schur-weyl");
  verify->add_option("--d", d, "number of standard factors when --weights is absent");
  verify->add_option("--weights", weights, "highest weights, e.g. \"2,0;1,0\"");
  verify->add_option("--points", points, "evaluation points, e.g. \"0,1,3/2\"");
  verify->add_option("--sigma", sigma, "permutation in cycle notation, e.g. \"(1 2)(3)\"");
  verify->add_option("--tau", tau, "transposition \"r,s\" or \"(r s)\"");
  verify->add_option("--degree-cap", degree_cap, "auto (= d-1) or a non-negative integer");
  verify->add_option("--max-tensor-degree", max_tensor, "largest invariant tensor degree");
  verify->add_option("--polys", polys, "coefficient lists, lowest first, separated by ';'");
  verify->add_option("--poly-p", poly_p, "P for the casimir check");
  verify->add_option("--poly-q", poly_q, "Q for the casimir check");
  verify->add_option("--output", output, "JSON report path, '-' for stdout");
  verify->add_option("--seed", seed, "seed for randomized inputs");
  verify->add_option("--profile", profile, "desk | smoke (verify all)")
      ->check(CLI::IsMember({"desk", "smoke"}));
  verify->add_flag("--expect-fail", expect_fail, "invert the status of every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg;
  cfg.command = command;
  cfg.seed = seed;
  cfg.profile = profile;
  cfg.expect_fail = expect_fail;
  cfg.output_path = output;
  if (command == "all") return cfg;

  try {
    cfg.family = parse_family(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (n < 1 || (cfg.family == Family::SO && n < 2))
    throw UsageError("unsupported n for " + family_name(cfg.family) + ": '" + std::to_string(n) + "'");
  cfg.n = static_cast<size_t>(n);
  if (k >= 0) {
    cfg.k = static_cast<size_t>(k);
    cfg.k_given = true;
  }

  if (command == "schur-weyl" && cfg.family != Family::GL)
    throw UsageError("schur-weyl needs --family gl");

  // Weights.
  if (!weights.empty()) {
    if (cfg.family == Family::SO)
      throw UsageError("weights are not supported for so; use --d standard factors");
    cfg.weights_text = weights;
    auto g = build_lie_algebra(cfg.family, cfg.n);
    for (const auto& tok : detail::split(weights, ';')) {
      Weight w;
      for (const auto& c : detail::split(detail::trim(tok), ','))
        w.coords.push_back(detail::parse_long(detail::trim(c), "weight"));
      if (w.coords.size() != cfg.n)
        throw UsageError("weight '" + tok + "' needs " + std::to_string(cfg.n) + " coordinates");
      if (!is_dominant(*g, w)) throw UsageError("weight not dominant: '" + tok + "'");
      if (cfg.family == Family::GL && w.coords.back() < 0)
        throw UsageError("weight '" + tok + "' is not polynomial (negative entry)");
      cfg.weights.push_back(std::move(w));
    }
  }

  // Factor count and points.
  if (!points.empty()) cfg.points = detail::parse_points(points);
  size_t factors = 0;
  if (!cfg.weights.empty()) factors = cfg.weights.size();
  else if (d >= 1) factors = static_cast<size_t>(d);
  else if (command == "schur-weyl" && cfg.k_given) factors = cfg.k;
  else if (!cfg.points.empty()) factors = cfg.points.size();
  else factors = 2;
  if (d == 0) throw UsageError("--d must be positive");
  if (cfg.points.empty()) cfg.points = integer_points(factors);
  if (cfg.points.size() != factors)
    throw UsageError(std::to_string(cfg.points.size()) + " points for " +
                     std::to_string(factors) + " factors: '" + points + "'");
  if (command == "schur-weyl") cfg.k = factors;

  static const std::set<std::string> need_distinct = {"casimir", "schur-weyl", "span",
                                                      "cycle-generation"};
  if (need_distinct.count(command) && !pairwise_distinct(cfg.points))
    throw UsageError("points must be pairwise distinct: '" +
                     (points.empty() ? std::string("default") : points) + "'");

  if ((command == "casimir" || command == "irreducibility") && cfg.family == Family::SO)
    throw UsageError(command + " needs --family gl or sp");
  if (command == "casimir" && factors != 2)
    throw UsageError("casimir needs exactly two factors");
  if (command == "cycle-generation" && cfg.family != Family::GL)
    throw UsageError("cycle-generation needs --family gl");

  if (!sigma.empty()) {
    size_t letters = command == "schur-weyl" || cfg.family == Family::GL ? cfg.k : 2 * cfg.k;
    try {
      cfg.sigma = parse_cycles(sigma, letters);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    cfg.sigma_text = sigma;
  }
  if (!tau.empty()) cfg.tau = detail::parse_tau(tau, cfg.k);
  if (command == "schur-weyl" && !tau.empty() && !sigma.empty())
    throw UsageError("give either --tau or --sigma");
  if (command == "schur-weyl" && cfg.sigma) cfg.tau = detail::parse_tau(sigma, cfg.k);

  if (degree_cap != "auto") {
    long c = detail::parse_long(degree_cap, "degree cap");
    if (c < 0) throw UsageError("malformed degree cap: '" + degree_cap + "'");
    cfg.degree_cap = static_cast<size_t>(c);
  }
  if (max_tensor >= 0) cfg.max_tensor_degree = static_cast<size_t>(max_tensor);
  if (!polys.empty())
    for (const auto& tok : detail::split(polys, ';')) cfg.polys.push_back(detail::parse_poly_arg(tok));
  if (!poly_p.empty()) cfg.poly_p = detail::parse_poly_arg(poly_p);
  if (!poly_q.empty()) cfg.poly_q = detail::parse_poly_arg(poly_q);
  return cfg;
}

inline EvaluationModule config_module(const RunConfig& cfg) {
  auto g = build_lie_algebra(cfg.family, cfg.n);
  if (cfg.weights.empty()) return standard_evaluation_module(g, cfg.points);
  return weighted_evaluation_module(g, cfg.weights, cfg.points);
}

inline size_t resolved_cap(const RunConfig& cfg, const EvaluationModule& em) {
  return cfg.degree_cap.value_or(em.auto_degree_cap());
}

inline std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> c;
  c.emplace_back("command", cfg.command);
  if (cfg.command == "all") {
    c.emplace_back("profile", cfg.profile);
  } else {
    c.emplace_back("family", family_name(cfg.family));
    c.emplace_back("n", std::to_string(cfg.n));
    if (!cfg.weights_text.empty()) c.emplace_back("weights", cfg.weights_text);
    c.emplace_back("points", repcur::detail::join_points(cfg.points));
    c.emplace_back("k", std::to_string(cfg.k));
    if (cfg.sigma) c.emplace_back("sigma", cfg.sigma->str());
    if (cfg.tau)
      c.emplace_back("tau", std::to_string(cfg.tau->first) + "," + std::to_string(cfg.tau->second));
    if (cfg.degree_cap) {
      c.emplace_back("degree_cap", std::to_string(*cfg.degree_cap));
    } else {
      c.emplace_back("degree_cap", "auto");
      c.emplace_back("degree_cap_note",
                     "auto = d-1: at d distinct points every value pattern is interpolated by a "
                     "polynomial of degree <= d-1, so higher degrees add no new operators");
    }
    if (cfg.max_tensor_degree)
      c.emplace_back("max_tensor_degree", std::to_string(*cfg.max_tensor_degree));
  }
  c.emplace_back("seed", std::to_string(cfg.seed));
  c.emplace_back("expect_fail", cfg.expect_fail ? "true" : "false");
  return c;
}

/// Runs the requested checks; does not write anything.
inline std::vector<CheckReport> run_checks(const RunConfig& cfg) {
  std::vector<CheckReport> out;
  Rng rng(cfg.seed);
  const std::string& cmd = cfg.command;
  if (cmd == "all") {
    out = run_profile(cfg.profile, cfg.seed);
  } else if (cmd == "ad-invariance") {
    auto g = build_lie_algebra(cfg.family, cfg.n);
    if (cfg.sigma) {
      out.push_back(check_ad_invariance(family_tensor(*g, *cfg.sigma), *g,
                                        family_tensor_name(cfg.family) + cfg.sigma->str()));
    } else {
      out.push_back(check_ad_invariance(casimir_tensor(*g), *g, "Omega"));
      for (const auto& s : family_permutations(cfg.family, cfg.k))
        out.push_back(
            check_ad_invariance(family_tensor(*g, s), *g, family_tensor_name(cfg.family) + s.str()));
    }
  } else if (cmd == "commutant") {
    auto em = config_module(cfg);
    const auto& g = em.spec();
    std::vector<NamedInvariant> thetas;
    if (cfg.sigma) {
      thetas.push_back({family_tensor_name(cfg.family) + cfg.sigma->str(), family_tensor(g, *cfg.sigma)});
    } else {
      if (cfg.k == 2) thetas.push_back({"Omega", casimir_tensor(g)});
      for (const auto& s : family_permutations(cfg.family, cfg.k))
        thetas.push_back({family_tensor_name(cfg.family) + s.str(), family_tensor(g, s)});
    }
    for (const auto& t : thetas) {
      std::vector<Poly> polys = cfg.polys;
      if (polys.empty())
        for (size_t j = 0; j < t.tensor.degree(); ++j) polys.push_back(rng.poly(2));
      if (polys.size() != t.tensor.degree())
        throw UsageError("--polys gives " + std::to_string(polys.size()) + " polynomials for a degree-" +
                         std::to_string(t.tensor.degree()) + " tensor");
      out.push_back(check_commutant(t.tensor, polys, em, t.label));
    }
  } else if (cmd == "casimir") {
    auto em = config_module(cfg);
    Poly p = cfg.poly_p ? *cfg.poly_p : rng.poly(3);
    Poly q = cfg.poly_q ? *cfg.poly_q : rng.poly(3);
    out.push_back(check_casimir_formula(em, p, q));
  } else if (cmd == "schur-weyl") {
    if (cfg.tau) {
      out.push_back(check_schur_weyl(cfg.tau->first, cfg.tau->second, cfg.n, cfg.points));
    } else {
      for (size_t r = 1; r <= cfg.k; ++r)
        for (size_t s = r + 1; s <= cfg.k; ++s)
          out.push_back(check_schur_weyl(r, s, cfg.n, cfg.points));
      if (cfg.k >= 2) out.push_back(check_schur_weyl_products(cfg.n, cfg.points));
    }
  } else if (cmd == "span") {
    auto em = config_module(cfg);
    out.push_back(check_span_surjectivity(em, resolved_cap(cfg, em),
                                          cfg.max_tensor_degree.value_or(default_max_tensor_degree(em))));
  } else if (cmd == "irreducibility") {
    auto em = config_module(cfg);
    out.push_back(check_isotypic_irreducibility(
        em, resolved_cap(cfg, em), cfg.max_tensor_degree.value_or(default_max_tensor_degree(em))));
  } else if (cmd == "cycle-generation") {
    auto em = config_module(cfg);
    out.push_back(check_cycle_generation(em, resolved_cap(cfg, em), cfg.k_given ? cfg.k : em.size()));
  } else if (cmd == "eval-irreducibility") {
    auto em = config_module(cfg);
    out.push_back(check_evaluation_irreducibility(em, resolved_cap(cfg, em)));
  }
  if (cfg.expect_fail)
    for (auto& r : out) r = expect_failure(std::move(r));
  return out;
}

/// Runs, prints a summary, writes the report. Exit code: 0 all pass, 1 any
/// failure or an unwritable report path.
inline int run_and_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto checks = run_checks(cfg);
  const bool json_to_stdout = cfg.output_path == "-";
  std::ostream& text = json_to_stdout ? err : out;
  size_t failed = 0;
  for (const auto& c : checks) {
    text << summary_line(c) << '\n';
    failed += !c.pass;
  }
  text << checks.size() << " checks, " << failed << " failed\n";
  Json report = build_report(config_entries(cfg), checks);
  if (json_to_stdout) {
    out << report.dump(2) << '\n';
  } else if (!cfg.output_path.empty()) {
    std::ofstream f(cfg.output_path);
    if (!f || !(f << report.dump(2) << '\n') || !f.flush()) {
      err << "repcur: cannot write report: '" << cfg.output_path << "'\n";
      return 1;
    }
  }
  return failed == 0 ? 0 : 1;
}

/// Full entry point: parse, run, report. Usage errors exit 2.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << "repcur: " << e.what() << '\n';
    return 2;
  }
  try {
    return run_and_report(cfg, out, err);
  } catch (const UsageError& e) {
    err << "repcur: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "repcur: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "repcur: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace repcur::cli
