// vvjack: command line front end for the vector-valued Jack polynomial engine.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "vvjack/errors.hpp"
#include "vvjack/io.hpp"
#include "vvjack/verify.hpp"

using namespace vvjack;
using io::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitKappa = 3;
constexpr int kExitVerify = 4;

struct Common {
  std::string tau;
  std::string kappa;
  bool force_kappa = false;
  int degree_bound = 8;
};

void add_common(CLI::App* app, Common& c, bool need_kappa) {
  app->add_option("--tau", c.tau, "Partition tau, e.g. 2,1")->required();
  if (need_kappa) {
    app->add_option("--kappa", c.kappa, "Parameter kappa as p/q or a finite decimal")->required();
    app->add_flag("--force-kappa", c.force_kappa, "Allow kappa outside (-1/h_tau, 1/h_tau) after a pole audit");
    app->add_option("--degree-bound", c.degree_bound, "Degree bound of the pole audit with --force-kappa")
        ->check(CLI::PositiveNumber);
  }
}

ContextPtr make_context(const Common& c) {
  return KappaContext::make(io::parse_partition(c.tau), parse_rational(c.kappa), KappaPolicy{c.force_kappa, c.degree_bound});
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_table(const std::vector<CheckResult>& results) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results)
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name << "  "
              << r.detail << "\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector-valued Jack polynomials: exact construction with torus wavefunctions"};
  app.require_subcommand(1);

  // tableaux
  Common tab_c;
  auto* tab = app.add_subcommand("tableaux", "List the reverse standard tableaux of tau with contents and norms");
  add_common(tab, tab_c, false);

  // nsjp
  Common ns_c;
  std::string ns_alpha, ns_tableau = "T0", ns_schedule = "leftmost";
  auto* ns = app.add_subcommand("nsjp", "Nonsymmetric Jack polynomial zeta_{alpha,T}");
  add_common(ns, ns_c, true);
  ns->add_option("--alpha", ns_alpha, "Composition alpha (negative entries allowed)")->required();
  ns->add_option("--tableau", ns_tableau, "Tableau as T<index> or a content vector")->capture_default_str();
  ns->add_option("--schedule", ns_schedule, "Path schedule")
      ->check(CLI::IsMember({"leftmost", "rightmost"}))
      ->capture_default_str();

  // jack
  Common jk_c;
  std::string jk_lambda, jk_tableau;
  int jk_shift = 0;
  bool jk_minimal = false;
  auto* jk = app.add_subcommand("jack", "Symmetric Jack polynomial J_{lambda,T_S}; all components of lambda without --tableau");
  add_common(jk, jk_c, true);
  jk->add_option("--lambda", jk_lambda, "Partition lambda padded to N parts");
  jk->add_option("--tableau", jk_tableau, "Tableau of the component (the sink is recomputed)");
  jk->add_option("--shift", jk_shift, "Multiply by e_N^shift")->capture_default_str();
  jk->add_flag("--minimal", jk_minimal, "Minimal-degree polynomial of tau (ignores --lambda)");

  // norm
  Common nm_c;
  std::string nm_alpha, nm_tableau = "T0";
  auto* nm = app.add_subcommand("norm", "Closed-form and edge-recursive norm of zeta_{alpha,T}");
  add_common(nm, nm_c, true);
  nm->add_option("--alpha", nm_alpha, "Composition alpha")->required();
  nm->add_option("--tableau", nm_tableau, "Tableau as T<index> or a content vector")->capture_default_str();

  // count
  Common ct_c;
  int ct_max = 8;
  bool ct_restrict = false;
  std::string ct_format = "json";
  auto* ct = app.add_subcommand("count", "Number of symmetric polynomials per degree: coefficients of z^{n(tau)} H_tau(z)");
  ct->add_option("--tau", ct_c.tau, "Partition tau")->required();
  ct->add_option("--max-degree", ct_max, "Largest degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  ct->add_flag("--restrict", ct_restrict, "Only labels with lambda_N = 0");
  ct->add_option("--kappa", ct_c.kappa, "Also enumerate the labels and their eigenvalues at this kappa");
  ct->add_option("--format", ct_format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  // verify
  Common vf_c;
  ExactSuiteOptions vf_opt;
  bool vf_json = false;
  auto* vf = app.add_subcommand("verify", "Run the exact invariant suite; exit 4 on any failure");
  add_common(vf, vf_c, true);
  vf->add_option("--max-degree", vf_opt.max_degree, "Largest degree swept")->capture_default_str()->check(CLI::NonNegativeNumber);
  vf->add_option("--samples", vf_opt.samples, "Random polynomials for the relation checks")->capture_default_str();
  vf->add_option("--seed", vf_opt.seed, "Random seed")->capture_default_str();
  vf->add_flag("--json", vf_json, "JSON report instead of a table");

  // wave
  auto* wave = app.add_subcommand("wave", "Numeric base state L(x), densities, and the numeric invariant suite");
  wave->require_subcommand(1);
  Common wi_c;
  std::string wi_theta, wi_waypoint;
  double wi_tol = 1e-10;
  auto* wi = wave->add_subcommand("integrate", "Integrate L from x_0 to the target point (extended outside the chamber)");
  add_common(wi, wi_c, true);
  wi->add_option("--theta", wi_theta, "Target angles theta_1,...,theta_N")->required();
  wi->add_option("--tol", wi_tol, "Local error tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  wi->add_option("--waypoint", wi_waypoint, "Integrate through this chamber point");

  Common wd_c;
  int wd_grid = 8;
  double wd_tol = 1e-10;
  std::string wd_lambda, wd_tableau;
  auto* wd = wave->add_subcommand("density", "CSV of the density ||L J||^2/||J||^2 on an angle grid with theta_1 = 0");
  add_common(wd, wd_c, true);
  wd->add_option("--grid", wd_grid, "Grid points per angle")->capture_default_str()->check(CLI::PositiveNumber);
  wd->add_option("--lambda", wd_lambda, "Label of J (default: the minimal polynomial)");
  wd->add_option("--tableau", wd_tableau, "Tableau of J with --lambda");
  wd->add_option("--tol", wd_tol, "Local error tolerance")->capture_default_str()->check(CLI::PositiveNumber);

  Common wc_c;
  NumericSuiteOptions wc_opt;
  bool wc_json = false;
  auto* wc = wave->add_subcommand("check", "Run the numeric invariant suite; exit 4 on any failure");
  add_common(wc, wc_c, true);
  wc->add_option("--tol", wc_opt.wave.tol, "Local error tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  wc->add_option("--points", wc_opt.points, "Chamber samples for the eigen-equation")->capture_default_str();
  wc->add_option("--seed", wc_opt.seed, "Random seed")->capture_default_str();
  wc->add_flag("--json", wc_json, "JSON report instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << io::error("usage", e.what()).dump() << "\n";
    return kExitUsage;
  }

  try {
    if (*tab) {
      emit(io::tableaux_report(io::parse_partition(tab_c.tau)));
    } else if (*ns) {
      const ContextPtr ctx = make_context(ns_c);
      YangBaxterGraph graph(ctx, ns_schedule == "rightmost" ? Schedule::rightmost : Schedule::leftmost);
      emit(io::nsjp_report(graph, io::parse_composition(ns_alpha), io::parse_tableau(ctx->rep(), ns_tableau)));
    } else if (*jk) {
      const ContextPtr ctx = make_context(jk_c);
      YangBaxterGraph graph(ctx);
      if (jk_minimal) {
        SymmetricJack j = minimal_jack(ctx);
        if (jk_shift != 0) {
          j.poly = j.poly.e_n_shift(jk_shift);
          j.shift = jk_shift;
          j.eigenvalue = eigenvalue(*ctx, j.lambda, j.sink, jk_shift);
        }
        emit(io::jack_report(*ctx, j));
      } else {
        if (jk_lambda.empty()) throw InvalidArgument("--lambda is required without --minimal");
        const Composition lambda = io::parse_composition(jk_lambda);
        if (!jk_tableau.empty()) {
          emit(io::jack_report(*ctx, jack(graph, lambda, io::parse_tableau(ctx->rep(), jk_tableau), jk_shift)));
        } else {
          emit(io::jack_components_report(graph, lambda, jk_shift));
        }
      }
    } else if (*nm) {
      const ContextPtr ctx = make_context(nm_c);
      YangBaxterGraph graph(ctx);
      emit(io::norm_report(graph, io::parse_composition(nm_alpha), io::parse_tableau(ctx->rep(), nm_tableau)));
    } else if (*ct) {
      const Partition tau = io::parse_partition(ct_c.tau);
      ContextPtr ctx;
      if (!ct_c.kappa.empty()) ctx = KappaContext::make(tau, parse_rational(ct_c.kappa));
      const json report = io::count_report(tau, ct_max, ct_restrict, ctx.get());
      if (ct_format == "json") {
        emit(report);
      } else {
        std::cout << "degree,count" << (ctx ? ",enumerated,eigenvalues" : "") << "\n";
        for (int d = 0; d <= ct_max; ++d) {
          std::cout << d << "," << report["series"][d].get<std::int64_t>();
          if (ctx) {
            const json& row = report["enumerated"][d];
            std::cout << "," << row["count"].get<std::int64_t>() << ",";
            bool first = true;
            for (const auto& l : row["labels"]) {
              std::cout << (first ? "" : ";") << l["eigenvalue"].get<std::string>();
              first = false;
            }
          }
          std::cout << "\n";
        }
      }
    } else if (*vf) {
      const ContextPtr ctx = make_context(vf_c);
      const auto results = verify_exact(ctx, vf_opt);
      if (vf_json) {
        emit(io::checks_report(*ctx, results));
      } else {
        print_table(results);
      }
      return all_passed(results) ? 0 : kExitVerify;
    } else if (*wi) {
      const ContextPtr ctx = make_context(wi_c);
      TorusSystem sys(ctx->tau(), to_double(ctx->kappa()), WaveOptions{wi_tol});
      const TorusPoint x(io::parse_doubles(wi_theta));
      TorusMatrix l;
      if (!wi_waypoint.empty()) {
        l = sys.integrate_L(x, TorusPoint(io::parse_doubles(wi_waypoint)));
      } else {
        l = x.size() == sys.n() && x.in_fundamental_chamber() ? sys.integrate_L(x) : sys.extend_L(x);
      }
      emit(io::integrate_report(sys, l));
    } else if (*wd) {
      const ContextPtr ctx = make_context(wd_c);
      TorusSystem sys(ctx->tau(), to_double(ctx->kappa()), WaveOptions{wd_tol});
      YangBaxterGraph graph(ctx);
      SymmetricJack j;
      if (wd_lambda.empty()) {
        j = minimal_jack(ctx);
      } else {
        const Composition lambda = io::parse_composition(wd_lambda);
        int t = -1;
        if (!wd_tableau.empty()) {
          t = io::parse_tableau(ctx->rep(), wd_tableau);
        } else {
          const auto labels = column_strict_labels(*ctx, abs_degree(lambda));
          for (const Label& l : labels)
            if (l.alpha == lambda) {
              t = l.tableau;
              break;
            }
          if (t < 0) throw InvalidArgument("no column-strict filling exists for this lambda");
        }
        j = jack(graph, lambda, t);
      }
      const int n = sys.n();
      std::cout << std::setprecision(12);
      for (int i = 1; i <= n; ++i) std::cout << "theta" << i << ",";
      std::cout << "density\n";
      std::vector<int> k(n - 1, 0);
      while (true) {
        std::vector<double> theta(n, 0.0);
        for (int i = 1; i < n; ++i) theta[i] = 2 * std::numbers::pi * (k[i - 1] + 0.5) / wd_grid;
        const TorusPoint x(theta);
        if (x.min_separation() > sys.options().eps_reg) {
          for (double t : theta) std::cout << t << ",";
          std::cout << sys.density(x, j) << "\n";
        }
        int pos = 0;
        while (pos < n - 1 && ++k[pos] == wd_grid) k[pos++] = 0;
        if (pos == n - 1) break;
      }
    } else if (*wc) {
      const ContextPtr ctx = make_context(wc_c);
      const auto results = check_numeric(ctx, wc_opt);
      if (wc_json) {
        emit(io::checks_report(*ctx, results));
      } else {
        print_table(results);
      }
      return all_passed(results) ? 0 : kExitVerify;
    }
  } catch (const InadmissibleKappa& e) {
    std::cerr << io::error(e).dump() << "\n";
    return kExitKappa;
  } catch (const InvalidArgument& e) {
    std::cerr << io::error(e).dump() << "\n";
    return kExitUsage;
  } catch (const InvalidShape& e) {
    std::cerr << io::error(e).dump() << "\n";
    return kExitUsage;
  } catch (const RegularityError& e) {
    std::cerr << io::error(e).dump() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << io::error(e).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << io::error("internal", e.what()).dump() << "\n";
    return 1;
  }
  return 0;
}
