// Python bindings: JSON reports as strings, numeric results as NumPy arrays.

#include <optional>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vvjack/errors.hpp"
#include "vvjack/io.hpp"
#include "vvjack/verify.hpp"

namespace py = pybind11;
using namespace vvjack;

namespace {

ContextPtr context(const std::vector<int>& tau, const std::string& kappa, bool force, int degree_bound) {
  return KappaContext::make(Partition(tau), parse_rational(kappa), KappaPolicy{force, degree_bound});
}

int tableau_index(const KappaContext& ctx, const std::string& t) { return io::parse_tableau(ctx.rep(), t); }

std::string py_nsjp(const std::vector<int>& tau, const std::vector<int>& alpha, const std::string& kappa,
                 const std::string& tableau, const std::string& schedule, bool force, int degree_bound) {
  const ContextPtr ctx = context(tau, kappa, force, degree_bound);
  if (schedule != "leftmost" && schedule != "rightmost") throw InvalidArgument("schedule must be leftmost or rightmost");
  YangBaxterGraph graph(ctx, schedule == "rightmost" ? Schedule::rightmost : Schedule::leftmost);
  return io::nsjp_report(graph, alpha, tableau_index(*ctx, tableau)).dump();
}

std::string py_norm(const std::vector<int>& tau, const std::vector<int>& alpha, const std::string& kappa,
                 const std::string& tableau, bool force, int degree_bound) {
  const ContextPtr ctx = context(tau, kappa, force, degree_bound);
  YangBaxterGraph graph(ctx);
  return io::norm_report(graph, alpha, tableau_index(*ctx, tableau)).dump();
}

std::string py_jack(const std::vector<int>& tau, const std::vector<int>& lambda, const std::string& kappa,
                 const std::optional<std::string>& tableau, int shift, bool force, int degree_bound) {
  const ContextPtr ctx = context(tau, kappa, force, degree_bound);
  YangBaxterGraph graph(ctx);
  if (!tableau) return io::jack_components_report(graph, lambda, shift).dump();
  return io::jack_report(*ctx, jack(graph, lambda, tableau_index(*ctx, *tableau), shift)).dump();
}

std::string py_minimal(const std::vector<int>& tau, const std::string& kappa, bool force, int degree_bound) {
  const ContextPtr ctx = context(tau, kappa, force, degree_bound);
  return io::jack_report(*ctx, minimal_jack(ctx)).dump();
}

std::string py_count(const std::vector<int>& tau, int max_degree, bool restrict_last_zero,
                  const std::optional<std::string>& kappa) {
  const Partition p(tau);
  ContextPtr ctx;
  if (kappa) ctx = KappaContext::make(p, parse_rational(*kappa));
  return io::count_report(p, max_degree, restrict_last_zero, ctx.get()).dump();
}

std::string py_verify(const std::vector<int>& tau, const std::string& kappa, int max_degree, int samples, unsigned seed,
                   bool force, int degree_bound) {
  const ContextPtr ctx = context(tau, kappa, force, degree_bound);
  return io::checks_report(*ctx, verify_exact(ctx, ExactSuiteOptions{max_degree, samples, seed})).dump();
}

std::string py_wave_check(const std::vector<int>& tau, const std::string& kappa, double tol, int points, unsigned seed) {
  const ContextPtr ctx = context(tau, kappa, false, 8);
  NumericSuiteOptions opt;
  opt.wave.tol = tol;
  opt.points = points;
  opt.seed = seed;
  return io::checks_report(*ctx, check_numeric(ctx, opt)).dump();
}

CMatrix py_integrate_L(const std::vector<int>& tau, double kappa, const std::vector<double>& theta, double tol) {
  const TorusSystem sys(Partition(tau), kappa, WaveOptions{tol});
  const TorusPoint x(theta);
  if (x.size() == sys.n() && x.in_fundamental_chamber()) return sys.integrate_L(x).value;
  return sys.extend_L(x).value;
}

std::vector<double> py_density(const std::vector<int>& tau, const std::string& kappa,
                            const std::vector<std::vector<double>>& points, const std::optional<std::vector<int>>& lambda,
                            const std::optional<std::string>& tableau, double tol) {
  const ContextPtr ctx = context(tau, kappa, false, 8);
  const TorusSystem sys(ctx->tau(), to_double(ctx->kappa()), WaveOptions{tol});
  SymmetricJack j;
  if (!lambda) {
    j = minimal_jack(ctx);
  } else {
    YangBaxterGraph graph(ctx);
    int t = -1;
    if (tableau) {
      t = tableau_index(*ctx, *tableau);
    } else {
      for (const Label& l : column_strict_labels(*ctx, abs_degree(*lambda)))
        if (l.alpha == *lambda) {
          t = l.tableau;
          break;
        }
      if (t < 0) throw InvalidArgument("no column-strict filling exists for this lambda");
    }
    j = jack(graph, *lambda, t);
  }
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(sys.density(TorusPoint(p), j));
  return out;
}

}  // namespace

PYBIND11_MODULE(_vvjack, m) {
  m.doc() = "Vector-valued Jack polynomials: exact construction with torus wavefunctions";

  // Translators run newest first, so the base class is registered before its subclasses.
  auto& base = py::register_exception<Error>(m, "VVJackError", PyExc_RuntimeError);
  py::register_exception<InvalidShape>(m, "InvalidShape", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<InadmissibleKappa>(m, "InadmissibleKappa", base.ptr());
  py::register_exception<RegularityError>(m, "RegularityError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());

  const auto release = py::call_guard<py::gil_scoped_release>();
  m.def("tableaux", [](const std::vector<int>& tau) { return io::tableaux_report(Partition(tau)).dump(); }, py::arg("tau"));
  m.def("nsjp", &py_nsjp, py::arg("tau"), py::arg("alpha"), py::arg("kappa"), py::arg("tableau") = "T0",
        py::arg("schedule") = "leftmost", py::arg("force_kappa") = false, py::arg("degree_bound") = 8, release);
  m.def("norm", &py_norm, py::arg("tau"), py::arg("alpha"), py::arg("kappa"), py::arg("tableau") = "T0",
        py::arg("force_kappa") = false, py::arg("degree_bound") = 8, release);
  m.def("jack", &py_jack, py::arg("tau"), py::arg("lam"), py::arg("kappa"), py::arg("tableau") = py::none(),
        py::arg("shift") = 0, py::arg("force_kappa") = false, py::arg("degree_bound") = 8, release);
  m.def("minimal_jack", &py_minimal, py::arg("tau"), py::arg("kappa"), py::arg("force_kappa") = false,
        py::arg("degree_bound") = 8, release);
  m.def("count", &py_count, py::arg("tau"), py::arg("max_degree"), py::arg("restrict") = false,
        py::arg("kappa") = py::none(), release);
  m.def("verify", &py_verify, py::arg("tau"), py::arg("kappa"), py::arg("max_degree") = 4, py::arg("samples") = 20,
        py::arg("seed") = 1, py::arg("force_kappa") = false, py::arg("degree_bound") = 8, release);
  m.def("wave_check", &py_wave_check, py::arg("tau"), py::arg("kappa"), py::arg("tol") = 1e-10, py::arg("points") = 20,
        py::arg("seed") = 1, release);
  m.def("integrate_L", &py_integrate_L, py::arg("tau"), py::arg("kappa"), py::arg("theta"), py::arg("tol") = 1e-10, release);
  m.def("density", &py_density, py::arg("tau"), py::arg("kappa"), py::arg("points"), py::arg("lam") = py::none(),
        py::arg("tableau") = py::none(), py::arg("tol") = 1e-10, release);
}
