#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "vvjack/errors.hpp"
#include "vvjack/verify.hpp"

namespace vvjack {

namespace {

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

CheckResult bound_check(const std::string& name, double worst, double bound) {
  return CheckResult{name, worst <= bound, "max error " + sci(worst) + " (bound " + sci(bound) + ")"};
}

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation::from_one_line(p);
}

TorusPoint random_regular_point(int n, double min_gap, std::mt19937& rng) {
  const TorusPoint c = random_chamber_point(n, min_gap, rng);
  return c.permuted(random_perm(n, rng));
}

CMatrix cplx(const Eigen::MatrixXd& m) { return m.cast<std::complex<double>>(); }

}  // namespace

TorusPoint random_chamber_point(int n, double min_gap, std::mt19937& rng) {
  constexpr double two_pi = 2 * std::numbers::pi;
  if (min_gap * n >= two_pi) throw InvalidArgument("gap too large for N points");
  std::uniform_real_distribution<double> u(0.05, 1.0), phase(0, two_pi);
  std::vector<double> g(n);
  double sum = 0;
  for (double& v : g) sum += (v = u(rng));
  std::vector<double> theta(n);
  double acc = phase(rng);
  for (int i = 0; i < n; ++i) {
    theta[i] = acc;
    acc += min_gap + (two_pi - n * min_gap) * g[i] / sum;
  }
  return TorusPoint(std::move(theta));
}

std::vector<CheckResult> check_numeric(const ContextPtr& ctx, const NumericSuiteOptions& opt) {
  std::vector<CheckResult> out;
  const Partition& tau = ctx->tau();
  const int n = tau.size();
  const double kappa = to_double(ctx->kappa());
  const TorusSystem sys(tau, kappa, opt.wave);
  const double tol = opt.wave.tol;
  std::mt19937 rng(opt.seed);
  const double gap = 0.3;

  {
    double worst = 0;
    for (int s = 0; s < 10; ++s) {
      const TorusPoint x = random_regular_point(n, gap, rng);
      const auto z = x.coords();
      CMatrix sum = CMatrix::Zero(sys.dim(), sys.dim());
      for (int i = 0; i < n; ++i) sum += z[i] * sys.coefficient_matrix(x, i);
      worst = std::max(worst, sum.cwiseAbs().maxCoeff());
    }
    out.push_back(bound_check("sum x_i A_i = 0", worst, 1e-12));
  }
  {
    const TorusSystem flat(tau, 0.0, opt.wave);
    const TorusPoint x = random_chamber_point(n, gap, rng);
    const double err = (flat.integrate_L(x).value - CMatrix::Identity(sys.dim(), sys.dim())).cwiseAbs().maxCoeff();
    out.push_back(bound_check("kappa = 0 gives L = I", err, 0));
  }
  {
    const double err = (sys.integrate_L(TorusPoint::base(n)).value - CMatrix::Identity(sys.dim(), sys.dim())).cwiseAbs().maxCoeff();
    out.push_back(bound_check("L(x_0) = I", err, 0));
  }
  {
    double worst = 0;
    std::uniform_real_distribution<double> phase(0, 2 * std::numbers::pi);
    for (int s = 0; s < 5; ++s) {
      const TorusPoint x = random_chamber_point(n, gap, rng);
      const CMatrix l = sys.integrate_L(x).value;
      worst = std::max(worst, (sys.integrate_L(x.rotated(phase(rng))).value - l).cwiseAbs().maxCoeff());
    }
    out.push_back(bound_check("homogeneity L(ux) = L(x)", worst, 1e-9));
  }
  {
    double worst = 0;
    for (int s = 0; s < 5; ++s) {
      const TorusPoint x = random_chamber_point(n, gap, rng);
      const TorusPoint via = random_chamber_point(n, gap, rng);
      worst = std::max(worst, (sys.integrate_L(x, via).value - sys.integrate_L(x).value).cwiseAbs().maxCoeff());
    }
    out.push_back(bound_check("path independence", worst, 10 * tol));
  }
  {
    double worst = 0;
    const Permutation w0 = Permutation::cycle(n);
    for (int s = 0; s < 5; ++s) {
      const TorusPoint x = random_chamber_point(n, gap, rng);
      const CMatrix l = sys.integrate_L(x).value;
      CMatrix c = CMatrix::Identity(sys.dim(), sys.dim());
      for (int m = 1; m < n; ++m) {
        c = c * cplx(sys.cycle());
        const CMatrix lm = sys.integrate_L(x.permuted(w0.pow(m))).value;
        worst = std::max(worst, (lm - c.inverse() * l * c).cwiseAbs().maxCoeff());
      }
    }
    out.push_back(bound_check("cyclic conjugation L(x w_0^m)", worst, 1e-8));
  }
  {
    double worst = 0;
    for (int s = 0; s < 20; ++s) {
      const TorusPoint x = random_regular_point(n, gap, rng);
      const Permutation a = random_perm(n, rng), b = random_perm(n, rng);
      const Eigen::MatrixXd lhs = sys.twist_M(a * b, x);
      const Eigen::MatrixXd rhs = sys.twist_M(b, x.permuted(a)) * sys.twist_M(a, x);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      worst = std::max(worst, (sys.twist_M(Permutation::identity(n), x) - Eigen::MatrixXd::Identity(sys.dim(), sys.dim())).cwiseAbs().maxCoeff());
    }
    out.push_back(bound_check("twist cocycle and M(I,x) = I", worst, 1e-12));
  }
  {
    // sigma^M(w) f(x) = M(w,x)^{-1} f(xw) on a sampled vector field.
    std::normal_distribution<double> nd;
    Eigen::MatrixXcd coef(sys.dim(), n);
    for (int r = 0; r < sys.dim(); ++r)
      for (int c = 0; c < n; ++c) coef(r, c) = {nd(rng), nd(rng)};
    auto field = [&](const TorusPoint& x) {
      const auto z = x.coords();
      CVector v = CVector::Zero(sys.dim());
      for (int r = 0; r < sys.dim(); ++r)
        for (int c = 0; c < n; ++c) v[r] += coef(r, c) * std::pow(z[c], r + c + 1);
      return v;
    };
    auto sigma = [&](const Permutation& w, const TorusPoint& x, auto&& f) -> CVector {
      return cplx(sys.twist_M(w, x)).inverse() * f(x.permuted(w));
    };
    double worst = 0;
    for (int s = 0; s < 10; ++s) {
      const TorusPoint x = random_regular_point(n, gap, rng);
      const Permutation a = random_perm(n, rng), b = random_perm(n, rng);
      const CVector lhs = sigma(a, x, [&](const TorusPoint& y) { return sigma(b, y, field); });
      const CVector rhs = sigma(a * b, x, field);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    out.push_back(bound_check("twisted action is a representation", worst, 1e-12));
  }
  {
    double worst = 0;
    for (int s = 0; s < 8; ++s) {
      const TorusPoint x = random_regular_point(n, gap, rng);
      const Permutation w = random_perm(n, rng);
      const CMatrix lhs = sys.extend_L(x.permuted(w)).value;
      const CMatrix rhs = cplx(sys.twist_M(w, x)) * sys.extend_L(x).value * cplx(sys.orthonormal(w));
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    out.push_back(bound_check("transformation law L(xw) = M L tau(w)", worst, 1e-8));
  }
  {
    double worst_trace = 0, worst_gamma = 0, min_det = std::numeric_limits<double>::infinity();
    double lt = 0, lg = 0;
    for (int s = 0; s < 5; ++s) {
      const DetCheck d = sys.det_check(random_chamber_point(n, gap, rng));
      worst_trace = std::max(worst_trace, d.error_trace);
      worst_gamma = std::max(worst_gamma, d.error_gamma);
      min_det = std::min(min_det, std::abs(d.det));
      lt = d.lambda_trace;
      lg = d.lambda_gamma;
    }
    std::ostringstream s;
    s << "exponent tr tau(1,2) = " << lt << ": error " << sci(worst_trace) << "; exponent gamma n/(2(N-1)) = " << lg
      << ": error " << sci(worst_gamma) << "; matches: "
      << (worst_trace <= 1e-8 ? (worst_gamma <= 1e-8 ? "both" : "tr tau(1,2)") : (worst_gamma <= 1e-8 ? "gamma n/(2(N-1))" : "neither"));
    out.push_back(CheckResult{"det identity", worst_trace <= 1e-8 && min_det > 0, s.str()});
  }
  {
    const auto [order, m] = collision_block_order(sys.rep());
    const RMatrix& t = sys.rep().transposition(n - 2, n - 1);
    bool ok = true;
    for (int r = 0; r < sys.dim(); ++r)
      for (int c = 0; c < sys.dim(); ++c) {
        const Rational want = r != c ? Rational(0) : Rational(r < m ? -1 : 1);
        ok = ok && t(order[r], order[c]) == want;
      }
    out.push_back(CheckResult{"tau(N-1,N) = diag(-I, I) in block order", ok, "-1 block size " + std::to_string(m)});
  }

  if (!tau.is_one_dimensional()) {
    YangBaxterGraph graph(ctx);
    std::vector<SymmetricJack> jacks{minimal_jack(ctx)};
    for (const Label& l : column_strict_labels(*ctx, tau.n_statistic() + 1))
      if (jacks.size() < 2) jacks.push_back(jack(graph, l.alpha, l.tableau));
    double worst = 0;
    int points = 0;
    for (const SymmetricJack& j : jacks) {
      const PreparedJack pj = prepare(j);
      const double e = to_double(j.eigenvalue);
      for (int s = 0; s < opt.points; ++s) {
        const TorusPoint x = random_chamber_point(n, gap, rng);
        const CVector lj = sys.wavefunction(x, j);
        const CVector h = sys.apply_hamiltonian(x, pj);
        worst = std::max(worst, (h - e * lj).norm() / lj.norm());
        ++points;
      }
    }
    CheckResult r = bound_check("H(LJ) = E LJ", worst, 1e-6);
    r.detail += ", " + std::to_string(points) + " points, " + std::to_string(jacks.size()) + " polynomials";
    out.push_back(r);

    double sym = 0, lowest = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 10; ++s) {
      const TorusPoint x = random_regular_point(n, gap, rng);
      const double d = sys.density(x, jacks[0]);
      lowest = std::min(lowest, d);
      sym = std::max(sym, std::abs(sys.density(x.permuted(random_perm(n, rng)), jacks[0]) - d) / std::max(1.0, d));
    }
    out.push_back(bound_check("density permutation invariance", sym, 1e-8));
    out.push_back(CheckResult{"density nonnegative", lowest >= 0, "min " + sci(lowest)});

    if (kappa > 0 && n >= 3) {
      const CollisionLadder lad = collision_ladder(sys, jacks[0], {1e-1, 1e-2, 1e-3, 1e-4, 1e-5});
      out.push_back(CheckResult{"density bounded near a collision", lad.density_slope >= -0.01,
                                "fitted log-log slope " + sci(lad.density_slope)});
      const double rel = std::abs(lad.raw_slope + 2 * kappa) / (2 * kappa);
      out.push_back(CheckResult{"raw ||L||^2 probe slope -2 kappa", rel <= 0.2,
                                "fitted slope " + sci(lad.raw_slope) + " vs " + sci(-2 * kappa)});
    }
  }

  if (tau == Partition({2, 2})) {
    const Hyper22 h(kappa);
    const double z0 = Hyper22::zeta(TorusPoint::base(4));
    out.push_back(bound_check("zeta(x_0) = 1/2", std::abs(z0 - 0.5), 1e-14));
    const double g0 = std::abs(Hyper22::g1(kappa, 0) - 1) + std::abs(Hyper22::g2(kappa, 0));
    out.push_back(bound_check("g_1(0) = 1, g_2(0) = 0", g0, 0));
    const Eigen::Matrix2d c = h.fundamental(z0).inverse();
    double worst = 0, zmin = 1, zmax = 0;
    for (int s = 0; s < 20; ++s) {
      const TorusPoint x = random_chamber_point(4, 0.25, rng);
      const double z = Hyper22::zeta(x);
      zmin = std::min(zmin, z);
      zmax = std::max(zmax, z);
      const Eigen::Matrix2d closed = c * h.fundamental(z);
      worst = std::max(worst, (sys.integrate_L(x).value - cplx(closed)).cwiseAbs().maxCoeff());
    }
    CheckResult r = bound_check("hypergeometric closed form", worst, 1e-7);
    std::ostringstream s;
    s << ", zeta range [" << zmin << ", " << zmax << "]";
    r.detail += s.str();
    out.push_back(r);
  }
  return out;
}

}  // namespace vvjack
