#include "vvjack/torus_wave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/numeric/odeint.hpp>

#include "vvjack/errors.hpp"

namespace vvjack {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double mod2pi(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

}  // namespace

// --- TorusPoint -------------------------------------------------------------

TorusPoint::TorusPoint(std::vector<double> theta) : theta_(std::move(theta)) {
  if (theta_.empty() || static_cast<int>(theta_.size()) > kMaxVariables)
    throw InvalidArgument("torus point needs between 1 and 12 angles");
  for (double t : theta_)
    if (!std::isfinite(t)) throw InvalidArgument("angles must be finite");
}

TorusPoint TorusPoint::base(int n) {
  std::vector<double> theta(n);
  for (int j = 0; j < n; ++j) theta[j] = kTwoPi * j / n;
  return TorusPoint(std::move(theta));
}

std::vector<std::complex<double>> TorusPoint::coords() const {
  std::vector<std::complex<double>> x(theta_.size());
  for (std::size_t j = 0; j < theta_.size(); ++j) x[j] = std::polar(1.0, theta_[j]);
  return x;
}

double TorusPoint::min_separation() const {
  const auto x = coords();
  double out = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) out = std::min(out, std::abs(x[i] - x[j]));
  return out;
}

bool TorusPoint::in_fundamental_chamber() const {
  double prev = 0;
  for (int j = 1; j < size(); ++j) {
    const double d = mod2pi(theta_[j] - theta_[0]);
    if (d <= prev) return false;
    prev = d;
  }
  return true;
}

TorusPoint TorusPoint::canonical() const {
  std::vector<double> out(theta_.size());
  out[0] = std::remainder(theta_[0], kTwoPi);
  for (std::size_t j = 1; j < theta_.size(); ++j) out[j] = out[0] + mod2pi(theta_[j] - theta_[0]);
  return TorusPoint(std::move(out));
}

Permutation TorusPoint::chamber_perm() const {
  // k_1 = 1, then the remaining points counterclockwise from x_1; w_x^{-1}(i) = k_i.
  std::vector<int> k(size());
  std::iota(k.begin(), k.end(), 0);
  std::stable_sort(k.begin() + 1, k.end(), [&](int a, int b) {
    return mod2pi(theta_[a] - theta_[0]) < mod2pi(theta_[b] - theta_[0]);
  });
  for (int& v : k) ++v;
  return Permutation::from_one_line(k).inverse();
}

TorusPoint TorusPoint::permuted(const Permutation& w) const {
  if (w.size() != size()) throw InvalidArgument("permutation size does not match N");
  std::vector<double> out(theta_.size());
  for (int i = 0; i < size(); ++i) out[i] = theta_[w(i)];
  return TorusPoint(std::move(out));
}

TorusPoint TorusPoint::rotated(double phi) const {
  std::vector<double> out = theta_;
  for (double& t : out) t += phi;
  return TorusPoint(std::move(out));
}

// --- TorusSystem ------------------------------------------------------------

TorusSystem::TorusSystem(const Partition& tau, double kappa, WaveOptions options)
    : rep_(representation_for(tau)), kappa_(kappa), n_(tau.size()), opt_(options) {
  if (!std::isfinite(kappa)) throw InvalidArgument("kappa must be finite");
  gamma_ = static_cast<double>(tau.content_sum()) / n_;
  const int h = hooks_and_dim(tau).max_hook;
  if (std::abs(kappa) * h >= 1) throw InadmissibleKappa("numeric continuation needs |kappa| < 1/h_tau");
  trans_.resize(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j) trans_[i * n_ + j] = rep_->orthonormal(rep_->transposition(i, j));
  w0_ = rep_->word_orthonormal(Permutation::cycle(n_));
  left_ = Eigen::MatrixXd::Identity(dim(), dim());
  if (tau == Partition({2, 2})) {
    // Closed-form normalization: L = diag(gamma(k)^{1/2}, gamma(-k)^{1/2}) L_F(zeta(x)) = C L_0.
    const Hyper22 h(kappa);
    Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
    d(0, 0) = std::sqrt(Hyper22::gamma_factor(kappa));
    d(1, 1) = std::sqrt(Hyper22::gamma_factor(-kappa));
    left_ = d * h.fundamental(0.5);
  }
}

void TorusSystem::check_regular(const TorusPoint& x) const {
  if (x.size() != n_) throw InvalidArgument("torus point has the wrong number of coordinates");
  if (x.min_separation() <= opt_.eps_reg) throw RegularityError("point is too close to a collision");
}

CMatrix TorusSystem::coefficient_matrix(const TorusPoint& x, int i) const {
  check_regular(x);
  const auto z = x.coords();
  CMatrix a = CMatrix::Identity(dim(), dim()) * (-gamma_ / z[i]);
  for (int j = 0; j < n_; ++j)
    if (j != i) a += transposition(i, j).cast<std::complex<double>>() / (z[i] - z[j]);
  return a;
}

CMatrix TorusSystem::coefficient_derivative(const TorusPoint& x, int i) const {
  check_regular(x);
  const auto z = x.coords();
  CMatrix a = CMatrix::Identity(dim(), dim()) * (gamma_ / (z[i] * z[i]));
  for (int j = 0; j < n_; ++j)
    if (j != i) a -= transposition(i, j).cast<std::complex<double>>() / ((z[i] - z[j]) * (z[i] - z[j]));
  return a;
}

CMatrix TorusSystem::integrate_segment(const TorusPoint& from, const TorusPoint& to, CMatrix start) const {
  namespace odeint = boost::numeric::odeint;
  using State = std::vector<std::complex<double>>;
  const int d = dim();
  std::vector<double> delta(n_);
  double span = 0;
  for (int j = 0; j < n_; ++j) {
    delta[j] = to.angles()[j] - from.angles()[j];
    span = std::max(span, std::abs(delta[j]));
  }
  if (span == 0) return start;
  std::vector<Eigen::MatrixXcd> tr;
  auto rhs = [&](const State& s, State& ds, double t) {
    std::vector<double> theta(n_);
    for (int j = 0; j < n_; ++j) theta[j] = from.angles()[j] + t * delta[j];
    const TorusPoint p(theta);
    const auto z = p.coords();
    CMatrix g = CMatrix::Zero(d, d);
    for (int i = 0; i < n_; ++i) {
      if (delta[i] == 0) continue;
      g += coefficient_matrix(p, i) * (std::complex<double>(0, 1) * z[i] * delta[i]);
    }
    Eigen::Map<const CMatrix> l(s.data(), d, d);
    Eigen::Map<CMatrix> dl(ds.data(), d, d);
    dl = kappa_ * (l * g);
  };
  State s(start.data(), start.data() + start.size());
  const double max_dt = opt_.max_step / span;
  auto stepper = odeint::make_controlled(opt_.tol, opt_.tol, max_dt, odeint::runge_kutta_dopri5<State>());
  try {
    odeint::integrate_adaptive(stepper, rhs, s, 0.0, 1.0, std::min(max_dt, 1e-3));
  } catch (const RegularityError&) {
    throw;
  } catch (const std::exception& e) {
    throw NumericError(std::string("integration failed: ") + e.what());
  }
  return Eigen::Map<CMatrix>(s.data(), d, d);
}

TorusMatrix TorusSystem::integrate_L(const TorusPoint& target, const std::optional<TorusPoint>& waypoint) const {
  check_regular(target);
  if (!target.in_fundamental_chamber()) throw InvalidArgument("integration target must lie in the fundamental chamber");
  const TorusPoint x0 = TorusPoint::base(n_);
  const TorusPoint end = target.canonical();
  CMatrix l = CMatrix::Identity(dim(), dim());
  if (kappa_ != 0) {
    if (waypoint) {
      check_regular(*waypoint);
      if (!waypoint->in_fundamental_chamber()) throw InvalidArgument("waypoint must lie in the fundamental chamber");
      const TorusPoint mid = waypoint->canonical();
      l = integrate_segment(x0, mid, l);
      l = integrate_segment(mid, end, l);
    } else {
      l = integrate_segment(x0, end, l);
    }
  }
  return TorusMatrix{target, l, opt_.tol};
}

TorusMatrix TorusSystem::extend_L(const TorusPoint& x) const {
  check_regular(x);
  const Permutation wx = x.chamber_perm();
  TorusMatrix base = integrate_L(x.permuted(wx.inverse()));
  base.point = x;
  if (!wx.is_identity()) base.value = base.value * orthonormal(wx).cast<std::complex<double>>();
  return base;
}

Eigen::MatrixXd TorusSystem::twist_M(const Permutation& w, const TorusPoint& x) const {
  check_regular(x);
  const int p = 1 - (x.chamber_perm()(w(0)) + 1);
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(dim(), dim());
  const Eigen::MatrixXd step = p >= 0 ? w0_ : Eigen::MatrixXd(w0_.transpose());
  for (int k = 0; k < std::abs(p); ++k) out = out * step;
  return out;
}

CVector TorusSystem::jack_value(const TorusPoint& x, const VVPoly& p) const {
  const auto z = x.coords();
  const auto v = p.evaluate(z);
  CVector out(dim());
  for (int t = 0; t < dim(); ++t) out[t] = v[t] * std::sqrt(to_double(rep_->norms0()[t]));
  return out;
}

CVector TorusSystem::wavefunction(const TorusPoint& x, const SymmetricJack& j) const {
  return wavefunction(x, extend_L(x), j);
}

CVector TorusSystem::wavefunction(const TorusPoint& x, const TorusMatrix& l, const SymmetricJack& j) const {
  return l.value * jack_value(x, j.poly);
}

PreparedJack prepare(const SymmetricJack& j) {
  PreparedJack out{j, {}, {}};
  const int n = j.poly.context()->n_vars();
  for (int i = 0; i < n; ++i) {
    VVPoly d1 = j.poly.derivative(i).multiply_variable(i);
    VVPoly d2 = d1.derivative(i).multiply_variable(i);
    out.euler1.push_back(std::move(d1));
    out.euler2.push_back(std::move(d2));
  }
  return out;
}

CVector TorusSystem::apply_hamiltonian(const TorusPoint& x, const PreparedJack& pj) const {
  const TorusMatrix lm = extend_L(x);
  const CMatrix& l = lm.value;
  const auto z = x.coords();
  const CVector jv = jack_value(x, pj.jack.poly);
  CVector out = CVector::Zero(dim());
  for (int i = 0; i < n_; ++i) {
    const CMatrix a = coefficient_matrix(x, i);
    const CMatrix da = coefficient_derivative(x, i);
    // D = x_i d_i: D L = kappa x_i L A_i, D^2 L = kappa x_i L A_i + kappa^2 x_i^2 L A_i^2 + kappa x_i^2 L d_i A_i.
    const CMatrix d1l = kappa_ * z[i] * (l * a);
    const CMatrix d2l = d1l + kappa_ * kappa_ * z[i] * z[i] * (l * a * a) + kappa_ * z[i] * z[i] * (l * da);
    out += d2l * jv + 2.0 * (d1l * jack_value(x, pj.euler1[i])) + l * jack_value(x, pj.euler2[i]);
  }
  std::complex<double> v = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) v += z[i] * z[j] / ((z[i] - z[j]) * (z[i] - z[j]));
  out -= 2 * kappa_ * (kappa_ - 1) * v * (l * jv);
  return out;
}

double TorusSystem::density(const TorusPoint& x, const SymmetricJack& j) const {
  const CVector w = left_.cast<std::complex<double>>() * wavefunction(x, j);
  return w.squaredNorm() / to_double(j.norm);
}

DetCheck TorusSystem::det_check(const TorusPoint& x) const {
  DetCheck out;
  out.det = integrate_L(x).value.determinant();
  out.lambda_trace = transposition(0, 1).trace();
  const auto hd = hooks_and_dim(rep_->shape());
  out.lambda_gamma = gamma_ * static_cast<double>(hd.dim) / (2.0 * (n_ - 1));
  const auto z = x.coords();
  const auto z0 = TorusPoint::base(n_).coords();
  double log_ratio = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) log_ratio += std::log(std::abs(z[i] - z[j])) - std::log(std::abs(z0[i] - z0[j]));
  out.predicted_trace = std::exp(kappa_ * out.lambda_trace * log_ratio);
  out.predicted_gamma = std::exp(kappa_ * out.lambda_gamma * log_ratio);
  out.error_trace = std::abs(out.det - out.predicted_trace) / out.predicted_trace;
  out.error_gamma = std::abs(out.det - out.predicted_gamma) / out.predicted_gamma;
  return out;
}

std::pair<std::vector<int>, int> collision_block_order(const Representation& rep) {
  const int n = rep.degree();
  std::vector<int> minus, plus;
  for (int t = 0; t < rep.dim(); ++t) {
    const Tableau& T = rep.tableau(t);
    (T.row_of(n - 1) != T.row_of(n) ? minus : plus).push_back(t);
  }
  const int m = static_cast<int>(minus.size());
  minus.insert(minus.end(), plus.begin(), plus.end());
  return {minus, m};
}

// --- collision probe --------------------------------------------------------

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("slope fit needs at least two points");
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lx = std::log(x[k]), ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

TorusPoint collision_point(int n, double separation) {
  if (n < 3) throw InvalidArgument("the collision ladder needs N >= 3");
  std::vector<double> theta = TorusPoint::base(n).angles();
  const double mid = 0.5 * (theta[n - 3] + kTwoPi);
  theta[n - 2] = mid - separation / 2;
  theta[n - 1] = mid + separation / 2;
  return TorusPoint(std::move(theta));
}

CollisionLadder collision_ladder(const TorusSystem& sys, const SymmetricJack& j, const std::vector<double>& separations) {
  CollisionLadder out;
  out.separations = separations;
  for (double s : separations) {
    const TorusPoint x = collision_point(sys.n(), s);
    const TorusMatrix l = sys.integrate_L(x);
    const CVector w = sys.left_factor().cast<std::complex<double>>() * sys.wavefunction(x, l, j);
    out.density.push_back(w.squaredNorm() / to_double(j.norm));
    Eigen::JacobiSVD<CMatrix> svd(l.value);
    const double op = svd.singularValues()(0);
    out.raw.push_back(op * op);
  }
  out.density_slope = loglog_slope(out.separations, out.density);
  out.raw_slope = loglog_slope(out.separations, out.raw);
  return out;
}

// --- hypergeometric example -------------------------------------------------

double hyp2f1(double a, double b, double c, double z) {
  if (!(std::abs(z) < 1)) throw NumericError("2F1 series needs |z| < 1");
  double term = 1, sum = 1;
  for (int k = 0; k < 2000000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > 4) return sum;
  }
  throw NumericError("2F1 series did not converge");
}

Hyper22::Hyper22(double kappa) : kappa_(kappa) {
  if (!(std::abs(kappa) < 1.0 / 3)) throw InadmissibleKappa("the (2,2) closed form needs |kappa| < 1/3");
}

double Hyper22::zeta(const TorusPoint& x) {
  if (x.size() != 4) throw InvalidArgument("zeta needs N = 4");
  const auto z = x.coords();
  const std::complex<double> v = (z[0] - z[1]) * (z[2] - z[3]) / ((z[0] - z[2]) * (z[1] - z[3]));
  if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v)) || !(v.real() > 0 && v.real() < 1))
    throw InvalidArgument("zeta(x) must lie in (0,1); x is not in the fundamental chamber");
  return v.real();
}

double Hyper22::g1(double k, double z) {
  if (k == 0) return 1;
  return hyp2f1(-k, k, 2 * k, z);
}

double Hyper22::g2(double k, double z) { return k * z / (1 + 2 * k) * hyp2f1(1 + k, 1 - k, 2 + 2 * k, z); }

double Hyper22::gamma_factor(double k) {
  return std::exp(2 * std::lgamma(1 + 2 * k) - std::lgamma(1 + k) - std::lgamma(1 + 3 * k));
}

Eigen::Matrix2d Hyper22::fundamental(double z) const {
  const double k = kappa_;
  const double r = std::sqrt(3.0) / 2;
  const double p = std::pow(z, -k) * std::pow(1 - z, k);
  Eigen::Matrix2d g;
  g << g1(-k, z), r * g2(-k, z), -r * g2(k, z), g1(k, z);
  Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
  d(0, 0) = p;
  d(1, 1) = 1 / p;
  return d * g;
}

Eigen::Matrix2d Hyper22::closed_form(const TorusPoint& x) const {
  Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
  d(0, 0) = std::sqrt(gamma_factor(kappa_));
  d(1, 1) = std::sqrt(gamma_factor(-kappa_));
  return d * fundamental(zeta(x));
}

}  // namespace vvjack
