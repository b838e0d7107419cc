#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "vvjack/symmetric_jack.hpp"

namespace vvjack {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// A point of the torus given by angles, x_j = exp(i theta_j).
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<double> theta);

  // x_0 = (1, e^{2 pi i/N}, ..., e^{2 pi i (N-1)/N}).
  static TorusPoint base(int n);

  int size() const { return static_cast<int>(theta_.size()); }
  const std::vector<double>& angles() const { return theta_; }
  std::vector<std::complex<double>> coords() const;

  // Smallest chord |x_i - x_j|.
  double min_separation() const;
  // x_1, ..., x_N in counterclockwise order.
  bool in_fundamental_chamber() const;
  // Lift with theta_1 = arg x_1 and theta_1 < theta_2 < ... < theta_N < theta_1 + 2 pi.
  // Only meaningful in the fundamental chamber.
  TorusPoint canonical() const;
  // w_x: x w_x^{-1} lies in the fundamental chamber and w_x(1) = 1.
  Permutation chamber_perm() const;
  // (x w)_i = x_{w(i)}.
  TorusPoint permuted(const Permutation& w) const;
  // u x with u = exp(i phi).
  TorusPoint rotated(double phi) const;

 private:
  std::vector<double> theta_;
};

struct WaveOptions {
  double tol = 1e-10;
  double max_step = 3.14159265358979323846 / 64;
  double eps_reg = 1e-9;
};

struct TorusMatrix {
  TorusPoint point;
  CMatrix value;
  double tol = 0;
};

struct DetCheck {
  std::complex<double> det;
  double lambda_trace = 0;  // tr tau(1,2)
  double lambda_gamma = 0;  // gamma n_tau / (2 (N-1))
  double predicted_trace = 0;
  double predicted_gamma = 0;
  double error_trace = 0;  // relative
  double error_gamma = 0;
};

// Derivative data of a symmetric polynomial, prepared once for numeric use.
struct PreparedJack {
  SymmetricJack jack;
  std::vector<VVPoly> euler1;  // x_i d_i J
  std::vector<VVPoly> euler2;  // (x_i d_i)^2 J
};
PreparedJack prepare(const SymmetricJack& j);

// The first-order system d_i L = kappa L A_i on the regular torus, in the
// orthonormal tableau basis, with L(x_0) = I.
class TorusSystem {
 public:
  TorusSystem(const Partition& tau, double kappa, WaveOptions options = {});

  const Representation& rep() const { return *rep_; }
  double kappa() const { return kappa_; }
  double gamma() const { return gamma_; }
  int n() const { return n_; }
  int dim() const { return rep_->dim(); }
  const WaveOptions& options() const { return opt_; }
  // Constant left factor applied by density(): the closed-form normalization
  // for tau = (2,2), identity otherwise.
  void set_left_factor(const Eigen::MatrixXd& c) { left_ = c; }
  const Eigen::MatrixXd& left_factor() const { return left_; }

  // tau(i,j) and tau(w_0) in the orthonormal basis, 0-based i, j.
  const Eigen::MatrixXd& transposition(int i, int j) const { return trans_[i * n_ + j]; }
  const Eigen::MatrixXd& cycle() const { return w0_; }
  Eigen::MatrixXd orthonormal(const Permutation& w) const { return rep_->word_orthonormal(w); }

  // A_i(x) = sum_{j != i} tau(i,j)/(x_i - x_j) - gamma/x_i I.
  CMatrix coefficient_matrix(const TorusPoint& x, int i) const;
  // d_i A_i(x) = -sum_{j != i} tau(i,j)/(x_i - x_j)^2 + gamma/x_i^2 I.
  CMatrix coefficient_derivative(const TorusPoint& x, int i) const;

  // Continuation along straight segments in angle space, through the
  // waypoint when given. Both points must lie in the fundamental chamber.
  TorusMatrix integrate_L(const TorusPoint& target, const std::optional<TorusPoint>& waypoint = {}) const;
  // L(x) = L(x w_x^{-1}) tau(w_x) for any regular x.
  TorusMatrix extend_L(const TorusPoint& x) const;
  // M(w,x) = tau(w_0)^{1 - w_x(w(1))}.
  Eigen::MatrixXd twist_M(const Permutation& w, const TorusPoint& x) const;

  // J evaluated at x in orthonormal coordinates.
  CVector jack_value(const TorusPoint& x, const VVPoly& p) const;
  CVector wavefunction(const TorusPoint& x, const SymmetricJack& j) const;
  CVector wavefunction(const TorusPoint& x, const TorusMatrix& l, const SymmetricJack& j) const;
  // H = sum (x_i d_i)^2 - 2 kappa (kappa - 1) sum_{i<j} x_i x_j / (x_i - x_j)^2 applied to L J.
  CVector apply_hamiltonian(const TorusPoint& x, const PreparedJack& j) const;
  // ||C L(x) J(x)||^2 / ||J||^2 with C the left factor.
  double density(const TorusPoint& x, const SymmetricJack& j) const;

  DetCheck det_check(const TorusPoint& x) const;

 private:
  void check_regular(const TorusPoint& x) const;
  CMatrix integrate_segment(const TorusPoint& from, const TorusPoint& to, CMatrix start) const;

  std::shared_ptr<const Representation> rep_;
  double kappa_;
  double gamma_;
  int n_;
  WaveOptions opt_;
  std::vector<Eigen::MatrixXd> trans_;
  Eigen::MatrixXd w0_;
  Eigen::MatrixXd left_;
};

// Tableau order with tau(N-1,N) = -1 entries first (N-1 below N), then +1;
// in this order tau(N-1,N) is diag(-I, I). The second member is the size of the -1 block.
std::pair<std::vector<int>, int> collision_block_order(const Representation& rep);

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct CollisionLadder {
  std::vector<double> separations;
  std::vector<double> density;
  std::vector<double> raw;  // ||L||_op^2, the scale of ||L v||^2 for generic v
  double density_slope = 0;
  double raw_slope = 0;
};

// x_{N-1} and x_N approach each other at the midpoint of the arc from x_{N-2}
// to x_1; the other points stay at their x_0 positions.
TorusPoint collision_point(int n, double separation);
CollisionLadder collision_ladder(const TorusSystem& sys, const SymmetricJack& j, const std::vector<double>& separations);

// 2F1(a, b; c; z) by direct summation, |z| < 1.
double hyp2f1(double a, double b, double c, double z);

// The tau = (2,2) closed form.
class Hyper22 {
 public:
  explicit Hyper22(double kappa);

  double kappa() const { return kappa_; }
  // (x_1-x_2)(x_3-x_4) / ((x_1-x_3)(x_2-x_4)); throws outside (0,1).
  static double zeta(const TorusPoint& x);
  static double g1(double k, double z);
  static double g2(double k, double z);
  // Gamma(1+2k)^2 / (Gamma(1+k) Gamma(1+3k)).
  static double gamma_factor(double k);
  Eigen::Matrix2d fundamental(double z) const;  // L_F
  // diag(gamma(k)^{1/2}, gamma(-k)^{1/2}) L_F(zeta(x)).
  Eigen::Matrix2d closed_form(const TorusPoint& x) const;

 private:
  double kappa_;
};

}  // namespace vvjack
