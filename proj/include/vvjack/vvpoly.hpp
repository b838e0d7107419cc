#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "vvjack/combinatorics.hpp"
#include "vvjack/group_action.hpp"
#include "vvjack/rational.hpp"

namespace vvjack {

inline constexpr int kMaxVariables = 12;

// Exponent vector of a Laurent monomial in at most kMaxVariables variables.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(int n);
  explicit Exponent(std::span<const int> alpha);

  int size() const { return n_; }
  int operator[](int i) const { return e_[i]; }
  std::int16_t& operator[](int i) { return e_[i]; }
  int degree() const;
  bool has_negative() const;
  Composition to_composition() const;

  auto operator<=>(const Exponent&) const = default;

 private:
  std::array<std::int16_t, kMaxVariables> e_{};
  std::uint8_t n_ = 0;

};

struct KappaPolicy {
  // Permit kappa outside (-1/h_tau, 1/h_tau) after a pole audit up to this degree.
  bool force = false;
  int degree_bound = 8;
};

// Ambient module of a polynomial: the representation of tau at a fixed rational kappa.
class KappaContext {
 public:
  // Throws InadmissibleKappa outside the default window unless policy.force,
  // in which case every l + kappa*d (1 <= l <= degree_bound,
  // |d| <= h_tau - 1) must be nonzero.
  static std::shared_ptr<const KappaContext> make(const Partition& tau, const Rational& kappa,
                                                  KappaPolicy policy = {});

  const Rational& kappa() const { return kappa_; }
  const Partition& tau() const { return rep_->shape(); }
  const Representation& rep() const { return *rep_; }
  int n_vars() const { return rep_->degree(); }
  int dim() const { return rep_->dim(); }
  int max_hook() const { return max_hook_; }
  // gamma = S_1(tau) / N.
  const Rational& gamma() const { return gamma_; }
  bool in_default_window() const;

 private:
  KappaContext() = default;
  Rational kappa_;
  std::shared_ptr<const Representation> rep_;
  int max_hook_ = 0;
  Rational gamma_;
};

using ContextPtr = std::shared_ptr<const KappaContext>;

// Sparse V_tau-valued Laurent polynomial with exact rational coefficients.
// Storage is exponent -> coefficient vector over the tableau basis {T};
// exponents whose vector vanishes are never stored.
class VVPoly {
 public:
  using TermMap = std::map<Exponent, RVector>;

  VVPoly() = default;
  explicit VVPoly(ContextPtr ctx);

  // 1 (x) T_t
  static VVPoly constant(ContextPtr ctx, int tableau);
  static VVPoly monomial(ContextPtr ctx, const Exponent& alpha, int tableau, const Rational& coeff = 1);
  static VVPoly monomial(ContextPtr ctx, const Exponent& alpha, const RVector& value);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t monomial_count() const { return terms_.size(); }
  std::size_t term_count() const;

  Rational coefficient_of(const Exponent& alpha, int tableau) const;
  // Coefficient vector at x^alpha (zero vector if absent).
  RVector value_at(const Exponent& alpha) const;

  // Common total degree, or nullopt for mixed degrees. The zero polynomial has degree 0.
  std::optional<int> degree() const;
  bool has_negative_exponent() const;
  std::map<int, VVPoly> split_by_degree() const;

  void add_term(const Exponent& alpha, int tableau, const Rational& coeff);
  void add_vector(const Exponent& alpha, const RVector& v, const Rational& scale = 1);

  VVPoly& operator+=(const VVPoly& other);
  VVPoly& operator-=(const VVPoly& other);
  VVPoly& operator*=(const Rational& s);
  friend VVPoly operator+(VVPoly a, const VVPoly& b) { return a += b; }
  friend VVPoly operator-(VVPoly a, const VVPoly& b) { return a -= b; }
  friend VVPoly operator*(VVPoly a, const Rational& s) { return a *= s; }
  friend VVPoly operator*(const Rational& s, VVPoly a) { return a *= s; }
  VVPoly operator-() const;

  bool operator==(const VVPoly& other) const { return terms_ == other.terms_; }

  VVPoly multiply_monomial(const Exponent& alpha) const;
  VVPoly multiply_variable(int i) const;
  // Multiply by e_N^m; negative m yields Laurent terms.
  VVPoly e_n_shift(int m) const;
  // p(x (i,j)): exchange x_i and x_j, values untouched.
  VVPoly swap_variables(int i, int j) const;
  // tau(i,j) p(x (i,j)), the group action of a transposition.
  VVPoly substitute_transposition(int i, int j) const;
  // Apply a matrix to every coefficient vector.
  VVPoly apply_matrix(const RMatrix& m) const;
  // Exact partial derivative in x_i.
  VVPoly derivative(int i) const;

  // Complex evaluation in the unnormalized tableau coordinates.
  std::vector<std::complex<double>> evaluate(std::span<const std::complex<double>> x) const;

 private:
  void check_compatible(const VVPoly& other) const;
  ContextPtr ctx_;
  TermMap terms_;
};

// w p(x) = tau(w) p(x w); on monomials x^alpha -> x^{w alpha}, (w alpha)_i = alpha_{w^{-1}(i)}.
VVPoly act(const Permutation& w, const VVPoly& p);
// Exponent relabeling alone.
Exponent permute_exponent(const Permutation& w, const Exponent& alpha);

}  // namespace vvjack
