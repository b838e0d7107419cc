#include "vvjack/vvpoly.hpp"

#include <cmath>

#include "vvjack/errors.hpp"

namespace vvjack {

// --- Exponent -------------------------------------------------------------

Exponent::Exponent(int n) {
  if (n < 0 || n > kMaxVariables) throw InvalidArgument("too many variables");
  n_ = static_cast<std::uint8_t>(n);
}

Exponent::Exponent(std::span<const int> alpha) : Exponent(static_cast<int>(alpha.size())) {
  for (int i = 0; i < n_; ++i) e_[i] = static_cast<std::int16_t>(alpha[i]);
}

int Exponent::degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Exponent::has_negative() const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] < 0) return true;
  return false;
}

Composition Exponent::to_composition() const { return Composition(e_.begin(), e_.begin() + n_); }

// --- KappaContext ---------------------------------------------------------

std::shared_ptr<const KappaContext> KappaContext::make(const Partition& tau, const Rational& kappa,
                                                       KappaPolicy policy) {
  if (tau.empty()) throw InvalidShape("empty partition");
  if (tau.size() > kMaxVariables) throw InvalidShape("shape too large for the polynomial engine");
  auto ctx = std::shared_ptr<KappaContext>(new KappaContext());
  ctx->kappa_ = kappa;
  ctx->rep_ = representation_for(tau);
  ctx->max_hook_ = hooks_and_dim(tau).max_hook;
  ctx->gamma_ = frac(tau.content_sum(), tau.size());
  if (!ctx->in_default_window()) {
    if (!policy.force)
      throw InadmissibleKappa("kappa = " + to_string(kappa) + " outside (-1/h, 1/h) with h = " +
                              std::to_string(ctx->max_hook_));
    for (int l = 1; l <= policy.degree_bound; ++l)
      for (int d = -(ctx->max_hook_ - 1); d <= ctx->max_hook_ - 1; ++d)
        if (sgn(Rational(l) + kappa * d) == 0)
          throw InadmissibleKappa("kappa = " + to_string(kappa) + " is a pole: " + std::to_string(l) +
                                  " + kappa*(" + std::to_string(d) + ") = 0");
  }
  return ctx;
}

bool KappaContext::in_default_window() const {
  return abs(kappa_) * max_hook_ < 1;
}

// --- VVPoly ---------------------------------------------------------------

namespace {

bool is_zero_vector(const RVector& v) {
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

void accumulate(VVPoly::TermMap& terms, const Exponent& alpha, const RVector& v, const Rational& scale) {
  if (sgn(scale) == 0 || is_zero_vector(v)) return;
  auto [it, inserted] = terms.try_emplace(alpha, v.size());
  RVector& dst = it->second;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) dst[k] += scale * v[k];
  if (is_zero_vector(dst)) terms.erase(it);
}

}  // namespace

VVPoly::VVPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidArgument("null context");
}

VVPoly VVPoly::constant(ContextPtr ctx, int tableau) {
  const int n = ctx->n_vars();
  return monomial(std::move(ctx), Exponent(n), tableau);
}

VVPoly VVPoly::monomial(ContextPtr ctx, const Exponent& alpha, int tableau, const Rational& coeff) {
  VVPoly p(std::move(ctx));
  p.add_term(alpha, tableau, coeff);
  return p;
}

VVPoly VVPoly::monomial(ContextPtr ctx, const Exponent& alpha, const RVector& value) {
  VVPoly p(std::move(ctx));
  p.add_vector(alpha, value);
  return p;
}

std::size_t VVPoly::term_count() const {
  std::size_t count = 0;
  for (const auto& [alpha, v] : terms_)
    for (const auto& q : v)
      if (sgn(q) != 0) ++count;
  return count;
}

Rational VVPoly::coefficient_of(const Exponent& alpha, int tableau) const {
  auto it = terms_.find(alpha);
  if (it == terms_.end()) return 0;
  return it->second.at(tableau);
}

RVector VVPoly::value_at(const Exponent& alpha) const {
  auto it = terms_.find(alpha);
  if (it == terms_.end()) return RVector(ctx_->dim());
  return it->second;
}

std::optional<int> VVPoly::degree() const {
  if (terms_.empty()) return 0;
  const int d = terms_.begin()->first.degree();
  for (const auto& [alpha, v] : terms_)
    if (alpha.degree() != d) return std::nullopt;
  return d;
}

bool VVPoly::has_negative_exponent() const {
  for (const auto& [alpha, v] : terms_)
    if (alpha.has_negative()) return true;
  return false;
}

std::map<int, VVPoly> VVPoly::split_by_degree() const {
  std::map<int, VVPoly> out;
  for (const auto& [alpha, v] : terms_) {
    auto [it, inserted] = out.try_emplace(alpha.degree(), ctx_);
    it->second.terms_.emplace(alpha, v);
  }
  return out;
}

void VVPoly::add_term(const Exponent& alpha, int tableau, const Rational& coeff) {
  if (alpha.size() != ctx_->n_vars()) throw InvalidArgument("exponent length does not match N");
  if (tableau < 0 || tableau >= ctx_->dim()) throw InvalidArgument("tableau index out of range");
  RVector v(ctx_->dim());
  v[tableau] = coeff;
  accumulate(terms_, alpha, v, 1);
}

void VVPoly::add_vector(const Exponent& alpha, const RVector& v, const Rational& scale) {
  if (alpha.size() != ctx_->n_vars()) throw InvalidArgument("exponent length does not match N");
  if (static_cast<int>(v.size()) != ctx_->dim()) throw InvalidArgument("value vector has wrong dimension");
  accumulate(terms_, alpha, v, scale);
}

void VVPoly::check_compatible(const VVPoly& other) const {
  if (ctx_ != other.ctx_) {
    if (!ctx_ || !other.ctx_ || ctx_->tau() != other.ctx_->tau() || ctx_->kappa() != other.ctx_->kappa())
      throw InvalidArgument("polynomials live in different contexts");
  }
}

VVPoly& VVPoly::operator+=(const VVPoly& other) {
  check_compatible(other);
  for (const auto& [alpha, v] : other.terms_) accumulate(terms_, alpha, v, 1);
  return *this;
}

VVPoly& VVPoly::operator-=(const VVPoly& other) {
  check_compatible(other);
  for (const auto& [alpha, v] : other.terms_) accumulate(terms_, alpha, v, -1);
  return *this;
}

VVPoly& VVPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, v] : terms_)
    for (auto& q : v) q *= s;
  return *this;
}

VVPoly VVPoly::operator-() const {
  VVPoly out(*this);
  return out *= -1;
}

VVPoly VVPoly::multiply_monomial(const Exponent& beta) const {
  if (beta.size() != ctx_->n_vars()) throw InvalidArgument("exponent length does not match N");
  VVPoly out(ctx_);
  for (const auto& [alpha, v] : terms_) {
    Exponent a = alpha;
    for (int i = 0; i < a.size(); ++i) a[i] += beta[i];
    out.terms_.emplace_hint(out.terms_.end(), a, v);
  }
  return out;
}

VVPoly VVPoly::multiply_variable(int i) const {
  Exponent e(ctx_->n_vars());
  e[i] = 1;
  return multiply_monomial(e);
}

VVPoly VVPoly::e_n_shift(int m) const {
  Exponent e(ctx_->n_vars());
  for (int i = 0; i < e.size(); ++i) e[i] = m;
  return multiply_monomial(e);
}

VVPoly VVPoly::swap_variables(int i, int j) const {
  VVPoly out(ctx_);
  for (const auto& [alpha, v] : terms_) {
    Exponent a = alpha;
    std::swap(a[i], a[j]);
    out.terms_.emplace(a, v);
  }
  return out;
}

VVPoly VVPoly::substitute_transposition(int i, int j) const {
  return swap_variables(i, j).apply_matrix(ctx_->rep().transposition(i, j));
}

VVPoly VVPoly::apply_matrix(const RMatrix& m) const {
  VVPoly out(ctx_);
  for (const auto& [alpha, v] : terms_) {
    RVector w = m.apply(v);
    if (!is_zero_vector(w)) out.terms_.emplace_hint(out.terms_.end(), alpha, std::move(w));
  }
  return out;
}

VVPoly VVPoly::derivative(int i) const {
  VVPoly out(ctx_);
  for (const auto& [alpha, v] : terms_) {
    if (alpha[i] == 0) continue;
    Exponent a = alpha;
    a[i] -= 1;
    accumulate(out.terms_, a, v, Rational(alpha[i]));
  }
  return out;
}

std::vector<std::complex<double>> VVPoly::evaluate(std::span<const std::complex<double>> x) const {
  using C = std::complex<double>;
  const int n = ctx_->n_vars();
  if (static_cast<int>(x.size()) != n) throw InvalidArgument("evaluation point has wrong length");
  const int dim = ctx_->dim();
  // Neumaier-compensated sums, real and imaginary parts separately.
  std::vector<C> sum(dim), comp(dim);
  auto add = [](double& s, double& c, double v) {
    double t = s + v;
    c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
    s = t;
  };
  for (const auto& [alpha, v] : terms_) {
    C mono = 1.0;
    for (int i = 0; i < n; ++i) mono *= std::pow(x[i], alpha[i]);
    for (int t = 0; t < dim; ++t) {
      if (sgn(v[t]) == 0) continue;
      C term = mono * to_double(v[t]);
      double sr = sum[t].real(), si = sum[t].imag(), cr = comp[t].real(), ci = comp[t].imag();
      add(sr, cr, term.real());
      add(si, ci, term.imag());
      sum[t] = {sr, si};
      comp[t] = {cr, ci};
    }
  }
  for (int t = 0; t < dim; ++t) sum[t] += comp[t];
  return sum;
}

Exponent permute_exponent(const Permutation& w, const Exponent& alpha) {
  Exponent out(alpha.size());
  // (w alpha)_{w(i)} = alpha_i
  for (int i = 0; i < alpha.size(); ++i) out[w(i)] = alpha[i];
  return out;
}

VVPoly act(const Permutation& w, const VVPoly& p) {
  const auto& ctx = p.context();
  if (w.size() != ctx->n_vars()) throw InvalidArgument("permutation size does not match N");
  const RMatrix& m = ctx->rep().word(w);
  VVPoly out(ctx);
  for (const auto& [alpha, v] : p.terms()) out.add_vector(permute_exponent(w, alpha), m.apply(v));
  return out;
}

}  // namespace vvjack
