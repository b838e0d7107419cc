#include "vvjack/operators.hpp"

#include "vvjack/errors.hpp"

namespace vvjack {

namespace {

void check_index(const VVPoly& p, int i) {
  if (i < 0 || i >= p.context()->n_vars()) throw InvalidArgument("variable index out of range");
}

void check_polynomial(const VVPoly& p) {
  if (p.has_negative_exponent()) throw InvalidArgument("Dunkl operators need polynomial (non-Laurent) input");
}

}  // namespace

VVPoly dunkl(const VVPoly& p, int i) {
  check_index(p, i);
  check_polynomial(p);
  const auto& ctx = p.context();
  const int n = ctx->n_vars();
  const Rational& kappa = ctx->kappa();
  VVPoly out = p.derivative(i);
  if (sgn(kappa) == 0) return out;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const RMatrix& tij = ctx->rep().transposition(i, j);
    for (const auto& [alpha, v] : p.terms()) {
      const int a = alpha[i], b = alpha[j];
      if (a == b) continue;
      // (x_i^a x_j^b - x_i^b x_j^a)/(x_i - x_j) = sign * (x_i x_j)^lo * sum_k x_i^{d-1-k} x_j^k
      const int lo = a < b ? a : b;
      const int d = a < b ? b - a : a - b;
      const Rational scale = a > b ? kappa : Rational(-kappa);
      const RVector tv = tij.apply(v);
      Exponent e = alpha;
      for (int k = 0; k < d; ++k) {
        e[i] = lo + d - 1 - k;
        e[j] = lo + k;
        out.add_vector(e, tv, scale);
      }
    }
  }
  return out;
}

VVPoly cherednik(const VVPoly& p, int i) {
  check_index(p, i);
  check_polynomial(p);
  const auto& ctx = p.context();
  VVPoly out = dunkl(p.multiply_variable(i), i);
  if (sgn(ctx->kappa()) == 0) return out;
  for (int j = 0; j < i; ++j) {
    VVPoly s = p.substitute_transposition(i, j);
    s *= ctx->kappa();
    out -= s;
  }
  return out;
}

VVPoly cherednik_via_xd(const VVPoly& p, int i) {
  check_index(p, i);
  check_polynomial(p);
  const auto& ctx = p.context();
  VVPoly out = dunkl(p, i).multiply_variable(i);
  out += p;
  for (int j = i + 1; j < ctx->n_vars(); ++j) {
    VVPoly s = p.substitute_transposition(i, j);
    s *= ctx->kappa();
    out += s;
  }
  return out;
}

VVPoly hamiltonian_poly(const VVPoly& p) {
  const auto& ctx = p.context();
  const Rational shift = 1 + ctx->kappa() * ctx->gamma();
  VVPoly out(ctx);
  for (int i = 0; i < ctx->n_vars(); ++i) {
    VVPoly q = cherednik(p, i) - shift * p;
    out += cherednik(q, i) - shift * q;
  }
  return out;
}

VVPoly power_sum(const VVPoly& p, int m) {
  const auto& ctx = p.context();
  VVPoly out(ctx);
  for (int i = 0; i < ctx->n_vars(); ++i) {
    VVPoly q = p;
    for (int k = 0; k < m; ++k) q = cherednik(q, i);
    out += q;
  }
  return out;
}

VVPoly elementary_symmetric(const VVPoly& p, int k) {
  // Coefficient of t^k in prod_i (1 + t U_i), built factor by factor.
  const auto& ctx = p.context();
  const int n = ctx->n_vars();
  std::vector<VVPoly> coeffs(k + 1, VVPoly(ctx));
  coeffs[0] = p;
  for (int i = 0; i < n; ++i)
    for (int d = k; d >= 1; --d) coeffs[d] += cherednik(coeffs[d - 1], i);
  return coeffs[k];
}

VVPoly OperatorHandle::operator()(const VVPoly& p) const {
  switch (kind) {
    case Kind::dunkl:
      return dunkl(p, index);
    case Kind::cherednik:
      return cherednik(p, index);
    case Kind::hamiltonian:
      return hamiltonian_poly(p);
    case Kind::power_sum:
      return power_sum(p, index);
  }
  throw InvalidArgument("unknown operator kind");
}

}  // namespace vvjack
