#include "vvjack/hermitian.hpp"

#include <algorithm>

#include "vvjack/errors.hpp"

namespace vvjack {

namespace {

void check_label(const KappaContext& ctx, std::span<const int> alpha, int tableau) {
  if (static_cast<int>(alpha.size()) != ctx.n_vars()) throw InvalidArgument("composition length does not match N");
  if (tableau < 0 || tableau >= ctx.dim()) throw InvalidArgument("tableau index out of range");
}

}  // namespace

Rational norm_partition(const KappaContext& ctx, std::span<const int> lambda, int tableau) {
  check_label(ctx, lambda, tableau);
  if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()))
    throw InvalidArgument("norm_partition needs a nonincreasing index");
  const Tableau& T = ctx.rep().tableau(tableau);
  const Rational& k = ctx.kappa();
  const int n = ctx.n_vars();
  Rational out = ctx.rep().norms0()[tableau];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = 1; l <= lambda[i] - lambda[j]; ++l) {
        const Rational den = l + k * (T.content(i + 1) - T.content(j + 1));
        if (sgn(den) == 0) throw InadmissibleKappa("vanishing denominator in the norm formula");
        const Rational q = k / den;
        out *= 1 - q * q;
      }
  return out;
}

Rational norm(const KappaContext& ctx, std::span<const int> alpha, int tableau) {
  check_label(ctx, alpha, tableau);
  Composition a(alpha.begin(), alpha.end());
  const int lo = *std::min_element(a.begin(), a.end());
  if (lo < 0)
    for (int& x : a) x -= lo;
  const Composition lambda = plus_rearrangement(a);
  const Rational e = e_eps(ctx, a, tableau, 1) * e_eps(ctx, a, tableau, -1);
  if (sgn(e) == 0) throw InadmissibleKappa("E_1 E_{-1} vanishes");
  return norm_partition(ctx, lambda, tableau) / e;
}

Rational edge_recursive_norm(const YangBaxterGraph& graph, std::span<const int> alpha, int tableau) {
  const ContextPtr& ctx = graph.context();
  check_label(*ctx, alpha, tableau);
  Composition a(alpha.begin(), alpha.end());
  const int lo = *std::min_element(a.begin(), a.end());
  if (lo < 0)
    for (int& x : a) x -= lo;
  const int n = ctx->n_vars();
  GraphNode node;
  node.alpha.assign(n, 0);
  node.tableau = 0;
  node.xi = spectral_vector(*ctx, node.alpha, 0);
  node.rank = Permutation::identity(n);
  Rational out = ctx->rep().norms0()[0];
  for (const Edge& e : graph.path(a, tableau)) {
    if (e.kind != Edge::Kind::affine) {
      const Rational b = edge_coefficient(*ctx, node, e);
      out *= 1 - b * b;
    }
    node = apply_edge(ctx, node, e);
  }
  return out;
}

Rational hamiltonian_eigenvalue(const KappaContext& ctx, std::span<const int> alpha, int tableau) {
  check_label(ctx, alpha, tableau);
  Composition a(alpha.begin(), alpha.end());
  const int lo = *std::min_element(a.begin(), a.end());
  if (lo < 0)
    for (int& x : a) x -= lo;
  const Rational shift = 1 + ctx.kappa() * ctx.gamma() - lo;
  Rational out = 0;
  for (const Rational& x : spectral_vector(ctx, a, tableau)) {
    const Rational d = x - shift;
    out += d * d;
  }
  return out;
}

Expansion expand_in_nsjp(YangBaxterGraph& graph, const VVPoly& p) {
  if (p.has_negative_exponent()) throw InvalidArgument("expand_in_nsjp needs a polynomial");
  const ContextPtr& ctx = graph.context();
  const int dim = ctx->dim();
  Expansion out;
  VVPoly rest = p;
  auto precedes = [](const Exponent& a, const Exponent& b) {
    const Composition ca = a.to_composition(), cb = b.to_composition();
    return graph_linear_less(ca, cb);
  };
  while (!rest.is_zero()) {
    // Greatest exponent among the highest degree present.
    const auto& terms = rest.terms();
    auto top = terms.begin();
    for (auto it = terms.begin(); it != terms.end(); ++it) {
      const int dt = top->first.degree(), di = it->first.degree();
      if (di > dt || (di == dt && precedes(top->first, it->first))) top = it;
    }
    const Exponent alpha = top->first;
    const Composition a = alpha.to_composition();
    // The leading vector of zeta_{alpha,T} is tau(r_alpha^{-1}) T.
    const RVector c = ctx->rep().word(rank_perm(a)).apply(top->second);
    for (int t = 0; t < dim; ++t) {
      if (sgn(c[t]) == 0) continue;
      out[Label{a, t}] += c[t];
      rest -= graph.nsjp(a, t) * c[t];
    }
    if (rest.terms().count(alpha))
      throw NumericError("triangular elimination failed to clear a leading exponent");
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

VVPoly reconstruct(YangBaxterGraph& graph, const Expansion& coeffs) {
  VVPoly out(graph.context());
  for (const auto& [label, c] : coeffs) out += graph.nsjp(label.alpha, label.tableau) * c;
  return out;
}

Rational form(YangBaxterGraph& graph, const VVPoly& f, const VVPoly& g) {
  const Expansion ef = expand_in_nsjp(graph, f);
  const Expansion eg = expand_in_nsjp(graph, g);
  Rational out = 0;
  for (const auto& [label, c] : ef) {
    auto it = eg.find(label);
    if (it == eg.end()) continue;
    out += c * it->second * norm(*graph.context(), label.alpha, label.tableau);
  }
  return out;
}

}  // namespace vvjack
