#include "vvjack/symmetric_jack.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "vvjack/errors.hpp"

namespace vvjack {

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Composition checked_lambda(const KappaContext& ctx, std::span<const int> lambda) {
  if (static_cast<int>(lambda.size()) != ctx.n_vars()) throw InvalidArgument("lambda must have N parts");
  if (!is_partition(lambda)) throw InvalidArgument("lambda must be a nonincreasing nonnegative sequence");
  return Composition(lambda.begin(), lambda.end());
}

// Distinct rearrangements in lexicographic order.
std::vector<Composition> rearrangements(Composition a) {
  std::sort(a.begin(), a.end());
  std::vector<Composition> out;
  do out.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

// (a)_n = a (a+1) ... (a+n-1).
Rational pochhammer(const Rational& a, int n) {
  Rational out = 1;
  for (int k = 0; k < n; ++k) out *= a + k;
  return out;
}

}  // namespace

ComponentSet component(const KappaContext& ctx, std::span<const int> lambda, int tableau) {
  ComponentSet cs;
  cs.lambda = checked_lambda(ctx, lambda);
  if (tableau < 0 || tableau >= ctx.dim()) throw InvalidArgument("tableau index out of range");
  const Representation& rep = ctx.rep();
  cs.filling = floor_filling(cs.lambda, rep.tableau(tableau));
  if (!cs.filling.column_strict())
    throw InvalidArgument("floor(lambda, T) is not column-strict; no symmetric polynomial exists");
  const RootSink rs = root_sink(cs.filling);
  cs.root = Label{minus_rearrangement(cs.lambda), rep.index_of(rs.root)};
  cs.sink = Label{cs.lambda, rep.index_of(rs.sink)};
  for (const Composition& beta : rearrangements(cs.lambda))
    for (int t = 0; t < ctx.dim(); ++t)
      if (floor_filling(beta, rep.tableau(t)) == cs.filling) cs.labels.push_back(Label{beta, t});
  for (int t = 0; t < ctx.dim(); ++t)
    if (floor_filling(cs.lambda, rep.tableau(t)) == cs.filling) ++cs.tableau_count;
  const int n = ctx.n_vars();
  cs.group_order = factorial(n) / static_cast<std::int64_t>(cs.labels.size());
  const Tableau& ts = rep.tableau(cs.sink.tableau);
  cs.group_order_generators = 1;
  int run = 1;
  for (int i = 1; i <= n; ++i) {
    const bool link = i < n && cs.lambda[i - 1] == cs.lambda[i] && ts.row_of(i) == ts.row_of(i + 1);
    if (link) {
      ++run;
    } else {
      cs.group_order_generators *= factorial(run);
      run = 1;
    }
  }
  return cs;
}

Rational jack_coefficient(const KappaContext& ctx, const Label& sink, const Label& member) {
  const Representation& rep = ctx.rep();
  return c_eps(rep.tableau(sink.tableau), -1) / c_eps(rep.tableau(member.tableau), -1) *
         e_eps(ctx, member.alpha, member.tableau, -1);
}

SymmetricJack jack(YangBaxterGraph& graph, std::span<const int> lambda, int tableau, int shift) {
  const ContextPtr& ctx = graph.context();
  const ComponentSet cs = component(*ctx, lambda, tableau);
  SymmetricJack out;
  out.lambda = cs.lambda;
  out.sink = cs.sink.tableau;
  out.shift = shift;
  out.poly = VVPoly(ctx);
  for (const Label& l : cs.labels) out.poly += graph.nsjp(l.alpha, l.tableau) * jack_coefficient(*ctx, cs.sink, l);
  if (shift != 0) out.poly = out.poly.e_n_shift(shift);
  out.norm = jack_norm(*ctx, cs.lambda, cs.sink.tableau);
  out.eigenvalue = eigenvalue(*ctx, cs.lambda, cs.sink.tableau, shift);
  return out;
}

Rational jack_norm(const KappaContext& ctx, std::span<const int> lambda, int tableau) {
  const ComponentSet cs = component(ctx, lambda, tableau);
  const Representation& rep = ctx.rep();
  const Rational e1 = e_eps(ctx, cs.root.alpha, cs.root.tableau, 1);
  if (sgn(e1) == 0) throw InadmissibleKappa("E_1 vanishes at the root");
  return Rational(static_cast<long>(cs.labels.size())) * c_eps(rep.tableau(cs.root.tableau), 1) /
         (c_eps(rep.tableau(cs.sink.tableau), 1) * e1) * norm_partition(ctx, cs.lambda, cs.sink.tableau);
}

Rational jack_norm_direct(const KappaContext& ctx, std::span<const int> lambda, int tableau) {
  const ComponentSet cs = component(ctx, lambda, tableau);
  Rational out = 0;
  for (const Label& l : cs.labels) {
    const Rational a = jack_coefficient(ctx, cs.sink, l);
    out += a * a * norm(ctx, l.alpha, l.tableau);
  }
  return out;
}

Composition minimal_lambda(const Partition& tau) {
  Composition lambda;
  for (int row = tau.length() - 1; row >= 0; --row) lambda.insert(lambda.end(), tau[row], row);
  return lambda;
}

SymmetricJack minimal_jack(const ContextPtr& ctx) {
  const Partition& tau = ctx->tau();
  if (tau.is_one_dimensional()) throw InvalidShape("the minimal construction needs dim V_tau >= 2");
  const Representation& rep = ctx->rep();
  const int n = ctx->n_vars();
  // Scalar polynomials live in coordinate 0 of a VVPoly.
  auto scalar_one = [&] { return VVPoly::constant(ctx, 0); };
  // a(x; n1, n2) = prod_{n1 <= i < j <= n2} (x_i - x_j), 1-based.
  auto vandermonde = [&](int n1, int n2) {
    VVPoly p = scalar_one();
    for (int i = n1; i <= n2; ++i)
      for (int j = i + 1; j <= n2; ++j) p = p.multiply_variable(i - 1) - p.multiply_variable(j - 1);
    return p;
  };
  const Partition tt = tau.transpose();
  VVPoly p0 = scalar_one();
  int k_prev = n;
  for (int j = 0; j < tt.length(); ++j) {
    const int k = k_prev - tt[j];
    VVPoly a = vandermonde(k + 1, k_prev);
    // Scalar product, term by term.
    VVPoly next(ctx);
    for (const auto& [ea, va] : a.terms()) next += p0.multiply_monomial(ea) * va[0];
    p0 = next;
    k_prev = k;
  }
  // p_{T^(i)} = s_i p_T - b p_T with b = 1 / (c(i,T) - c(i+1,T)) >= 2 gap.
  std::vector<std::optional<VVPoly>> p(rep.dim());
  p[0] = p0;
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int t = queue[q];
    const Tableau& T = rep.tableau(t);
    for (int i = 1; i < n; ++i) {
      const int d = T.content(i) - T.content(i + 1);
      if (d < 2) continue;
      const int u = rep.index_of(T.swapped(i));
      if (p[u]) continue;
      p[u] = p[t]->swap_variables(i - 1, i) - *p[t] * frac(1, d);
      queue.push_back(u);
    }
  }
  SymmetricJack out;
  out.lambda = minimal_lambda(tau);
  Filling f{tau, {}};
  for (int row = 0; row < tau.length(); ++row) f.rows.emplace_back(tau[row], row);
  out.sink = rep.index_of(root_sink(f).sink);
  out.poly = VVPoly(ctx);
  const Rational& ns = rep.norms0()[out.sink];
  for (int t = 0; t < rep.dim(); ++t) {
    if (!p[t]) throw NumericError("tableau not reached by the Specht recursion");
    const Rational scale = ns / rep.norms0()[t];
    for (const auto& [e, v] : p[t]->terms()) out.poly.add_term(e, t, v[0] * scale);
  }
  out.norm = minimal_jack_norm(*ctx);
  out.eigenvalue = eigenvalue(*ctx, out.lambda, out.sink, 0);
  return out;
}

Rational minimal_jack_norm(const KappaContext& ctx) {
  const Partition& tau = ctx.tau();
  if (tau.is_one_dimensional()) throw InvalidShape("the minimal construction needs dim V_tau >= 2");
  const Representation& rep = ctx.rep();
  const Composition lambda = minimal_lambda(tau);
  Filling f{tau, {}};
  for (int row = 0; row < tau.length(); ++row) f.rows.emplace_back(tau[row], row);
  const int sink = rep.index_of(root_sink(f).sink);
  std::int64_t denom = 1;
  for (int part : tau.parts()) denom *= factorial(part);
  Rational out = Rational(static_cast<long>(factorial(tau.size()))) / static_cast<long>(denom) * rep.norms0()[sink];
  const Partition tt = tau.transpose();
  const HookData hd = hooks_and_dim(tau);
  const Rational& k = ctx.kappa();
  for (const auto& [cell, h] : hd.hooks) {
    const int i = cell.row + 1, j = cell.col + 1;
    const int leg = tt[j - 1] - i;
    const Rational den = pochhammer(1 + k * (j - i), i - 1);
    if (sgn(den) == 0) throw InadmissibleKappa("vanishing Pochhammer denominator");
    out *= pochhammer(1 - k * h, leg) / den;
  }
  return out;
}

Rational s2_closed(const Partition& tau) {
  Rational out = 0;
  for (int i = 1; i <= tau.length(); ++i) {
    const long t = tau[i - 1];
    out += Rational(t * (t + 1) * (2 * t + 1)) / 6 - Rational(i * t * (t + 1)) + Rational(static_cast<long>(i) * i * t);
  }
  return out;
}

Rational s2_contents(const Partition& tau) {
  long out = 0;
  for (int i = 0; i < tau.length(); ++i)
    for (int j = 0; j < tau[i]; ++j) out += static_cast<long>(j - i) * (j - i);
  return out;
}

Rational eigenvalue(const KappaContext& ctx, std::span<const int> lambda, int tableau, int m) {
  const Composition l = checked_lambda(ctx, lambda);
  if (tableau < 0 || tableau >= ctx.dim()) throw InvalidArgument("tableau index out of range");
  const Tableau& T = ctx.rep().tableau(tableau);
  const int n = ctx.n_vars();
  Rational out = 0;
  for (int i = 0; i < n; ++i) {
    const Rational d = l[i] + ctx.kappa() * (T.content(i + 1) - ctx.gamma());
    out += d * d;
  }
  out += Rational(2 * m * abs_degree(l)) + Rational(n * m * m);
  return out;
}

std::vector<Label> column_strict_labels(const KappaContext& ctx, int n) {
  std::vector<Label> out;
  const Representation& rep = ctx.rep();
  for (const Composition& lambda : partitions_of(n, ctx.n_vars())) {
    std::set<Filling> seen;
    for (int t = 0; t < ctx.dim(); ++t) {
      Filling f = floor_filling(lambda, rep.tableau(t));
      if (!f.column_strict() || !seen.insert(f).second) continue;
      out.push_back(Label{lambda, rep.index_of(root_sink(f).sink)});
    }
  }
  return out;
}

std::vector<Composition> partitions_of(int n, int k) {
  std::vector<Composition> out;
  if (n < 0 || k <= 0) return out;
  Composition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (static_cast<int>(cur.size()) == k) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = std::min(left, max_part); v >= 0; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace vvjack
