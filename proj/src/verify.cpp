#include "vvjack/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vvjack/errors.hpp"
#include "vvjack/operators.hpp"

namespace vvjack {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_++ == 0) first_ = what;
  }
  CheckResult result() const {
    std::ostringstream s;
    s << (total_ - failures_) << "/" << total_ << " passed";
    if (failures_) s << "; first failure: " << first_;
    return CheckResult{name_, failures_ == 0 && total_ > 0, s.str()};
  }

 private:
  std::string name_;
  int total_ = 0;
  int failures_ = 0;
  std::string first_;
};

std::string label_text(std::span<const int> alpha, int t) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) s << (i ? "," : "") << alpha[i];
  s << "; T" << t << ")";
  return s.str();
}

}  // namespace

VVPoly random_poly(const ContextPtr& ctx, int max_degree, int terms, std::mt19937& rng) {
  const int n = ctx->n_vars();
  std::uniform_int_distribution<int> coeff(-6, 6), tab(0, ctx->dim() - 1), deg(0, max_degree), var(0, n - 1);
  VVPoly p(ctx);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> a(n, 0);
    const int d = deg(rng);
    for (int m = 0; m < d; ++m) ++a[var(rng)];
    int c = coeff(rng);
    if (c == 0) c = 1;
    p.add_term(Exponent(std::span<const int>(a)), tab(rng), Rational(c));
  }
  return p;
}

std::vector<CheckResult> verify_exact(const ContextPtr& ctx, const ExactSuiteOptions& opt) {
  std::vector<CheckResult> out;
  const int n = ctx->n_vars();
  const int dim = ctx->dim();
  const Representation& rep = ctx->rep();
  YangBaxterGraph graph(ctx, Schedule::leftmost);
  YangBaxterGraph mirror(ctx, Schedule::rightmost);

  Tally eigen("eigen: U_i zeta = xi_i zeta");
  Tally tri("triangularity: leading term and lower exponents");
  Tally sched("schedule independence");
  Tally norms("norms: closed form = edge recursion");
  Tally positive("norms: positivity");
  for (int d = 0; d <= opt.max_degree; ++d)
    for (const Composition& a : compositions(d, n))
      for (int t = 0; t < dim; ++t) {
        const std::string where = label_text(a, t);
        const GraphNode node = graph.node(a, t);
        const VVPoly& z = *node.zeta;
        for (int i = 0; i < n; ++i) eigen.check(cherednik(z, i) == z * node.xi[i], where);
        RVector e(dim);
        e[t] = 1;
        bool ok = z.value_at(Exponent(std::span<const int>(a))) == rep.word(node.rank.inverse()).apply(e);
        for (const auto& [ex, v] : z.terms()) {
          const Composition b = ex.to_composition();
          if (b != a && !graph_less(b, a)) ok = false;
        }
        tri.check(ok, where);
        sched.check(mirror.nsjp(a, t) == z, where);
        const Rational closed = norm(*ctx, a, t);
        norms.check(closed == edge_recursive_norm(graph, a, t), where);
        if (ctx->in_default_window()) positive.check(sgn(closed) > 0, where);
      }
  out.push_back(eigen.result());
  out.push_back(tri.result());
  out.push_back(sched.result());
  out.push_back(norms.result());
  if (ctx->in_default_window()) out.push_back(positive.result());

  std::mt19937 rng(opt.seed);
  const int pdeg = std::min(opt.max_degree, 3);

  Tally comm("operators: commutation relations");
  Tally dual("operators: dual Cherednik formula");
  Tally total("operators: sum U_i = sum x_i d_i + N + kappa S_1");
  Tally usym("operators: e_k(U) commutes with s_i");
  Tally dunkl_comm("operators: D_i D_j = D_j D_i");
  Tally shift("operators: U_i(e_N^m f) = m e_N^m f + e_N^m U_i f");
  for (int s = 0; s < opt.samples; ++s) {
    const VVPoly p = random_poly(ctx, pdeg, 3, rng);
    const std::string where = "sample " + std::to_string(s);
    for (int i = 0; i + 1 < n; ++i) {
      const Permutation si = Permutation::simple(n, i);
      const VVPoly sp = act(si, p);
      comm.check(act(si, cherednik(sp, i)) == cherednik(p, i + 1) + sp * ctx->kappa(), where);
      comm.check(cherednik(sp, i) == act(si, cherednik(p, i + 1)) + p * ctx->kappa(), where);
      for (int j = 0; j < n; ++j)
        if (j != i && j != i + 1) comm.check(act(si, cherednik(p, j)) == cherednik(sp, j), where);
    }
    for (int i = 0; i < n; ++i) {
      const VVPoly ui = cherednik(p, i);
      dual.check(ui == cherednik_via_xd(p, i), where);
      for (int j = i + 1; j < n; ++j) {
        comm.check(cherednik(ui, j) == cherednik(cherednik(p, j), i), where);
        dunkl_comm.check(dunkl(dunkl(p, i), j) == dunkl(dunkl(p, j), i), where);
      }
      shift.check(cherednik(p.e_n_shift(1), i) == p.e_n_shift(1) + cherednik(p, i).e_n_shift(1), where);
    }
    VVPoly lhs(ctx), rhs = p * (Rational(n) + ctx->kappa() * ctx->tau().content_sum());
    for (int i = 0; i < n; ++i) {
      lhs += cherednik(p, i);
      rhs += p.derivative(i).multiply_variable(i);
    }
    total.check(lhs == rhs, where);
    if (s < std::max(1, opt.samples / 4))
      for (int k = 1; k <= n; ++k) {
        const VVPoly ek = elementary_symmetric(p, k);
        for (int i = 0; i + 1 < n; ++i) {
          const Permutation si = Permutation::simple(n, i);
          usym.check(act(si, ek) == elementary_symmetric(act(si, p), k), where);
        }
      }
  }
  out.push_back(comm.result());
  out.push_back(dual.result());
  out.push_back(total.result());
  out.push_back(usym.result());
  out.push_back(dunkl_comm.result());
  out.push_back(shift.result());

  Tally expand("form: expansion reconstructs the input");
  Tally mult("form: <x_i f, x_i g> = <f, g>");
  Tally selfadj("form: <x_i D_i f, g> = <f, x_i D_i g>");
  Tally invariance("form: <w f, w g> = <f, g>");
  const int fdeg = std::min(opt.max_degree - 1, 2);
  if (fdeg >= 0) {
    for (int s = 0; s < std::max(1, opt.samples / 4); ++s) {
      const VVPoly f = random_poly(ctx, fdeg, 3, rng);
      const VVPoly g = random_poly(ctx, fdeg, 3, rng);
      const std::string where = "sample " + std::to_string(s);
      expand.check(reconstruct(graph, expand_in_nsjp(graph, f)) == f, where);
      const Rational fg = form(graph, f, g);
      std::uniform_int_distribution<int> var(0, n - 1);
      const int i = var(rng);
      mult.check(form(graph, f.multiply_variable(i), g.multiply_variable(i)) == fg, where);
      selfadj.check(form(graph, dunkl(f, i).multiply_variable(i), g) == form(graph, f, dunkl(g, i).multiply_variable(i)), where);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Permutation w = Permutation::from_one_line(perm);
      invariance.check(form(graph, act(w, f), act(w, g)) == fg, where);
    }
    out.push_back(expand.result());
    out.push_back(mult.result());
    out.push_back(selfadj.result());
    out.push_back(invariance.result());
  }

  if (!ctx->tau().is_one_dimensional()) {
    Tally sym("jack: s_i J = J");
    Tally lead("jack: coefficient of x^lambda (x) T_S is 1");
    Tally ham("jack: Hamiltonian eigenvalue");
    Tally jn("jack: closed norm = component sum");
    Tally count("jack: labels per degree = series coefficient");
    Tally group("jack: #G = N!/#labels");
    for (int d = 0; d <= opt.max_degree; ++d) {
      const auto labels = column_strict_labels(*ctx, d);
      count.check(static_cast<std::int64_t>(labels.size()) == jack_count(ctx->tau(), d, false), "degree " + std::to_string(d));
      for (const Label& l : labels) {
        const std::string where = label_text(l.alpha, l.tableau);
        const SymmetricJack j = jack(graph, l.alpha, l.tableau);
        bool ok = true;
        for (int i = 0; i + 1 < n; ++i) ok = ok && act(Permutation::simple(n, i), j.poly) == j.poly;
        sym.check(ok, where);
        lead.check(j.poly.coefficient_of(Exponent(std::span<const int>(l.alpha)), j.sink) == 1, where);
        ham.check(hamiltonian_poly(j.poly) == j.poly * j.eigenvalue, where);
        jn.check(j.norm == jack_norm_direct(*ctx, l.alpha, l.tableau), where);
        const ComponentSet cs = component(*ctx, l.alpha, l.tableau);
        group.check(cs.group_order == cs.group_order_generators, where);
      }
    }
    out.push_back(sym.result());
    out.push_back(lead.result());
    out.push_back(ham.result());
    out.push_back(jn.result());
    out.push_back(count.result());
    out.push_back(group.result());

    Tally minimal("jack: minimal construction agrees");
    const SymmetricJack mj = minimal_jack(ctx);
    if (ctx->tau().n_statistic() <= opt.max_degree + 2) {
      const SymmetricJack j = jack(graph, mj.lambda, mj.sink);
      minimal.check(mj.poly == j.poly, "polynomial");
      minimal.check(mj.norm == j.norm, "norm");
      minimal.check(mj.norm == jack_norm_direct(*ctx, mj.lambda, mj.sink), "direct norm");
      out.push_back(minimal.result());
    }
  }

  Tally s2("S_2 closed form = sum of squared contents");
  s2.check(s2_closed(ctx->tau()) == s2_contents(ctx->tau()), "S_2");
  out.push_back(s2.result());
  return out;
}

}  // namespace vvjack
