#include "vvjack/io.hpp"

#include <charconv>

#include "vvjack/errors.hpp"

namespace vvjack::io {

namespace {

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(',', start);
    std::string_view part = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    out.push_back(part);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view s) {
  int v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::string edge_name(const Edge& e) {
  switch (e.kind) {
    case Edge::Kind::affine:
      return "affine";
    case Edge::Kind::step:
      return "step s" + std::to_string(e.i + 1);
    case Edge::Kind::jump:
      return "jump s" + std::to_string(e.i + 1);
  }
  return "?";
}

}  // namespace

Partition parse_partition(std::string_view text) {
  if (text.empty()) throw InvalidShape("empty partition");
  std::vector<int> parts;
  for (auto p : split(text)) parts.push_back(parse_int(p));
  Partition out(parts);
  if (out.empty()) throw InvalidShape("empty partition");
  return out;
}

Composition parse_composition(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty composition");
  Composition out;
  for (auto p : split(text)) out.push_back(parse_int(p));
  return out;
}

int parse_tableau(const Representation& rep, std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty tableau designation");
  if (text.find(',') != std::string_view::npos) {
    const Composition c = parse_composition(text);
    const int t = rep.index_of(c);
    if (t < 0) throw InvalidArgument("no tableau with content vector " + std::string(text));
    return t;
  }
  if (text.front() == 'T' || text.front() == 't') text.remove_prefix(1);
  const int t = parse_int(text);
  if (t < 0 || t >= rep.dim()) throw InvalidArgument("tableau index out of range: " + std::string(text));
  return t;
}

std::vector<double> parse_doubles(std::string_view text) {
  std::vector<double> out;
  for (auto p : split(text)) {
    try {
      std::size_t used = 0;
      const std::string s(p);
      out.push_back(std::stod(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
      throw InvalidArgument("expected a number, got '" + std::string(p) + "'");
    }
  }
  return out;
}

json rational(const Rational& q) { return to_string(q); }

json rationals(const RVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json tableau(const Representation& rep, int t) {
  const Tableau& T = rep.tableau(t);
  return json{{"index", t}, {"name", "T" + std::to_string(t)}, {"rows", T.rows()}, {"content", T.content_vector()}};
}

json poly(const VVPoly& p) {
  json terms = json::array();
  for (const auto& [e, v] : p.terms())
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (sgn(v[t]) == 0) continue;
      terms.push_back(json{{"exponent", e.to_composition()}, {"tableau", t}, {"coeff", to_string(v[t])}});
    }
  const auto d = p.degree();
  json out{{"n_vars", p.context() ? p.context()->n_vars() : 0}, {"degree", nullptr}, {"terms", terms}};
  if (d) out["degree"] = *d;
  return out;
}

json matrix(const CMatrix& m) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ri = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return json{{"re", re}, {"im", im}};
}

json error(const Error& e) { return error(e.kind(), e.what()); }

json error(std::string_view kind, std::string_view message) {
  return json{{"error", std::string(kind)}, {"message", std::string(message)}};
}

json tableaux_report(const Partition& tau) {
  const auto rep = representation_for(tau);
  const HookData hd = hooks_and_dim(tau);
  json list = json::array();
  for (int t = 0; t < rep->dim(); ++t) {
    json e = tableau(*rep, t);
    const Tableau& T = rep->tableau(t);
    e["norm0"] = to_string(rep->norms0()[t]);
    e["c_plus"] = to_string(c_eps(T, 1));
    e["c_minus"] = to_string(c_eps(T, -1));
    e["inv"] = inv(T);
    list.push_back(e);
  }
  json hooks = json::array();
  for (int i = 0; i < tau.length(); ++i) {
    json row = json::array();
    for (int j = 0; j < tau[i]; ++j) row.push_back(hd.hooks.at(Cell{i, j}));
    hooks.push_back(row);
  }
  return json{{"tau", tau.parts()},   {"N", tau.size()},  {"dim", hd.dim},         {"max_hook", hd.max_hook},
              {"hooks", hooks},       {"n_tau", tau.n_statistic()}, {"content_sum", tau.content_sum()},
              {"tableaux", list}};
}

json nsjp_report(YangBaxterGraph& graph, std::span<const int> alpha, int t) {
  const KappaContext& ctx = *graph.context();
  const GraphNode node = graph.node(alpha, t);
  json path = json::array();
  const int lo = *std::min_element(alpha.begin(), alpha.end());
  if (lo >= 0)
    for (const Edge& e : graph.path(alpha, t)) path.push_back(edge_name(e));
  return json{{"tau", ctx.tau().parts()},
              {"kappa", to_string(ctx.kappa())},
              {"alpha", node.alpha},
              {"tableau", tableau(ctx.rep(), t)},
              {"spectral_vector", rationals(node.xi)},
              {"norm", to_string(norm(ctx, alpha, t))},
              {"path", path},
              {"polynomial", poly(*node.zeta)}};
}

json norm_report(YangBaxterGraph& graph, std::span<const int> alpha, int t) {
  const KappaContext& ctx = *graph.context();
  const Rational closed = norm(ctx, alpha, t);
  const Rational recursive = edge_recursive_norm(graph, alpha, t);
  return json{{"tau", ctx.tau().parts()},
              {"kappa", to_string(ctx.kappa())},
              {"alpha", Composition(alpha.begin(), alpha.end())},
              {"tableau", tableau(ctx.rep(), t)},
              {"norm", to_string(closed)},
              {"edge_recursive", to_string(recursive)},
              {"agree", closed == recursive},
              {"E_plus", to_string(e_eps(ctx, alpha, t, 1))},
              {"E_minus", to_string(e_eps(ctx, alpha, t, -1))}};
}

json jack_report(const KappaContext& ctx, const SymmetricJack& j) {
  const ComponentSet cs = component(ctx, j.lambda, j.sink);
  json labels = json::array();
  for (const Label& l : cs.labels)
    labels.push_back(json{{"alpha", l.alpha}, {"tableau", l.tableau}, {"coeff", to_string(jack_coefficient(ctx, cs.sink, l))}});
  return json{{"tau", ctx.tau().parts()},
              {"kappa", to_string(ctx.kappa())},
              {"lambda", j.lambda},
              {"shift", j.shift},
              {"tableau", tableau(ctx.rep(), j.sink)},
              {"root", json{{"alpha", cs.root.alpha}, {"tableau", cs.root.tableau}}},
              {"filling", cs.filling.rows},
              {"group_order", cs.group_order},
              {"component", labels},
              {"norm", to_string(j.norm)},
              {"eigenvalue", to_string(j.eigenvalue)},
              {"coefficients", poly(j.poly)}};
}

json count_report(const Partition& tau, int max_degree, bool restrict_last_zero, const KappaContext* ctx) {
  if (max_degree < 0) throw InvalidArgument("max degree must be nonnegative");
  json out{{"tau", tau.parts()},
           {"n_tau", tau.n_statistic()},
           {"restricted", restrict_last_zero},
           {"series", jack_count_series(tau, max_degree, restrict_last_zero)}};
  if (ctx) {
    json rows = json::array();
    for (int d = 0; d <= max_degree; ++d) {
      json eig = json::array();
      std::int64_t count = 0;
      for (const Label& l : column_strict_labels(*ctx, d)) {
        if (restrict_last_zero && l.alpha.back() != 0) continue;
        ++count;
        eig.push_back(json{{"lambda", l.alpha}, {"tableau", l.tableau}, {"eigenvalue", to_string(eigenvalue(*ctx, l.alpha, l.tableau))}});
      }
      rows.push_back(json{{"degree", d}, {"count", count}, {"labels", eig}});
    }
    out["kappa"] = to_string(ctx->kappa());
    out["enumerated"] = rows;
  }
  return out;
}

json integrate_report(const TorusSystem& sys, const TorusMatrix& l) {
  return json{{"tau", sys.rep().shape().parts()},
              {"kappa", sys.kappa()},
              {"theta", l.point.angles()},
              {"tol", l.tol},
              {"basis", "orthonormal"},
              {"L", matrix(l.value)},
              {"det", json{{"re", l.value.determinant().real()}, {"im", l.value.determinant().imag()}}}};
}

json jack_components_report(YangBaxterGraph& graph, std::span<const int> lambda, int shift) {
  const KappaContext& ctx = *graph.context();
  const Composition lam(lambda.begin(), lambda.end());
  json list = json::array();
  for (const Label& l : column_strict_labels(ctx, abs_degree(lambda)))
    if (l.alpha == lam) list.push_back(jack_report(ctx, jack(graph, l.alpha, l.tableau, shift)));
  if (list.empty()) throw InvalidArgument("no column-strict filling exists for this lambda");
  return json{{"tau", ctx.tau().parts()}, {"kappa", to_string(ctx.kappa())}, {"lambda", lam}, {"jacks", list}};
}

json checks_report(const KappaContext& ctx, const std::vector<CheckResult>& results) {
  json checks = json::array();
  bool all = true;
  for (const auto& r : results) {
    checks.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return json{{"passed", all}, {"checks", checks}, {"tau", ctx.tau().parts()}, {"kappa", to_string(ctx.kappa())}};
}

}  // namespace vvjack::io
