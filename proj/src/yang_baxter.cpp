#include "vvjack/yang_baxter.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "vvjack/errors.hpp"

namespace vvjack {

namespace {

void check_label(const KappaContext& ctx, std::span<const int> alpha, int tableau) {
  if (static_cast<int>(alpha.size()) != ctx.n_vars()) throw InvalidArgument("composition length does not match N");
  if (tableau < 0 || tableau >= ctx.dim()) throw InvalidArgument("tableau index out of range");
}

Rational checked_inverse(const Rational& q, const char* what) {
  if (sgn(q) == 0) throw InadmissibleKappa(std::string("vanishing denominator in ") + what);
  return 1 / q;
}

}  // namespace

RVector spectral_vector(const KappaContext& ctx, std::span<const int> alpha, int tableau) {
  check_label(ctx, alpha, tableau);
  const Permutation r = rank_perm(alpha);
  const Tableau& T = ctx.rep().tableau(tableau);
  RVector xi(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    xi[i] = Rational(alpha[i] + 1) + ctx.kappa() * T.content(r(static_cast<int>(i)) + 1);
  return xi;
}

Rational e_eps(const KappaContext& ctx, std::span<const int> alpha, int tableau, int eps) {
  check_label(ctx, alpha, tableau);
  const Permutation r = rank_perm(alpha);
  const Tableau& T = ctx.rep().tableau(tableau);
  const int n = static_cast<int>(alpha.size());
  Rational out = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (alpha[i] >= alpha[j]) continue;
      const Rational den = Rational(alpha[j] - alpha[i]) + ctx.kappa() * (T.content(r(j) + 1) - T.content(r(i) + 1));
      out *= 1 + eps * ctx.kappa() * checked_inverse(den, "E_eps");
    }
  return out;
}

Rational edge_coefficient(const KappaContext& ctx, const GraphNode& node, Edge edge) {
  const int n = ctx.n_vars();
  const int i = edge.i;
  switch (edge.kind) {
    case Edge::Kind::affine:
      return 0;
    case Edge::Kind::step:
      if (i < 0 || i + 1 >= n) throw InvalidArgument("step index out of range");
      if (!(node.alpha[i] < node.alpha[i + 1])) throw InvalidArgument("step s_i needs alpha_i < alpha_{i+1}");
      return ctx.kappa() * checked_inverse(node.xi[i] - node.xi[i + 1], "step coefficient");
    case Edge::Kind::jump: {
      if (i < 0 || i + 1 >= n) throw InvalidArgument("jump index out of range");
      if (node.alpha[i] != node.alpha[i + 1]) throw InvalidArgument("jump s_i needs alpha_i = alpha_{i+1}");
      const Tableau& T = ctx.rep().tableau(node.tableau);
      const int j = node.rank(i) + 1;
      const int diff = T.content(j) - T.content(j + 1);
      if (diff < 2) throw InvalidArgument("jump needs c(j,T) - c(j+1,T) >= 2");
      return frac(1, diff);
    }
  }
  throw InvalidArgument("unknown edge kind");
}

GraphNode apply_edge(const ContextPtr& ctx, const GraphNode& node, Edge edge) {
  const int n = ctx->n_vars();
  const Rational b = edge_coefficient(*ctx, node, edge);
  GraphNode out;
  out.tableau = node.tableau;
  if (edge.kind == Edge::Kind::affine) {
    out.alpha.assign(node.alpha.begin() + 1, node.alpha.end());
    out.alpha.push_back(node.alpha[0] + 1);
    out.xi.assign(node.xi.begin() + 1, node.xi.end());
    out.xi.push_back(node.xi[0] + 1);
    out.rank = node.rank * Permutation::cycle(n);
    if (node.zeta) {
      VVPoly z = act(Permutation::cycle(n).inverse(), *node.zeta).multiply_variable(n - 1);
      out.zeta = std::make_shared<const VVPoly>(std::move(z));
    }
    return out;
  }
  const int i = edge.i;
  const Permutation s = Permutation::simple(n, i);
  out.xi = node.xi;
  std::swap(out.xi[i], out.xi[i + 1]);
  if (edge.kind == Edge::Kind::step) {
    out.alpha = node.alpha;
    std::swap(out.alpha[i], out.alpha[i + 1]);
    out.rank = node.rank * s;
  } else {
    out.alpha = node.alpha;
    out.rank = node.rank;
    const Tableau& T = ctx->rep().tableau(node.tableau);
    out.tableau = ctx->rep().index_of(T.swapped(node.rank(i) + 1));
  }
  if (node.zeta) {
    VVPoly z = act(s, *node.zeta) - b * *node.zeta;
    out.zeta = std::make_shared<const VVPoly>(std::move(z));
  }
  return out;
}

std::optional<Predecessor> predecessor(const KappaContext& ctx, const Label& target, Schedule schedule) {
  const Composition& alpha = target.alpha;
  const int n = ctx.n_vars();
  const bool leftmost = schedule == Schedule::leftmost;
  if (std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; })) {
    if (target.tableau == 0) return std::nullopt;
    // Undo one jump: an adjacent pair j, j+1 with c(j) - c(j+1) <= -2.
    const Tableau& T = ctx.rep().tableau(target.tableau);
    int found = -1;
    for (int j = 1; j < n; ++j) {
      if (T.content(j) - T.content(j + 1) <= -2) {
        found = j;
        if (leftmost) break;
      }
    }
    if (found < 0) throw InvalidArgument("tableau is not reachable from the root by jumps");
    const int source = ctx.rep().index_of(T.swapped(found));
    return Predecessor{{alpha, source}, Edge::jump(found - 1)};
  }
  int descent = -1;
  for (int i = 0; i + 1 < n; ++i) {
    if (alpha[i] > alpha[i + 1]) {
      descent = i;
      if (leftmost) break;
    }
  }
  if (descent >= 0) {
    Composition src = alpha;
    std::swap(src[descent], src[descent + 1]);
    return Predecessor{{src, target.tableau}, Edge::step(descent)};
  }
  Composition src;
  src.push_back(alpha[n - 1] - 1);
  src.insert(src.end(), alpha.begin(), alpha.end() - 1);
  return Predecessor{{src, target.tableau}, Edge::affine()};
}

YangBaxterGraph::YangBaxterGraph(ContextPtr ctx, Schedule schedule) : ctx_(std::move(ctx)), schedule_(schedule) {
  if (!ctx_) throw InvalidArgument("null context");
}

std::size_t YangBaxterGraph::size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

std::shared_ptr<const VVPoly> YangBaxterGraph::get(const Label& label) {
  Slot* slot = nullptr;
  {
    std::lock_guard lock(mutex_);
    auto& entry = memo_[label];
    if (!entry) entry = std::make_unique<Slot>();
    slot = entry.get();
  }
  std::call_once(slot->once, [&] { slot->value = compute(label); });
  return slot->value;
}

std::shared_ptr<const VVPoly> YangBaxterGraph::compute(const Label& label) {
  const auto pred = predecessor(*ctx_, label, schedule_);
  if (!pred) return std::make_shared<const VVPoly>(VVPoly::constant(ctx_, 0));
  GraphNode source{pred->source.alpha, pred->source.tableau, spectral_vector(*ctx_, pred->source.alpha, pred->source.tableau),
                   rank_perm(pred->source.alpha), get(pred->source)};
  return apply_edge(ctx_, source, pred->edge).zeta;
}

const VVPoly& YangBaxterGraph::nsjp(std::span<const int> alpha, int tableau) {
  check_label(*ctx_, alpha, tableau);
  const int lo = *std::min_element(alpha.begin(), alpha.end());
  if (lo < 0) {
    // Laurent extension: zeta_alpha = e_N^{-m} zeta_{alpha + m 1}.
    Composition shifted(alpha.begin(), alpha.end());
    for (int& a : shifted) a -= lo;
    const VVPoly& base = nsjp(shifted, tableau);
    Label key{Composition(alpha.begin(), alpha.end()), tableau};
    Slot* slot = nullptr;
    {
      std::lock_guard lock(mutex_);
      auto& entry = memo_[key];
      if (!entry) entry = std::make_unique<Slot>();
      slot = entry.get();
    }
    std::call_once(slot->once, [&] { slot->value = std::make_shared<const VVPoly>(base.e_n_shift(lo)); });
    return *slot->value;
  }
  check_spectral_distinct(abs_degree(alpha));
  return *get(Label{Composition(alpha.begin(), alpha.end()), tableau});
}

GraphNode YangBaxterGraph::node(std::span<const int> alpha, int tableau) {
  const VVPoly& z = nsjp(alpha, tableau);
  GraphNode out;
  out.alpha.assign(alpha.begin(), alpha.end());
  out.tableau = tableau;
  out.rank = rank_perm(alpha);
  const int lo = *std::min_element(alpha.begin(), alpha.end());
  if (lo < 0) {
    // Eigenvalues shift with e_N^m.
    Composition shifted(alpha.begin(), alpha.end());
    for (int& a : shifted) a -= lo;
    out.xi = spectral_vector(*ctx_, shifted, tableau);
    for (auto& x : out.xi) x += lo;
  } else {
    out.xi = spectral_vector(*ctx_, alpha, tableau);
  }
  out.zeta = std::make_shared<const VVPoly>(z);
  return out;
}

std::vector<Edge> YangBaxterGraph::path(std::span<const int> alpha, int tableau) const {
  check_label(*ctx_, alpha, tableau);
  std::vector<Edge> edges;
  Label cur{Composition(alpha.begin(), alpha.end()), tableau};
  while (auto pred = predecessor(*ctx_, cur, schedule_)) {
    edges.push_back(pred->edge);
    cur = pred->source;
  }
  std::reverse(edges.begin(), edges.end());
  return edges;
}

void YangBaxterGraph::check_spectral_distinct(int degree) const {
  {
    std::lock_guard lock(mutex_);
    if (checked_degrees_.count(degree)) return;
  }
  std::set<RVector> seen;
  for (const auto& alpha : compositions(degree, ctx_->n_vars()))
    for (int t = 0; t < ctx_->dim(); ++t)
      if (!seen.insert(spectral_vector(*ctx_, alpha, t)).second)
        throw InadmissibleKappa("kappa = " + to_string(ctx_->kappa()) +
                                " gives coinciding spectral vectors in degree " + std::to_string(degree));
  std::lock_guard lock(mutex_);
  checked_degrees_.insert(degree);
}

std::vector<Composition> compositions(int n, int parts) {
  std::vector<Composition> out;
  if (parts <= 0) return out;
  Composition cur(parts, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == parts - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, n);
  return out;
}

}  // namespace vvjack
