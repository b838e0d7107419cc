#include <doctest.h>

#include "support.hpp"
#include "vvjack/errors.hpp"

using namespace vvjack;
using namespace testsupport;

TEST_CASE("worked example for tau = (2,1)") {
  for (const char* k : {"1/10", "-1/7"}) {
    auto c = ctx({2, 1}, k);
    const Rational kappa = c->kappa();
    std::vector<int> a{0, 1, 1};
    CHECK(spectral_vector(*c, a, 0) == RVector{1, 2 + kappa, 2 - kappa});
    CHECK(spectral_vector(*c, a, 1) == RVector{1, 2 - kappa, 2 + kappa});

    YangBaxterGraph g(c);
    GraphNode n0 = g.node(a, 0);
    CHECK(edge_coefficient(*c, n0, Edge::step(0)) == -kappa / (1 + kappa));
    CHECK(edge_coefficient(*c, n0, Edge::jump(1)) == q("1/2"));

    // The step s_1 gives zeta_{(1,0,1),T_0} = s_1 zeta + kappa/(1+kappa) zeta.
    GraphNode stepped = apply_edge(c, n0, Edge::step(0));
    CHECK(stepped.alpha == Composition{1, 0, 1});
    VVPoly want = n0.zeta->substitute_transposition(0, 1) + *n0.zeta * (kappa / (1 + kappa));
    CHECK(*stepped.zeta == want);
    CHECK(*stepped.zeta == g.nsjp(std::vector<int>{1, 0, 1}, 0));

    GraphNode jumped = apply_edge(c, n0, Edge::jump(1));
    CHECK(jumped.alpha == a);
    CHECK(jumped.tableau == 1);
    CHECK(*jumped.zeta == g.nsjp(a, 1));

    CHECK(e_eps(*c, a, 0, 1) == (1 + kappa / (1 + kappa)) * (1 + kappa / (1 - kappa)));
    CHECK(e_eps(*c, a, 0, -1) == (1 - kappa / (1 + kappa)) * (1 - kappa / (1 - kappa)));
    std::vector<int> part{1, 1, 0};
    CHECK(e_eps(*c, part, 0, 1) == 1);
  }
}

TEST_CASE("edge preconditions and the affine edge") {
  auto c = ctx({2, 2}, "1/10");
  YangBaxterGraph g(c);
  std::vector<int> a{0, 3, 5, 0};
  GraphNode n = g.node(a, 0);
  GraphNode m = apply_edge(c, n, Edge::affine());
  CHECK(m.alpha == Composition{3, 5, 0, 1});
  CHECK(m.rank.one_line() == std::vector<int>{2, 1, 4, 3});
  CHECK(m.xi == RVector{n.xi[1], n.xi[2], n.xi[3], n.xi[0] + 1});
  CHECK(*m.zeta == g.nsjp(std::vector<int>{3, 5, 0, 1}, 0));
  CHECK_THROWS_AS(apply_edge(c, n, Edge::step(2)), InvalidArgument);
  CHECK_THROWS_AS(apply_edge(c, g.node(std::vector<int>{1, 1, 0, 0}, 1), Edge::step(0)), InvalidArgument);
}

TEST_CASE("root and jump-only nodes") {
  auto c = ctx({3, 1}, "2/17");
  YangBaxterGraph g(c);
  std::vector<int> z(4, 0);
  CHECK(g.nsjp(z, 0) == VVPoly::constant(c, 0));
  RVector xi0 = spectral_vector(*c, z, 0);
  for (int i = 0; i < 4; ++i) CHECK(xi0[i] == 1 + c->kappa() * c->rep().tableau(0).content(i + 1));
  CHECK_FALSE(predecessor(*c, {z, 0}, Schedule::leftmost).has_value());
  for (int t = 0; t < c->dim(); ++t) {
    CHECK(g.nsjp(z, t) == VVPoly::constant(c, t));
    for (const Edge& e : g.path(z, t)) CHECK(e.kind == Edge::Kind::jump);
  }
}

TEST_CASE("eigen-equations, leading term and lower terms") {
  for (auto shape : {std::vector<int>{2, 1}, std::vector<int>{2, 2}, std::vector<int>{3, 1}}) {
    auto c = ctx(shape, "-1/7");
    const int n = c->n_vars();
    YangBaxterGraph g(c);
    for (int d = 0; d <= 3; ++d)
      for (const Composition& a : compositions(d, n))
        for (int t = 0; t < c->dim(); ++t) {
          const VVPoly& z = g.nsjp(a, t);
          RVector xi = spectral_vector(*c, a, t);
          for (int i = 0; i < n; ++i) CHECK(cherednik(z, i) == z * xi[i]);
          // Leading coefficient vector tau(r_alpha^{-1}) T.
          RVector unit(c->dim());
          unit[t] = 1;
          CHECK(z.value_at(Exponent(std::span<const int>(a))) == c->rep().word(rank_perm(a).inverse()).apply(unit));
          for (const auto& [e, v] : z.terms()) {
            Composition b = e.to_composition();
            if (b != a) CHECK(orders(b, a).graph);
          }
        }
  }
}

TEST_CASE("schedules agree and the graph memoizes") {
  auto c = ctx({2, 1, 1}, "1/10");
  YangBaxterGraph left(c, Schedule::leftmost), right(c, Schedule::rightmost);
  for (const Composition& a : compositions(3, 4))
    for (int t = 0; t < c->dim(); ++t) CHECK(left.nsjp(a, t) == right.nsjp(a, t));
  std::size_t before = left.size();
  left.nsjp(std::vector<int>{1, 0, 2, 0}, 2);
  CHECK(left.size() == before);
}

TEST_CASE("Laurent labels") {
  auto c = ctx({2, 1}, "1/10");
  YangBaxterGraph g(c);
  std::vector<int> a{-1, 0, 0};
  VVPoly z = g.nsjp(a, 1);
  CHECK(z == g.nsjp(std::vector<int>{0, 1, 1}, 1).e_n_shift(-1));
}

TEST_CASE("kappa = 0 collapses spectral vectors") {
  auto c = KappaContext::make(Partition({2, 1}), 0);
  YangBaxterGraph g(c);
  CHECK_THROWS_AS(g.nsjp(std::vector<int>{0, 0, 0}, 1), InadmissibleKappa);
}

TEST_CASE("compositions enumerate weak compositions") {
  auto all = compositions(3, 3);
  CHECK(all.size() == 10);
  CHECK(std::is_sorted(all.begin(), all.end()));
}
