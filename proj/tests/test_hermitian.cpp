#include <doctest.h>

#include "support.hpp"
#include "vvjack/errors.hpp"

using namespace vvjack;
using namespace testsupport;

TEST_CASE("partition norms") {
  for (const char* k : {"1/10", "-1/7", "2/17"}) {
    auto c = ctx({2, 2}, k);
    const Rational kappa = c->kappa();
    std::vector<int> zero(4, 0);
    for (int t = 0; t < c->dim(); ++t) CHECK(norm_partition(*c, zero, t) == c->rep().norms0()[t]);
    std::vector<int> lam{1, 1, 0, 0};
    auto sq = [](const Rational& r) { return r * r; };
    Rational want = q("3/4") * sq(1 - sq(kappa / (1 - kappa))) * (1 - sq(kappa)) * (1 - sq(kappa / (1 - 2 * kappa)));
    CHECK(norm_partition(*c, lam, 1) == want);
    CHECK(norm(*c, lam, 1) == want);
    YangBaxterGraph g(c);
    CHECK(edge_recursive_norm(g, lam, 1) == want);
  }
}

TEST_CASE("closed norm equals edge recursion and is positive") {
  for (auto shape : {std::vector<int>{2, 1}, std::vector<int>{3, 1}, std::vector<int>{2, 1, 1}}) {
    auto c = ctx(shape, "2/17");
    YangBaxterGraph g(c);
    for (int d = 0; d <= 3; ++d)
      for (const Composition& a : compositions(d, c->n_vars()))
        for (int t = 0; t < c->dim(); ++t) {
          Rational v = norm(*c, a, t);
          CHECK(v > 0);
          CHECK(v == edge_recursive_norm(g, a, t));
        }
    std::vector<int> laurent{-2, 1, 0, 0};
    laurent.resize(c->n_vars(), 0);
    std::vector<int> lifted = laurent;
    for (int& e : lifted) e += 2;
    CHECK(norm(*c, laurent, 0) == norm(*c, lifted, 0));
  }
}

TEST_CASE("expansion in the eigenbasis") {
  auto c = ctx({2, 1}, "-1/7");
  YangBaxterGraph g(c);
  std::vector<int> a{1, 0, 2};
  Expansion e = expand_in_nsjp(g, g.nsjp(a, 1));
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->first == Label{a, 1});
  CHECK(e.begin()->second == 1);

  // x^alpha (x) tau(r_alpha^{-1}) T has coefficient 1 at (alpha, T) and only lower labels otherwise.
  RVector unit(c->dim());
  unit[0] = 1;
  VVPoly lead = VVPoly::monomial(c, ex(a), c->rep().word(rank_perm(a).inverse()).apply(unit));
  Expansion le = expand_in_nsjp(g, lead);
  CHECK(le.at(Label{a, 0}) == 1);
  for (auto& [lab, coeff] : le)
    if (lab.alpha != a) CHECK(orders(lab.alpha, a).graph);

  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    VVPoly f = gen_poly(c, rng, 3, 4);
    CHECK(reconstruct(g, expand_in_nsjp(g, f)) == f);
  }
}

TEST_CASE("form properties") {
  auto c = ctx({2, 1}, "1/10");
  YangBaxterGraph g(c);
  // Distinct eigenfunctions are orthogonal, the diagonal is the norm.
  std::vector<Label> labels;
  for (int d = 0; d <= 2; ++d)
    for (auto& a : compositions(d, 3))
      for (int t = 0; t < 2; ++t) labels.push_back({a, t});
  for (auto& x : labels)
    for (auto& y : labels) {
      Rational v = form(g, g.nsjp(x.alpha, x.tableau), g.nsjp(y.alpha, y.tableau));
      if (x == y) CHECK(v == norm(*c, x.alpha, x.tableau));
      else CHECK(v == 0);
    }
  // <1 (x) T, 1 (x) T'> = <T,T'>_0.
  CHECK(form(g, VVPoly::constant(c, 1), VVPoly::constant(c, 1)) == q("3/4"));
  CHECK(form(g, VVPoly::constant(c, 0), VVPoly::constant(c, 1)) == 0);

  std::mt19937 rng(19);
  for (int trial = 0; trial < 8; ++trial) {
    VVPoly f = gen_poly(c, rng, 2, 3), h = gen_poly(c, rng, 2, 3);
    for (int i = 0; i < 3; ++i) {
      CHECK(form(g, f.multiply_variable(i), h.multiply_variable(i)) == form(g, f, h));
      VVPoly xdf = dunkl(f, i).multiply_variable(i), xdh = dunkl(h, i).multiply_variable(i);
      CHECK(form(g, xdf, h) == form(g, f, xdh));
    }
    Permutation w = gen_perm(3, rng);
    CHECK(form(g, act(w, f), act(w, h)) == form(g, f, h));
    CHECK(form(g, f, f) > 0);
  }
}

TEST_CASE("Hamiltonian eigenvalue") {
  auto c = ctx({2, 2}, "1/10");
  YangBaxterGraph g(c);
  for (const Composition& a : compositions(2, 4))
    for (int t = 0; t < 2; ++t) {
      const VVPoly& z = g.nsjp(a, t);
      CHECK(hamiltonian_poly(z) == z * hamiltonian_eigenvalue(*c, a, t));
    }
}
