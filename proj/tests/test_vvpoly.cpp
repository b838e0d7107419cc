#include <doctest.h>

#include "support.hpp"
#include "vvjack/errors.hpp"

using namespace vvjack;
using namespace testsupport;

TEST_CASE("kappa window and pole audit") {
  CHECK_NOTHROW(ctx({2, 2}, "1/10"));
  CHECK_THROWS_AS(ctx({2, 2}, "1/3"), InadmissibleKappa);
  CHECK_THROWS_AS(ctx({2, 2}, "-1/2"), InadmissibleKappa);
  Partition tau({2, 2});
  // 1 + kappa * (-2) vanishes at kappa = 1/2.
  CHECK_THROWS_AS(KappaContext::make(tau, q("1/2"), {true, 4}), InadmissibleKappa);
  auto forced = KappaContext::make(tau, q("5/7"), {true, 4});
  CHECK_FALSE(forced->in_default_window());
  CHECK(ctx({2, 2}, "1/10")->gamma() == 0);
  CHECK(ctx({2, 1}, "1/10")->gamma() == 0);
  CHECK(ctx({3, 1}, "1/10")->gamma() == q("1/2"));
}

TEST_CASE("canonical term maps") {
  auto c = ctx({2, 1}, "1/10");
  VVPoly p = VVPoly::monomial(c, ex({1, 0, 0}), 1, q("2/3"));
  VVPoly zero(c);
  CHECK(p + zero == p);
  CHECK((p - p).is_zero());
  CHECK((p - p).terms().empty());
  CHECK(p.coefficient_of(ex({1, 0, 0}), 1) == q("2/3"));
  CHECK(p.coefficient_of(ex({1, 0, 0}), 0) == 0);
  CHECK(zero.coefficient_of(ex({0, 0, 0}), 0) == 0);
  VVPoly one = VVPoly::constant(c, 0);
  CHECK(one.multiply_monomial(ex({2, 1, 0})) == VVPoly::monomial(c, ex({2, 1, 0}), 0));
  CHECK(p.degree() == 1);
  CHECK((p + one).degree() == std::nullopt);
  auto parts = (p + one).split_by_degree();
  CHECK(parts.size() == 2);
  CHECK(parts.at(0) == one);
}

TEST_CASE("transposition substitution is an involution") {
  auto c = ctx({3, 1}, "2/17");
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    VVPoly f = gen_poly(c, rng);
    std::uniform_int_distribution<int> v(0, 3);
    int i = v(rng), j = v(rng);
    if (i == j) continue;
    CHECK(f.substitute_transposition(i, j).substitute_transposition(i, j) == f);
    CHECK(f.swap_variables(i, j).swap_variables(i, j) == f);
  }
}

TEST_CASE("e_N shift") {
  auto c = ctx({2, 2}, "1/10");
  VVPoly p = VVPoly::monomial(c, ex({1, 1, 1, 1}), 1);
  CHECK(p.e_n_shift(-1) == VVPoly::constant(c, 1));
  CHECK(p.e_n_shift(0) == p);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    VVPoly f = VVPoly::monomial(c, ex({2, 0, 1, 0}), 0) + VVPoly::monomial(c, ex({1, 1, 0, 1}), 1, -3);
    std::uniform_int_distribution<int> m(-3, 3);
    int k = m(rng);
    VVPoly g = f.e_n_shift(k);
    CHECK(g.e_n_shift(-k) == f);
    CHECK(*g.degree() == 3 + 4 * k);
    CHECK(g.has_negative_exponent() == (k < 0));
  }
}

TEST_CASE("evaluation is linear and respects products") {
  auto c = ctx({2, 1}, "-1/7");
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    VVPoly f = gen_poly(c, rng), g = gen_poly(c, rng);
    auto x = gen_point(3, rng);
    auto fx = eval(f, x), gx = eval(g, x), sx = eval(f + g * q("3/2"), x);
    for (int t = 0; t < c->dim(); ++t) CHECK(std::abs(sx[t] - (fx[t] + 1.5 * gx[t])) < 1e-9);
    auto mx = eval(f.multiply_variable(1), x);
    for (int t = 0; t < c->dim(); ++t) CHECK(std::abs(mx[t] - x[1] * fx[t]) < 1e-9);
  }
}

TEST_CASE("exact derivative agrees with a finite difference") {
  auto c = ctx({2, 1}, "1/10");
  std::mt19937 rng(9);
  const double h = 1e-6;
  for (int trial = 0; trial < 30; ++trial) {
    VVPoly f = gen_poly(c, rng, 4, 5);
    auto x = gen_point(3, rng);
    for (int i = 0; i < 3; ++i) {
      auto xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      auto fp = eval(f, xp), fm = eval(f, xm), d = eval(f.derivative(i), x);
      for (int t = 0; t < c->dim(); ++t) CHECK(std::abs(d[t] - (fp[t] - fm[t]) / (2 * h)) < 1e-5 * (1 + std::abs(d[t])));
    }
  }
}

TEST_CASE("mixing contexts is rejected") {
  auto a = ctx({2, 1}, "1/10");
  auto b = ctx({2, 1}, "-1/7");
  VVPoly p = VVPoly::constant(a, 0), r = VVPoly::constant(b, 0);
  CHECK_THROWS_AS(p += r, InvalidArgument);
}
