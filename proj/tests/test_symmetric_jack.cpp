#include <doctest.h>

#include "support.hpp"
#include "vvjack/errors.hpp"

using namespace vvjack;
using namespace testsupport;

TEST_CASE("the tau = (2,2) worked example") {
  for (const char* k : {"1/10", "-1/7"}) {
    auto c = ctx({2, 2}, k);
    const Rational kappa = c->kappa();
    YangBaxterGraph g(c);
    std::vector<int> lam{1, 1, 0, 0};
    SymmetricJack j = jack(g, lam, 1);
    CHECK(j.sink == 1);

    auto m = [&](std::vector<int> a, int t) { return VVPoly::monomial(c, ex(a), t); };
    // (x3 - x4)(x1 - x2)
    VVPoly p0 = m({1, 0, 1, 0}, 0) - m({0, 1, 1, 0}, 0) - m({1, 0, 0, 1}, 0) + m({0, 1, 0, 1}, 0);
    // x1 x2 + x3 x4 - (x1 + x2)(x3 + x4) / 2
    VVPoly p1 = m({1, 1, 0, 0}, 1) + m({0, 0, 1, 1}, 1) -
                (m({1, 0, 1, 0}, 1) + m({1, 0, 0, 1}, 1) + m({0, 1, 1, 0}, 1) + m({0, 1, 0, 1}, 1)) * q("1/2");
    CHECK(j.poly == p0 * q("3/4") + p1);
    CHECK(c->rep().norms0()[1] == q("3/4"));
    for (int i = 0; i < 3; ++i) CHECK(j.poly.substitute_transposition(i, i + 1) == j.poly);
    CHECK(j.poly.coefficient_of(ex({1, 1, 0, 0}), 1) == 1);

    Rational closed = q("9/2") * (1 - 3 * kappa) * (1 - 2 * kappa) / (1 - kappa);
    CHECK(jack_norm(*c, lam, 1) == closed);
    CHECK(jack_norm_direct(*c, lam, 1) == closed);
    CHECK(minimal_jack_norm(*c) == closed);
    CHECK(j.norm == closed);
    CHECK(minimal_jack(c).poly == j.poly);
    CHECK(minimal_lambda(Partition({2, 2})) == Composition{1, 1, 0, 0});
  }
}

TEST_CASE("eigenvalue 91/50") {
  auto c = ctx({2, 2}, "1/10");
  YangBaxterGraph g(c);
  std::vector<int> lam{1, 1, 0, 0};
  SymmetricJack j = jack(g, lam, 1);
  CHECK(j.eigenvalue == q("91/50"));
  CHECK(eigenvalue(*c, lam, 1) == q("91/50"));
  CHECK(hamiltonian_poly(j.poly) == j.poly * q("91/50"));
}

TEST_CASE("component of the (2,2) example") {
  auto c = ctx({2, 2}, "1/10");
  std::vector<int> lam{1, 1, 0, 0};
  ComponentSet cs = component(*c, lam, 1);
  CHECK(cs.sink == Label{lam, 1});
  CHECK(cs.root.alpha == Composition{0, 0, 1, 1});
  CHECK(static_cast<std::int64_t>(cs.labels.size()) * cs.group_order == 24);
  CHECK(cs.group_order == cs.group_order_generators);
  CHECK(std::find(cs.labels.begin(), cs.labels.end(), cs.root) != cs.labels.end());
  for (const Label& l : cs.labels) CHECK(floor_filling(l.alpha, c->rep().tableau(l.tableau)) == cs.filling);
  CHECK_THROWS_AS(component(*c, lam, 0), InvalidArgument);
  std::vector<int> zero(4, 0);
  CHECK_THROWS_AS(component(*c, zero, 0), InvalidArgument);
}

TEST_CASE("symmetric polynomials over all column-strict labels") {
  for (auto shape : {std::vector<int>{2, 1}, std::vector<int>{3, 1}, std::vector<int>{2, 1, 1}}) {
    auto c = ctx(shape, "2/17");
    YangBaxterGraph g(c);
    const int n = c->n_vars();
    for (int d = 0; d <= 4; ++d) {
      auto labels = column_strict_labels(*c, d);
      CHECK(static_cast<std::int64_t>(labels.size()) == jack_count(c->tau(), d, false));
      std::vector<SymmetricJack> js;
      for (const Label& l : labels) {
        SymmetricJack j = jack(g, l.alpha, l.tableau);
        for (int i = 0; i + 1 < n; ++i) CHECK(j.poly.substitute_transposition(i, i + 1) == j.poly);
        CHECK(j.poly.coefficient_of(Exponent(std::span<const int>(l.alpha)), l.tableau) == 1);
        CHECK(hamiltonian_poly(j.poly) == j.poly * eigenvalue(*c, l.alpha, l.tableau));
        CHECK(jack_norm(*c, l.alpha, l.tableau) == jack_norm_direct(*c, l.alpha, l.tableau));
        CHECK(form(g, j.poly, j.poly) == j.norm);
        js.push_back(std::move(j));
      }
      for (std::size_t a = 0; a < js.size(); ++a)
        for (std::size_t b = a + 1; b < js.size(); ++b) CHECK(form(g, js[a].poly, js[b].poly) == 0);
    }
  }
}

TEST_CASE("averaging the root gives #G J") {
  auto c = ctx({2, 1}, "1/10");
  YangBaxterGraph g(c);
  for (const Label& l : column_strict_labels(*c, 3)) {
    ComponentSet cs = component(*c, l.alpha, l.tableau);
    const VVPoly& root = g.nsjp(cs.root.alpha, cs.root.tableau);
    VVPoly sum(c);
    std::vector<int> img{0, 1, 2};
    do sum += act(Permutation(img), root);
    while (std::next_permutation(img.begin(), img.end()));
    CHECK(sum == jack(g, l.alpha, l.tableau).poly * Rational(cs.group_order));
  }
}

TEST_CASE("minimal polynomials and norms") {
  for (auto shape : {std::vector<int>{2, 1}, std::vector<int>{3, 1}, std::vector<int>{2, 2}, std::vector<int>{2, 1, 1}}) {
    auto c = ctx(shape, "1/10");
    YangBaxterGraph g(c);
    SymmetricJack m = minimal_jack(c);
    CHECK(*m.poly.degree() == c->tau().n_statistic());
    SymmetricJack j = jack(g, m.lambda, m.sink);
    CHECK(m.poly == j.poly);
    CHECK(minimal_jack_norm(*c) == jack_norm(*c, m.lambda, m.sink));
  }
  auto one = ctx({3}, "1/10");
  CHECK_THROWS_AS(minimal_jack(one), InvalidShape);
}

TEST_CASE("kappa = 0 norms") {
  auto c = KappaContext::make(Partition({2, 2}), 0);
  std::vector<int> lam{1, 1, 0, 0};
  ComponentSet cs = component(*c, lam, 1);
  CHECK(jack_norm(*c, lam, 1) == Rational(static_cast<long>(cs.labels.size())) * q("3/4"));
  CHECK(minimal_jack_norm(*c) == 6 * q("3/4"));
}

TEST_CASE("S_2 and the constant eigenvalue") {
  for (auto shape : {std::vector<int>{2, 2}, std::vector<int>{2, 1}, std::vector<int>{3, 2, 1}, std::vector<int>{4, 1, 1}}) {
    Partition tau(shape);
    CHECK(s2_closed(tau) == s2_contents(tau));
  }
  CHECK(s2_contents(Partition({2, 2})) == 2);
  CHECK(s2_contents(Partition({2, 1})) == 2);
  // One row: kappa^2 N (N^2 - 1) / 12.
  Partition row({4});
  Rational kappa = q("1/10");
  Rational gamma = Rational(row.content_sum(), 4);
  CHECK(kappa * kappa * (s2_closed(row) - 4 * gamma * gamma) == kappa * kappa * 4 * 15 / 12);
  auto c = ctx({2, 2}, "1/10");
  std::vector<int> lam{1, 1, 0, 0};
  CHECK(eigenvalue(*c, lam, 1, 2) == eigenvalue(*c, lam, 1, 0) + 2 * 2 * 2 + 4 * 4);
}

TEST_CASE("partitions_of") {
  auto p = partitions_of(4, 3);
  CHECK(p.size() == 4);
  CHECK(p.front() == Composition{4, 0, 0});
  CHECK(p.back() == Composition{2, 1, 1});
}
