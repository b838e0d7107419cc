#include <doctest.h>

#include "support.hpp"

using namespace vvjack;
using namespace testsupport;

namespace {

const std::vector<std::vector<int>> kShapes = {{2, 1}, {2, 2}, {3, 1}, {2, 1, 1}, {3, 2}, {2, 2, 1}, {4, 1}};

}  // namespace

TEST_CASE("permutation composition is functional") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation a = gen_perm(5, rng), b = gen_perm(5, rng);
    Permutation ab = a * b;
    for (int i = 0; i < 5; ++i) CHECK(ab(i) == a(b(i)));
    CHECK((a * a.inverse()).is_identity());
    Permutation w = Permutation::identity(5);
    for (int k : a.reduced_word()) w = w * Permutation::simple(5, k);
    CHECK(w == a);
    CHECK(static_cast<int>(a.reduced_word().size()) == a.length());
  }
  Permutation w0 = Permutation::cycle(4);
  CHECK(w0.one_line() == std::vector<int>{2, 3, 4, 1});
  CHECK(w0.pow(4).is_identity());
  CHECK(w0.pow(-1) == w0.inverse());
}

TEST_CASE("seminormal matrices follow the content rule") {
  Representation rep(Partition({2, 1}));
  const RMatrix& s1 = rep.simple(0);
  // c(1,T_0) - c(2,T_0) = 2, so b = 1/2 and T_0 pairs with T_1.
  CHECK(s1(0, 0) == q("1/2"));
  CHECK(s1(1, 0) == 1);
  CHECK(s1(0, 1) == q("3/4"));
  CHECK(s1(1, 1) == q("-1/2"));
  // c(2,T_0) - c(3,T_0) = -1: T_0 is negated.
  const RMatrix& s2 = rep.simple(1);
  CHECK(s2(0, 0) == -1);
  CHECK(s2(1, 0) == 0);
}

TEST_CASE("Coxeter relations and homomorphism") {
  for (auto& s : kShapes) {
    Representation rep{Partition(s)};
    const int n = rep.degree(), d = rep.dim();
    CAPTURE(s);
    RMatrix id = RMatrix::identity(d);
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(rep.simple(i) * rep.simple(i) == id);
      if (i + 2 < n) {
        const RMatrix& a = rep.simple(i);
        const RMatrix& b = rep.simple(i + 1);
        CHECK(a * b * a == b * a * b);
      }
      for (int j = i + 2; j + 1 < n; ++j) CHECK(rep.simple(i) * rep.simple(j) == rep.simple(j) * rep.simple(i));
    }
    CHECK(rep.word(Permutation::identity(n)) == id);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      Permutation a = gen_perm(n, rng), b = gen_perm(n, rng);
      CHECK(rep.word(a * b) == rep.word(a) * rep.word(b));
    }
    // Character of a transposition: trace = n_tau * (sum of contents) / C(N,2).
    Rational tr = rep.transposition(0, 1).trace();
    CHECK(tr * n * (n - 1) == Rational(2 * d * Partition(s).content_sum()));
  }
}

TEST_CASE("invariant form and orthonormal basis") {
  for (auto& s : kShapes) {
    Representation rep{Partition(s)};
    const int d = rep.dim();
    for (int i = 0; i + 1 < rep.degree(); ++i) {
      const RMatrix& m = rep.simple(i);
      // diag(<T,T>_0) M is symmetric.
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) CHECK(rep.norms0()[r] * m(r, c) == rep.norms0()[c] * m(c, r));
      Eigen::MatrixXd o = rep.simple_orthonormal(i);
      CHECK((o - o.transpose()).norm() < 1e-14);
      CHECK((o * o.transpose() - Eigen::MatrixXd::Identity(d, d)).norm() < 1e-14);
    }
  }
}

TEST_CASE("action on polynomials") {
  auto c = ctx({2, 1}, "1/10");
  VVPoly p = VVPoly::monomial(c, ex({1, 0, 2}), 0);
  VVPoly sp = act(Permutation::simple(3, 0), p);
  CHECK(sp.terms().count(ex({0, 1, 2})) == 1);
  CHECK(act(Permutation::identity(3), p) == p);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    VVPoly f = gen_poly(c, rng);
    Permutation a = gen_perm(3, rng), b = gen_perm(3, rng);
    CHECK(act(a, act(b, f)) == act(a * b, f));
    // (w f)(x) = tau(w) f(x w) with (x w)_i = x_{w(i)}.
    auto x = gen_point(3, rng);
    std::vector<std::complex<double>> xw(3);
    for (int i = 0; i < 3; ++i) xw[i] = x[a(i)];
    auto lhs = eval(act(a, f), x);
    auto rhs = apply_exact(c->rep().word(a), eval(f, xw));
    CHECK(max_abs_diff(lhs, rhs) < 1e-9);
  }
}
