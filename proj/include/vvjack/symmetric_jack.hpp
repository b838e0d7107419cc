#pragma once

#include <vector>

#include "vvjack/hermitian.hpp"

namespace vvjack {

// The labels (beta, T') sharing the filling floor(lambda, T_S).
struct ComponentSet {
  Composition lambda;
  Filling filling;
  std::vector<Label> labels;
  Label root;  // (lambda-, T_R)
  Label sink;  // (lambda, T_S)
  // N! / #labels.
  std::int64_t group_order = 0;
  // Order of the group generated by s_i with lambda_i = lambda_{i+1} and
  // entries i, i+1 in the same row of T_S.
  std::int64_t group_order_generators = 0;
  // Number of tableaux T' with floor(lambda, T') equal to the filling.
  int tableau_count = 0;
};

// lambda nonincreasing; the filling floor(lambda, T) must be column-strict.
// T may be any tableau of the component; the sink is recomputed from the filling.
ComponentSet component(const KappaContext& ctx, std::span<const int> lambda, int tableau);

struct SymmetricJack {
  Composition lambda;
  int sink = 0;
  int shift = 0;  // the polynomial is multiplied by e_N^shift
  VVPoly poly;
  Rational norm;
  Rational eigenvalue;
};

// a(beta, T') = C_{-1}(T_S) / C_{-1}(T') E_{-1}(beta, T').
Rational jack_coefficient(const KappaContext& ctx, const Label& sink, const Label& member);

// J = sum a(beta, T') zeta_{beta, T'}, times e_N^shift.
SymmetricJack jack(YangBaxterGraph& graph, std::span<const int> lambda, int tableau, int shift = 0);

// #labels C_1(T_R) / (C_1(T_S) E_1(lambda-, T_R)) ||zeta_{lambda,T_S}||^2.
Rational jack_norm(const KappaContext& ctx, std::span<const int> lambda, int tableau);
// sum a(beta, T')^2 ||zeta_{beta,T'}||^2 over the component.
Rational jack_norm_direct(const KappaContext& ctx, std::span<const int> lambda, int tableau);

// The symmetric polynomial of minimal degree n(tau), built from products of
// Vandermonde factors over the columns of T_0.
SymmetricJack minimal_jack(const ContextPtr& ctx);
// Partition label of the minimal symmetric polynomial.
Composition minimal_lambda(const Partition& tau);
Rational minimal_jack_norm(const KappaContext& ctx);

// Sum of squares of contents: closed form by rows, and by direct summation.
Rational s2_closed(const Partition& tau);
Rational s2_contents(const Partition& tau);

// sum (lambda_i + kappa (c(i,T_S) - gamma))^2 + 2 m |lambda| + N m^2.
Rational eigenvalue(const KappaContext& ctx, std::span<const int> lambda, int tableau, int m = 0);

// One (lambda, T_S) per column-strict filling of total weight n, lambda padded to N parts.
std::vector<Label> column_strict_labels(const KappaContext& ctx, int n);

// Partitions of n with at most k parts, padded with zeros to length k, in
// reverse lexicographic order.
std::vector<Composition> partitions_of(int n, int k);

}  // namespace vvjack
