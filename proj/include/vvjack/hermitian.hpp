#pragma once

#include <map>

#include "vvjack/yang_baxter.hpp"

namespace vvjack {

struct NormValue {
  Rational value;
  Label label;
  Rational kappa;
};

// <T,T>_0 prod_{i<j} prod_{l=1}^{lambda_i - lambda_j} (1 - (kappa / (l + kappa (c(i,T) - c(j,T))))^2).
// lambda must be nonincreasing.
Rational norm_partition(const KappaContext& ctx, std::span<const int> lambda, int tableau);

// ||zeta_{alpha,T}||^2 = norm_partition(alpha+, T) / (E_1 E_{-1}); alpha in Z^N.
Rational norm(const KappaContext& ctx, std::span<const int> alpha, int tableau);

// The same norm obtained by walking the scheduler path from the root and
// multiplying (1 - b^2) for each step or jump.
Rational edge_recursive_norm(const YangBaxterGraph& graph, std::span<const int> alpha, int tableau);

// Eigenvalue of sum_i (U_i - 1 - kappa gamma)^2 on zeta_{alpha,T}.
Rational hamiltonian_eigenvalue(const KappaContext& ctx, std::span<const int> alpha, int tableau);

using Expansion = std::map<Label, Rational>;

// Coefficients of p in the NSJP basis. p must have nonnegative exponents;
// inhomogeneous input is handled degree by degree.
Expansion expand_in_nsjp(YangBaxterGraph& graph, const VVPoly& p);

// sum c_{alpha,T} zeta_{alpha,T}.
VVPoly reconstruct(YangBaxterGraph& graph, const Expansion& coeffs);

// <f,g> = sum over shared labels of c_f c_g ||zeta||^2.
Rational form(YangBaxterGraph& graph, const VVPoly& f, const VVPoly& g);

}  // namespace vvjack
