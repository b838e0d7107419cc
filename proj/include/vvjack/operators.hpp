#pragma once

#include "vvjack/vvpoly.hpp"

namespace vvjack {

// Variables are 0-based throughout: i in [0, N).

// D_i p = d_i p + kappa sum_{j != i} tau(i,j) (p - p(x(i,j))) / (x_i - x_j).
// Divided differences are expanded exactly per monomial. Laurent input is rejected.
VVPoly dunkl(const VVPoly& p, int i);

// U_i p = D_i(x_i p) - kappa sum_{j<i} tau(i,j) p(x(i,j)).
VVPoly cherednik(const VVPoly& p, int i);

// Same operator through U_i = x_i D_i + 1 + kappa omega_i, omega_i = sum_{j>i} (i,j).
VVPoly cherednik_via_xd(const VVPoly& p, int i);

// sum_i (U_i - 1 - kappa gamma)^2 p by operator composition.
VVPoly hamiltonian_poly(const VVPoly& p);

// sum_i U_i^m p.
VVPoly power_sum(const VVPoly& p, int m);

// Elementary symmetric polynomial e_k(U_1, ..., U_N) applied to p.
VVPoly elementary_symmetric(const VVPoly& p, int k);

struct OperatorHandle {
  enum class Kind { dunkl, cherednik, hamiltonian, power_sum };
  Kind kind = Kind::cherednik;
  int index = 0;  // variable for dunkl/cherednik, exponent m for power_sum

  VVPoly operator()(const VVPoly& p) const;
};

}  // namespace vvjack
