#pragma once

#include <random>
#include <string>
#include <vector>

#include "vvjack/torus_wave.hpp"

namespace vvjack {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExactSuiteOptions {
  int max_degree = 4;
  int samples = 20;  // random polynomials for the operator and form relations
  unsigned seed = 1;
};

// Exact invariant suite. Each family of identities yields one CheckResult.
std::vector<CheckResult> verify_exact(const ContextPtr& ctx, const ExactSuiteOptions& opt = {});

struct NumericSuiteOptions {
  WaveOptions wave;
  int points = 20;  // chamber samples for the eigen-equation
  unsigned seed = 1;
};

// Numeric invariants of the base state and wavefunctions.
std::vector<CheckResult> check_numeric(const ContextPtr& ctx, const NumericSuiteOptions& opt = {});

// Random V_tau-valued polynomial with small integer coefficients.
VVPoly random_poly(const ContextPtr& ctx, int max_degree, int terms, std::mt19937& rng);

// Uniform point of the fundamental chamber with every gap at least min_gap.
TorusPoint random_chamber_point(int n, double min_gap, std::mt19937& rng);

}  // namespace vvjack
