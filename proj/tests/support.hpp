#pragma once

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "vvjack/operators.hpp"
#include "vvjack/symmetric_jack.hpp"

namespace testsupport {

using namespace vvjack;

inline ContextPtr ctx(std::vector<int> tau, const char* kappa) {
  return KappaContext::make(Partition(std::move(tau)), parse_rational(kappa));
}

inline Rational q(const char* s) { return parse_rational(s); }

inline Exponent ex(std::vector<int> a) { return Exponent(std::span<const int>(a)); }

// Random polynomial with a fixed seed: random exponents up to max_degree,
// small nonzero integer coefficients, random tableau components.
inline VVPoly gen_poly(const ContextPtr& c, std::mt19937& rng, int max_degree = 3, int terms = 4) {
  const int n = c->n_vars();
  std::uniform_int_distribution<int> coeff(1, 5), sign(0, 1), tab(0, c->dim() - 1), part(0, max_degree);
  VVPoly p(c);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> a(n);
    int budget = max_degree;
    for (int i = 0; i < n; ++i) {
      std::uniform_int_distribution<int> take(0, budget);
      a[i] = take(rng);
      budget -= a[i];
    }
    std::shuffle(a.begin(), a.end(), rng);
    p.add_term(ex(a), tab(rng), Rational(sign(rng) ? coeff(rng) : -coeff(rng)));
  }
  return p;
}

inline Permutation gen_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// Point with distinct coordinates off the unit circle's special positions.
inline std::vector<std::complex<double>> gen_point(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::complex<double>> x(n);
  for (auto& z : x) z = {1.5 * u(rng), 1.5 * u(rng)};
  return x;
}

inline double max_abs_diff(const std::vector<std::complex<double>>& a,
                           const std::vector<std::complex<double>>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline std::vector<std::complex<double>> eval(const VVPoly& p, const std::vector<std::complex<double>>& x) {
  return p.evaluate(std::span<const std::complex<double>>(x));
}

// Exact dense matrix applied to a complex vector.
inline std::vector<std::complex<double>> apply_exact(const RMatrix& m, const std::vector<std::complex<double>>& v) {
  std::vector<std::complex<double>> out(v.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out[r] += to_double(m(r, c)) * v[c];
  return out;
}

}  // namespace testsupport
