#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace vvjack {

using Rational = mpq_class;
using RVector = std::vector<Rational>;

// p/q in canonical form; mpq_class(p, q) alone does not normalize signs or
// common factors.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// "p/q" (or "p" for integers), canonical form.
std::string to_string(const Rational& q);

// Accepts "p/q", "p", and finite decimals such as "0.1" or "-1e-2".
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

// Dense square matrix over the rationals, row-major.
class RMatrix {
 public:
  RMatrix() = default;
  explicit RMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static RMatrix identity(int n);

  int size() const { return n_; }
  Rational& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const Rational& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  RVector apply(const RVector& v) const;
  RMatrix operator*(const RMatrix& other) const;
  RMatrix operator+(const RMatrix& other) const;
  RMatrix operator-(const RMatrix& other) const;
  RMatrix operator*(const Rational& s) const;
  RMatrix transpose() const;
  Rational trace() const;
  bool operator==(const RMatrix& other) const = default;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

}  // namespace vvjack
