#include "vvjack/rational.hpp"

#include <cctype>
#include <string>

#include "vvjack/errors.hpp"

namespace vvjack {

std::string to_string(const Rational& q) { return q.get_str(); }

// mpq_get_d truncates; dividing two exactly representable integers rounds correctly.
double to_double(const Rational& q) {
  constexpr unsigned long kExact = 1ul << 53;
  if (mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 53 && mpz_cmpabs_ui(q.get_den_mpz_t(), kExact) <= 0)
    return q.get_num().get_d() / q.get_den().get_d();
  return q.get_d();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidArgument("empty rational");
  try {
    if (s.find('/') != std::string::npos) {
      Rational q(s, 10);
      if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + s + "'");
      q.canonicalize();
      return q;
    }
    // Decimal or integer with optional exponent, converted exactly.
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string digits;
    int scale = 0;
    bool seen_point = false;
    for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
      char c = s[pos];
      if (c == '.' && !seen_point) {
        seen_point = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (seen_point) --scale;
      } else {
        throw InvalidArgument("cannot parse rational '" + s + "'");
      }
    }
    if (digits.empty()) throw InvalidArgument("cannot parse rational '" + s + "'");
    if (pos < s.size()) scale += std::stoi(s.substr(pos + 1));
    mpz_class num(digits, 10);
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational q = scale >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("cannot parse rational '" + s + "'");
  }
}

RMatrix RMatrix::identity(int n) {
  RMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RVector RMatrix::apply(const RVector& v) const {
  RVector out(n_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(v[c]) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

RMatrix RMatrix::operator*(const RMatrix& other) const {
  RMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (int c = 0; c < n_; ++c)
        if (sgn(other(k, c)) != 0) out(r, c) += a * other(k, c);
    }
  return out;
}

RMatrix RMatrix::operator+(const RMatrix& other) const {
  RMatrix out(*this);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] += other.a_[k];
  return out;
}

RMatrix RMatrix::operator-(const RMatrix& other) const {
  RMatrix out(*this);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] -= other.a_[k];
  return out;
}

RMatrix RMatrix::operator*(const Rational& s) const {
  RMatrix out(*this);
  for (auto& a : out.a_) a *= s;
  return out;
}

RMatrix RMatrix::transpose() const {
  RMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Rational RMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

}  // namespace vvjack
