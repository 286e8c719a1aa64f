#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace qflag {

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exact Laurent polynomial in a formal root t of q, with q = t^N.
///
/// Values with different root orders may be mixed freely: binary operations
/// promote both operands to the least common multiple of their root orders
/// by rescaling exponents. Zero coefficients are never stored.
class QScalar {
public:
  QScalar() = default;
  QScalar(Rational c, int root_order = 1);
  QScalar(long c) : QScalar(Rational(c), 1) {}
  QScalar(int c) : QScalar(Rational(c), 1) {}

  static QScalar zero(int root_order);
  /// c * t^e in root order N.
  static QScalar monomial(Rational c, int t_exponent, int root_order);
  /// q^e; e*N must be an integer.
  static QScalar q_power(const Rational& q_exponent, int root_order = 1);
  /// The formal root t itself (q = t^N).
  static QScalar t(int root_order) { return monomial(1, 1, root_order); }

  int root_order() const { return root_order_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exponent() const;
  int max_exponent() const;
  Rational coefficient(int t_exponent) const;

  /// Same value expressed with root order `order` (must be a multiple).
  QScalar embed(int order) const;
  /// Reduce root order as far as the exponents allow.
  QScalar canonical() const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }

  /// Integer power; negative exponents are allowed for monomials only.
  QScalar pow(int e) const;
  /// Substitute t -> t^f (e.g. f = 2 maps a polynomial in q to one in q^2).
  QScalar substitute_power(int f) const;
  /// Exact quotient. Throws std::logic_error if the division leaves a remainder.
  QScalar exact_div(const QScalar& divisor) const;

  /// Value at t = 1 (the classical specialization q -> 1).
  Rational at_one() const;
  /// Value at a nonzero rational t.
  Rational evaluate_t(const Rational& t) const;

  friend bool operator==(const QScalar& a, const QScalar& b);
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  /// Canonical rendering with ascending exponents, e.g. "q^-1 + q" or
  /// "1 + 2*t^2 - t^5". Uses "q" when the root order is 1, "t" otherwise.
  std::string to_string() const;

private:
  void add_term(int e, const Rational& c);
  void normalize_zeros();

  int root_order_ = 1;
  std::map<int, Rational> terms_;
};

std::string to_string(const Rational& r);

// Quantum integers and q-binomials.
//
// qint_bracket(m) = [m]_q = q^{1-m} + q^{3-m} + ... + q^{m-1}, extended to
// negative m by oddness: [-m]_q = -[m]_q, which agrees with the closed form
// (q^m - q^-m)/(q - q^-1).
//
// qint_paren(m) = (m)_q = 1 + q + ... + q^{m-1}; for negative m the geometric
// series closed form (1 - q^m)/(1 - q) gives (-p)_q = -q^{-p} (p)_q.

QScalar qint_bracket(int m, int root_order = 1);
QScalar qint_paren(int m, int root_order = 1);
/// (m)_b for an arbitrary monomial base b (for instance b = q^{2/(n+1)}).
QScalar qint_paren_at(int m, const QScalar& base);
QScalar qint_factorial(int n, int root_order = 1);
/// Balanced q-binomial [n r]_q = [n]!/([r]![n-r]!); throws if 0 <= r <= n fails.
QScalar q_binomial(int n, int r, int root_order = 1);
/// Checks [m]_q = q^{1-m} (m)_{q^2}.
bool bracket_paren_identity(int m);

}  // namespace qflag
