#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qflag/qscalar.hpp"

#include <random>
#include <stdexcept>

using namespace qflag;

namespace {

QScalar q(int e) { return QScalar::monomial(1, e, 1); }

// Gaussian binomial by brute force: sum over 0/1 words with r ones of base^{inversions}.
QScalar gaussian_by_inversions(int n, int r, const QScalar& base) {
  QScalar total = 0;
  for (unsigned w = 0; w < (1u << n); ++w) {
    if (__builtin_popcount(w) != r) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((w >> i & 1) && !(w >> j & 1)) ++inv;
    total += base.pow(inv);
  }
  return total;
}

QScalar random_poly(std::mt19937& rng, int root_order) {
  std::uniform_int_distribution<int> exp(-5, 5), coef(-3, 3), len(0, 4);
  QScalar p = QScalar::zero(root_order);
  for (int i = len(rng); i > 0; --i) p += QScalar::monomial(coef(rng), exp(rng), root_order);
  return p;
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(qint_bracket(0).is_zero());
  CHECK(qint_bracket(2) == q(-1) + q(1));
  CHECK(qint_bracket(4) == q(-3) + q(-1) + q(1) + q(3));
  CHECK(qint_paren(0).is_zero());
  CHECK(qint_paren(3) == 1 + q(1) + q(2));
  CHECK(qint_paren(3).at_one() == 3);
  for (int m = 1; m <= 20; ++m) {
    CHECK(qint_bracket(m).at_one() == m);
    CHECK(qint_paren(m).at_one() == m);
    CHECK(qint_bracket(-m) == -qint_bracket(m));
    CHECK(qint_paren(-m) == -(q(-m) * qint_paren(m)));
  }
}

TEST_CASE("negative paren matches the geometric closed form") {
  // (1 - q^m) = (1 - q) (m)_q for every integer m.
  for (int m = -15; m <= 15; ++m) CHECK(1 - q(m) == (1 - q(1)) * qint_paren(m));
}

TEST_CASE("bracket and paren identity") {
  CHECK(bracket_paren_identity(1));
  CHECK(bracket_paren_identity(3));
  CHECK(bracket_paren_identity(25));
  for (int m = -40; m <= 40; ++m) CHECK(bracket_paren_identity(m));
}

TEST_CASE("q-binomial values") {
  CHECK(q_binomial(5, 0) == 1);
  CHECK(q_binomial(2, 1) == q(-1) + q(1));
  CHECK(q_binomial(4, 2) == q(-4) + q(-2) + 2 + q(2) + q(4));
  CHECK_THROWS_AS(q_binomial(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(q_binomial(3, -1), std::invalid_argument);
}

TEST_CASE("q-binomial against the inversion oracle") {
  for (int n = 0; n <= 10; ++n)
    for (int r = 0; r <= n; ++r) {
      INFO("n=" << n << " r=" << r);
      const QScalar oracle = q(-r * (n - r)) * gaussian_by_inversions(n, r, q(2));
      CHECK(q_binomial(n, r) == oracle);
    }
}

TEST_CASE("q-binomial identities") {
  for (int n = 0; n <= 12; ++n)
    for (int r = 0; r <= n; ++r) CHECK(q_binomial(n, r) == q_binomial(n, n - r));
  for (int n = 0; n <= 10; ++n)
    for (int r = 0; r <= n; ++r) {
      CHECK(q_binomial(n, r) * qint_factorial(r) * qint_factorial(n - r) == qint_factorial(n));
      for (int s = 0; s <= r; ++s)
        CHECK(q_binomial(n, r) * q_binomial(r, s) == q_binomial(n, s) * q_binomial(n - s, r - s));
    }
}

TEST_CASE("exact division") {
  const QScalar a = qint_bracket(6);
  CHECK(a.exact_div(qint_bracket(3)) == q(-3) + q(3));
  CHECK_THROWS_AS((1 + q(1)).exact_div(1 + q(2)), std::logic_error);
  CHECK_THROWS((1 + q(1)).exact_div(QScalar(0)));
  CHECK(q(-4).exact_div(q(-1)) == q(-3));
}

TEST_CASE("mixed root orders") {
  const QScalar t2 = QScalar::t(2);
  CHECK(t2 * t2 == q(1));
  CHECK((q(1) + t2).root_order() == 2);
  CHECK(QScalar::q_power(make_rational(2, 3), 3) == QScalar::monomial(1, 2, 3));
  CHECK(QScalar::monomial(5, 4, 2).canonical() == QScalar::monomial(5, 2, 1));
  CHECK(QScalar::monomial(5, 4, 2).canonical().root_order() == 1);
  CHECK(QScalar::t(3) * QScalar::t(2) == QScalar::monomial(1, 5, 6));
}

TEST_CASE("ring axioms on random values") {
  std::mt19937 rng(20240521);
  for (int trial = 0; trial < 200; ++trial) {
    const int n1 = 1 + trial % 3, n2 = 1 + (trial / 3) % 3;
    const QScalar a = random_poly(rng, n1), b = random_poly(rng, n2), c = random_poly(rng, n1 * n2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == 0);
    if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
    CHECK((a * b).at_one() == a.at_one() * b.at_one());
  }
}

TEST_CASE("powers and substitution") {
  CHECK(q(2).pow(-3) == q(-6));
  CHECK((1 + q(1)).pow(2) == 1 + 2 * q(1) + q(2));
  CHECK_THROWS((1 + q(1)).pow(-1));
  CHECK((1 + q(1)).substitute_power(2) == 1 + q(2));
  CHECK((1 + q(1)).evaluate_t(2) == 3);
}

TEST_CASE("rendering") {
  CHECK(qint_bracket(2).to_string() == "q^-1 + q");
  CHECK(QScalar(0).to_string() == "0");
  CHECK((1 + QScalar::monomial(2, 2, 3) - QScalar::monomial(1, 5, 3)).to_string() == "1 + 2*t^2 - t^5");
  CHECK(QScalar(make_rational(1, 2)).to_string() == "1/2");
  CHECK((-q(1)).to_string() == "-q");
}
