#include "qflag/qscalar.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qflag {

QScalar::QScalar(Rational c, int root_order) : root_order_(root_order) {
  if (root_order < 1) throw std::invalid_argument("QScalar: root order must be positive");
  if (c != 0) terms_.emplace(0, std::move(c));
}

QScalar QScalar::zero(int root_order) { return QScalar(Rational(0), root_order); }

QScalar QScalar::monomial(Rational c, int t_exponent, int root_order) {
  QScalar r = zero(root_order);
  if (c != 0) r.terms_.emplace(t_exponent, std::move(c));
  return r;
}

QScalar QScalar::q_power(const Rational& q_exponent, int root_order) {
  Rational e = q_exponent * root_order;
  e.canonicalize();
  if (e.get_den() != 1)
    throw std::invalid_argument("QScalar::q_power: exponent " + qflag::to_string(q_exponent) +
                                " is not a multiple of 1/" + std::to_string(root_order));
  return monomial(1, static_cast<int>(e.get_num().get_si()), root_order);
}

int QScalar::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("QScalar: zero has no exponents");
  return terms_.begin()->first;
}

int QScalar::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("QScalar: zero has no exponents");
  return terms_.rbegin()->first;
}

Rational QScalar::coefficient(int t_exponent) const {
  auto it = terms_.find(t_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

QScalar QScalar::embed(int order) const {
  if (order % root_order_ != 0)
    throw std::invalid_argument("QScalar::embed: " + std::to_string(order) +
                                " is not a multiple of " + std::to_string(root_order_));
  const int f = order / root_order_;
  QScalar r = zero(order);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e * f, c);
  return r;
}

QScalar QScalar::canonical() const {
  int g = root_order_;
  for (const auto& [e, c] : terms_) g = std::gcd(g, e);
  if (g <= 1) return *this;
  QScalar r = zero(root_order_ / g);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e / g, c);
  return r;
}

void QScalar::add_term(int e, const Rational& c) {
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

void QScalar::normalize_zeros() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

namespace {

std::pair<QScalar, QScalar> common(const QScalar& a, const QScalar& b) {
  if (a.root_order() == b.root_order()) return {a, b};
  const int l = std::lcm(a.root_order(), b.root_order());
  return {a.embed(l), b.embed(l)};
}

}  // namespace

QScalar QScalar::operator-() const {
  QScalar r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.root_order_ != root_order_) {
    auto [a, b] = common(*this, o);
    *this = std::move(a);
    return *this += b;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (o.root_order_ != root_order_) {
    auto [a, b] = common(*this, o);
    *this = std::move(a);
    return *this *= b;
  }
  std::map<int, Rational> out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out[ea + eb] += ca * cb;
  terms_ = std::move(out);
  normalize_zeros();
  return *this;
}

QScalar QScalar::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw std::invalid_argument("QScalar::pow: negative power of a non-monomial");
    const auto& [te, c] = *terms_.begin();
    Rational inv = 1 / c;
    QScalar base = monomial(inv, -te, root_order_);
    return base.pow(-e);
  }
  QScalar result(Rational(1), root_order_);
  QScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

QScalar QScalar::substitute_power(int f) const {
  QScalar r = zero(root_order_);
  for (const auto& [e, c] : terms_) r.add_term(e * f, c);
  return r;
}

QScalar QScalar::exact_div(const QScalar& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("QScalar::exact_div: division by zero");
  if (divisor.root_order_ != root_order_) {
    auto [a, b] = common(*this, divisor);
    return a.exact_div(b);
  }
  if (is_zero()) return zero(root_order_);

  // t^{ea} A(t) / t^{eb} B(t) with A(0), B(0) nonzero: ordinary polynomial division.
  const int ea = min_exponent();
  const int eb = divisor.min_exponent();
  const int deg_b = divisor.max_exponent() - eb;
  std::vector<Rational> rem(static_cast<size_t>(max_exponent() - ea + 1));
  for (const auto& [e, c] : terms_) rem[static_cast<size_t>(e - ea)] = c;
  std::vector<Rational> den(static_cast<size_t>(deg_b + 1));
  for (const auto& [e, c] : divisor.terms_) den[static_cast<size_t>(e - eb)] = c;

  QScalar quotient = zero(root_order_);
  const Rational& lead = den.back();
  for (int top = static_cast<int>(rem.size()) - 1; top >= deg_b; --top) {
    if (rem[static_cast<size_t>(top)] == 0) continue;
    Rational f = rem[static_cast<size_t>(top)] / lead;
    const int shift = top - deg_b;
    for (int j = 0; j <= deg_b; ++j) rem[static_cast<size_t>(shift + j)] -= f * den[static_cast<size_t>(j)];
    quotient.add_term(shift + ea - eb, f);
  }
  for (const auto& c : rem)
    if (c != 0)
      throw std::logic_error("QScalar::exact_div: nonzero remainder dividing " + to_string() + " by " +
                             divisor.to_string());
  return quotient;
}

Rational QScalar::at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Rational QScalar::evaluate_t(const Rational& t) const {
  if (t == 0) throw std::domain_error("QScalar::evaluate_t: t must be nonzero");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    const Rational base = e >= 0 ? t : Rational(1 / t);
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    s += c * p;
  }
  return s;
}

bool operator==(const QScalar& a, const QScalar& b) {
  if (a.root_order_ == b.root_order_) return a.terms_ == b.terms_;
  auto [x, y] = common(a, b);
  return x.terms_ == y.terms_;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

std::string QScalar::to_string() const {
  if (terms_.empty()) return "0";
  const char var = root_order_ == 1 ? 'q' : 't';
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::string mono;
    if (e == 1)
      mono = std::string(1, var);
    else if (e != 0)
      mono = std::string(1, var) + "^" + std::to_string(e);

    if (mono.empty())
      os << qflag::to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << qflag::to_string(mag) << "*" << mono;
  }
  return os.str();
}

QScalar qint_bracket(int m, int root_order) {
  if (m < 0) return -qint_bracket(-m, root_order);
  QScalar r = QScalar::zero(root_order);
  for (int j = 1 - m; j <= m - 1; j += 2) r += QScalar::monomial(1, j * root_order, root_order);
  return r;
}

QScalar qint_paren(int m, int root_order) { return qint_paren_at(m, QScalar::monomial(1, root_order, root_order)); }

QScalar qint_paren_at(int m, const QScalar& base) {
  if (!base.is_monomial()) throw std::invalid_argument("qint_paren_at: base must be a monomial");
  if (m < 0) return -(base.pow(m) * qint_paren_at(-m, base));
  QScalar r = QScalar::zero(base.root_order());
  QScalar p(Rational(1), base.root_order());
  for (int j = 0; j < m; ++j) {
    r += p;
    p *= base;
  }
  return r;
}

QScalar qint_factorial(int n, int root_order) {
  if (n < 0) throw std::invalid_argument("qint_factorial: negative argument");
  QScalar r(Rational(1), root_order);
  for (int j = 2; j <= n; ++j) r *= qint_bracket(j, root_order);
  return r;
}

QScalar q_binomial(int n, int r, int root_order) {
  if (r < 0 || n < r) throw std::invalid_argument("q_binomial: requires 0 <= r <= n");
  return qint_factorial(n, root_order).exact_div(qint_factorial(r, root_order) * qint_factorial(n - r, root_order));
}

bool bracket_paren_identity(int m) {
  const QScalar lhs = qint_bracket(m);
  const QScalar rhs = QScalar::q_power(1 - m) * qint_paren_at(m, QScalar::q_power(2));
  return lhs == rhs;
}

}  // namespace qflag
