#include "qflag/qps.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qflag::qps {

Word RowMonomial::word() const {
  Word w(static_cast<size_t>(x1_power), 1);
  w.insert(w.end(), others.begin(), others.end());
  return w;
}

std::string RowMonomial::to_string() const {
  if (x1_power == 0 && others.empty()) return "1";
  std::ostringstream os;
  auto emit = [&](int gen, int power) {
    os << "x" << gen;
    if (power > 1) os << "^" << power;
  };
  if (x1_power > 0) emit(1, x1_power);
  for (size_t i = 0; i < others.size();) {
    size_t j = i;
    while (j < others.size() && others[j] == others[i]) ++j;
    emit(others[i], static_cast<int>(j - i));
    i = j;
  }
  return os.str();
}

namespace {

void check_word(int n, const Word& word) {
  for (int g : word)
    if (g < 1 || g > n + 1)
      throw std::invalid_argument("generator x" + std::to_string(g) + " out of range 1.." + std::to_string(n + 1));
}

RowMonomial monomial_from_sorted(const Word& sorted) {
  RowMonomial m;
  for (int g : sorted) {
    if (g == 1)
      ++m.x1_power;
    else
      m.others.push_back(g);
  }
  return m;
}

// q^{-inv} in root order n+1
QScalar inversion_weight(int n, long inversions) {
  return QScalar::monomial(1, static_cast<int>(-inversions * (n + 1)), n + 1);
}

}  // namespace

NCPoly::NCPoly(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("NCPoly: rank must be at least 1");
}

NCPoly NCPoly::one(int n) {
  NCPoly p(n);
  p.add_term(RowMonomial{}, QScalar(Rational(1), n + 1));
  return p;
}

NCPoly NCPoly::generator(int n, int j) {
  check_word(n, {j});
  NCPoly p(n);
  p.add_term(monomial_from_sorted({j}), QScalar(Rational(1), n + 1));
  return p;
}

NCPoly NCPoly::x1_power(int n, int k) {
  if (k < 0) throw std::invalid_argument("NCPoly::x1_power: negative power");
  NCPoly p(n);
  p.add_term(RowMonomial{k, {}}, QScalar(Rational(1), n + 1));
  return p;
}

void NCPoly::add_term(const RowMonomial& m, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c.embed(std::lcm(c.root_order(), n_ + 1)));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("NCPoly: rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("NCPoly: rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCPoly NCPoly::scaled(const QScalar& c) const {
  NCPoly r(n_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("NCPoly: rank mismatch");
  NCPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      const NCPoly prod = multiply_monomials(a.n_, ma, mb);
      for (const auto& [m, c] : prod.terms_) r.add_term(m, c * ca * cb);
    }
  return r;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    const bool unit_coeff = c == QScalar(Rational(1), n_ + 1);
    if (unit_coeff)
      out += m.to_string();
    else
      out += "(" + c.to_string() + ")" + (m.x1_power == 0 && m.others.empty() ? "" : "*" + m.to_string());
  }
  return out;
}

NCPoly multiply_monomials(int n, const RowMonomial& a, const RowMonomial& b) {
  // x1^p X_S * x1^r X_T: X_S passes x1^r (|S| r inversions), then X_S merges with X_T.
  long inversions = static_cast<long>(a.others.size()) * b.x1_power;
  // pairs (s, t) with s > t; both lists sorted
  size_t j = 0;
  for (int s : a.others) {
    while (j < b.others.size() && b.others[j] < s) ++j;
    inversions += static_cast<long>(j);
  }
  RowMonomial m;
  m.x1_power = a.x1_power + b.x1_power;
  m.others.reserve(a.others.size() + b.others.size());
  std::merge(a.others.begin(), a.others.end(), b.others.begin(), b.others.end(), std::back_inserter(m.others));
  NCPoly r(n);
  r.add_term(m, inversion_weight(n, inversions));
  return r;
}

NCPoly nc_normal_form(int n, const Word& word) {
  check_word(n, word);
  long inversions = 0;
  for (size_t i = 0; i < word.size(); ++i)
    for (size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++inversions;
  Word sorted = word;
  std::sort(sorted.begin(), sorted.end());
  NCPoly r(n);
  r.add_term(monomial_from_sorted(sorted), inversion_weight(n, inversions));
  return r;
}

NCPoly rewrite_normal_form(int n, const Word& word, const RewriteStrategy& strategy) {
  check_word(n, word);
  Word w = word;
  long steps = 0;
  for (;;) {
    std::vector<size_t> redexes;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) redexes.push_back(i);
    if (redexes.empty()) break;
    const size_t pick = strategy(w, redexes);
    if (std::find(redexes.begin(), redexes.end(), pick) == redexes.end())
      throw std::logic_error("rewrite_normal_form: strategy chose a non-redex position");
    std::swap(w[pick], w[pick + 1]);
    ++steps;
  }
  NCPoly r(n);
  r.add_term(monomial_from_sorted(w), inversion_weight(n, steps));
  return r;
}

std::string Covector::to_string() const {
  switch (kind) {
    case CovectorKind::Plus: return "e+" + std::to_string(index);
    case CovectorKind::Minus: return "e-" + std::to_string(index);
    case CovectorKind::Zero: return "e0";
  }
  return "?";
}

OneFormRep::OneFormRep(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("OneFormRep: rank must be at least 1");
}

bool OneFormRep::has_zero_component() const { return components_.count(Covector::zero()) > 0; }

void OneFormRep::add(const Covector& e, const NCPoly& coeff) {
  if (coeff.rank() != n_) throw std::invalid_argument("OneFormRep: rank mismatch");
  if (e.kind != CovectorKind::Zero && (e.index < 1 || e.index > n_))
    throw std::invalid_argument("OneFormRep: covector index out of range");
  auto it = components_.find(e);
  if (it == components_.end()) {
    if (!coeff.is_zero()) components_.emplace(e, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) components_.erase(it);
}

OneFormRep& OneFormRep::operator+=(const OneFormRep& o) {
  for (const auto& [e, p] : o.components_) add(e, p);
  return *this;
}

OneFormRep OneFormRep::scaled(const QScalar& c) const {
  OneFormRep r(n_);
  for (const auto& [e, p] : components_) r.add(e, p.scaled(c));
  return r;
}

OneFormRep OneFormRep::left_multiply(const NCPoly& p) const {
  OneFormRep r(n_);
  for (const auto& [e, a] : components_) r.add(e, p * a);
  return r;
}

std::string OneFormRep::to_string() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [e, p] : components_) {
    if (!out.empty()) out += " + ";
    out += "(" + p.to_string() + ") (x) " + e.to_string();
  }
  return out;
}

namespace {

OneFormRep keep_kind(const OneFormRep& w, CovectorKind kind) {
  OneFormRep r(w.rank());
  for (const auto& [e, p] : w.components())
    if (e.kind == kind) r.add(e, p);
  return r;
}

}  // namespace

OneFormRep project_10(const OneFormRep& w) { return keep_kind(w, CovectorKind::Plus); }
OneFormRep project_01(const OneFormRep& w) { return keep_kind(w, CovectorKind::Minus); }

OneFormRep dz1_unit(int n) {
  // Delta(u^1_1) = sum_c u^1_c (x) u^c_1
  OneFormRep r(n);
  for (int c = 1; c <= n + 1; ++c) {
    const Covector e = c == 1 ? Covector::zero() : Covector::plus(c - 1);
    r.add(e, NCPoly::generator(n, c));
  }
  return r;
}

OneFormRep dz1_projected(int n) { return project_10(dz1_unit(n)); }

Rational right_action_exponent(int n, int i, int k) {
  return Rational((i + 1 == k ? 1 : 0) + (k == 1 ? 1 : 0)) - make_rational(2, n + 1);
}

OneFormRep right_mult_z1(const OneFormRep& w) {
  const int n = w.rank();
  if (w.has_zero_component())
    throw std::invalid_argument("right_mult_z1: e0 component present; its right action is not modelled");
  OneFormRep r(n);
  for (const auto& [e, a] : w.components()) {
    for (int c = 1; c <= n + 1; ++c) {
      if (c != 1) continue;  // e <| u^c_1 = 0 unless c == 1
      const QScalar factor = QScalar::q_power(right_action_exponent(n, e.index, c), n + 1);
      r.add(e, (a * NCPoly::generator(n, c)).scaled(factor));
    }
  }
  return r;
}

OneFormRep pi10_d_power(int n, int k) {
  if (k < 1) throw std::invalid_argument("pi10_d_power: k must be positive");
  const OneFormRep base = dz1_projected(n);
  OneFormRep acc = base;
  for (int j = 2; j <= k; ++j) acc = right_mult_z1(acc) + base.left_multiply(NCPoly::x1_power(n, j - 1));
  return acc;
}

std::optional<QScalar> scalar_ratio(const OneFormRep& num, const OneFormRep& den) {
  if (den.is_zero()) throw std::invalid_argument("scalar_ratio: zero denominator");
  if (num.is_zero()) return QScalar::zero(den.rank() + 1);
  const auto& [e, p] = *den.components().begin();
  const auto& [m, cd] = *p.terms().begin();
  auto it = num.components().find(e);
  if (it == num.components().end()) return std::nullopt;
  auto jt = it->second.terms().find(m);
  if (jt == it->second.terms().end()) return std::nullopt;
  QScalar c;
  try {
    c = jt->second.exact_div(cd);
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
  if (!(den.scaled(c) == num)) return std::nullopt;
  return c;
}

namespace {

QScalar extract(const OneFormRep& form, const OneFormRep& shape, const char* what) {
  auto c = scalar_ratio(form, shape);
  if (!c)
    throw std::logic_error(std::string(what) + ": Pi^(1,0)(d z_1^k) is not a scalar multiple of the expected form;\n  got " +
                           form.to_string() + "\n  shape " + shape.to_string());
  return *c;
}

}  // namespace

QScalar right_factored_coefficient(int n, int k) {
  OneFormRep shape = dz1_projected(n);
  for (int j = 1; j < k; ++j) shape = right_mult_z1(shape);
  return extract(pi10_d_power(n, k), shape, "right_factored_coefficient");
}

QScalar curvature_ratio(int n, int k) {
  const OneFormRep shape = dz1_projected(n).left_multiply(NCPoly::x1_power(n, k - 1));
  return extract(pi10_d_power(n, k), shape, "curvature_ratio");
}

bool base_commutation_check(int n) {
  const OneFormRep d = dz1_projected(n);
  const OneFormRep lhs = d.left_multiply(NCPoly::generator(n, 1));
  const OneFormRep rhs = right_mult_z1(d).scaled(QScalar::q_power(make_rational(2, n + 1), n + 1));
  return lhs == rhs;
}

}  // namespace qflag::qps
