#pragma once

// Noncommutative engine for quantum projective space CP^n_q.
//
// The first-row generators x_j := u^1_j (j = 1..n+1) of the FRT algebra satisfy
// x_b x_a = q^{-1} x_a x_b for a < b. Scalars live in root order N = n+1, so
// q^{2/(n+1)} = t^2 is exact.
//
// One-forms are elements of A (x) F(Omega^1) in the image of the unit map,
// written as sums p (x) e with p a row polynomial and e one of the covectors
// e+_i = [d u^{i+1}_1], e-_i = [d u^1_{i+1}] (i = 1..n) or e0 = [d u^1_1].

#include "qflag/qscalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qflag::qps {

/// Generator index 1..n+1 for x_j = u^1_j.
using Word = std::vector<int>;

/// Normal-ordered monomial x_1^p x_{a_1} ... x_{a_m} with 2 <= a_1 <= ... <= a_m.
struct RowMonomial {
  int x1_power = 0;
  std::vector<int> others;

  Word word() const;
  std::string to_string() const;
  friend auto operator<=>(const RowMonomial&, const RowMonomial&) = default;
};

class NCPoly {
public:
  explicit NCPoly(int n);
  static NCPoly one(int n);
  static NCPoly generator(int n, int j);
  static NCPoly x1_power(int n, int k);

  int rank() const { return n_; }
  int root_order() const { return n_ + 1; }
  const std::map<RowMonomial, QScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const RowMonomial& m, const QScalar& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly scaled(const QScalar& c) const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  int n_;
  std::map<RowMonomial, QScalar> terms_;
};

/// Normal form via the inversion count: x_{w_1}...x_{w_m} = q^{-inv(w)} * sorted(w).
NCPoly nc_normal_form(int n, const Word& word);

/// Chooses which adjacent descent (position i with w_i > w_{i+1}) to rewrite next.
using RewriteStrategy = std::function<std::size_t(const Word& word, const std::vector<std::size_t>& redexes)>;

/// Normal form by explicit step-by-step rewriting x_b x_a -> q^{-1} x_a x_b (a < b),
/// with the order of reductions chosen by `strategy`.
NCPoly rewrite_normal_form(int n, const Word& word, const RewriteStrategy& strategy);

/// Product of two normal-ordered monomials, renormalized.
NCPoly multiply_monomials(int n, const RowMonomial& a, const RowMonomial& b);

enum class CovectorKind { Plus, Minus, Zero };

struct Covector {
  CovectorKind kind = CovectorKind::Zero;
  int index = 0;  // 1..n for Plus/Minus, 0 for Zero

  static Covector plus(int i) { return {CovectorKind::Plus, i}; }
  static Covector minus(int i) { return {CovectorKind::Minus, i}; }
  static Covector zero() { return {CovectorKind::Zero, 0}; }
  std::string to_string() const;
  friend auto operator<=>(const Covector&, const Covector&) = default;
};

class OneFormRep {
public:
  explicit OneFormRep(int n);

  int rank() const { return n_; }
  const std::map<Covector, NCPoly>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  bool has_zero_component() const;

  void add(const Covector& e, const NCPoly& coeff);
  OneFormRep& operator+=(const OneFormRep& o);
  OneFormRep scaled(const QScalar& c) const;
  friend OneFormRep operator+(OneFormRep a, const OneFormRep& b) { return a += b; }
  friend bool operator==(const OneFormRep& a, const OneFormRep& b) {
    return a.n_ == b.n_ && a.components_ == b.components_;
  }

  /// p * (a (x) e) = (p a) (x) e.
  OneFormRep left_multiply(const NCPoly& p) const;

  std::string to_string() const;

private:
  int n_;
  std::map<Covector, NCPoly> components_;
};

/// Pi^(1,0): keeps the e+ components.
OneFormRep project_10(const OneFormRep& w);
/// Pi^(0,1): keeps the e- components.
OneFormRep project_01(const OneFormRep& w);

/// unit(d z_1) = sum_{c=1}^{n+1} u^1_c (x) [d u^c_1], with [d u^1_1] = e0 and [d u^c_1] = e+_{c-1}.
OneFormRep dz1_unit(int n);
/// Pi^(1,0)(d z_1) = sum_{a=2}^{n+1} x_a (x) e+_{a-1}.
OneFormRep dz1_projected(int n);

/// Exponent of q in e+-_i <| u^k_k; the off-diagonal action u^k_l (k != l) is zero.
Rational right_action_exponent(int n, int i, int k);

/// (a (x) e) z_1 = sum_c a u^1_c (x) (e <| u^c_1). Only c = 1 survives on e+ and e-.
/// Throws std::invalid_argument on an e0 component, whose right action is not modelled.
OneFormRep right_mult_z1(const OneFormRep& w);

/// Pi^(1,0)(d z_1^k) by the Leibniz recursion
/// P(k) = P(k-1) z_1 + z_1^{k-1} Pi^(1,0)(d z_1).
OneFormRep pi10_d_power(int n, int k);

/// c with Pi^(1,0)(d z_1^k) = c * (Pi^(1,0)(d z_1)) z_1^{k-1} (right-factored).
/// Throws std::logic_error if no such scalar exists.
QScalar right_factored_coefficient(int n, int k);

/// c' with Pi^(1,0)(d z_1^k) = c' * z_1^{k-1} Pi^(1,0)(d z_1) (left-factored);
/// the ratio of the curvature scalar on E_k to that on E_1.
QScalar curvature_ratio(int n, int k);

/// z_1 * Pi^(1,0)(d z_1) == q^{2/(n+1)} * (Pi^(1,0)(d z_1)) z_1.
bool base_commutation_check(int n);

/// Scalar c with num == c * den, if any.
std::optional<QScalar> scalar_ratio(const OneFormRep& num, const OneFormRep& den);

}  // namespace qflag::qps
