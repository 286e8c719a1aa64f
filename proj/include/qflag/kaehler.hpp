#pragma once

// Classical bigraded exterior algebra on C^n with the standard Hermitian form
// sigma = i sum_j dz_j ^ dzbar_j, and the Lefschetz/Hodge operators built on it.
//
// A basis element is a bitmask over 2n generators: bit j-1 is dz_j, bit n+j-1 is
// dzbar_j. The element it denotes is the wedge of its generators in increasing
// bit order, so all dz factors precede all dzbar factors.

#include "qflag/linalg.hpp"
#include "qflag/qscalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qflag::kaehler {

class GaussScalar {
public:
  GaussScalar() = default;
  GaussScalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussScalar(int re) : re_(re), im_(0) {}
  static GaussScalar i() { return GaussScalar(0, 1); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  GaussScalar conj() const { return GaussScalar(re_, -im_); }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussScalar operator-() const { return GaussScalar(-re_, -im_); }
  GaussScalar& operator+=(const GaussScalar& o);
  GaussScalar& operator-=(const GaussScalar& o);
  GaussScalar& operator*=(const GaussScalar& o);
  GaussScalar& operator/=(const GaussScalar& o);
  friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
  friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
  friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
  friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }
  friend bool operator==(const GaussScalar& a, const GaussScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const GaussScalar& a, const GaussScalar& b) { return !(a == b); }

  std::string to_string() const;

private:
  Rational re_ = 0;
  Rational im_ = 0;
};

using BasisMask = std::uint32_t;
inline constexpr int kMaxDimension = 6;

class ExtForm {
public:
  explicit ExtForm(int n);
  static ExtForm unit(int n);
  static ExtForm basis(int n, BasisMask mask, GaussScalar c = 1);
  static ExtForm dz(int n, int j);
  static ExtForm dzbar(int n, int j);

  int dimension() const { return n_; }
  const std::map<BasisMask, GaussScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussScalar coefficient(BasisMask mask) const;

  void add(BasisMask mask, const GaussScalar& c);
  ExtForm& operator+=(const ExtForm& o);
  ExtForm& operator-=(const ExtForm& o);
  friend ExtForm operator+(ExtForm a, const ExtForm& b) { return a += b; }
  friend ExtForm operator-(ExtForm a, const ExtForm& b) { return a -= b; }
  friend ExtForm operator*(const GaussScalar& c, const ExtForm& w);
  friend bool operator==(const ExtForm& a, const ExtForm& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Component of bidegree (a, b) / total degree k.
  ExtForm bidegree_part(int a, int b) const;
  ExtForm degree_part(int k) const;
  /// Bidegrees present, in increasing order.
  std::vector<std::pair<int, int>> bidegrees() const;

  std::string to_string() const;

private:
  int n_;
  std::map<BasisMask, GaussScalar> terms_;
};

int holomorphic_degree(int n, BasisMask m);
int antiholomorphic_degree(int n, BasisMask m);
int total_degree(BasisMask m);
/// Basis of Omega^(a,b), in increasing mask order.
std::vector<BasisMask> bidegree_basis(int n, int a, int b);
/// Basis of Omega^k.
std::vector<BasisMask> degree_basis(int n, int k);

ExtForm wedge(const ExtForm& a, const ExtForm& b);
/// Conjugate-linear antimultiplicative involution with (dz_j)* = dzbar_j.
ExtForm star(const ExtForm& w);

ExtForm fundamental_form(int n);
ExtForm lefschetz_L(const ExtForm& w);
ExtForm lefschetz_power(const ExtForm& w, int power);
ExtForm counting_H(const ExtForm& w);
/// Lambda = (*_sigma)^{-1} L *_sigma.
ExtForm adjoint_Lambda(const ExtForm& w);

/// L^{n-a-b+1}(w) == 0 for every bidegree (a, b) present; forms of degree > n are primitive only if zero.
bool primitive_test(const ExtForm& w);

struct LefschetzComponent {
  int power;         // j
  ExtForm primitive; // homogeneous primitive of degree k - 2j
};

/// w = sum_j L^j(w_j) with each w_j primitive. Components are merged across bidegrees
/// by power j and returned in increasing j; zero components are omitted.
std::vector<LefschetzComponent> lefschetz_decompose(const ExtForm& w);

/// Hodge map from the Weil formula.
ExtForm hodge_star(const ExtForm& w);
ExtForm hodge_star_inverse(const ExtForm& w);

/// g_sigma(w, v) = *(w ^ *(v*)), summed over matching degrees; linear in w, conjugate-linear in v.
GaussScalar metric(const ExtForm& w, const ExtForm& v);

using ComplexMatrix = Matrix<GaussScalar>;

/// Matrix (column j = image of basis vector j) of an operator on the full algebra,
/// in the basis ordered by total degree then mask.
std::vector<BasisMask> full_basis(int n);
ComplexMatrix operator_matrix(int n, ExtForm (*op)(const ExtForm&));
/// Gram matrix G_uv = g(e_u, e_v) over the given basis.
ComplexMatrix gram_matrix(int n, const std::vector<BasisMask>& basis);
bool is_hermitian(const ComplexMatrix& m);
/// Exact Hermitian positive-definiteness via LDL^* pivots.
bool is_positive_definite(const ComplexMatrix& m);

struct Sl2Report {
  bool h_l = false;         // [H, L] = 2L
  bool l_lambda = false;    // [L, Lambda] = H
  bool h_lambda = false;    // [H, Lambda] = -2 Lambda
  bool adjoint = false;     // g(L w, v) = g(w, Lambda v) on all basis pairs
  bool ok() const { return h_l && l_lambda && h_lambda && adjoint; }
};

Sl2Report sl2_check(int n);

/// L^{n-k}: Omega^k -> Omega^{2n-k} has full rank and matching dimensions.
bool lefschetz_isomorphism(int n, int k);

}  // namespace qflag::kaehler
