#pragma once

#include "qflag/linalg.hpp"
#include "qflag/qscalar.hpp"

#include <string>
#include <vector>

namespace qflag {

enum class Series { A, B, C, D, E6, E7 };

std::string series_name(Series s);
/// Parses "A", "B", "C", "D", "E6", "E7" (case-insensitive). Throws on anything else.
Series parse_series(const std::string& text);

/// Vector of integer coefficients in the simple-root basis.
using RootVector = std::vector<int>;

/// Root datum of a simple Lie algebra, Bourbaki node numbering.
///
/// Conventions: a_ij = (alpha_i^vee, alpha_j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
/// the shortest simple root has (alpha, alpha) = 2, and d_i = 2 / (alpha_i, alpha_i), so that
/// (alpha_i, alpha_j) = a_ij / d_i. Note d_i <= 1 on long roots, the reciprocal of the
/// usual symmetrizer.
struct RootSystem {
  Series series = Series::A;
  int rank = 0;
  Matrix<Rational> cartan;               // a_ij, integer valued
  std::vector<int> root_lengths;         // (alpha_i, alpha_i)
  std::vector<Rational> symmetrizers;    // d_i
  std::vector<RootVector> positive_roots;
  RootVector highest_root;

  int cartan_entry(int i, int j) const;  // 1-based nodes
  /// (alpha_i, alpha_j), 1-based nodes.
  Rational root_form(int i, int j) const;
  std::string label() const;  // e.g. "E6", "B3"
};

/// Weight in the fundamental-weight basis.
struct Weight {
  std::vector<Rational> coords;

  static Weight zero(int rank);
  static Weight fundamental(int rank, int node);  // 1-based node
  static Weight rho(int rank);
  bool is_dominant_integral() const;
  Weight scaled(const Rational& k) const;
  friend Weight operator+(const Weight& a, const Weight& b);
};

RootSystem build_root_system(Series series, int rank);

/// Coefficients of a weight in the simple-root basis, fixed by (weight, alpha_j^vee) = coords_j.
std::vector<Rational> to_root_basis(const RootSystem& rs, const Weight& w);
/// (lambda, alpha_j^vee) for a vector given in the simple-root basis.
std::vector<Rational> coroot_pairings(const RootSystem& rs, const std::vector<Rational>& root_coords);

Rational bilinear_form(const RootSystem& rs, const Weight& lambda, const Weight& mu);
/// (lambda, beta) for beta given in the simple-root basis.
Rational pair_with_root(const RootSystem& rs, const Weight& lambda, const RootVector& beta);

Matrix<Rational> inverse_cartan(const RootSystem& rs);
Rational inverse_cartan_entry(const RootSystem& rs, int s);
Integer cartan_determinant(const RootSystem& rs);

/// dim V_lambda by the Weyl dimension formula. Throws if lambda is not dominant integral.
Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Nodes s (1-based) whose highest-root coefficient equals 1.
std::vector<int> cominuscule_nodes(const RootSystem& rs);

/// Classical number of positive roots for the series.
int classical_positive_root_count(Series series, int rank);

}  // namespace qflag
