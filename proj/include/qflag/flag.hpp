#pragma once

#include "qflag/cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qflag {

/// The seven families of irreducible flag manifolds.
enum class Family {
  Grassmannian,         // A_n, any node
  OddQuadric,           // B_n, node 1
  LagrangianGrassmannian,  // C_n, node n
  EvenQuadric,          // D_n, node 1
  SpinorVariety,        // D_n, node n-1 or n
  CayleyPlane,          // E6, node 1 or 6
  FreudenthalVariety,   // E7, node 7
};

std::string family_name(Family f);

struct FlagManifold {
  RootSystem root_system;
  int node = 0;
  Family family = Family::Grassmannian;
  int dim_M = 0;
  int canonical_degree = 0;
  Integer det_A;
  std::vector<Integer> z_raw_exponents;  // det(A) varpi_s in the simple-root basis
  Integer g;                             // gcd of z_raw_exponents
  std::vector<Integer> z_exponents;      // z_raw_exponents / g

  /// Quantum homogeneous space symbol, e.g. "O_q(Gr_{2,4})".
  std::string symbol() const;
};

/// Throws std::invalid_argument naming the valid nodes when `node` is not cominuscule.
FlagManifold make_flag(Series series, int rank, int node);

Family classify_family(const RootSystem& rs, int node);

/// k with Omega^(M,0) = E_{-k}, computed as M / (A^{-1})_ss. Throws std::logic_error if not integral.
int canonical_degree(const RootSystem& rs, int node, int dim_M);
inline int canonical_degree(const FlagManifold& fm) { return fm.canonical_degree; }

/// Dimension of the degree-`degree` forms of the Heckenberger-Kolb calculus: C(2M, degree).
Integer hk_form_dimension(const FlagManifold& fm, int degree);

std::vector<Integer> central_element_exponents(const FlagManifold& fm);

/// Exponent of q in the Z-eigenvalue on E_k: k g^{-1} det(A) (varpi_s, varpi_s).
Rational z_eigenvalue_exponent(const FlagManifold& fm, int k);

/// Exponent vectors for Z as printed in the worked examples accompanying the
/// central-element construction (A_2 node 1 and C_3 node 3). Only these two
/// cases are recorded; the calculator never uses them.
std::optional<std::vector<Integer>> printed_z_exponents(Series series, int rank, int node);

struct TableRow {
  Family family;
  Series series;
  int rank;
  int node;
  std::string symbol;
  int dim_M;
  int canonical_degree;
  std::vector<Integer> z_exponents;
  int expected_dim_M;        // closed form for the family
  int expected_degree;       // closed form for the family
  bool matches_closed_form() const { return dim_M == expected_dim_M && canonical_degree == expected_degree; }
};

/// Closed forms (M, k) for each family as functions of rank and node.
std::pair<int, int> closed_form_invariants(Family family, int rank, int node);

/// One row per (family, rank, node) for ranks 2..max_rank (D from 4), plus E6 and E7.
/// A_n lists every node; D_n lists node 1 and the spinor node n.
std::vector<TableRow> emit_tables(int max_rank);

}  // namespace qflag
