#include "qflag/flag.hpp"

#include <algorithm>
#include <stdexcept>

namespace qflag {

std::string family_name(Family f) {
  switch (f) {
    case Family::Grassmannian: return "quantum Grassmannian";
    case Family::OddQuadric: return "odd quantum quadric";
    case Family::LagrangianGrassmannian: return "quantum Lagrangian Grassmannian";
    case Family::EvenQuadric: return "even quantum quadric";
    case Family::SpinorVariety: return "quantum spinor variety";
    case Family::CayleyPlane: return "quantum Cayley plane";
    case Family::FreudenthalVariety: return "quantum Freudenthal variety";
  }
  return "?";
}

Family classify_family(const RootSystem& rs, int node) {
  switch (rs.series) {
    case Series::A: return Family::Grassmannian;
    case Series::B: return Family::OddQuadric;
    case Series::C: return Family::LagrangianGrassmannian;
    case Series::D:
      // Also covers D_3 = A_3, where node 1 is the middle of the A_3 chain.
      return node == 1 ? Family::EvenQuadric : Family::SpinorVariety;
    case Series::E6: return Family::CayleyPlane;
    case Series::E7: return Family::FreudenthalVariety;
  }
  throw std::logic_error("classify_family: unknown series");
}

std::string FlagManifold::symbol() const {
  const int n = root_system.rank;
  switch (family) {
    case Family::Grassmannian: return "O_q(Gr_{" + std::to_string(node) + "," + std::to_string(n + 1) + "})";
    case Family::OddQuadric:
    case Family::EvenQuadric: return "O_q(Q_{" + std::to_string(dim_M) + "})";
    case Family::LagrangianGrassmannian: return "O_q(L_{" + std::to_string(n) + "})";
    case Family::SpinorVariety: return "O_q(S_{" + std::to_string(n) + "})";
    case Family::CayleyPlane: return "O_q(OP^2)";
    case Family::FreudenthalVariety: return "O_q(F)";
  }
  return "?";
}

int canonical_degree(const RootSystem& rs, int node, int dim_M) {
  Rational k = Rational(dim_M) / inverse_cartan_entry(rs, node);
  k.canonicalize();
  if (k.get_den() != 1)
    throw std::logic_error("canonical_degree: M/(A^-1)_ss = " + to_string(k) + " is not an integer for " + rs.label());
  if (k <= 0) throw std::logic_error("canonical_degree: nonpositive degree for " + rs.label());
  return static_cast<int>(k.get_num().get_si());
}

FlagManifold make_flag(Series series, int rank, int node) {
  FlagManifold fm;
  fm.root_system = build_root_system(series, rank);
  const RootSystem& rs = fm.root_system;
  const auto valid = cominuscule_nodes(rs);
  if (std::find(valid.begin(), valid.end(), node) == valid.end()) {
    std::string list;
    for (int s : valid) list += (list.empty() ? "" : ", ") + std::to_string(s);
    throw std::invalid_argument("node " + std::to_string(node) + " is not cominuscule for " + rs.label() +
                                "; valid nodes: {" + list + "}");
  }
  fm.node = node;
  fm.family = classify_family(rs, node);

  const auto s = static_cast<size_t>(node - 1);
  fm.dim_M = static_cast<int>(std::count_if(rs.positive_roots.begin(), rs.positive_roots.end(),
                                            [&](const RootVector& beta) { return beta[s] >= 1; }));
  fm.canonical_degree = canonical_degree(rs, node, fm.dim_M);

  fm.det_A = cartan_determinant(rs);
  const auto varpi = to_root_basis(rs, Weight::fundamental(rank, node));
  fm.g = 0;
  for (const auto& c : varpi) {
    Rational a = c * Rational(fm.det_A);
    a.canonicalize();
    if (a.get_den() != 1) throw std::logic_error("make_flag: det(A) varpi_s is not in the root lattice");
    fm.z_raw_exponents.push_back(a.get_num());
    mpz_gcd(fm.g.get_mpz_t(), fm.g.get_mpz_t(), a.get_num().get_mpz_t());
  }
  for (const auto& a : fm.z_raw_exponents) fm.z_exponents.push_back(a / fm.g);
  return fm;
}

Integer hk_form_dimension(const FlagManifold& fm, int degree) {
  if (degree < 0 || degree > 2 * fm.dim_M) return 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * fm.dim_M), static_cast<unsigned long>(degree));
  return c;
}

std::vector<Integer> central_element_exponents(const FlagManifold& fm) { return fm.z_exponents; }

Rational z_eigenvalue_exponent(const FlagManifold& fm, int k) {
  const Weight w = Weight::fundamental(fm.root_system.rank, fm.node);
  Rational e = Rational(k) * Rational(fm.det_A) / Rational(fm.g) * bilinear_form(fm.root_system, w, w);
  e.canonicalize();
  return e;
}

std::optional<std::vector<Integer>> printed_z_exponents(Series series, int rank, int node) {
  if (series == Series::A && rank == 2 && node == 1) return std::vector<Integer>{2, 1};
  if (series == Series::C && rank == 3 && node == 3) return std::vector<Integer>{2, 2, 3};
  return std::nullopt;
}

std::pair<int, int> closed_form_invariants(Family family, int n, int s) {
  switch (family) {
    case Family::Grassmannian: return {s * (n - s + 1), n + 1};
    case Family::OddQuadric: return {2 * n - 1, 2 * n - 1};
    case Family::LagrangianGrassmannian: return {n * (n + 1) / 2, n + 1};
    case Family::EvenQuadric: return {2 * (n - 1), 2 * (n - 1)};
    case Family::SpinorVariety: return {n * (n - 1) / 2, 2 * (n - 1)};
    case Family::CayleyPlane: return {16, 12};
    case Family::FreudenthalVariety: return {27, 18};
  }
  throw std::logic_error("closed_form_invariants: unknown family");
}

namespace {

TableRow row_for(Series series, int rank, int node) {
  const FlagManifold fm = make_flag(series, rank, node);
  const auto [m, k] = closed_form_invariants(fm.family, rank, node);
  return TableRow{fm.family, series, rank, node, fm.symbol(), fm.dim_M, fm.canonical_degree, fm.z_exponents, m, k};
}

}  // namespace

std::vector<TableRow> emit_tables(int max_rank) {
  if (max_rank < 2) throw std::invalid_argument("emit_tables: max_rank must be at least 2");
  std::vector<TableRow> rows;
  for (int n = 2; n <= max_rank; ++n)
    for (int s = 1; s <= n; ++s) rows.push_back(row_for(Series::A, n, s));
  for (int n = 2; n <= max_rank; ++n) rows.push_back(row_for(Series::B, n, 1));
  for (int n = 2; n <= max_rank; ++n) rows.push_back(row_for(Series::C, n, n));
  for (int n = 4; n <= max_rank; ++n) rows.push_back(row_for(Series::D, n, 1));
  for (int n = 4; n <= max_rank; ++n) rows.push_back(row_for(Series::D, n, n));
  rows.push_back(row_for(Series::E6, 6, 6));
  rows.push_back(row_for(Series::E7, 7, 7));
  return rows;
}

}  // namespace qflag
