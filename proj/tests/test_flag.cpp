#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qflag/flag.hpp"

#include <stdexcept>

using namespace qflag;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("dimensions and canonical degrees") {
  CHECK(make_flag(Series::A, 3, 2).dim_M == 4);
  for (int n = 2; n <= 8; ++n) {
    const auto b = make_flag(Series::B, n, 1);
    CHECK(b.dim_M == 2 * n - 1);
    CHECK(b.canonical_degree == 2 * n - 1);
    const auto c = make_flag(Series::C, n, n);
    CHECK(c.dim_M == n * (n + 1) / 2);
    CHECK(c.canonical_degree == n + 1);
  }
  const auto e6 = make_flag(Series::E6, 6, 6);
  CHECK(e6.dim_M == 16);
  CHECK(e6.canonical_degree == 12);
  CHECK(make_flag(Series::E6, 6, 1).dim_M == 16);
  const auto e7 = make_flag(Series::E7, 7, 7);
  CHECK(e7.dim_M == 27);
  CHECK(e7.canonical_degree == 18);
  for (int n = 1; n <= 8; ++n)
    for (int s = 1; s <= n; ++s) {
      const auto fm = make_flag(Series::A, n, s);
      CHECK(fm.dim_M == s * (n + 1 - s));
      CHECK(fm.canonical_degree == n + 1);
    }
  for (int n = 4; n <= 8; ++n) {
    const auto q = make_flag(Series::D, n, 1);
    CHECK(q.dim_M == 2 * n - 2);
    CHECK(q.canonical_degree == 2 * n - 2);
    for (int s : {n - 1, n}) {
      const auto sp = make_flag(Series::D, n, s);
      CHECK(sp.family == Family::SpinorVariety);
      CHECK(sp.dim_M == n * (n - 1) / 2);
      CHECK(sp.canonical_degree == 2 * (n - 1));
    }
  }
}

TEST_CASE("canonical degree times inverse Cartan entry is M") {
  for (int n = 2; n <= 7; ++n)
    for (auto [series, s] : {std::pair{Series::A, 1}, std::pair{Series::B, 1}, std::pair{Series::C, n}}) {
      const auto fm = make_flag(series, n, s);
      CHECK(fm.canonical_degree * inverse_cartan_entry(fm.root_system, s) == fm.dim_M);
    }
}

TEST_CASE("form dimensions") {
  const auto cp1 = make_flag(Series::A, 1, 1);
  CHECK(hk_form_dimension(cp1, 0) == 1);
  CHECK(hk_form_dimension(cp1, 1) == 2);
  CHECK(hk_form_dimension(cp1, 2) == 1);
  CHECK(hk_form_dimension(cp1, 3) == 0);
  CHECK(hk_form_dimension(cp1, -1) == 0);
  const auto gr = make_flag(Series::A, 3, 2);
  CHECK(hk_form_dimension(gr, 4) == 70);
  CHECK(hk_form_dimension(gr, 9) == 0);
  Integer total = 0;
  for (int d = 0; d <= 8; ++d) total += hk_form_dimension(gr, d);
  CHECK(total == 256);
}

TEST_CASE("central element exponents") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<Integer> expect;
    for (int j = n; j >= 1; --j) expect.emplace_back(j);
    CHECK(central_element_exponents(make_flag(Series::A, n, 1)) == expect);
  }
  CHECK(central_element_exponents(make_flag(Series::A, 2, 1)) == ints({2, 1}));
  const auto a3 = make_flag(Series::A, 3, 2);
  CHECK(a3.det_A == 4);
  CHECK(a3.z_raw_exponents == ints({2, 4, 2}));
  CHECK(a3.g == 2);
  CHECK(a3.z_exponents == ints({1, 2, 1}));
}

TEST_CASE("C3 central element against a hand computation") {
  // varpi_3 = alpha_1 + 2 alpha_2 + 3/2 alpha_3 for C3 with alpha_3 long, and det A = 2.
  const auto fm = make_flag(Series::C, 3, 3);
  CHECK(fm.det_A == 2);
  CHECK(fm.z_raw_exponents == ints({2, 4, 3}));
  CHECK(fm.z_exponents == ints({2, 4, 3}));
  CHECK(printed_z_exponents(Series::C, 3, 3) == ints({2, 2, 3}));
  CHECK(printed_z_exponents(Series::A, 2, 1) == ints({2, 1}));
  CHECK_FALSE(printed_z_exponents(Series::B, 3, 1).has_value());
}

TEST_CASE("central element lies in the root lattice and pairs correctly") {
  for (const auto& row : emit_tables(7)) {
    const auto fm = make_flag(row.series, row.rank, row.node);
    std::vector<Rational> c(fm.z_raw_exponents.begin(), fm.z_raw_exponents.end());
    const auto pair = coroot_pairings(fm.root_system, c);
    for (int j = 1; j <= fm.root_system.rank; ++j) CHECK(pair[j - 1] == (j == fm.node ? Rational(fm.det_A) : Rational(0)));
    Integer g = 0;
    for (const auto& x : fm.z_raw_exponents) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    CHECK(g == fm.g);
  }
}

TEST_CASE("Z eigenvalue exponents") {
  const auto a2 = make_flag(Series::A, 2, 1);
  CHECK(z_eigenvalue_exponent(a2, 1) == 2);
  CHECK(z_eigenvalue_exponent(a2, -3) == -6);
  CHECK(z_eigenvalue_exponent(a2, 0) == 0);
  const auto a3 = make_flag(Series::A, 3, 2);
  CHECK(z_eigenvalue_exponent(a3, 1) == 2);
}

TEST_CASE("families and symbols") {
  CHECK(make_flag(Series::A, 3, 2).symbol() == "O_q(Gr_{2,4})");
  CHECK(make_flag(Series::A, 3, 2).family == Family::Grassmannian);
  CHECK(make_flag(Series::B, 3, 1).family == Family::OddQuadric);
  CHECK(make_flag(Series::C, 3, 3).family == Family::LagrangianGrassmannian);
  CHECK(make_flag(Series::D, 5, 1).family == Family::EvenQuadric);
  CHECK(make_flag(Series::E6, 6, 1).family == Family::CayleyPlane);
  CHECK(make_flag(Series::E7, 7, 7).family == Family::FreudenthalVariety);
}

TEST_CASE("tables") {
  const auto small = emit_tables(2);
  CHECK(small.size() == 6);
  for (const auto& row : small) CHECK((row.rank == 2 || row.series == Series::E6 || row.series == Series::E7));
  const auto rows = emit_tables(8);
  for (const auto& row : rows) {
    INFO(row.symbol);
    CHECK(row.matches_closed_form());
  }
  CHECK_THROWS_AS(emit_tables(1), std::invalid_argument);
}

TEST_CASE("non-cominuscule nodes are rejected with the valid list") {
  CHECK_THROWS_AS(make_flag(Series::B, 3, 2), std::invalid_argument);
  try {
    make_flag(Series::E7, 7, 1);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
  CHECK_THROWS_AS(make_flag(Series::A, 3, 4), std::invalid_argument);
}
