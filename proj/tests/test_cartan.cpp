#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qflag/cartan.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

using namespace qflag;

namespace {

std::vector<std::pair<Series, int>> systems_up_to(int r) {
  std::vector<std::pair<Series, int>> out;
  for (int n = 1; n <= r; ++n) out.emplace_back(Series::A, n);
  for (int n = 2; n <= r; ++n) {
    out.emplace_back(Series::B, n);
    out.emplace_back(Series::C, n);
  }
  for (int n = 3; n <= r; ++n) out.emplace_back(Series::D, n);
  out.emplace_back(Series::E6, 6);
  out.emplace_back(Series::E7, 7);
  return out;
}

RootVector simple_root(int rank, int i) {
  RootVector v(rank, 0);
  v[i - 1] = 1;
  return v;
}

// Number of monomials of degree k in m variables, by direct enumeration.
long count_monomials(int vars, int degree) {
  std::function<long(int, int)> rec = [&](int v, int d) -> long {
    if (v == 1) return 1;
    long total = 0;
    for (int e = 0; e <= d; ++e) total += rec(v - 1, d - e);
    return total;
  };
  return rec(vars, degree);
}

}  // namespace

TEST_CASE("rank two data") {
  const auto a2 = build_root_system(Series::A, 2);
  CHECK(a2.cartan_entry(1, 1) == 2);
  CHECK(a2.cartan_entry(1, 2) == -1);
  CHECK(a2.cartan_entry(2, 1) == -1);
  CHECK(a2.positive_roots.size() == 3);
}

TEST_CASE("C3 long root at the end") {
  const auto c3 = build_root_system(Series::C, 3);
  CHECK(c3.root_lengths == std::vector<int>{2, 2, 4});
  CHECK(c3.cartan_entry(2, 3) == -2);
  CHECK(c3.cartan_entry(3, 2) == -1);
  CHECK(c3.symmetrizers[2] == make_rational(1, 2));
}

TEST_CASE("B3 short root at the end") {
  const auto b3 = build_root_system(Series::B, 3);
  CHECK(b3.root_lengths == std::vector<int>{4, 4, 2});
  CHECK(b3.cartan_entry(3, 2) == -2);
  CHECK(b3.cartan_entry(2, 3) == -1);
}

TEST_CASE("E7 roots") {
  const auto e7 = build_root_system(Series::E7, 7);
  CHECK(e7.positive_roots.size() == 63);
  CHECK(e7.highest_root == RootVector{2, 2, 3, 4, 3, 2, 1});
  CHECK(build_root_system(Series::E6, 6).highest_root == RootVector{1, 2, 2, 3, 2, 1});
}

TEST_CASE("Cartan matrix invariants") {
  for (auto [series, n] : systems_up_to(8)) {
    const auto rs = build_root_system(series, n);
    INFO(rs.label());
    CHECK(*std::min_element(rs.root_lengths.begin(), rs.root_lengths.end()) == 2);
    for (int i = 1; i <= n; ++i) {
      CHECK(rs.cartan_entry(i, i) == 2);
      CHECK(rs.symmetrizers[i - 1] == make_rational(2, rs.root_lengths[i - 1]));
      for (int j = 1; j <= n; ++j) {
        if (i != j) CHECK(rs.cartan_entry(i, j) <= 0);
        CHECK((rs.cartan_entry(i, j) == 0) == (rs.cartan_entry(j, i) == 0));
        CHECK(rs.root_form(i, j) == rs.root_form(j, i));
        CHECK(rs.root_form(i, j) == rs.cartan_entry(i, j) / rs.symmetrizers[i - 1]);
      }
    }
  }
}

TEST_CASE("positive roots") {
  for (auto [series, n] : systems_up_to(8)) {
    const auto rs = build_root_system(series, n);
    INFO(rs.label());
    CHECK(static_cast<int>(rs.positive_roots.size()) == classical_positive_root_count(series, n));
    for (const auto& beta : rs.positive_roots) {
      bool below = true;
      for (int i = 0; i < n; ++i) below = below && beta[i] <= rs.highest_root[i] && beta[i] >= 0;
      CHECK(below);
    }
    for (int i = 1; i <= n; ++i)
      CHECK(std::find(rs.positive_roots.begin(), rs.positive_roots.end(), simple_root(n, i)) != rs.positive_roots.end());
  }
}

TEST_CASE("bilinear form") {
  for (int n = 1; n <= 6; ++n) {
    const auto rs = build_root_system(Series::A, n);
    CHECK(pair_with_root(rs, Weight::fundamental(n, 1), simple_root(n, 1)) == 1);
  }
  const auto a2 = build_root_system(Series::A, 2);
  CHECK(bilinear_form(a2, Weight::fundamental(2, 1), Weight::fundamental(2, 1)) == make_rational(2, 3));
  for (auto [series, n] : systems_up_to(7)) {
    const auto rs = build_root_system(series, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const auto wi = Weight::fundamental(n, i), wj = Weight::fundamental(n, j);
        CHECK(bilinear_form(rs, wi, wj) == bilinear_form(rs, wj, wi));
        CHECK(pair_with_root(rs, wi, simple_root(n, j)) == (i == j ? 1 / rs.symmetrizers[j - 1] : Rational(0)));
      }
  }
}

TEST_CASE("root basis round trip") {
  for (auto [series, n] : systems_up_to(7)) {
    const auto rs = build_root_system(series, n);
    Weight w = Weight::zero(n);
    for (int i = 0; i < n; ++i) w.coords[i] = make_rational(i * 3 - 2, i + 1);
    CHECK(coroot_pairings(rs, to_root_basis(rs, w)) == w.coords);
  }
}

TEST_CASE("inverse Cartan diagonal") {
  for (int n = 1; n <= 8; ++n) {
    const auto rs = build_root_system(Series::A, n);
    for (int s = 1; s <= n; ++s) CHECK(inverse_cartan_entry(rs, s) == make_rational(s * (n + 1 - s), n + 1));
  }
  for (int n = 4; n <= 8; ++n) CHECK(inverse_cartan_entry(build_root_system(Series::D, n), 1) == 1);
  CHECK(inverse_cartan_entry(build_root_system(Series::A, 1), 1) == make_rational(1, 2));
  for (auto [series, n] : systems_up_to(7)) {
    const auto rs = build_root_system(series, n);
    const auto inv = inverse_cartan(rs);
    CHECK(inv * rs.cartan == Matrix<Rational>::identity(n));
    const auto inv_t = *inverse(rs.cartan.transpose());
    for (int s = 1; s <= n; ++s) CHECK(inv(s - 1, s - 1) == inv_t(s - 1, s - 1));
  }
}

TEST_CASE("determinants") {
  for (int n = 1; n <= 8; ++n) CHECK(cartan_determinant(build_root_system(Series::A, n)) == n + 1);
  for (int n = 2; n <= 8; ++n) {
    CHECK(cartan_determinant(build_root_system(Series::B, n)) == 2);
    CHECK(cartan_determinant(build_root_system(Series::C, n)) == 2);
  }
  for (int n = 3; n <= 8; ++n) CHECK(cartan_determinant(build_root_system(Series::D, n)) == 4);
  CHECK(cartan_determinant(build_root_system(Series::E6, 6)) == 3);
  CHECK(cartan_determinant(build_root_system(Series::E7, 7)) == 2);
}

TEST_CASE("Weyl dimension") {
  const auto a1 = build_root_system(Series::A, 1);
  for (int k = 0; k <= 10; ++k) CHECK(weyl_dim(a1, Weight::fundamental(1, 1).scaled(k)) == k + 1);
  CHECK(weyl_dim(build_root_system(Series::A, 2), Weight::fundamental(2, 1)) == 3);
  CHECK(weyl_dim(build_root_system(Series::B, 2), Weight::fundamental(2, 1)) == 5);
  for (int n = 2; n <= 6; ++n) {
    CHECK(weyl_dim(build_root_system(Series::B, n), Weight::fundamental(n, 1)) == 2 * n + 1);
    CHECK(weyl_dim(build_root_system(Series::C, n), Weight::fundamental(n, 1)) == 2 * n);
  }
  for (int n = 4; n <= 7; ++n) {
    const auto d = build_root_system(Series::D, n);
    CHECK(weyl_dim(d, Weight::fundamental(n, 1)) == 2 * n);
    CHECK(weyl_dim(d, Weight::fundamental(n, n)) == (1 << (n - 1)));
  }
  CHECK(weyl_dim(build_root_system(Series::E6, 6), Weight::fundamental(6, 1)) == 27);
  CHECK(weyl_dim(build_root_system(Series::E7, 7), Weight::fundamental(7, 7)) == 56);
  CHECK(weyl_dim(build_root_system(Series::E7, 7), Weight::zero(7)) == 1);
}

TEST_CASE("Weyl dimension on CP^n matches monomial counts") {
  for (int n = 1; n <= 5; ++n) {
    const auto rs = build_root_system(Series::A, n);
    for (int k = 0; k <= 6; ++k) CHECK(weyl_dim(rs, Weight::fundamental(n, 1).scaled(k)) == count_monomials(n + 1, k));
  }
}

TEST_CASE("Weyl dimension grows along cominuscule rays") {
  for (auto [series, n] : systems_up_to(6)) {
    const auto rs = build_root_system(series, n);
    for (int s : cominuscule_nodes(rs)) {
      Integer prev = weyl_dim(rs, Weight::zero(n));
      CHECK(prev == 1);
      for (int k = 1; k <= 5; ++k) {
        const Integer cur = weyl_dim(rs, Weight::fundamental(n, s).scaled(k));
        CHECK(cur > prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("cominuscule nodes") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> all;
    for (int s = 1; s <= n; ++s) all.push_back(s);
    CHECK(cominuscule_nodes(build_root_system(Series::A, n)) == all);
  }
  for (int n = 2; n <= 8; ++n) {
    CHECK(cominuscule_nodes(build_root_system(Series::B, n)) == std::vector<int>{1});
    CHECK(cominuscule_nodes(build_root_system(Series::C, n)) == std::vector<int>{n});
  }
  for (int n = 4; n <= 8; ++n) CHECK(cominuscule_nodes(build_root_system(Series::D, n)) == std::vector<int>{1, n - 1, n});
  CHECK(cominuscule_nodes(build_root_system(Series::E6, 6)) == std::vector<int>{1, 6});
  CHECK(cominuscule_nodes(build_root_system(Series::E7, 7)) == std::vector<int>{7});
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(build_root_system(Series::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Series::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Series::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Series::E6, 7), std::invalid_argument);
  CHECK_THROWS(weyl_dim(build_root_system(Series::A, 2), Weight::fundamental(2, 1).scaled(-1)));
  CHECK_THROWS(weyl_dim(build_root_system(Series::A, 2), Weight::fundamental(2, 1).scaled(make_rational(1, 2))));
  CHECK(parse_series("e7") == Series::E7);
  CHECK(parse_series("d") == Series::D);
  CHECK_THROWS(parse_series("F4"));
}
