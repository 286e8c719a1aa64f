#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qflag/bundles.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

using namespace qflag;

namespace {

// Degree-k monomials in m variables, counted by stars and bars recursion without binomials.
long monomials(int vars, int degree) {
  if (vars == 1) return 1;
  long total = 0;
  for (int e = 0; e <= degree; ++e) total += monomials(vars - 1, degree - e);
  return total;
}

std::vector<std::tuple<Series, int, int>> all_spaces(int cap) {
  std::vector<std::tuple<Series, int, int>> out;
  for (int n = 1; n <= cap; ++n)
    for (int s = 1; s <= n; ++s) out.emplace_back(Series::A, n, s);
  for (int n = 2; n <= cap; ++n) {
    out.emplace_back(Series::B, n, 1);
    out.emplace_back(Series::C, n, n);
  }
  for (int n = 4; n <= cap; ++n)
    for (int s : {1, n - 1, n}) out.emplace_back(Series::D, n, s);
  out.emplace_back(Series::E6, 6, 1);
  out.emplace_back(Series::E6, 6, 6);
  out.emplace_back(Series::E7, 7, 7);
  return out;
}

}  // namespace

TEST_CASE("holomorphic sections") {
  const auto cp2 = make_flag(Series::A, 2, 1);
  CHECK(borel_weil_h0(cp2, 0) == 1);
  CHECK(borel_weil_h0(cp2, -2) == 0);
  CHECK(borel_weil_h0(cp2, 2) == 6);
  CHECK(borel_weil_h0(make_flag(Series::A, 3, 2), 1) == 6);
  CHECK(borel_weil_h0(make_flag(Series::E6, 6, 1), 1) == 27);
  CHECK(borel_weil_h0(make_flag(Series::E7, 7, 7), 1) == 56);
  CHECK(borel_weil_h0(make_flag(Series::B, 3, 1), 1) == 7);
}

TEST_CASE("sections over projective space match monomial counts") {
  for (int n = 1; n <= 5; ++n)
    for (int node : {1, n}) {
      const auto fm = make_flag(Series::A, n, node);
      for (int k = 0; k <= 6; ++k) {
        CHECK(borel_weil_h0(fm, k) == monomials(n + 1, k));
        if (k > 0) CHECK(borel_weil_h0(fm, -k) == 0);
      }
    }
}

TEST_CASE("sections grow along the ray") {
  for (auto [series, rank, node] : all_spaces(6)) {
    const auto fm = make_flag(series, rank, node);
    CHECK(borel_weil_h0(fm, 0) == 1);
    for (int k = 1; k <= 6; ++k) CHECK(borel_weil_h0(fm, k) > borel_weil_h0(fm, k - 1));
  }
}

TEST_CASE("higher cohomology of nonnegative bundles") {
  CHECK(bott_borel_weil(make_flag(Series::A, 2, 1), 3, 1) == 0);
  CHECK(bott_borel_weil(make_flag(Series::A, 3, 2), 0, 2) == 0);
  CHECK_THROWS_AS(bott_borel_weil(make_flag(Series::A, 2, 1), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(bott_borel_weil(make_flag(Series::A, 2, 1), -1, 1), std::invalid_argument);
}

TEST_CASE("classification from cohomology") {
  CHECK(classify_from_h0({6, 0}) == LineBundleClass::Positive);
  CHECK(classify_from_h0({0, 6}) == LineBundleClass::Negative);
  CHECK(classify_from_h0({1, 1}) == LineBundleClass::Flat);
  CHECK(classify_from_h0({0, 0}) == LineBundleClass::Undetermined);
  CHECK(classify_from_h0({2, 3}) == LineBundleClass::Undetermined);
}

TEST_CASE("trichotomy on every family") {
  for (auto [series, rank, node] : all_spaces(6)) {
    const auto fm = make_flag(series, rank, node);
    INFO(fm.symbol());
    for (int k = -6; k <= 6; ++k) {
      const auto expected = k > 0 ? LineBundleClass::Positive : k == 0 ? LineBundleClass::Flat : LineBundleClass::Negative;
      const auto sig = flag_bundle_signature(fm, k);
      CHECK(sig.h0_dbar == borel_weil_h0(fm, k));
      CHECK(sig.h0_del == borel_weil_h0(fm, -k));
      CHECK(classify_flag_bundle(fm, k) == expected);
    }
  }
  CHECK(classify_flag_bundle(make_flag(Series::A, 2, 1), 3) == LineBundleClass::Positive);
  CHECK(classify_flag_bundle(make_flag(Series::A, 2, 1), 0) == LineBundleClass::Flat);
  CHECK(classify_flag_bundle(make_flag(Series::A, 2, 1), -1) == LineBundleClass::Negative);
}

TEST_CASE("vanishing predictions") {
  using V = std::vector<std::pair<int, int>>;
  CHECK(kodaira_predictions(LineBundleClass::Positive, 1) == V{{1, 1}});
  CHECK(kodaira_predictions(LineBundleClass::Negative, 1) == V{{0, 0}});
  CHECK(kodaira_predictions(LineBundleClass::Positive, 2) == V{{1, 2}, {2, 1}, {2, 2}});
  CHECK_THROWS_AS(kodaira_predictions(LineBundleClass::Flat, 2), std::invalid_argument);
  CHECK_THROWS_AS(kodaira_predictions(LineBundleClass::Undetermined, 2), std::invalid_argument);
  for (int m = 1; m <= 6; ++m) {
    std::set<std::pair<int, int>> seen;
    size_t total = 0;
    for (auto c : {LineBundleClass::Positive, LineBundleClass::Negative})
      for (auto p : kodaira_predictions(c, m)) {
        seen.insert(p);
        ++total;
      }
    for (int a = 0; a <= m; ++a) {
      seen.insert({a, m - a});
      ++total;
    }
    CHECK(total == seen.size());
    CHECK(seen.size() == static_cast<size_t>((m + 1) * (m + 1)));
  }
}

TEST_CASE("Fano verdict") {
  for (auto [series, rank, node] : all_spaces(6)) {
    const auto fm = make_flag(series, rank, node);
    const auto cert = fano_verdict(fm);
    CHECK(cert.verdict);
    CHECK(cert.canonical_degree == fm.canonical_degree);
    CHECK(cert.canonical_class == LineBundleClass::Negative);
    CHECK(cert.signature.h0_dbar == 0);
  }
  CHECK(fano_verdict(make_flag(Series::A, 2, 1)).canonical_degree == 3);
  CHECK(fano_verdict(make_flag(Series::E6, 6, 6)).canonical_degree == 12);
  CHECK(fano_verdict(make_flag(Series::A, 3, 2)).canonical_degree == 4);
}

TEST_CASE("class names") {
  CHECK(class_name(LineBundleClass::Positive) == "Positive");
  CHECK(class_name(LineBundleClass::Undetermined) == "Undetermined");
}
