#include "qflag/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace qflag {

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::E6: return "E6";
    case Series::E7: return "E7";
  }
  return "?";
}

Series parse_series(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "A") return Series::A;
  if (t == "B") return Series::B;
  if (t == "C") return Series::C;
  if (t == "D") return Series::D;
  if (t == "E6" || t == "E") return Series::E6;
  if (t == "E7") return Series::E7;
  throw std::invalid_argument("unknown series '" + text + "' (expected A, B, C, D, E6 or E7)");
}

int RootSystem::cartan_entry(int i, int j) const {
  return static_cast<int>(cartan(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)).get_num().get_si());
}

Rational RootSystem::root_form(int i, int j) const {
  return cartan(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) / symmetrizers[static_cast<size_t>(i - 1)];
}

std::string RootSystem::label() const {
  if (series == Series::E6 || series == Series::E7) return series_name(series);
  return series_name(series) + std::to_string(rank);
}

Weight Weight::zero(int rank) { return Weight{std::vector<Rational>(static_cast<size_t>(rank), Rational(0))}; }

Weight Weight::fundamental(int rank, int node) {
  if (node < 1 || node > rank) throw std::invalid_argument("Weight::fundamental: node out of range");
  Weight w = zero(rank);
  w.coords[static_cast<size_t>(node - 1)] = 1;
  return w;
}

Weight Weight::rho(int rank) { return Weight{std::vector<Rational>(static_cast<size_t>(rank), Rational(1))}; }

bool Weight::is_dominant_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c >= 0 && c.get_den() == 1; });
}

Weight Weight::scaled(const Rational& k) const {
  Weight w = *this;
  for (auto& c : w.coords) c *= k;
  return w;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("Weight: rank mismatch");
  Weight w = a;
  for (size_t i = 0; i < w.coords.size(); ++i) w.coords[i] += b.coords[i];
  return w;
}

namespace {

struct Diagram {
  std::vector<int> lengths;                // (alpha_i, alpha_i)
  std::vector<std::pair<int, int>> edges;  // 0-based node pairs
  std::vector<int> edge_form;              // (alpha_i, alpha_j) on each edge
};

// Symmetric form data (alpha_i, alpha_j) in Bourbaki numbering, shortest root normalized to 2.
Diagram diagram(Series series, int r) {
  Diagram d;
  auto chain = [&](int from, int to, int form) {
    for (int i = from; i < to; ++i) {
      d.edges.push_back({i, i + 1});
      d.edge_form.push_back(form);
    }
  };
  switch (series) {
    case Series::A:
      d.lengths.assign(static_cast<size_t>(r), 2);
      chain(0, r - 1, -1);
      break;
    case Series::B:
      // alpha_1..alpha_{r-1} long, alpha_r short.
      d.lengths.assign(static_cast<size_t>(r), 4);
      d.lengths.back() = 2;
      chain(0, r - 1, -2);
      break;
    case Series::C:
      // alpha_1..alpha_{r-1} short, alpha_r long.
      d.lengths.assign(static_cast<size_t>(r), 2);
      d.lengths.back() = 4;
      chain(0, r - 2, -1);
      d.edges.push_back({r - 2, r - 1});
      d.edge_form.push_back(-2);
      break;
    case Series::D:
      d.lengths.assign(static_cast<size_t>(r), 2);
      chain(0, r - 2, -1);
      d.edges.push_back({r - 3, r - 1});
      d.edge_form.push_back(-1);
      break;
    case Series::E6:
    case Series::E7:
      d.lengths.assign(static_cast<size_t>(r), 2);
      // 1-3-4-5-6(-7) with 2 attached to 4.
      for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {6, 7}}) {
        if (b > r) continue;
        d.edges.push_back({a - 1, b - 1});
        d.edge_form.push_back(-1);
      }
      break;
  }
  return d;
}

void check_rank(Series series, int rank) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for series " + series_name(series) + ": " +
                                why);
  };
  switch (series) {
    case Series::A:
      if (rank < 1) fail("A_n requires n >= 1");
      break;
    case Series::B:
    case Series::C:
      if (rank < 2) fail("B_n and C_n require n >= 2");
      break;
    case Series::D:
      if (rank < 3) fail("D_n requires n >= 3");
      break;
    case Series::E6:
      if (rank != 6) fail("E6 has rank 6");
      break;
    case Series::E7:
      if (rank != 7) fail("E7 has rank 7");
      break;
  }
}

// Reflection closure: s_i(beta) = beta - (beta, alpha_i^vee) alpha_i with
// (beta, alpha_i^vee) = sum_j beta_j a_ij.
std::vector<RootVector> enumerate_positive_roots(const Matrix<Rational>& cartan, int r) {
  std::set<RootVector> found;
  std::vector<RootVector> frontier;
  for (int i = 0; i < r; ++i) {
    RootVector e(static_cast<size_t>(r), 0);
    e[static_cast<size_t>(i)] = 1;
    found.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int j = 0; j < r; ++j)
          pairing += beta[static_cast<size_t>(j)] *
                     static_cast<int>(cartan(static_cast<size_t>(i), static_cast<size_t>(j)).get_num().get_si());
        if (pairing == 0) continue;
        RootVector img = beta;
        img[static_cast<size_t>(i)] -= pairing;
        if (std::any_of(img.begin(), img.end(), [](int c) { return c < 0; })) continue;
        if (found.insert(img).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  std::vector<RootVector> roots(found.begin(), found.end());
  std::stable_sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) {
    int ha = 0, hb = 0;
    for (int c : a) ha += c;
    for (int c : b) hb += c;
    return ha < hb;
  });
  return roots;
}

}  // namespace

RootSystem build_root_system(Series series, int rank) {
  check_rank(series, rank);
  const Diagram d = diagram(series, rank);
  const auto r = static_cast<size_t>(rank);

  Matrix<Rational> form(r, r);
  for (size_t i = 0; i < r; ++i) form(i, i) = d.lengths[i];
  for (size_t e = 0; e < d.edges.size(); ++e) {
    auto [a, b] = d.edges[e];
    form(static_cast<size_t>(a), static_cast<size_t>(b)) = d.edge_form[e];
    form(static_cast<size_t>(b), static_cast<size_t>(a)) = d.edge_form[e];
  }

  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  rs.root_lengths = d.lengths;
  rs.cartan = Matrix<Rational>(r, r);
  for (size_t i = 0; i < r; ++i) {
    rs.symmetrizers.emplace_back(make_rational(2, d.lengths[i]));
    for (size_t j = 0; j < r; ++j) {
      Rational a = Rational(2) * form(i, j) / form(i, i);
      a.canonicalize();
      if (a.get_den() != 1) throw std::logic_error("build_root_system: non-integral Cartan entry");
      rs.cartan(i, j) = a;
    }
  }
  rs.positive_roots = enumerate_positive_roots(rs.cartan, rank);

  // Unique maximal element under componentwise comparison.
  for (const auto& cand : rs.positive_roots) {
    bool dominates = std::all_of(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const RootVector& other) {
      for (size_t i = 0; i < r; ++i)
        if (other[i] > cand[i]) return false;
      return true;
    });
    if (dominates) {
      rs.highest_root = cand;
      break;
    }
  }
  if (rs.highest_root.empty()) throw std::logic_error("build_root_system: no highest root found");
  return rs;
}

std::vector<Rational> to_root_basis(const RootSystem& rs, const Weight& w) {
  const auto inv = inverse_cartan(rs);
  const auto r = static_cast<size_t>(rs.rank);
  if (w.coords.size() != r) throw std::invalid_argument("to_root_basis: rank mismatch");
  std::vector<Rational> c(r, Rational(0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) c[i] += inv(i, j) * w.coords[j];
  return c;
}

std::vector<Rational> coroot_pairings(const RootSystem& rs, const std::vector<Rational>& root_coords) {
  const auto r = static_cast<size_t>(rs.rank);
  std::vector<Rational> out(r, Rational(0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) out[i] += rs.cartan(i, j) * root_coords[j];
  return out;
}

Rational pair_with_root(const RootSystem& rs, const Weight& lambda, const RootVector& beta) {
  // (varpi_i, alpha_j) = delta_ij / d_j
  Rational s = 0;
  for (size_t j = 0; j < beta.size(); ++j)
    if (beta[j] != 0) s += lambda.coords[j] * beta[j] / rs.symmetrizers[j];
  return s;
}

Rational bilinear_form(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const auto c = to_root_basis(rs, mu);
  Rational s = 0;
  for (size_t j = 0; j < c.size(); ++j) s += lambda.coords[j] * c[j] / rs.symmetrizers[j];
  return s;
}

Matrix<Rational> inverse_cartan(const RootSystem& rs) {
  auto inv = inverse(rs.cartan);
  if (!inv) throw std::logic_error("inverse_cartan: singular Cartan matrix");
  return *inv;
}

Rational inverse_cartan_entry(const RootSystem& rs, int s) {
  if (s < 1 || s > rs.rank) throw std::invalid_argument("inverse_cartan_entry: node out of range");
  return inverse_cartan(rs)(static_cast<size_t>(s - 1), static_cast<size_t>(s - 1));
}

Integer cartan_determinant(const RootSystem& rs) {
  Rational d = determinant(rs.cartan);
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("cartan_determinant: non-integral determinant");
  return d.get_num();
}

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (lambda.coords.size() != static_cast<size_t>(rs.rank))
    throw std::invalid_argument("weyl_dim: weight rank mismatch");
  if (!lambda.is_dominant_integral()) throw std::invalid_argument("weyl_dim: weight is not dominant integral");
  const Weight rho = Weight::rho(rs.rank);
  const Weight shifted = lambda + rho;
  Rational prod = 1;
  for (const auto& beta : rs.positive_roots) prod *= pair_with_root(rs, shifted, beta) / pair_with_root(rs, rho, beta);
  prod.canonicalize();
  if (prod.get_den() != 1) throw std::logic_error("weyl_dim: non-integral dimension");
  return prod.get_num();
}

std::vector<int> cominuscule_nodes(const RootSystem& rs) {
  std::vector<int> out;
  for (int s = 1; s <= rs.rank; ++s)
    if (rs.highest_root[static_cast<size_t>(s - 1)] == 1) out.push_back(s);
  return out;
}

int classical_positive_root_count(Series series, int n) {
  switch (series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E6: return 36;
    case Series::E7: return 63;
  }
  return 0;
}

}  // namespace qflag
