#include "qflag/kaehler.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qflag::kaehler {

GaussScalar& GaussScalar::operator+=(const GaussScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussScalar& GaussScalar::operator-=(const GaussScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussScalar& GaussScalar::operator/=(const GaussScalar& o) {
  const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (norm == 0) throw std::domain_error("GaussScalar: division by zero");
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string GaussScalar::to_string() const {
  if (im_ == 0) return qflag::to_string(re_);
  std::string imag = im_ == 1 ? "i" : im_ == -1 ? "-i" : qflag::to_string(im_) + "*i";
  if (re_ == 0) return imag;
  if (im_ < 0) {
    const Rational mag = -im_;
    return qflag::to_string(re_) + " - " + (mag == 1 ? std::string("i") : qflag::to_string(mag) + "*i");
  }
  return qflag::to_string(re_) + " + " + imag;
}

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("exterior model dimension must be in 1.." + std::to_string(kMaxDimension));
}

BasisMask holo_bits(int n) { return (BasisMask{1} << n) - 1; }

// Sign of m1 ^ m2 relative to the increasing-bit ordering; 0 if they overlap.
int wedge_sign(BasisMask m1, BasisMask m2) {
  if (m1 & m2) return 0;
  int swaps = 0;
  for (BasisMask rest = m2; rest; rest &= rest - 1) {
    const int y = std::countr_zero(rest);
    const BasisMask above = ~((BasisMask{2} << y) - 1);
    swaps += std::popcount(m1 & above);
  }
  return swaps % 2 == 0 ? 1 : -1;
}

GaussScalar i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return GaussScalar::i();
    case 2: return -1;
    default: return -GaussScalar::i();
  }
}

Rational factorial(int m) {
  Rational f = 1;
  for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

}  // namespace

int holomorphic_degree(int n, BasisMask m) { return std::popcount(m & holo_bits(n)); }
int antiholomorphic_degree(int n, BasisMask m) { return std::popcount(m >> n); }
int total_degree(BasisMask m) { return std::popcount(m); }

std::vector<BasisMask> bidegree_basis(int n, int a, int b) {
  std::vector<BasisMask> out;
  if (a < 0 || b < 0 || a > n || b > n) return out;
  for (BasisMask m = 0; m < (BasisMask{1} << (2 * n)); ++m)
    if (holomorphic_degree(n, m) == a && antiholomorphic_degree(n, m) == b) out.push_back(m);
  return out;
}

std::vector<BasisMask> degree_basis(int n, int k) {
  std::vector<BasisMask> out;
  for (BasisMask m = 0; m < (BasisMask{1} << (2 * n)); ++m)
    if (total_degree(m) == k) out.push_back(m);
  return out;
}

ExtForm::ExtForm(int n) : n_(n) { check_dimension(n); }

ExtForm ExtForm::unit(int n) { return basis(n, 0); }

ExtForm ExtForm::basis(int n, BasisMask mask, GaussScalar c) {
  ExtForm w(n);
  if (mask >> (2 * n)) throw std::invalid_argument("ExtForm::basis: mask out of range");
  w.add(mask, c);
  return w;
}

ExtForm ExtForm::dz(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("ExtForm::dz: index out of range");
  return basis(n, BasisMask{1} << (j - 1));
}

ExtForm ExtForm::dzbar(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("ExtForm::dzbar: index out of range");
  return basis(n, BasisMask{1} << (n + j - 1));
}

GaussScalar ExtForm::coefficient(BasisMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? GaussScalar(0) : it->second;
}

void ExtForm::add(BasisMask mask, const GaussScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExtForm& ExtForm::operator+=(const ExtForm& o) {
  if (o.n_ != n_) throw std::invalid_argument("ExtForm: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ExtForm& ExtForm::operator-=(const ExtForm& o) {
  if (o.n_ != n_) throw std::invalid_argument("ExtForm: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ExtForm operator*(const GaussScalar& c, const ExtForm& w) {
  ExtForm r(w.n_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : w.terms_) r.add(m, c * v);
  return r;
}

ExtForm ExtForm::bidegree_part(int a, int b) const {
  ExtForm r(n_);
  for (const auto& [m, c] : terms_)
    if (holomorphic_degree(n_, m) == a && antiholomorphic_degree(n_, m) == b) r.add(m, c);
  return r;
}

ExtForm ExtForm::degree_part(int k) const {
  ExtForm r(n_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) == k) r.add(m, c);
  return r;
}

std::vector<std::pair<int, int>> ExtForm::bidegrees() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [m, c] : terms_) out.emplace_back(holomorphic_degree(n_, m), antiholomorphic_degree(n_, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string ExtForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (m == 0) continue;
    for (int j = 0; j < 2 * n_; ++j) {
      if (!(m & (BasisMask{1} << j))) continue;
      os << (j < n_ ? " dz" + std::to_string(j + 1) : " dzb" + std::to_string(j - n_ + 1));
    }
  }
  return os.str();
}

ExtForm wedge(const ExtForm& a, const ExtForm& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("wedge: dimension mismatch");
  ExtForm r(a.dimension());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      r.add(ma | mb, s == 1 ? ca * cb : -(ca * cb));
    }
  return r;
}

ExtForm star(const ExtForm& w) {
  // (g_1 ^ ... ^ g_k)* = g_1* ^ ... ^ g_k*: the (-1)^{kl} rule and the reversal cancel for 1-forms.
  const int n = w.dimension();
  ExtForm r(n);
  for (const auto& [m, c] : w.terms()) {
    BasisMask acc = 0;
    int sign = 1;
    for (int j = 0; j < 2 * n; ++j) {
      if (!(m & (BasisMask{1} << j))) continue;
      const int conj_bit = j < n ? j + n : j - n;
      const BasisMask g = BasisMask{1} << conj_bit;
      sign *= wedge_sign(acc, g);
      acc |= g;
    }
    r.add(acc, sign == 1 ? c.conj() : -c.conj());
  }
  return r;
}

ExtForm fundamental_form(int n) {
  ExtForm s(n);
  for (int j = 1; j <= n; ++j) s += GaussScalar::i() * wedge(ExtForm::dz(n, j), ExtForm::dzbar(n, j));
  return s;
}

ExtForm lefschetz_L(const ExtForm& w) { return wedge(fundamental_form(w.dimension()), w); }

ExtForm lefschetz_power(const ExtForm& w, int power) {
  ExtForm r = w;
  for (int j = 0; j < power; ++j) r = lefschetz_L(r);
  return r;
}

ExtForm counting_H(const ExtForm& w) {
  const int n = w.dimension();
  ExtForm r(n);
  for (const auto& [m, c] : w.terms()) r.add(m, GaussScalar(total_degree(m) - n) * c);
  return r;
}

namespace {

std::vector<GaussScalar> coords(const ExtForm& w, const std::vector<BasisMask>& basis) {
  std::vector<GaussScalar> v;
  v.reserve(basis.size());
  for (auto m : basis) v.push_back(w.coefficient(m));
  return v;
}

ExtForm from_coords(int n, const std::vector<BasisMask>& basis, const std::vector<GaussScalar>& v) {
  ExtForm w(n);
  for (size_t i = 0; i < basis.size(); ++i) w.add(basis[i], v[i]);
  return w;
}

struct Block {
  int power;        // j
  int a, b;         // bidegree of the primitive part
  std::vector<ExtForm> primitives;
};

struct BidegreeData {
  std::vector<BasisMask> basis;
  std::vector<Block> blocks;
  ComplexMatrix solve;  // coords in basis -> concatenated block coefficients
};

// Per-dimension cache of primitive bases and decomposition solvers.
class Model {
public:
  explicit Model(int n) : n_(n) {
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) prim_[{a, b}] = compute_primitive_basis(a, b);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) data_[{a, b}] = build(a, b);
  }

  const BidegreeData& at(int a, int b) const { return data_.at({a, b}); }

private:
  std::vector<ExtForm> compute_primitive_basis(int a, int b) {
    std::vector<ExtForm> out;
    if (a + b > n_) return out;
    const auto src = bidegree_basis(n_, a, b);
    const int e = n_ - a - b + 1;
    const auto dst = bidegree_basis(n_, a + e, b + e);
    if (dst.empty()) {
      for (auto m : src) out.push_back(ExtForm::basis(n_, m));
      return out;
    }
    ComplexMatrix mat(dst.size(), src.size());
    for (size_t c = 0; c < src.size(); ++c) {
      const auto img = coords(lefschetz_power(ExtForm::basis(n_, src[c]), e), dst);
      for (size_t r = 0; r < dst.size(); ++r) mat(r, c) = img[r];
    }
    for (const auto& v : nullspace(mat)) out.push_back(from_coords(n_, src, v));
    return out;
  }

  BidegreeData build(int a, int b) {
    BidegreeData d;
    d.basis = bidegree_basis(n_, a, b);
    std::vector<std::vector<GaussScalar>> columns;
    for (int j = 0; j <= std::min(a, b); ++j) {
      const int pa = a - j, pb = b - j;
      if (pa + pb > n_ || j > n_ - pa - pb) continue;
      Block blk{j, pa, pb, prim_.at({pa, pb})};
      for (const auto& p : blk.primitives) columns.push_back(coords(lefschetz_power(p, j), d.basis));
      d.blocks.push_back(std::move(blk));
    }
    if (columns.size() != d.basis.size())
      throw std::logic_error("Lefschetz decomposition: dimension count mismatch in bidegree (" + std::to_string(a) +
                             "," + std::to_string(b) + ")");
    ComplexMatrix m(d.basis.size(), columns.size());
    for (size_t c = 0; c < columns.size(); ++c)
      for (size_t r = 0; r < d.basis.size(); ++r) m(r, c) = columns[c][r];
    auto inv = inverse(m);
    if (!inv) throw std::logic_error("Lefschetz decomposition: singular system");
    d.solve = std::move(*inv);
    return d;
  }

  int n_;
  std::map<std::pair<int, int>, BidegreeData> data_;
  std::map<std::pair<int, int>, std::vector<ExtForm>> prim_;
};

const Model& model_for(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Model>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Model>(n);
  return *slot;
}

struct Piece {
  int power;
  int a, b;
  ExtForm primitive;
};

// Decomposition of a single bidegree component.
std::vector<Piece> decompose_bidegree(const ExtForm& w, int a, int b) {
  const int n = w.dimension();
  const auto& d = model_for(n).at(a, b);
  const auto x = coords(w, d.basis);
  std::vector<GaussScalar> y(d.basis.size(), GaussScalar(0));
  for (size_t r = 0; r < d.basis.size(); ++r)
    for (size_t c = 0; c < d.basis.size(); ++c)
      if (!x[c].is_zero()) y[r] += d.solve(r, c) * x[c];
  std::vector<Piece> out;
  size_t off = 0;
  for (const auto& blk : d.blocks) {
    ExtForm p(n);
    for (const auto& basis_form : blk.primitives) {
      if (!y[off].is_zero()) p += y[off] * basis_form;
      ++off;
    }
    if (!p.is_zero()) out.push_back(Piece{blk.power, blk.a, blk.b, std::move(p)});
  }
  return out;
}

std::vector<Piece> decompose_all(const ExtForm& w) {
  std::vector<Piece> out;
  for (auto [a, b] : w.bidegrees()) {
    auto part = decompose_bidegree(w.bidegree_part(a, b), a, b);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

// Weil coefficient of *(L^j w) for w primitive of bidegree (a, b).
GaussScalar weil_coefficient(int n, int j, int a, int b) {
  const int k = a + b;
  const int sign = (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
  const Rational ratio = factorial(j) / factorial(n - j - k);
  return GaussScalar(sign) * i_power(a - b) * GaussScalar(ratio);
}

}  // namespace

bool primitive_test(const ExtForm& w) {
  const int n = w.dimension();
  for (auto [a, b] : w.bidegrees()) {
    if (a + b > n) return false;
    if (!lefschetz_power(w.bidegree_part(a, b), n - a - b + 1).is_zero()) return false;
  }
  return true;
}

std::vector<LefschetzComponent> lefschetz_decompose(const ExtForm& w) {
  const int n = w.dimension();
  std::map<int, ExtForm> by_power;
  for (auto& piece : decompose_all(w)) {
    auto it = by_power.try_emplace(piece.power, ExtForm(n)).first;
    it->second += piece.primitive;
  }
  std::vector<LefschetzComponent> out;
  for (auto& [j, p] : by_power)
    if (!p.is_zero()) out.push_back(LefschetzComponent{j, std::move(p)});
  return out;
}

ExtForm hodge_star(const ExtForm& w) {
  const int n = w.dimension();
  ExtForm r(n);
  for (const auto& piece : decompose_all(w)) {
    const int k = piece.a + piece.b;
    r += weil_coefficient(n, piece.power, piece.a, piece.b) * lefschetz_power(piece.primitive, n - piece.power - k);
  }
  return r;
}

ExtForm hodge_star_inverse(const ExtForm& w) {
  const int n = w.dimension();
  ExtForm r(n);
  for (const auto& piece : decompose_all(w)) {
    // piece = L^{j'} p with *(L^j p) = c L^{n-j-k} p, so j = n - j' - k.
    const int k = piece.a + piece.b;
    const int j = n - piece.power - k;
    r += (GaussScalar(1) / weil_coefficient(n, j, piece.a, piece.b)) * lefschetz_power(piece.primitive, j);
  }
  return r;
}

ExtForm adjoint_Lambda(const ExtForm& w) { return hodge_star_inverse(lefschetz_L(hodge_star(w))); }

GaussScalar metric(const ExtForm& w, const ExtForm& v) {
  if (w.dimension() != v.dimension()) throw std::invalid_argument("metric: dimension mismatch");
  const int n = w.dimension();
  GaussScalar total = 0;
  for (int k = 0; k <= 2 * n; ++k) {
    const ExtForm wk = w.degree_part(k);
    const ExtForm vk = v.degree_part(k);
    if (wk.is_zero() || vk.is_zero()) continue;
    total += hodge_star(wedge(wk, hodge_star(star(vk)))).coefficient(0);
  }
  return total;
}

std::vector<BasisMask> full_basis(int n) {
  check_dimension(n);
  std::vector<BasisMask> out;
  for (int k = 0; k <= 2 * n; ++k) {
    auto part = degree_basis(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

ComplexMatrix operator_matrix(int n, ExtForm (*op)(const ExtForm&)) {
  const auto basis = full_basis(n);
  ComplexMatrix m(basis.size(), basis.size());
  for (size_t c = 0; c < basis.size(); ++c) {
    const auto img = coords(op(ExtForm::basis(n, basis[c])), basis);
    for (size_t r = 0; r < basis.size(); ++r) m(r, c) = img[r];
  }
  return m;
}

ComplexMatrix gram_matrix(int n, const std::vector<BasisMask>& basis) {
  ComplexMatrix g(basis.size(), basis.size());
  for (size_t u = 0; u < basis.size(); ++u)
    for (size_t v = 0; v < basis.size(); ++v) {
      if (total_degree(basis[u]) != total_degree(basis[v])) continue;
      g(u, v) = metric(ExtForm::basis(n, basis[u]), ExtForm::basis(n, basis[v]));
    }
  return g;
}

bool is_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != m(j, i).conj()) return false;
  return true;
}

bool is_positive_definite(const ComplexMatrix& m) {
  if (!is_hermitian(m)) return false;
  ComplexMatrix a = m;
  const size_t n = a.rows();
  for (size_t k = 0; k < n; ++k) {
    const GaussScalar pivot = a(k, k);
    if (!pivot.is_real() || pivot.real() <= 0) return false;
    for (size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const GaussScalar f = a(i, k) / pivot;
      for (size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

Sl2Report sl2_check(int n) {
  const ComplexMatrix L = operator_matrix(n, &lefschetz_L);
  const ComplexMatrix H = operator_matrix(n, &counting_H);
  const ComplexMatrix Lam = operator_matrix(n, &adjoint_Lambda);
  Sl2Report r;
  r.h_l = (H * L - L * H) == GaussScalar(2) * L;
  r.l_lambda = (L * Lam - Lam * L) == H;
  r.h_lambda = (H * Lam - Lam * H) == GaussScalar(-2) * Lam;

  // g(L e_w, e_v) = (L^T G)_{wv} and g(e_w, Lambda e_v) = (G conj(Lambda))_{wv}.
  const ComplexMatrix G = gram_matrix(n, full_basis(n));
  ComplexMatrix lam_conj = Lam;
  for (size_t i = 0; i < lam_conj.rows(); ++i)
    for (size_t j = 0; j < lam_conj.cols(); ++j) lam_conj(i, j) = lam_conj(i, j).conj();
  r.adjoint = L.transpose() * G == G * lam_conj;
  return r;
}

bool lefschetz_isomorphism(int n, int k) {
  if (k < 0 || k >= n) throw std::invalid_argument("lefschetz_isomorphism: requires 0 <= k < n");
  const auto src = degree_basis(n, k);
  const auto dst = degree_basis(n, 2 * n - k);
  if (src.size() != dst.size()) return false;
  ComplexMatrix m(dst.size(), src.size());
  for (size_t c = 0; c < src.size(); ++c) {
    const auto img = coords(lefschetz_power(ExtForm::basis(n, src[c]), n - k), dst);
    for (size_t r = 0; r < dst.size(); ++r) m(r, c) = img[r];
  }
  return rank(m) == src.size();
}

}  // namespace qflag::kaehler
