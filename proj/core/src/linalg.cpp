#include "rootsets/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootsets {

bool Vec::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec Vec::operator-() const {
  Vec r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Vec& Vec::operator+=(const Vec& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("Vec: dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("Vec: dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (auto& x : c) x *= s;
  return *this;
}

bool lex_less(const Vec& x, const Vec& y) {
  if (x.c.size() != y.c.size()) return x.c.size() < y.c.size();
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    int s = (x.c[i] - y.c[i]).sign();
    if (s != 0) return s < 0;
  }
  return false;
}

bool Covec::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

Covec Covec::operator-() const {
  Covec r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Covec& Covec::operator+=(const Covec& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("Covec: dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Covec& Covec::operator*=(const Scalar& s) {
  for (auto& x : c) x *= s;
  return *this;
}

Scalar pairing(const Covec& l, const Vec& v) {
  if (l.c.size() != v.c.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < l.c.size(); ++i) {
    if (!l.c[i].is_zero() && !v.c[i].is_zero()) acc += l.c[i] * v.c[i];
  }
  return acc;
}

Covec normalize_primitive(const Covec& l) {
  if (l.is_zero()) return l;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& s : l.c) {
    const Rational& q = s.as_rational();
    if (sgn(q) == 0) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    num_gcd = g;
    mpz_class m;
    mpz_lcm(m.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    den_lcm = m;
  }
  Scalar factor{Rational(den_lcm) / Rational(num_gcd)};
  Covec r = l;
  r *= factor;
  return r;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][col].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Scalar inv = Scalar(1) / m[r][col];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      Scalar f = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  if (a.empty()) return std::vector<Scalar>{};
  const std::size_t cols = a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  // A pivot in the augmented column means the system is inconsistent.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Scalar> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

std::vector<std::vector<Scalar>> nullspace(Matrix a, std::size_t ncols) {
  if (a.empty()) {
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t j = 0; j < ncols; ++j) {
      std::vector<Scalar> e(ncols);
      e[j] = Scalar(1);
      basis.push_back(std::move(e));
    }
    return basis;
  }
  auto pivots = rref(a);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(ncols);
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

AmbientSpace AmbientSpace::build(std::size_t raw_dim, std::vector<Vec> relations) {
  for (const auto& r : relations) {
    if (r.dim() != raw_dim) throw std::invalid_argument("AmbientSpace: relation length != raw_dim");
  }
  AmbientSpace s;
  s.raw_dim_ = raw_dim;
  s.relations_ = std::move(relations);
  Matrix m;
  m.reserve(s.relations_.size());
  for (const auto& r : s.relations_) m.push_back(r.c);
  s.pivot_cols_ = rref(m);
  m.resize(s.pivot_cols_.size());  // drop zero rows
  s.reduced_ = std::move(m);
  std::vector<bool> is_pivot(raw_dim, false);
  for (auto p : s.pivot_cols_) is_pivot[p] = true;
  for (std::size_t j = 0; j < raw_dim; ++j) {
    if (!is_pivot[j]) s.free_cols_.push_back(j);
  }
  return s;
}

Vec AmbientSpace::project(const Vec& raw) const {
  if (raw.dim() != raw_dim_) throw std::invalid_argument("project: dimension mismatch");
  Vec out(canon_dim());
  for (std::size_t j = 0; j < free_cols_.size(); ++j) {
    Scalar v = raw.c[free_cols_[j]];
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
      const Scalar& pc = raw.c[pivot_cols_[i]];
      if (!pc.is_zero()) v -= pc * reduced_[i][free_cols_[j]];
    }
    out.c[j] = v;
  }
  return out;
}

Vec AmbientSpace::embed(const Vec& canonical) const {
  if (canonical.dim() != canon_dim()) throw std::invalid_argument("embed: dimension mismatch");
  Vec raw(raw_dim_);
  for (std::size_t j = 0; j < free_cols_.size(); ++j) raw.c[free_cols_[j]] = canonical.c[j];
  return raw;
}

}  // namespace rootsets
