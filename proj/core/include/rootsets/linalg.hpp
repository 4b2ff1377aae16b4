#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rootsets/scalar.hpp"

namespace rootsets {

/// Dense exact vector in a fixed coordinate system.
struct Vec {
  std::vector<Scalar> c;

  Vec() = default;
  explicit Vec(std::size_t dim) : c(dim) {}
  explicit Vec(std::vector<Scalar> coords) : c(std::move(coords)) {}

  std::size_t dim() const { return c.size(); }
  bool is_zero() const;

  Vec operator-() const;
  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);
  friend Vec operator+(Vec x, const Vec& y) { return x += y; }
  friend Vec operator-(Vec x, const Vec& y) { return x -= y; }
  friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }

  friend bool operator==(const Vec& x, const Vec& y) { return x.c == y.c; }
};

/// Lexicographic order on coordinates; total on vectors of equal dimension.
bool lex_less(const Vec& x, const Vec& y);

/// Exact covector; pairs with Vec coordinatewise.
struct Covec {
  std::vector<Scalar> c;

  Covec() = default;
  explicit Covec(std::size_t dim) : c(dim) {}
  explicit Covec(std::vector<Scalar> coords) : c(std::move(coords)) {}

  std::size_t dim() const { return c.size(); }
  bool is_zero() const;

  Covec operator-() const;
  Covec& operator+=(const Covec& o);
  Covec& operator*=(const Scalar& s);
  friend Covec operator+(Covec x, const Covec& y) { return x += y; }

  friend bool operator==(const Covec& x, const Covec& y) { return x.c == y.c; }
};

Scalar pairing(const Covec& l, const Vec& v);

/// Scales a rational covector so its entries are coprime integers (sign kept).
/// No-op on the zero covector; throws on irrational entries.
Covec normalize_primitive(const Covec& l);

using Matrix = std::vector<std::vector<Scalar>>;

/// In-place reduced row echelon form with leftmost pivots, rows in given
/// order. Returns pivot column indices (ascending).
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Solves A x = b exactly (any shape). Returns one solution with free
/// variables set to zero, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

/// Basis of { x : A x = 0 }, one vector per free column of the RREF.
std::vector<std::vector<Scalar>> nullspace(Matrix a, std::size_t ncols);

/// Quotient of a raw coordinate space by the span of declared relations,
/// with canonical coordinates on the free columns of the relations' RREF.
/// The projection is deterministic: leftmost pivots, relation order fixed.
class AmbientSpace {
 public:
  static AmbientSpace build(std::size_t raw_dim, std::vector<Vec> relations);

  std::size_t raw_dim() const { return raw_dim_; }
  std::size_t canon_dim() const { return free_cols_.size(); }
  const std::vector<Vec>& relations() const { return relations_; }

  /// raw -> canonical. Kernel is exactly the span of the relations.
  Vec project(const Vec& raw) const;

  /// Canonical section: canonical coords placed on the free raw columns.
  Vec embed(const Vec& canonical) const;

 private:
  std::size_t raw_dim_ = 0;
  std::vector<Vec> relations_;
  std::vector<std::size_t> pivot_cols_, free_cols_;
  Matrix reduced_;  // RREF of the relation matrix
};

}  // namespace rootsets
