#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace rootsets {

using Rational = mpq_class;

/// Exact scalar: a plain rational, or a + b*sqrt(d) in the quadratic
/// extension Q(sqrt(d)) for a fixed square-free integer d >= 2.
///
/// Plain rationals carry d == 0. Mixing two different extensions in one
/// expression throws; mixing a rational with an extension scalar is fine.
/// All comparisons are exact (no floating point).
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(long n) : a_(n), b_(0), d_(0) {}  // NOLINT: implicit by design
  Scalar(long num, long den);
  explicit Scalar(const Rational& a) : a_(a), b_(0), d_(0) {}

  static Scalar quadratic(const Rational& a, const Rational& b, int d);
  static Scalar sqrt_of(int d) { return quadratic(0, 1, d); }

  const Rational& rat_part() const { return a_; }
  const Rational& quad_part() const { return b_; }
  int quad_base() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_integer() const;

  /// Exact sign in {-1, 0, +1}, by case analysis on the signs of a and b
  /// and comparison of a^2 against d*b^2.
  int sign() const;

  /// The rational value; throws if the scalar is irrational.
  const Rational& as_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.is_rational() || y.is_rational() || x.d_ == y.d_);
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// Debug/serialization form: "p/q" for rationals (q omitted when 1),
  /// "p/q+r/s*sqrt(d)" otherwise.
  std::string str() const;

  /// Approximate double value; test oracles only, never used in decisions.
  double approx() const;

 private:
  Rational a_, b_;
  int d_;  // 0 iff b_ == 0

  void normalize();
  static int merge_base(const Scalar& x, const Scalar& y);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Thrown when two scalars from different quadratic extensions meet.
struct FieldMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_square_free(int d);

}  // namespace rootsets
