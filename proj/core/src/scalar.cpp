#include "rootsets/scalar.hpp"

#include <cmath>
#include <ostream>

namespace rootsets {

bool is_square_free(int d) {
  if (d < 1) return false;
  for (int p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(long num, long den) : a_(num, den), b_(0), d_(0) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  a_.canonicalize();
}

Scalar Scalar::quadratic(const Rational& a, const Rational& b, int d) {
  if (sgn(b) != 0) {
    if (d < 2 || !is_square_free(d))
      throw std::invalid_argument("Scalar: quadratic base must be square-free and >= 2");
  }
  Scalar s;
  s.a_ = a;
  s.b_ = b;
  s.d_ = sgn(b) == 0 ? 0 : d;
  return s;
}

bool Scalar::is_integer() const {
  return is_rational() && a_.get_den() == 1;
}

int Scalar::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) pull in opposite directions: compare a^2 with d*b^2.
  int c = cmp(a_ * a_, d_ * b_ * b_);
  if (c == 0) return 0;  // unreachable for square-free d >= 2 with a, b != 0
  return c > 0 ? sa : sb;
}

const Rational& Scalar::as_rational() const {
  if (!is_rational()) throw FieldMismatchError("Scalar: irrational value where a rational is required");
  return a_;
}

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

int Scalar::merge_base(const Scalar& x, const Scalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw FieldMismatchError("Scalar: mixed quadratic extensions");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = merge_base(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = merge_base(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  int d = merge_base(*this, o);
  Rational a = a_ * o.a_;
  if (d != 0) a += Rational(d) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  int d = merge_base(*this, o);
  // Multiply by the conjugate of o; the norm a2^2 - d*b2^2 is a nonzero rational.
  Rational norm = o.a_ * o.a_;
  if (d != 0) norm -= Rational(d) * o.b_ * o.b_;
  Rational ra = a_ * o.a_;
  if (d != 0) ra -= Rational(d) * b_ * o.b_;
  Rational rb = b_ * o.a_ - a_ * o.b_;
  a_ = ra / norm;
  b_ = rb / norm;
  d_ = d;
  normalize();
  return *this;
}

std::string Scalar::str() const {
  if (is_rational()) return a_.get_str();
  std::string s = a_.get_str();
  s += (sgn(b_) < 0 ? "-" : "+");
  Rational ab = abs(b_);
  s += ab.get_str();
  s += "*sqrt(" + std::to_string(d_) + ")";
  return s;
}

double Scalar::approx() const {
  double v = a_.get_d();
  if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace rootsets
