#include "hv/scalar.hpp"

#include <stdexcept>

namespace hv {

bool Scalar::is_zero() const {
  if (is_rational()) return std::get<Rational>(v_) == 0;
  return std::get<ParamPoly>(v_).is_zero();
}

const Rational& Scalar::rational() const {
  if (!is_rational()) throw std::logic_error("Scalar: expected rational mode");
  return std::get<Rational>(v_);
}

const ParamPoly& Scalar::poly() const {
  if (!is_poly()) throw std::logic_error("Scalar: expected symbolic mode");
  return std::get<ParamPoly>(v_);
}

ParamPoly Scalar::as_poly() const {
  if (is_poly()) return std::get<ParamPoly>(v_);
  return ParamPoly::constant(std::get<Rational>(v_));
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-std::get<Rational>(v_)));
  return Scalar(-std::get<ParamPoly>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational())
    return Scalar(Rational(a.rational() + b.rational()));
  return Scalar(a.as_poly() + b.as_poly());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational())
    return Scalar(Rational(a.rational() - b.rational()));
  return Scalar(a.as_poly() - b.as_poly());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational())
    return Scalar(Rational(a.rational() * b.rational()));
  // Keep a rational factor cheap: scale instead of a full product.
  if (a.is_rational()) return Scalar(b.poly().scaled(a.rational()));
  if (b.is_rational()) return Scalar(a.poly().scaled(b.rational()));
  return Scalar(a.poly() * b.poly());
}

Scalar Scalar::div_exact(const Scalar& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (is_rational() && divisor.is_rational())
    return Scalar(Rational(rational() / divisor.rational()));
  if (divisor.is_rational())
    return Scalar(poly().scaled(Rational(1) / divisor.rational()));
  auto q = as_poly().divided_exactly_by(divisor.poly());
  if (!q) throw std::domain_error("Scalar: inexact polynomial division");
  return Scalar(std::move(*q));
}

Scalar Scalar::pow(unsigned long e) const {
  if (is_rational()) return Scalar(rational_pow(rational(), e));
  return Scalar(poly().pow(e));
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return rational() == o.rational();
  return as_poly() == o.as_poly();
}

std::string Scalar::str() const {
  if (is_rational()) return rational_str(rational());
  return poly().str();
}

}  // namespace hv
