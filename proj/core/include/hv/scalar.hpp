#ifndef HV_SCALAR_HPP
#define HV_SCALAR_HPP

#include <string>
#include <variant>

#include "hv/parampoly.hpp"
#include "hv/rational.hpp"

namespace hv {

// A scalar is either an exact rational (evaluated mode) or a polynomial in
// the five highest-weight parameters (symbolic mode). A computation never
// mixes modes on its own: the mode is fixed by the highest weight it starts
// from. Mixed arithmetic promotes the rational side to a constant polynomial,
// which is the inclusion Q -> Q[h,hI,cL,cLI,cI].
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(long n) : v_(Rational(static_cast<signed long>(n))) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(ParamPoly p) : v_(std::move(p)) {}

  static Scalar param(Param p) { return Scalar(ParamPoly::variable(p)); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_poly() const { return !is_rational(); }
  bool is_zero() const;

  // Throws std::logic_error when the alternative does not match.
  const Rational& rational() const;
  const ParamPoly& poly() const;
  ParamPoly as_poly() const;  // promotes a rational to a constant

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Exact division. Rational mode: ordinary field division, error on zero
  // divisor. Polynomial mode: exact polynomial division, error when the
  // quotient does not exist in the ring.
  Scalar div_exact(const Scalar& divisor) const;

  Scalar pow(unsigned long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::variant<Rational, ParamPoly> v_;
};

}  // namespace hv

#endif
