#ifndef HV_LIE_ELEMENT_HPP
#define HV_LIE_ELEMENT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hv/generator.hpp"
#include "hv/scalar.hpp"

namespace hv {

// Finite scalar combination of generators. Zero coefficients are dropped on
// the spot, so is_zero() is a structural check.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(Generator g) { add_term(g, Scalar(1)); }

  static LieElement zero() { return LieElement(); }

  void add_term(Generator g, const Scalar& c);
  const std::map<Generator, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LieElement operator-() const;
  friend LieElement operator+(const LieElement& a, const LieElement& b);
  friend LieElement operator-(const LieElement& a, const LieElement& b);
  LieElement scaled(const Scalar& c) const;

  bool operator==(const LieElement& o) const { return terms_ == o.terms_; }

  // Ordered sum in the canonical generator order, e.g. "I(0) + -2 C_LI".
  std::string str() const;

 private:
  std::map<Generator, Scalar> terms_;
};

// Structure constants of the bracket of two basis generators, as a list of
// (generator, rational coefficient) pairs:
//   [L(n), L(m)] = (n-m) L(n+m) + delta_{n,-m} (n^3-n)/12 C_L
//   [L(n), I(m)] = -m I(n+m) - delta_{n,-m} (n^2+n) C_LI
//   [I(n), I(m)] = n delta_{n,-m} C_I
// and central elements bracket to zero.
std::vector<std::pair<Generator, Rational>> bracket_terms(Generator a,
                                                          Generator b);

LieElement bracket(Generator a, Generator b);
LieElement bracket(const LieElement& a, const LieElement& b);

// The anti-involution: sigma(L(n)) = L(-n), sigma(I(n)) = I(-n) except
// sigma(I(0)) = I(0) - 2 C_LI, sigma(C_L) = C_L, sigma(C_I) = C_I,
// sigma(C_LI) = -C_LI.
LieElement sigma(Generator g);
LieElement sigma(const LieElement& x);

}  // namespace hv

#endif
