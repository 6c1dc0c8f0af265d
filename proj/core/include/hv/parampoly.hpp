#ifndef HV_PARAMPOLY_HPP
#define HV_PARAMPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hv/rational.hpp"

namespace hv {

// The five highest-weight parameters, in the fixed variable order used by the
// graded lexicographic term order and by all serialization.
enum class Param : int { h = 0, hI = 1, cL = 2, cLI = 3, cI = 4 };

inline constexpr int kNumParams = 5;
extern const char* const kParamNames[kNumParams];  // "h","hI","cL","cLI","cI"

// Sparse polynomial over Q in the five parameters. Terms map exponent tuples
// to nonzero rational coefficients; zero coefficients are never stored. Terms
// are kept in ascending graded-lex order, so iteration (and hence printing,
// hashing, equality) is canonical.
class ParamPoly {
 public:
  using Exponents = std::array<std::uint8_t, kNumParams>;

  struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };

  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  ParamPoly() = default;
  static ParamPoly constant(const Rational& c);
  static ParamPoly variable(Param p);
  // c * h^e0 hI^e1 cL^e2 cLI^e3 cI^e4
  static ParamPoly term(const Rational& c, const Exponents& e);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero polynomial gives 0).
  Rational constant_value() const;

  unsigned total_degree() const;
  const TermMap& terms() const { return terms_; }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  ParamPoly scaled(const Rational& c) const;
  ParamPoly pow(unsigned long e) const;

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  // Exact substitution of rational values for all five parameters.
  Rational eval(const std::array<Rational, kNumParams>& point) const;

  // Exact division: returns the quotient iff *this = q * divisor, otherwise
  // nullopt. Division by zero gives nullopt.
  std::optional<ParamPoly> divided_exactly_by(const ParamPoly& divisor) const;

  // Canonical rendering: terms in descending graded-lex order, joined by
  // " + ", each as "c * h^a hI^b cL^c cLI^d cI^e" with zero-exponent factors
  // omitted. The zero polynomial renders as "0".
  std::string str() const;

 private:
  void insert_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

}  // namespace hv

#endif
