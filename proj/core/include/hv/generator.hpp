#ifndef HV_GENERATOR_HPP
#define HV_GENERATOR_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace hv {

// Basis elements of the twisted Heisenberg-Virasoro algebra: the Virasoro
// family L(n), the Heisenberg family I(n) and the three central elements
// C_L, C_LI, C_I. The enum order realizes the canonical total order
// C_L < C_LI < C_I < I(n) < L(n), with ties broken by the index.
enum class GenKind : std::uint8_t { CL = 0, CLI = 1, CI = 2, I = 3, L = 4 };

class Generator {
 public:
  static Generator L(long n);
  static Generator I(long n);
  static Generator C_L() { return Generator(GenKind::CL, 0); }
  static Generator C_LI() { return Generator(GenKind::CLI, 0); }
  static Generator C_I() { return Generator(GenKind::CI, 0); }

  GenKind kind() const { return kind_; }
  long index() const { return index_; }

  // Z-grading: deg L(n) = deg I(n) = n, central elements have degree 0.
  long degree() const;
  bool is_central() const {
    return kind_ == GenKind::CL || kind_ == GenKind::CLI || kind_ == GenKind::CI;
  }

  // "L(-3)", "I(0)", "C_L", "C_LI", "C_I"
  std::string str() const;

  auto operator<=>(const Generator&) const = default;

 private:
  Generator(GenKind k, long n) : kind_(k), index_(n) {}
  GenKind kind_;
  long index_;
};

// Desk-scale guard on generator indices; (n^3 - n)/12 and friends are
// computed in arbitrary precision, but nothing meaningful happens at huge
// indices and a typo should fail loudly.
inline constexpr long kMaxGeneratorIndex = 1000000;

}  // namespace hv

#endif
