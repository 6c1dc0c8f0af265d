#include "hv/rational.hpp"

#include <cctype>

namespace hv {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return std::nullopt;
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size()) return std::nullopt;
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational rational_pow(const Rational& r, unsigned long e) {
  if (e == 0) return Rational(1);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), e);
  Rational out(num, den);
  // num/den already coprime, so the power is canonical, but keep the
  // invariant explicit.
  out.canonicalize();
  return out;
}

}  // namespace hv
