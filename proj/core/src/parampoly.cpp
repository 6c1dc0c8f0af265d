#include "hv/parampoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hv {

const char* const kParamNames[kNumParams] = {"h", "hI", "cL", "cLI", "cI"};

namespace {
unsigned degree_of(const ParamPoly::Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}
}  // namespace

bool ParamPoly::GrlexLess::operator()(const Exponents& a,
                                      const Exponents& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;  // lexicographic tie-break, h first
}

ParamPoly ParamPoly::constant(const Rational& c) {
  ParamPoly p;
  p.insert_term({0, 0, 0, 0, 0}, c);
  return p;
}

ParamPoly ParamPoly::variable(Param v) {
  Exponents e{0, 0, 0, 0, 0};
  e[static_cast<int>(v)] = 1;
  return term(Rational(1), e);
}

ParamPoly ParamPoly::term(const Rational& c, const Exponents& e) {
  ParamPoly p;
  p.insert_term(e, c);
  return p;
}

void ParamPoly::insert_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         terms_.begin()->first == Exponents{0, 0, 0, 0, 0};
}

Rational ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("ParamPoly: not a constant");
  return terms_.begin()->second;
}

unsigned ParamPoly::total_degree() const {
  if (terms_.empty()) return 0;
  return degree_of(terms_.rbegin()->first);
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ParamPoly::Exponents e;
      for (int i = 0; i < kNumParams; ++i) {
        const unsigned s = unsigned(ea[i]) + unsigned(eb[i]);
        if (s > 255) throw std::overflow_error("ParamPoly: exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      out.insert_term(e, ca * cb);
    }
  }
  return out;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly out;
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

ParamPoly ParamPoly::pow(unsigned long e) const {
  ParamPoly out = constant(Rational(1));
  ParamPoly base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

Rational ParamPoly::eval(const std::array<Rational, kNumParams>& point) const {
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kNumParams; ++i) {
      if (e[i] != 0) t *= rational_pow(point[i], e[i]);
    }
    out += t;
  }
  return out;
}

std::optional<ParamPoly> ParamPoly::divided_exactly_by(
    const ParamPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  ParamPoly rem = *this;
  ParamPoly quot;
  const auto& dlead = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    Exponents qe;
    for (int i = 0; i < kNumParams; ++i) {
      if (rlead.first[i] < dlead.first[i]) return std::nullopt;
      qe[i] = static_cast<std::uint8_t>(rlead.first[i] - dlead.first[i]);
    }
    const ParamPoly qt = term(rlead.second / dlead.second, qe);
    quot += qt;
    rem -= qt * divisor;
  }
  return quot;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first_term) os << " + ";
    first_term = false;
    os << rational_str(it->second);
    bool first_factor = true;
    for (int i = 0; i < kNumParams; ++i) {
      if (it->first[i] == 0) continue;
      os << (first_factor ? " * " : " ") << kParamNames[i] << "^"
         << unsigned(it->first[i]);
      first_factor = false;
    }
  }
  return os.str();
}

}  // namespace hv
