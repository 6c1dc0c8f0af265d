#include "hv/lie_element.hpp"

#include <sstream>

namespace hv {

void LieElement::add_term(Generator g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieElement LieElement::operator-() const {
  LieElement out;
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
  return out;
}

LieElement operator+(const LieElement& a, const LieElement& b) {
  LieElement out = a;
  for (const auto& [g, c] : b.terms_) out.add_term(g, c);
  return out;
}

LieElement operator-(const LieElement& a, const LieElement& b) {
  LieElement out = a;
  for (const auto& [g, c] : b.terms_) out.add_term(g, -c);
  return out;
}

LieElement LieElement::scaled(const Scalar& c) const {
  LieElement out;
  if (c.is_zero()) return out;
  for (const auto& [g, k] : terms_) out.add_term(g, k * c);
  return out;
}

std::string LieElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c == Scalar(1)) {
      os << g.str();
    } else {
      os << c.str() << " " << g.str();
    }
  }
  return os.str();
}

std::vector<std::pair<Generator, Rational>> bracket_terms(Generator a,
                                                          Generator b) {
  std::vector<std::pair<Generator, Rational>> out;
  if (a.is_central() || b.is_central()) return out;

  const long n = a.index();
  const long m = b.index();

  if (a.kind() == GenKind::L && b.kind() == GenKind::L) {
    if (n != m) out.emplace_back(Generator::L(n + m), Rational(n - m));
    if (n == -m && n != 0) {
      // (n^3 - n)/12, computed in arbitrary precision
      const mpz_class nz(n);
      out.emplace_back(Generator::C_L(), Rational(nz * nz * nz - nz, 12));
    }
  } else if (a.kind() == GenKind::L && b.kind() == GenKind::I) {
    if (m != 0) out.emplace_back(Generator::I(n + m), Rational(-m));
    if (n == -m && n != 0) {
      const mpz_class nz(n);
      out.emplace_back(Generator::C_LI(), Rational(-(nz * nz + nz), 1));
    }
  } else if (a.kind() == GenKind::I && b.kind() == GenKind::L) {
    // [I(n), L(m)] = -[L(m), I(n)]
    for (auto& [g, c] : bracket_terms(b, a)) out.emplace_back(g, -c);
  } else {  // I, I
    if (n == -m && n != 0) out.emplace_back(Generator::C_I(), Rational(n));
  }

  for (auto& [g, c] : out) {
    if (c == 0) c = 0;  // keep canonical zero, filtered below
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

LieElement bracket(Generator a, Generator b) {
  LieElement out;
  for (const auto& [g, c] : bracket_terms(a, b)) out.add_term(g, Scalar(c));
  return out;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  LieElement out;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      const Scalar c = ca * cb;
      for (const auto& [g, k] : bracket_terms(ga, gb))
        out.add_term(g, c * Scalar(k));
    }
  }
  return out;
}

LieElement sigma(Generator g) {
  LieElement out;
  switch (g.kind()) {
    case GenKind::L:
      out.add_term(Generator::L(-g.index()), Scalar(1));
      break;
    case GenKind::I:
      out.add_term(Generator::I(-g.index()), Scalar(1));
      if (g.index() == 0) out.add_term(Generator::C_LI(), Scalar(-2));
      break;
    case GenKind::CL:
      out.add_term(Generator::C_L(), Scalar(1));
      break;
    case GenKind::CI:
      out.add_term(Generator::C_I(), Scalar(1));
      break;
    case GenKind::CLI:
      out.add_term(Generator::C_LI(), Scalar(-1));
      break;
  }
  return out;
}

LieElement sigma(const LieElement& x) {
  LieElement out;
  for (const auto& [g, c] : x.terms()) out = out + sigma(g).scaled(c);
  return out;
}

}  // namespace hv
