#include "hv/generator.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hv {

namespace {
void check_index(long n) {
  if (n > kMaxGeneratorIndex || n < -kMaxGeneratorIndex)
    throw std::domain_error("generator index out of supported range");
}
}  // namespace

Generator Generator::L(long n) {
  check_index(n);
  return Generator(GenKind::L, n);
}

Generator Generator::I(long n) {
  check_index(n);
  return Generator(GenKind::I, n);
}

long Generator::degree() const {
  switch (kind_) {
    case GenKind::L:
    case GenKind::I:
      return index_;
    default:
      return 0;
  }
}

std::string Generator::str() const {
  switch (kind_) {
    case GenKind::CL:
      return "C_L";
    case GenKind::CLI:
      return "C_LI";
    case GenKind::CI:
      return "C_I";
    case GenKind::I:
      return "I(" + std::to_string(index_) + ")";
    case GenKind::L:
      return "L(" + std::to_string(index_) + ")";
  }
  std::abort();
}

}  // namespace hv
