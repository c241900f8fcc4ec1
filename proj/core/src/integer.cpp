#include "tanint/integer.hpp"

#include <stdexcept>

namespace tanint {

Integer::Integer(const std::string& decimal) {
  mpz_init(v_);
  if (decimal.empty() || mpz_set_str(v_, decimal.c_str(), 10) != 0) {
    mpz_clear(v_);
    throw std::invalid_argument("Integer: not a decimal integer: '" + decimal + "'");
  }
}

std::string Integer::str() const {
  char* s = mpz_get_str(nullptr, 10, v_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

}  // namespace tanint
