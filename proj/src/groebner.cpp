#include "bei/groebner.hpp"

#include <cstdlib>

namespace bei {

namespace {

template <class T>
void read_env(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw std::invalid_argument(std::string("environment variable ") + name +
                                " must be a positive integer");
  }
  value = static_cast<T>(v);
}

}  // namespace

GroebnerConfig GroebnerConfig::from_env() {
  GroebnerConfig c;
  read_env("BEI_MAX_PAIRS", c.max_pairs);
  read_env("BEI_MAX_BASIS", c.max_basis_size);
  read_env("BEI_MAX_DEGREE", c.max_degree);
  return c;
}

}  // namespace bei
