#include "caus/error.hpp"

#include <cstdlib>
#include <string>

namespace caus {

std::size_t ambient_cap() {
  constexpr std::size_t kDefaultCap = 1024;
  const char* env = std::getenv("CAUS_MAX_AMBIENT");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (end == env) return kDefaultCap;
  return v < 1 ? 1 : static_cast<std::size_t>(v);
}

void check_ambient(std::size_t dim) {
  const std::size_t cap = ambient_cap();
  if (dim > cap) {
    throw CapExceeded("ambient dimension " + std::to_string(dim) + " exceeds the cap of " +
                      std::to_string(cap) + " (set CAUS_MAX_AMBIENT to change it)");
  }
}

}  // namespace caus
