#include "covertop/limits.hpp"

#include <cstdlib>
#include <string>

#include "covertop/errors.hpp"

namespace covertop::caps {

std::size_t effective(std::size_t default_cap) {
  const char* raw = std::getenv("COVERTOP_MAX_BASE");
  if (raw == nullptr || *raw == '\0') return default_cap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return default_cap;
  return value < default_cap ? static_cast<std::size_t>(value) : default_cap;
}

void require(std::size_t size, std::size_t default_cap, std::string_view what) {
  const std::size_t cap = effective(default_cap);
  if (size > cap) {
    throw SizeCapError(std::string(what) + ": base of size " + std::to_string(size) +
                       " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace covertop::caps
