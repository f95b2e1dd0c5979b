#include "mqd/caps.hpp"

#include <cstdlib>
#include <string>

namespace mqd {

namespace {
uint64_t g_cap = kDefaultEnumCap;

uint64_t env_override(uint64_t fallback) {
  const char* s = std::getenv("MQD_MAX_ENUM");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0) return fallback;
  return static_cast<uint64_t>(v);
}
} // namespace

uint64_t enum_cap() { return env_override(g_cap); }

uint64_t set_enum_cap(uint64_t cap) {
  if (cap > 0) g_cap = cap;
  return enum_cap();
}

} // namespace mqd
