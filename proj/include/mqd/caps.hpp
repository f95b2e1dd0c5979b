#pragma once

#include <cstdint>

namespace mqd {

// Global enumeration cap. Default 2^20; the MQD_MAX_ENUM environment
// variable overrides any programmatic setting.
uint64_t enum_cap();

// Sets the programmatic default (used by workspace options). Returns the
// effective cap after applying the environment override.
uint64_t set_enum_cap(uint64_t cap);

inline constexpr uint64_t kDefaultEnumCap = uint64_t{1} << 20;

} // namespace mqd
