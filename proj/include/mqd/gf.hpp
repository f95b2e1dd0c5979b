#pragma once

#include <cstdint>

#include "mqd/errors.hpp"

namespace mqd {

// Prime field GF(p), 2 <= p <= 2^16. Elements are canonical residues in
// [0, p). Construction runs a deterministic trial-division primality test.
class PrimeField {
public:
  explicit PrimeField(uint32_t p);

  uint32_t p() const { return p_; }

  uint32_t reduce(int64_t x) const {
    int64_t r = x % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }

  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }

  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
  uint32_t p_;
};

} // namespace mqd
