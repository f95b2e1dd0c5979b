#include "mqd/gf.hpp"

#include <string>

namespace mqd {

namespace {
bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}
} // namespace

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (p < 2 || p > (uint32_t{1} << 16))
    throw input_error("field modulus out of range [2, 65536]: " + std::to_string(p));
  if (!is_prime_u32(p))
    throw input_error("field modulus is not prime: " + std::to_string(p));
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) throw input_error("division by zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid on (a, p)
  int64_t t = 0, newt = 1;
  int64_t r = p_, newr = a % p_;
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<uint32_t>(t);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
  uint32_t base = a % p_, acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

} // namespace mqd
