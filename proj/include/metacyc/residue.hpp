#pragma once

// Exact modular and 2-adic arithmetic. Residues and moduli are unsigned 64-bit
// values; products are formed in 128 bits, so no routine here wraps silently.

#include <cstdint>
#include <vector>

namespace metacyc {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

/// Largest ambient modulus accepted anywhere, including lifted moduli such
/// as n*(r-1).
inline constexpr u64 kModulusCap = u64{1} << 63;

/// 2-adic valuation. Rejects 0.
unsigned v2(u64 x);
unsigned v2(u128 x);

/// Exact binomial coefficient by Pascal recurrence. Throws Overflow if the
/// value does not fit in 128 bits.
u128 binom(u64 N, u64 l);

u64 mul_mod(u64 a, u64 b, u64 n);
u64 add_mod(u64 a, u64 b, u64 n);
u64 pow_mod(u64 base, u64 e, u64 n);

/// n * f, or Overflow when it exceeds kModulusCap.
u64 checked_modulus_product(u64 n, u64 f);

/// Smallest k >= 1 with r^k = 1 (mod n). Requires gcd(r, n) = 1.
u64 mult_order(u64 r, u64 n);

/// (1 + r^i + r^{2i} + ... + r^{i(k-1)}) mod n, without any modular division.
u64 geom_sum(u64 r, u64 i, u64 k, u64 n);

/// Solutions t in [0, modulus) of a*t = c (mod modulus): base, base+step, ...
struct CongruenceSolutionSet {
  u64 base = 0;
  u64 step = 1;
  u64 count = 0;
  u64 modulus = 1;

  bool empty() const { return count == 0; }
  bool contains(u64 x) const;
  std::vector<u64> values() const;
};

CongruenceSolutionSet solve_lin_cong(u64 a, u64 c, u64 modulus);

/// a^{-1} mod n. Rejects non-units.
u64 unit_inverse(u64 a, u64 n);

bool is_power_of_two(u64 x);

/// Smallest prime factor of x (x >= 2).
u64 smallest_prime_factor(u64 x);

/// Divisors of x in increasing order.
std::vector<u64> divisors(u64 x);

}  // namespace metacyc
