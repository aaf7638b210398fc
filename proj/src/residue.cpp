#include "metacyc/residue.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "metacyc/error.hpp"

namespace metacyc {
namespace {

// Rows 0..128 of Pascal's triangle all fit in 128 bits (C(128,64) < 2^125).
constexpr std::size_t kPascalRows = 128;

struct PascalTable {
  std::vector<std::vector<u128>> rows;

  PascalTable() {
    rows.reserve(kPascalRows + 1);
    rows.push_back({1});
    for (std::size_t N = 1; N <= kPascalRows; ++N) {
      const auto& prev = rows.back();
      std::vector<u128> row(N + 1, 1);
      for (std::size_t l = 1; l < N; ++l) row[l] = prev[l - 1] + prev[l];
      rows.push_back(std::move(row));
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

std::string u128_to_string(u128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

void require_modulus(u64 n, const char* what) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": modulus must be >= 1");
  if (n > kModulusCap)
    throw Error(ErrorKind::Overflow, std::string(what) + ": modulus " + std::to_string(n) + " exceeds 2^63");
}

}  // namespace

unsigned v2(u64 x) {
  if (x == 0) throw Error(ErrorKind::InvalidArgument, "v2(0) is undefined");
  return static_cast<unsigned>(__builtin_ctzll(x));
}

unsigned v2(u128 x) {
  if (x == 0) throw Error(ErrorKind::InvalidArgument, "v2(0) is undefined");
  const auto low = static_cast<u64>(x);
  if (low != 0) return static_cast<unsigned>(__builtin_ctzll(low));
  return 64u + static_cast<unsigned>(__builtin_ctzll(static_cast<u64>(x >> 64)));
}

u128 binom(u64 N, u64 l) {
  if (l > N)
    throw Error(ErrorKind::InvalidArgument,
                "binom(" + std::to_string(N) + ", " + std::to_string(l) + "): l > N");
  if (N <= kPascalRows) return pascal().rows[N][l];

  // Pascal recurrence restricted to columns 0..w, row by row.
  const u64 w = std::min(l, N - l);
  std::vector<u128> col(w + 1, 0);
  col[0] = 1;
  for (u64 row = 1; row <= N; ++row) {
    for (u64 c = std::min(row, w); c >= 1; --c) {
      if (__builtin_add_overflow(col[c], col[c - 1], &col[c]))
        throw Error(ErrorKind::Overflow, "binom(" + std::to_string(N) + ", " + std::to_string(l) +
                                             ") exceeds 128 bits");
    }
  }
  return col[w];
}

u64 mul_mod(u64 a, u64 b, u64 n) {
  if ((a | b) >> 32 == 0) return (a * b) % n;
  return static_cast<u64>((u128{a} * b) % n);
}

u64 add_mod(u64 a, u64 b, u64 n) {
  if (n <= kModulusCap) {
    const u64 s = a % n + b % n;  // < 2n <= 2^64
    return s >= n ? s - n : s;
  }
  return static_cast<u64>((u128{a} + b) % n);
}

u64 pow_mod(u64 base, u64 e, u64 n) {
  u64 result = 1 % n;
  base %= n;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    e >>= 1;
  }
  return result;
}

u64 checked_modulus_product(u64 n, u64 f) {
  const u128 p = u128{n} * f;
  if (p > kModulusCap)
    throw Error(ErrorKind::Overflow,
                std::to_string(n) + " * " + std::to_string(f) + " = " + u128_to_string(p) + " exceeds 2^63");
  return static_cast<u64>(p);
}

u64 mult_order(u64 r, u64 n) {
  require_modulus(n, "mult_order");
  if (std::gcd(r % n, n) != 1)
    throw Error(ErrorKind::NotAUnit, "gcd(" + std::to_string(r) + ", " + std::to_string(n) + ") != 1");
  const u64 one = 1 % n;
  u64 x = r % n;
  u64 k = 1;
  while (x != one) {
    x = mul_mod(x, r, n);
    ++k;
  }
  return k;
}

u64 geom_sum(u64 r, u64 i, u64 k, u64 n) {
  require_modulus(n, "geom_sum");
  const u64 q = pow_mod(r, i, n);
  // Horner accumulation over the bits of k: S(2h) = S(h)(1 + q^h), S(h+1) = S(h)q + 1.
  u64 sum = 0;
  u64 qpow = 1 % n;  // q^h for the prefix h processed so far
  for (int bit = std::bit_width(k) - 1; bit >= 0; --bit) {
    sum = mul_mod(sum, add_mod(1, qpow, n), n);
    qpow = mul_mod(qpow, qpow, n);
    if ((k >> bit) & 1u) {
      sum = add_mod(mul_mod(sum, q, n), 1, n);
      qpow = mul_mod(qpow, q, n);
    }
  }
  return sum;
}

bool CongruenceSolutionSet::contains(u64 x) const {
  if (count == 0 || x >= modulus) return false;
  return x % step == base % step;
}

std::vector<u64> CongruenceSolutionSet::values() const {
  std::vector<u64> out;
  out.reserve(count);
  for (u64 k = 0; k < count; ++k) out.push_back(base + k * step);
  return out;
}

namespace {

// Extended Euclid on signed 128-bit values: returns g and x with a*x = g (mod b).
__extension__ typedef __int128 i128;

i128 ext_gcd(i128 a, i128 b, i128& x) {
  i128 old_r = a, r = b, old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  x = old_s;
  return old_r;
}

}  // namespace

CongruenceSolutionSet solve_lin_cong(u64 a, u64 c, u64 modulus) {
  require_modulus(modulus, "solve_lin_cong");
  a %= modulus;
  c %= modulus;
  const u64 g = std::gcd(a, modulus);  // gcd(0, M) = M
  CongruenceSolutionSet out;
  out.modulus = modulus;
  if (c % g != 0) {
    out.step = modulus;
    return out;
  }
  const u64 step = modulus / g;
  out.step = step;
  out.count = g;
  if (step == 1) {
    out.base = 0;
    return out;
  }
  const u64 inv = unit_inverse(a / g, step);
  out.base = mul_mod((c / g) % step, inv, step);
  return out;
}

u64 unit_inverse(u64 a, u64 n) {
  require_modulus(n, "unit_inverse");
  a %= n;
  if (std::gcd(a, n) != 1)
    throw Error(ErrorKind::NotAUnit, "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
  if (n == 1) return 0;
  i128 x = 0;
  ext_gcd(static_cast<i128>(a), static_cast<i128>(n), x);
  x %= static_cast<i128>(n);
  if (x < 0) x += static_cast<i128>(n);
  return static_cast<u64>(x);
}

bool is_power_of_two(u64 x) { return x != 0 && (x & (x - 1)) == 0; }

u64 smallest_prime_factor(u64 x) {
  if (x < 2) throw Error(ErrorKind::InvalidArgument, "smallest_prime_factor needs x >= 2");
  if (x % 2 == 0) return 2;
  for (u64 p = 3; p <= x / p; p += 2)
    if (x % p == 0) return p;
  return x;
}

std::vector<u64> divisors(u64 x) {
  std::vector<u64> small, large;
  for (u64 d = 1; d <= x / d; ++d) {
    if (x % d != 0) continue;
    small.push_back(d);
    if (d != x / d) large.push_back(x / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace metacyc
