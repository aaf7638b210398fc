#pragma once

// Naive reference implementations used as test oracles. Nothing here calls
// into the library's arithmetic.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "metacyc/error.hpp"
#include "metacyc/group.hpp"

namespace oracle {

using metacyc::u64;

inline u64 slow_pow(u64 base, u64 e, u64 n) {
  u64 acc = 1 % n;
  for (u64 k = 0; k < e; ++k) acc = (acc * (base % n)) % n;  // callers keep n < 2^32
  return acc;
}

/// b^i1 a^j1 * b^i2 a^j2 by pushing a^j1 past b one step at a time.
struct NaiveGroup {
  u64 n, M, E, r;

  metacyc::GroupElement mul(metacyc::GroupElement x, metacyc::GroupElement y) const {
    u64 i = x.i, j = x.j;
    for (u64 step = 0; step < y.i; ++step) {
      j = (j * r) % n;  // a^j b = b a^{jr}
      ++i;
      if (i == M) {
        i = 0;
        j = (j + E) % n;
      }
    }
    return {i, (j + y.j) % n};
  }

  metacyc::GroupElement pow(metacyc::GroupElement g, u64 k) const {
    metacyc::GroupElement acc{0, 0};
    for (u64 s = 0; s < k; ++s) acc = mul(acc, g);
    return acc;
  }

  u64 order(metacyc::GroupElement g) const {
    metacyc::GroupElement acc = g;
    u64 k = 1;
    while (acc != metacyc::GroupElement{0, 0}) {
      acc = mul(acc, g);
      ++k;
    }
    return k;
  }

  std::vector<metacyc::GroupElement> all() const {
    std::vector<metacyc::GroupElement> out;
    for (u64 i = 0; i < M; ++i)
      for (u64 j = 0; j < n; ++j) out.push_back({i, j});
    return out;
  }

  std::set<metacyc::GroupElement> cyclic(metacyc::GroupElement g) const {
    std::set<metacyc::GroupElement> out{{0, 0}};
    for (auto acc = g; acc != metacyc::GroupElement{0, 0}; acc = mul(acc, g)) out.insert(acc);
    return out;
  }

  metacyc::GroupElement inv(metacyc::GroupElement g) const { return pow(g, order(g) - 1); }

  /// Definition of absolute splitness with respect to <a>.
  bool absolutely_split() const {
    auto meets_a = [&](const std::set<metacyc::GroupElement>& c) {
      return std::any_of(c.begin(), c.end(), [](auto e) { return e.i == 0 && e.j != 0; });
    };
    std::vector<std::set<metacyc::GroupElement>> complements;
    for (auto y : all()) {
      auto c = cyclic(y);
      if (c.size() == M && !meets_a(c)) complements.push_back(std::move(c));
    }
    for (auto x : all()) {
      if (meets_a(cyclic(x))) continue;
      bool covered = std::any_of(complements.begin(), complements.end(), [&](auto& c) { return c.count(x) > 0; });
      if (!covered) return false;
    }
    return true;
  }
};

inline NaiveGroup naive(const metacyc::Group& G) { return {G.n(), G.M(), G.E(), G.r()}; }

inline u64 gcd(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Split presentations with n*m <= bound, r != 1 optional, by direct search.
inline std::vector<metacyc::SplitPresentation> split_family(u64 bound, bool skip_abelian) {
  std::vector<metacyc::SplitPresentation> out;
  for (u64 n = 1; n <= bound; ++n)
    for (u64 m = 1; n * m <= bound; ++m)
      for (u64 r = 0; r < n; ++r) {
        if (gcd(r, n) != 1 && n > 1) continue;
        if (slow_pow(r, m, n) != 1 % n) continue;
        if (skip_abelian && r % n == 1 % n) continue;
        out.push_back({n, m, r});
      }
  return out;
}

template <class F>
void expect_kind(F&& f, metacyc::ErrorKind kind) {
  try {
    f();
    ADD_FAILURE() << "expected " << metacyc::to_string(kind) << ", nothing thrown";
  } catch (const metacyc::Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240607);
  return gen;
}

inline u64 uniform(u64 lo, u64 hi) { return std::uniform_int_distribution<u64>(lo, hi)(rng()); }

}  // namespace oracle
