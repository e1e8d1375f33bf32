#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace camina {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, k] : factorize(n)) out.push_back(p);
  return out;
}

/// If n = p^k with p prime and k >= 1, returns (p, k); otherwise (0, 0).
inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
  return r;
}

/// Exact integer square root if n is a perfect square.
inline bool exact_sqrt(std::uint64_t n, std::uint64_t& root) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  root = r;
  return r * r == n;
}

namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t k, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (k) {
    if (k & 1) r = mul(r, a, q);
    a = mul(a, a, q);
    k >>= 1;
  }
  return r;
}

/// Inverse modulo a prime q; a must be nonzero mod q.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t q) { return pow(a, q - 2, q); }

inline std::uint64_t primitive_root(std::uint64_t q) {
  if (q == 2) return 1;
  const auto divisors = prime_divisors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto f : divisors)
      if (pow(g, (q - 1) / f, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 0;
}

}  // namespace modp

}  // namespace camina
