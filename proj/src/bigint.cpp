#include "cgt/bigint.hpp"

#include <cmath>
#include <limits>

#include "cgt/error.hpp"

namespace cgt {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> fs;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fs.emplace_back(p, e);
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<bool> sieve(limit + 1, true);
  std::vector<std::uint64_t> ps;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    ps.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return ps;
}

std::vector<std::uint64_t> prime_divisors(const BigInt& n) {
  std::vector<std::uint64_t> ps;
  BigInt m = n;
  for (std::uint64_t p = 2; p < (1u << 20) && m > 1; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      ps.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) {
    if (m > std::numeric_limits<std::uint64_t>::max() || !is_prime(static_cast<std::uint64_t>(m)))
      fail(errc::bad_input, "prime_divisors: cofactor too large to certify prime");
    ps.push_back(static_cast<std::uint64_t>(m));
  }
  return ps;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 acc = 1, b = base % mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t v = a % m, k = 1;
  while (v != 1) {
    v = static_cast<std::uint64_t>((unsigned __int128)v * (a % m) % m);
    ++k;
    if (k > m) fail(errc::bad_input, "mod_order: not a unit");
  }
  return k;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

} // namespace cgt
