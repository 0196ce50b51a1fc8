#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgt {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Trial-division factorization, smallest prime first.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Prime divisors of n (BigInt n must fit the divisor search at desk scale:
/// repeatedly strips factors found by trial division up to 2^20, then treats
/// any remaining cofactor as prime only if it actually is).
std::vector<std::uint64_t> prime_divisors(const BigInt& n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Multiplicative order of a mod m (requires gcd(a,m) = 1).
std::uint64_t mod_order(std::uint64_t a, std::uint64_t m);

/// Floor of the square root.
std::uint64_t isqrt_u64(std::uint64_t n);

} // namespace cgt
