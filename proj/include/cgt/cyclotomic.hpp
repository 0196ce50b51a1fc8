#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgt {

std::uint64_t euler_phi(std::uint64_t m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first
/// (monic, degree phi(m)).  Cached; computed by exact division of x^m - 1
/// by the lower-order cyclotomic polynomials.
const std::vector<long long>& cyclotomic_polynomial(std::uint64_t m);

using int128 = __int128;

/// In-place reduction of a raw coefficient vector (any length, exponent i
/// meaning zeta_m^i) to the canonical power basis of Z[zeta_m]: degree
/// below phi(m).  Aborts on coefficient overflow; inputs at desk scale
/// stay far below the guard.
void reduce_raw_mod_phi(std::vector<int128>& raw, std::uint64_t m);

/// An element of Z[zeta_m] in canonical power-basis coordinates.
///
/// conductor m with coefficient vector of length phi(m); the value is
/// sum coeffs[k] * zeta_m^k.  Canonical coordinates make equality a
/// coefficient comparison once conductors are matched.
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_{0} {}
  explicit Cyclotomic(long long n) : conductor_(1), coeffs_{n} {}

  /// zeta_m^k
  static Cyclotomic root_of_unity(std::uint64_t m, std::uint64_t k);

  /// From a raw coefficient vector indexed by exponent 0..m-1 (shorter
  /// vectors allowed); reduces to canonical form.
  static Cyclotomic from_coeffs(std::uint64_t m, const std::vector<long long>& raw);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integer() const;
  /// The rational integer value; errors when the value is irrational.
  long long integer_value() const;

  /// Same value viewed in Z[zeta_target]; conductor must divide target.
  Cyclotomic lifted_to(std::uint64_t target) const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic conjugate() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Deterministic structural order: conductor, then coefficients.
  bool structurally_less(const Cyclotomic& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    return coeffs_ < o.coeffs_;
  }

  /// Integer polynomial in z; stored exponent k prints as z^(k*scale),
  /// so a table can render every value against one global root z.
  std::string str(std::uint64_t scale = 1) const;

private:
  std::uint64_t conductor_;
  std::vector<long long> coeffs_;
};

} // namespace cgt
