#include "cgt/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "cgt/bigint.hpp"
#include "cgt/error.hpp"

namespace cgt {

namespace {

constexpr int128 kGuard = (int128(1) << 120);

void check_guard(int128 v) {
  if (v >= kGuard || v <= -kGuard) fail(errc::internal, "cyclotomic coefficient overflow");
}

// exact division of polynomials with int128 coefficients, divisor monic
std::vector<int128> exact_div(std::vector<int128> num, const std::vector<long long>& den) {
  std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) fail(errc::internal, "polynomial division underflow");
  std::vector<int128> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    int128 c = num[i];
    if (c == 0) continue;
    check_guard(c);
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) {
      num[i - dd + j] -= c * den[j];
      check_guard(num[i - dd + j]);
    }
  }
  for (int128 c : num)
    if (c != 0) fail(errc::internal, "polynomial division not exact");
  return quot;
}

} // namespace

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t r = m;
  for (auto [p, e] : factorize(m)) r = r / p * (p - 1);
  return r;
}

const std::vector<long long>& cyclotomic_polynomial(std::uint64_t m) {
  static std::map<std::uint64_t, std::vector<long long>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::vector<int128> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d) continue;
    poly = exact_div(std::move(poly), cyclotomic_polynomial(d));
  }
  std::vector<long long> out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] > std::numeric_limits<long long>::max() ||
        poly[i] < std::numeric_limits<long long>::min())
      fail(errc::internal, "cyclotomic polynomial coefficient out of range");
    out[i] = static_cast<long long>(poly[i]);
  }
  if (out.size() != euler_phi(m) + 1) fail(errc::internal, "cyclotomic polynomial degree");
  return cache.emplace(m, std::move(out)).first->second;
}

void reduce_raw_mod_phi(std::vector<int128>& raw, std::uint64_t m) {
  // fold exponents >= m first (zeta_m^m = 1)
  if (raw.size() > m) {
    for (std::size_t i = m; i < raw.size(); ++i) {
      raw[i % m] += raw[i];
      check_guard(raw[i % m]);
    }
    raw.resize(m);
  }
  if (raw.size() < m) raw.resize(m, 0);
  const auto& phi_poly = cyclotomic_polynomial(m);
  std::size_t deg = phi_poly.size() - 1; // phi(m)
  for (std::size_t i = raw.size(); i-- > deg;) {
    int128 c = raw[i];
    if (c == 0) continue;
    raw[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) {
      raw[i - deg + j] -= c * phi_poly[j];
      check_guard(raw[i - deg + j]);
    }
  }
  raw.resize(deg);
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t m, std::uint64_t k) {
  std::vector<long long> raw(m, 0);
  raw[k % m] = 1;
  return from_coeffs(m, raw);
}

Cyclotomic Cyclotomic::from_coeffs(std::uint64_t m, const std::vector<long long>& raw) {
  if (m == 0) fail(errc::bad_input, "conductor must be positive");
  std::vector<int128> v(raw.begin(), raw.end());
  reduce_raw_mod_phi(v, m);
  Cyclotomic c;
  c.conductor_ = m;
  c.coeffs_.assign(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > std::numeric_limits<long long>::max() ||
        v[i] < std::numeric_limits<long long>::min())
      fail(errc::internal, "cyclotomic coefficient out of range");
    c.coeffs_[i] = static_cast<long long>(v[i]);
  }
  return c;
}

bool Cyclotomic::is_zero() const {
  for (long long c : coeffs_)
    if (c) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i]) return false;
  return true;
}

long long Cyclotomic::integer_value() const {
  if (!is_integer()) fail(errc::bad_input, "cyclotomic value is not a rational integer");
  return coeffs_.empty() ? 0 : coeffs_[0];
}

Cyclotomic Cyclotomic::lifted_to(std::uint64_t target) const {
  if (target % conductor_) fail(errc::bad_input, "conductor does not divide lift target");
  if (target == conductor_) return *this;
  std::uint64_t stride = target / conductor_;
  std::vector<long long> raw(target, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * stride] = coeffs_[k];
  return from_coeffs(target, raw);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  std::uint64_t m = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
  std::vector<long long> raw(euler_phi(m), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) raw[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) raw[i] += b.coeffs_[i];
  return from_coeffs(m, raw);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  std::uint64_t m = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
  std::vector<long long> raw(euler_phi(m), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) raw[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) raw[i] -= b.coeffs_[i];
  return from_coeffs(m, raw);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  std::uint64_t m = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
  std::vector<int128> conv(2 * euler_phi(m) + 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!a.coeffs_[i]) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      conv[i + j] += int128(a.coeffs_[i]) * b.coeffs_[j];
      check_guard(conv[i + j]);
    }
  }
  reduce_raw_mod_phi(conv, m);
  Cyclotomic c;
  c.conductor_ = m;
  c.coeffs_.assign(conv.size(), 0);
  for (std::size_t i = 0; i < conv.size(); ++i) c.coeffs_[i] = static_cast<long long>(conv[i]);
  return c;
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<long long> raw(conductor_, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    raw[(conductor_ - k) % conductor_] += coeffs_[k];
  return from_coeffs(conductor_, raw);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  std::uint64_t m = std::lcm(conductor_, o.conductor_);
  return lifted_to(m).coeffs_ == o.lifted_to(m).coeffs_;
}

std::string Cyclotomic::str(std::uint64_t scale) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    long long c = coeffs_[k];
    if (!c) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? '-' : '+');
    }
    long long a = c < 0 ? -c : c;
    std::uint64_t e = k * scale;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << 'z';
      if (e > 1) os << '^' << e;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

} // namespace cgt
