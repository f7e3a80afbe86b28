#include "subshift/ring.hpp"

#include <limits>

namespace subshift {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    return n == 1;
  }
  return true;  // n itself is prime
}

using Wide = __int128;

long long narrow(Wide v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("coefficient overflow");
  return static_cast<long long>(v);
}

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Scalar reduced_rational(Wide num, Wide den) {
  if (den == 0) fail(Errc::malformed_spec, "zero denominator");
  if (num == 0) return {};
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  return {narrow(num / g), narrow(den / g)};
}

}  // namespace

CoefficientRing CoefficientRing::mod(long long n) {
  if (n < 2) fail(Errc::malformed_spec, "modulus must be at least 2");
  return CoefficientRing(RingKind::mod_n, n);
}

bool CoefficientRing::is_field() const {
  switch (kind_) {
    case RingKind::rationals: return true;
    case RingKind::integers: return false;
    case RingKind::mod_n: return is_prime(mod_);
  }
  return false;
}

bool CoefficientRing::is_indecomposable() const {
  switch (kind_) {
    case RingKind::rationals:
    case RingKind::integers: return true;
    case RingKind::mod_n: return is_prime_power(mod_);
  }
  return false;
}

Scalar CoefficientRing::from_int(long long v) const {
  if (kind_ == RingKind::mod_n) return {((v % mod_) + mod_) % mod_, 1};
  return {v, 1};
}

Scalar CoefficientRing::make(long long num, long long den) const {
  if (kind_ == RingKind::rationals) return reduced_rational(num, den);
  if (den != 1) fail(Errc::malformed_spec, "ring admits no fractions");
  return from_int(num);
}

Scalar CoefficientRing::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::rationals:
      return reduced_rational(Wide(a.num) * b.den + Wide(b.num) * a.den, Wide(a.den) * b.den);
    case RingKind::integers: return {narrow(Wide(a.num) + b.num), 1};
    case RingKind::mod_n: return from_int(narrow(Wide(a.num) + b.num));
  }
  return {};
}

Scalar CoefficientRing::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar CoefficientRing::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::rationals:
      return reduced_rational(Wide(a.num) * b.num, Wide(a.den) * b.den);
    case RingKind::integers: return {narrow(Wide(a.num) * b.num), 1};
    case RingKind::mod_n: return from_int(narrow(Wide(a.num) % mod_ * (b.num % mod_)));
  }
  return {};
}

Scalar CoefficientRing::neg(const Scalar& a) const {
  if (kind_ == RingKind::mod_n) return from_int(-a.num);
  return {-a.num, a.den};
}

std::string CoefficientRing::to_string(const Scalar& a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

}  // namespace subshift
