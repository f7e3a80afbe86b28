/* ring.hpp -- exact coefficient rings: rationals, integers, integers mod n. */
#pragma once

#include <string>

#include "subshift/errors.hpp"

namespace subshift {

enum class RingKind { rationals, integers, mod_n };

/// Normalized value: rationals keep gcd-reduced num/den with den > 0,
/// the other rings keep den == 1 (mod n stores the residue in [0, n)).
struct Scalar {
  long long num = 0;
  long long den = 1;

  bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }
  bool operator<(const Scalar& o) const {
    if (num != o.num) return num < o.num;
    return den < o.den;
  }
};

class CoefficientRing {
 public:
  static CoefficientRing rationals() { return CoefficientRing(RingKind::rationals, 0); }
  static CoefficientRing integers() { return CoefficientRing(RingKind::integers, 0); }
  static CoefficientRing mod(long long n);

  RingKind kind() const { return kind_; }
  long long modulus() const { return mod_; }

  bool is_field() const;
  bool is_indecomposable() const;

  Scalar zero() const { return {}; }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const;
  Scalar make(long long num, long long den) const;  // throws on den == 0 outside the rationals

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  bool is_zero(const Scalar& a) const { return a.num == 0; }

  std::string to_string(const Scalar& a) const;

  std::string name() const {
    switch (kind_) {
      case RingKind::rationals: return "Q";
      case RingKind::integers: return "Z";
      default: return "Z/" + std::to_string(mod_);
    }
  }

  bool operator==(const CoefficientRing& o) const { return kind_ == o.kind_ && mod_ == o.mod_; }

 private:
  CoefficientRing(RingKind k, long long n) : kind_(k), mod_(n) {}

  RingKind kind_;
  long long mod_;
};

}  // namespace subshift
