#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "oirep/errors.hpp"

namespace oirep {

// Session-wide choice of ground field: exact rationals (default) or F_p.
// Set once before any computation; Scalar values canonicalize against it.
struct FieldMode {
  bool prime = false;
  long p = 0;
};

FieldMode& field_mode();
void use_rationals();
void use_prime_field(long p);

// Exact field element. In rational mode an arbitrary-precision p/q in lowest
// terms with q > 0; in prime mode the canonical residue in [0, p) with
// denominator 1. No rounding anywhere.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) { reduce(); }  // NOLINT: implicit by design
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : v_(q) {
    v_.canonicalize();
    reduce();
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }

  Scalar inverse() const;

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  // Renders as "p/q", or "p" when the denominator is 1.
  std::string str() const;

  static Scalar parse(const std::string& text);

 private:
  mpq_class v_;
  void reduce();
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace oirep
