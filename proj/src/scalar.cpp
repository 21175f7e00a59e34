#include "oirep/scalar.hpp"

#include <ostream>

namespace oirep {

FieldMode& field_mode() {
  static FieldMode mode;
  return mode;
}

void use_rationals() { field_mode() = FieldMode{}; }

void use_prime_field(long p) {
  if (p <= 2) throw DomainError("prime field modulus must exceed 2");
  field_mode() = FieldMode{true, p};
}

Scalar::Scalar(long num, long den) : v_(num, den) {
  if (den == 0) throw DomainError("zero denominator");
  v_.canonicalize();
  reduce();
}

void Scalar::reduce() {
  const FieldMode& f = field_mode();
  if (!f.prime) return;
  mpz_class p(f.p);
  mpz_class num = v_.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v_.get_den() % p;
  if (sgn(den) == 0) throw DomainError("denominator divisible by field modulus");
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainError("denominator not invertible mod p");
  mpz_class res = (num * den_inv) % p;
  if (res < 0) res += p;
  v_ = mpq_class(res);
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.v_ = -v_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  v_ += o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  v_ -= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  v_ *= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero scalar");
  v_ /= o.v_;
  reduce();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero scalar");
  Scalar r;
  r.v_ = 1 / v_;
  r.reduce();
  return r;
}

std::string Scalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

Scalar Scalar::parse(const std::string& text) {
  if (text.empty()) throw DomainError("empty scalar literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw DomainError("bad scalar literal: " + text);
  if (sgn(q.get_den()) == 0) throw DomainError("zero denominator: " + text);
  return Scalar(q);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace oirep
