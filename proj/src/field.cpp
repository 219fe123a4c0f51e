#include "rd/field.hpp"

#include <utility>

namespace rd {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) {
    return false;
  }
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

std::int64_t normalize_mod(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

FieldDescriptor FieldDescriptor::rationals() {
  return FieldDescriptor();
}

FieldDescriptor FieldDescriptor::prime_field(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) {
    throw InvalidInput("prime modulus out of range: " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw InvalidInput("modulus is not prime: " + std::to_string(p));
  }
  FieldDescriptor f;
  f.kind_ = FieldKind::prime_field;
  f.p_ = p;
  return f;
}

std::string FieldDescriptor::str() const {
  return is_rationals() ? "Q" : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldDescriptor& f) {
  return of_int(f, 0);
}

Scalar Scalar::one(const FieldDescriptor& f) {
  return of_int(f, 1);
}

Scalar Scalar::of_int(const FieldDescriptor& f, std::int64_t v) {
  if (f.is_rationals()) {
    return Scalar(f, BigRational(v));
  }
  return Scalar(f, normalize_mod(v, f.modulus()));
}

Scalar Scalar::rational(BigRational v) {
  return Scalar(FieldDescriptor::rationals(), std::move(v));
}

Scalar Scalar::residue(const FieldDescriptor& f, std::int64_t v) {
  if (!f.is_prime_field()) {
    throw InvalidInput("residue scalar requires a prime field");
  }
  return Scalar(f, normalize_mod(v, f.modulus()));
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

const BigRational& Scalar::rational_value() const {
  if (!field_.is_rationals()) {
    throw FieldMismatch("rational_value on a prime-field scalar");
  }
  return rat_;
}

std::int64_t Scalar::residue_value() const {
  if (!field_.is_prime_field()) {
    throw FieldMismatch("residue_value on a rational scalar");
  }
  return res_;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw FieldMismatch("scalars from different fields: " + field_.str() +
                        " vs " + o.field_.str());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rationals()) {
    return Scalar(field_, rat_ + o.rat_);
  }
  return Scalar(field_, (res_ + o.res_) % field_.modulus());
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rationals()) {
    return Scalar(field_, rat_ - o.rat_);
  }
  std::int64_t p = field_.modulus();
  return Scalar(field_, (res_ - o.res_ + p) % p);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rationals()) {
    return Scalar(field_, rat_ * o.rat_);
  }
  return Scalar(field_, (res_ * o.res_) % field_.modulus());
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  if (o.is_zero()) {
    throw DivisionByZero("division by zero in " + field_.str());
  }
  if (field_.is_rationals()) {
    return Scalar(field_, rat_ / o.rat_);
  }
  std::int64_t p = field_.modulus();
  return Scalar(field_, (res_ * mod_inverse(o.res_, p)) % p);
}

Scalar Scalar::operator-() const {
  if (field_.is_rationals()) {
    return Scalar(field_, -rat_);
  }
  std::int64_t p = field_.modulus();
  return Scalar(field_, (p - res_) % p);
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (field_.is_prime_field()) {
    std::int64_t p = field_.modulus();
    for (std::int64_t s = 0; s < p; ++s) {
      if ((s * s) % p == res_) {
        return Scalar(field_, s);
      }
    }
    return std::nullopt;
  }
  if (rat_.sign() < 0) {
    return std::nullopt;
  }
  BigInt num = boost::multiprecision::numerator(rat_);
  BigInt den = boost::multiprecision::denominator(rat_);
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) {
    return std::nullopt;
  }
  return Scalar(field_, BigRational(rn, rd));
}

std::string Scalar::str() const {
  if (field_.is_prime_field()) {
    return std::to_string(res_);
  }
  BigInt num = boost::multiprecision::numerator(rat_);
  BigInt den = boost::multiprecision::denominator(rat_);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::int64_t mod_inverse(std::int64_t v, std::int64_t p) {
  std::int64_t a = normalize_mod(v, p);
  if (a == 0) {
    throw DivisionByZero("no inverse of 0 mod " + std::to_string(p));
  }
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return normalize_mod(old_s, p);
}

}  // namespace rd
