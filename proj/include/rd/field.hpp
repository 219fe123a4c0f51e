#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "rd/errors.hpp"

namespace rd {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime_field };

// Ground field: the rationals, or F_p for a small prime p.
class FieldDescriptor {
 public:
  FieldDescriptor() : kind_(FieldKind::rationals), p_(0) {}

  static FieldDescriptor rationals();
  // Throws InvalidInput unless 2 <= p < 2^31 and p is prime.
  static FieldDescriptor prime_field(std::int64_t p);

  FieldKind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == FieldKind::rationals; }
  bool is_prime_field() const { return kind_ == FieldKind::prime_field; }
  std::int64_t modulus() const { return p_; }

  bool operator==(const FieldDescriptor&) const = default;

  std::string str() const;

 private:
  FieldKind kind_;
  std::int64_t p_;
};

// Immutable exact field element. Rationals are kept in lowest terms with a
// positive denominator; prime-field values are residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldDescriptor::rationals()), res_(0) {}

  static Scalar zero(const FieldDescriptor& f);
  static Scalar one(const FieldDescriptor& f);
  static Scalar of_int(const FieldDescriptor& f, std::int64_t v);
  static Scalar rational(BigRational v);
  static Scalar residue(const FieldDescriptor& f, std::int64_t v);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Rationals only.
  const BigRational& rational_value() const;
  // Prime field only.
  std::int64_t residue_value() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;

  bool operator==(const Scalar& o) const;  // throws FieldMismatch
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical square root: non-negative over Q, smallest residue over F_p
  // (found by scanning residues; p is small by construction). nullopt when
  // no root exists in the field.
  std::optional<Scalar> sqrt() const;

  // Canonical text form: "n" or "n/d" over Q, the residue digits over F_p.
  std::string str() const;

 private:
  Scalar(FieldDescriptor f, BigRational r) : field_(f), rat_(std::move(r)), res_(0) {}
  Scalar(FieldDescriptor f, std::int64_t r) : field_(f), res_(r) {}

  void require_same_field(const Scalar& o) const;

  FieldDescriptor field_;
  BigRational rat_;
  std::int64_t res_;
};

// Inverse of v modulo p via the extended Euclidean algorithm; v nonzero mod p.
std::int64_t mod_inverse(std::int64_t v, std::int64_t p);

}  // namespace rd
