#pragma once

#include <random>
#include <vector>

#include "rd/algebra.hpp"
#include "rd/homothetism.hpp"

namespace rd::testing {

// K[x]/(x^deg) with basis 1, x, ..., x^(deg-1).
inline Algebra truncated_poly_algebra(const FieldDescriptor& f, int deg) {
  Algebra a = make_zero_algebra(f, deg, "K[x]/(x^" + std::to_string(deg) + ")");
  for (int i = 0; i < deg; ++i) {
    for (int j = 0; j < deg; ++j) {
      if (i + j < deg) {
        a.sc(i, j, i + j) = Scalar::one(f);
      }
    }
  }
  return a;
}

// One-dimensional algebra with e^2 = c e.
inline Algebra line_algebra(const FieldDescriptor& f, const Scalar& c) {
  Algebra a = make_zero_algebra(f, 1, "line");
  a.sc(0, 0, 0) = c;
  return a;
}

inline Algebra direct_sum_lines(const FieldDescriptor& f) {
  Algebra a = make_zero_algebra(f, 2, "K+K");
  a.sc(0, 0, 0) = Scalar::one(f);
  a.sc(1, 1, 1) = Scalar::one(f);
  return a;
}

// Noncommutative: u u = u, u v = v, v u = 0, v v = 0.
inline Algebra noncommutative_2dim(const FieldDescriptor& f) {
  Algebra a = make_zero_algebra(f, 2, "noncomm2");
  a.sc(0, 0, 0) = Scalar::one(f);
  a.sc(0, 1, 1) = Scalar::one(f);
  return a;
}

// Formal integration on K[x]/(x^deg): x^k -> x^(k+1)/(k+1), top degree -> 0.
inline LinOp integration_op(const Algebra& a) {
  LinOp t = zero_op(a);
  for (int k = 0; k + 1 < a.dim; ++k) {
    t.at(k + 1, k) = Scalar::one(a.field) / Scalar::of_int(a.field, k + 1);
  }
  return t;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }

  Scalar scalar(const FieldDescriptor& f) {
    if (f.is_prime_field()) {
      return Scalar::of_int(f, uniform(0, f.modulus() - 1));
    }
    std::int64_t num = uniform(-9, 9);
    std::int64_t den = uniform(1, 9);
    return Scalar::rational(BigRational(num, den));
  }

  Scalar nonzero_scalar(const FieldDescriptor& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) {
        return s;
      }
    }
  }

  Element element(const Algebra& a) {
    Element e = zero_element(a);
    for (auto& c : e.coords) {
      c = scalar(a.field);
    }
    return e;
  }

  LinOp op(const Algebra& a) {
    LinOp t = zero_op(a);
    for (auto& c : t.m) {
      c = scalar(a.field);
    }
    return t;
  }

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace rd::testing
