#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "rd/errors.hpp"
#include "rd/homothetism.hpp"

using namespace rd;
using namespace rd::testing;

namespace {

const FieldDescriptor kQ = FieldDescriptor::rationals();

}  // namespace

TEST_CASE("rescalings and inner operators are bimultiplications", "[homothetism]") {
  Rng rng(41);
  for (const Algebra& a :
       {truncated_poly_algebra(kQ, 3), noncommutative_2dim(kQ),
        truncated_poly_algebra(FieldDescriptor::prime_field(3), 2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      REQUIRE(check_bimultiplication(a, scalar_homothetism(a, rng.scalar(a.field))).ok());
      DoubleOperator inner = inner_homothetism(a, rng.element(a));
      REQUIRE(check_bimultiplication(a, inner).ok());
      REQUIRE(check_self_permutable(inner).ok());
    }
  }
}

TEST_CASE("a one-sided multiplication fails the middle identity", "[homothetism]") {
  // On K[x]/(x^2): left = multiply by x, right = 0. Then 1(sigma 1) = x
  // while (1 sigma)1 = 0.
  Algebra a = truncated_poly_algebra(kQ, 2);
  DoubleOperator sigma{zero_op(a), zero_op(a)};
  sigma.left.at(1, 0) = Scalar::one(kQ);  // 1 -> x, x -> 0
  BimultReport report = check_bimultiplication(a, sigma);
  REQUIRE(!report.ok());
  bool middle_at_00 = false;
  for (const auto& w : report.violations) {
    if (w.identity == BimultIdentity::middle && w.i == 0 && w.j == 0) {
      middle_at_00 = true;
    }
  }
  REQUIRE(middle_at_00);
}

TEST_CASE("self-permutability is commutation of the two halves", "[homothetism]") {
  Algebra a = make_zero_algebra(kQ, 2);
  // E01 and E10 do not commute: E01 E10 = E00, E10 E01 = E11.
  LinOp e01 = zero_op(a);
  e01.at(0, 1) = Scalar::one(kQ);
  LinOp e10 = zero_op(a);
  e10.at(1, 0) = Scalar::one(kQ);
  REQUIRE(!check_self_permutable(DoubleOperator{e01, e10}).ok());
  REQUIRE(check_self_permutable(DoubleOperator{e01, e01}).ok());
  REQUIRE(check_self_permutable(scalar_homothetism(a, Scalar::of_int(kQ, 7))).ok());
}

TEST_CASE("inner homothetisms by distinguished elements", "[homothetism]") {
  Algebra a = truncated_poly_algebra(kQ, 3);
  DoubleOperator by_zero = inner_homothetism(a, zero_element(a));
  REQUIRE(by_zero.left == zero_op(a));
  REQUIRE(by_zero.right == zero_op(a));

  DoubleOperator by_unit = inner_homothetism(a, basis_element(a, 0));
  REQUIRE(by_unit.left == identity_op(a));
  REQUIRE(by_unit.right == identity_op(a));

  // s = x: 1 -> x, x -> x^2, x^2 -> 0 on both sides (commutative algebra).
  DoubleOperator by_x = inner_homothetism(a, basis_element(a, 1));
  LinOp expected = zero_op(a);
  expected.at(1, 0) = Scalar::one(kQ);
  expected.at(2, 1) = Scalar::one(kQ);
  REQUIRE(by_x.left == expected);
  REQUIRE(by_x.right == expected);
}

TEST_CASE("rescaling by w matches the inner operator of w times the unit", "[homothetism]") {
  Rng rng(43);
  for (const Algebra& a : {truncated_poly_algebra(kQ, 3), truncated_poly_algebra(kQ, 4)}) {
    for (int trial = 0; trial < 10; ++trial) {
      Scalar w = rng.scalar(kQ);
      DoubleOperator rescale = scalar_homothetism(a, w);
      DoubleOperator inner = inner_homothetism(a, scale(w, basis_element(a, 0)));
      REQUIRE(rescale == inner);
    }
  }
  REQUIRE(scalar_homothetism(truncated_poly_algebra(kQ, 3), Scalar::zero(kQ)).left ==
          zero_op(truncated_poly_algebra(kQ, 3)));
}

TEST_CASE("compatibility constraint on basic triples", "[homothetism]") {
  Algebra a = truncated_poly_algebra(kQ, 3);

  // R = S = 0 with sigma having left(right(.)) = 0: inner by x^2.
  RBSystem trivial{a, zero_op(a), zero_op(a)};
  DoubleOperator by_x2 = inner_homothetism(a, basis_element(a, 2));
  REQUIRE(check_homothetic_compat(trivial, by_x2).ok());

  // Weighted operator with the rescaling by its weight.
  Algebra b = truncated_poly_algebra(kQ, 4);
  RBSystem weighted = from_weighted({b, integration_op(b), Scalar::zero(kQ)});
  REQUIRE(check_homothetic_compat(weighted, scalar_homothetism(b, Scalar::zero(kQ))).ok());
  RBSystem weighted2 = from_weighted({a, identity_op(a), Scalar::of_int(kQ, -1)});
  REQUIRE(check_homothetic_compat(weighted2,
                                  scalar_homothetism(a, Scalar::of_int(kQ, -1))).ok());

  // R = 0, S = id, sigma = rescaling by 1: a - 0 = a.
  RBSystem zero_id{a, zero_op(a), identity_op(a)};
  REQUIRE(check_homothetic_compat(zero_id, scalar_homothetism(a, Scalar::one(kQ))).ok());
  // ...but rescaling by 2 gives 2a on the left and 4a on the right.
  CompatReport bad = check_homothetic_compat(zero_id,
                                             scalar_homothetism(a, Scalar::of_int(kQ, 2)));
  REQUIRE(!bad.ok());
}

TEST_CASE("every bracketing of a sigma b agrees for homothetisms", "[homothetism]") {
  Rng rng(47);
  for (const Algebra& a : {truncated_poly_algebra(kQ, 3), noncommutative_2dim(kQ)}) {
    for (int trial = 0; trial < 25; ++trial) {
      DoubleOperator sigma = inner_homothetism(a, rng.element(a));
      Element x = rng.element(a);
      Element y = rng.element(a);
      REQUIRE(multiply(a, apply(sigma.right, x), y) ==
              multiply(a, x, apply(sigma.left, y)));
      REQUIRE(apply(sigma.left, apply(sigma.right, x)) ==
              apply(sigma.right, apply(sigma.left, x)));
      REQUIRE(sigma_between(a, sigma, x, y) == multiply(a, apply(sigma.right, x), y));
      REQUIRE(sandwich(sigma, x) == apply(sigma.left, apply(sigma.right, x)));
    }
  }
}

TEST_CASE("make_homothetic names the failing invariant", "[homothetism]") {
  Algebra a = truncated_poly_algebra(kQ, 3);
  RBSystem good{a, zero_op(a), identity_op(a)};
  REQUIRE_NOTHROW(make_homothetic(good, scalar_homothetism(a, Scalar::one(kQ))));

  RBSystem bad_system{a, identity_op(a), identity_op(a)};
  REQUIRE_THROWS_WITH(make_homothetic(bad_system, scalar_homothetism(a, Scalar::one(kQ))),
                      Catch::Matchers::ContainsSubstring("system"));

  DoubleOperator not_bimult{zero_op(a), zero_op(a)};
  not_bimult.left.at(1, 0) = Scalar::one(kQ);
  REQUIRE_THROWS_WITH(make_homothetic(good, not_bimult),
                      Catch::Matchers::ContainsSubstring("bimultiplication"));

  REQUIRE_THROWS_WITH(make_homothetic(good, scalar_homothetism(a, Scalar::of_int(kQ, 2))),
                      Catch::Matchers::ContainsSubstring("compatibility"));
}

TEST_CASE("root pairs determine the rescaling sign", "[homothetism]") {
  Algebra a = truncated_poly_algebra(kQ, 3);
  LinOp neg = scale(Scalar::of_int(kQ, -1), identity_op(a));
  GeneralizedRBOperator g{a, neg, Scalar::of_int(kQ, 3), Scalar::of_int(kQ, 2)};

  HomotheticRBSystem h12 = gamma_from_weights(g, Scalar::one(kQ), Scalar::of_int(kQ, 2));
  REQUIRE(h12.sigma == scalar_homothetism(a, Scalar::one(kQ)));
  REQUIRE(is_valid_homothetic(h12));

  HomotheticRBSystem h21 = gamma_from_weights(g, Scalar::of_int(kQ, 2), Scalar::one(kQ));
  REQUIRE(h21.sigma == scalar_homothetism(a, Scalar::of_int(kQ, -1)));
  REQUIRE(is_valid_homothetic(h21));

  // (mu - lambda)^2 = alpha^2 - 4 beta for both orderings.
  Scalar disc = Scalar::of_int(kQ, 3) * Scalar::of_int(kQ, 3) -
                Scalar::of_int(kQ, 4) * Scalar::of_int(kQ, 2);
  Scalar gamma = Scalar::of_int(kQ, 2) - Scalar::one(kQ);
  REQUIRE(gamma * gamma == disc);

  REQUIRE_THROWS_AS(gamma_from_weights(g, Scalar::one(kQ), Scalar::one(kQ)), InvalidInput);
}

TEST_CASE("a double root collapses the rescaling to zero", "[homothetism]") {
  // Weights (2, 1): t^2 - 2t + 1 = (t - 1)^2.
  Algebra a = line_algebra(kQ, Scalar::zero(kQ));
  GeneralizedRBOperator g{a, zero_op(a), Scalar::of_int(kQ, 2), Scalar::one(kQ)};
  HomotheticRBSystem h = gamma_from_weights(g, Scalar::one(kQ), Scalar::one(kQ));
  REQUIRE(h.sigma.left == zero_op(a));
  REQUIRE(is_valid_homothetic(h));
}
