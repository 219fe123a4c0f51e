#pragma once

#include <vector>

#include "rd/rota_baxter.hpp"

namespace rd {

// Pair of linear operators written a -> sigma a (left) and a -> a sigma
// (right). The constructor enforces nothing; predicates below do, so tests
// can build failing instances deliberately.
struct DoubleOperator {
  LinOp left;
  LinOp right;

  bool operator==(const DoubleOperator&) const = default;
};

enum class BimultIdentity {
  product_left,   // sigma(ab) = (sigma a) b
  product_right,  // (ab) sigma = a (b sigma)
  middle,         // a (sigma b) = (a sigma) b
};

struct BimultWitness {
  BimultIdentity identity;
  int i = 0;
  int j = 0;
};

struct BimultReport {
  std::vector<BimultWitness> violations;
  bool ok() const { return violations.empty(); }
};

struct BasisWitness {
  int i = 0;
};

struct SelfPermReport {
  std::vector<BasisWitness> violations;
  bool ok() const { return violations.empty(); }
};

struct CompatReport {
  std::vector<BasisWitness> violations;
  bool ok() const { return violations.empty(); }
};

// All three bimultiplication identities on all basis pairs (sufficient by
// bilinearity).
BimultReport check_bimultiplication(const Algebra& a, const DoubleOperator& sigma);

// (sigma a) sigma = sigma (a sigma), i.e. the two matrices commute.
SelfPermReport check_self_permutable(const DoubleOperator& sigma);

// Left and right multiplication by s.
DoubleOperator inner_homothetism(const Algebra& a, const Element& s);

// The rescaling (w id, w id).
DoubleOperator scalar_homothetism(const Algebra& a, const Scalar& w);

// S(a) sigma - sigma R(a) = sigma a sigma on all basis elements (the
// identity is linear in a). sigma a sigma is evaluated as sigma(a sigma).
CompatReport check_homothetic_compat(const RBSystem& sys, const DoubleOperator& sigma);

struct HomotheticRBSystem {
  RBSystem system;
  DoubleOperator sigma;
};

// Validates the system equations, bimultiplication, self-permutability and
// the compatibility constraint; throws InvalidInput naming the first check
// that fails.
HomotheticRBSystem make_homothetic(RBSystem sys, DoubleOperator sigma);

// Checks all four HomotheticRBSystem invariants without throwing.
bool is_valid_homothetic(const HomotheticRBSystem& h);

// sigma a sigma = sigma(a sigma); asserts (a sigma)sigma agrees in debug
// builds.
Element sandwich(const DoubleOperator& sigma, const Element& x);

// a sigma b = (a sigma) b; asserts a (sigma b) agrees in debug builds.
Element sigma_between(const Algebra& a, const DoubleOperator& sigma,
                      const Element& x, const Element& y);

// Homothetic system for a root pair (lambda, mu) of the weights of g:
// the split system together with sigma = rescaling by mu - lambda. Throws
// InvalidInput when the pair fails lambda + mu = alpha, lambda mu = beta.
//
// The rescaling factor is forced: with S - R = (mu - lambda) id and a scalar
// sigma = gamma, the compatibility constraint reads gamma(mu - lambda) a =
// gamma^2 a, so gamma = mu - lambda (gamma = 0 only when lambda = mu).
HomotheticRBSystem gamma_from_weights(const GeneralizedRBOperator& g,
                                      const Scalar& lambda, const Scalar& mu);

}  // namespace rd
