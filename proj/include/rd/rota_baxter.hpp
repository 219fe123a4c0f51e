#pragma once

#include <vector>

#include "rd/algebra.hpp"

namespace rd {

struct PairWitness {
  int i = 0;
  int j = 0;

  bool operator==(const PairWitness&) const = default;
};

struct RBWeightReport {
  std::vector<PairWitness> violations;
  bool ok() const { return violations.empty(); }
};

struct GeneralizedRBReport {
  std::vector<PairWitness> violations;
  bool ok() const { return violations.empty(); }
};

enum class SystemEquation { r_equation, s_equation };

struct SystemWitness {
  SystemEquation equation;
  int i = 0;
  int j = 0;
};

struct RBSystemReport {
  std::vector<SystemWitness> violations;
  bool ok() const { return violations.empty(); }
};

struct NijenhuisReport {
  std::vector<PairWitness> violations;
  bool ok() const { return violations.empty(); }
};

struct WeightedRBOperator {
  Algebra algebra;
  LinOp r;
  Scalar weight;
};

struct GeneralizedRBOperator {
  Algebra algebra;
  LinOp rbar;
  Scalar alpha;
  Scalar beta;
};

struct RBSystem {
  Algebra algebra;
  LinOp r;
  LinOp s;
};

// Every identity below is bilinear in (a, b), so checking all basis pairs
// (e_i, e_j) decides it for all elements.

// R(a)R(b) = R(R(a)b + aR(b) + w ab) on all basis pairs.
RBWeightReport check_rb_weight(const Algebra& a, const LinOp& r, const Scalar& weight);

// R(a)R(b) = R(R(a)b + aR(b) + alpha ab) + beta ab on all basis pairs.
GeneralizedRBReport check_generalized_rb(const Algebra& a, const LinOp& rbar,
                                         const Scalar& alpha, const Scalar& beta);

// R(a)R(b) = R(R(a)b + aS(b)) and S(a)S(b) = S(R(a)b + aS(b)).
RBSystemReport check_rb_system(const Algebra& a, const LinOp& r, const LinOp& s);

// S = R + w id. Throws InvalidInput when w fails check_rb_weight.
RBSystem from_weighted(const WeightedRBOperator& w);

struct GeneralizedSplit {
  RBSystem system;
  Scalar lambda;
  Scalar mu;
};

struct GeneralizedSplitResult {
  std::vector<GeneralizedSplit> systems;
  Scalar discriminant;
  // False when t^2 - alpha t + beta has no roots in the field; systems is
  // empty in that case.
  bool roots_found = false;
};

// Splits weights (alpha, beta) into root pairs lambda + mu = alpha,
// lambda mu = beta and returns (R + lambda id, R + mu id) per ordered pair:
// both orderings when lambda != mu, one when equal. The discriminant route
// needs 1/2, so over F_2 the roots are found by scanning residues instead.
GeneralizedSplitResult from_generalized(const GeneralizedRBOperator& g);

// Product on A + A + A: (a,b,c)(a',b',c') = (aa', bb', ac' + cb'), with the
// three copies of the basis concatenated in slot order.
Algebra build_triple_algebra(const Algebra& a);

// Block operator (a,b,c) -> (R(c), S(c), 0) on the triple algebra.
LinOp build_nijenhuis_matrix(const Algebra& a, const LinOp& r, const LinOp& s);

// N(a)N(b) = N(N(a)b + aN(b) - N(ab)) on all basis pairs of b.
NijenhuisReport check_nijenhuis(const Algebra& b, const LinOp& n);

}  // namespace rd
