#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "rd/homothetism.hpp"

namespace rd {

// Vector space with level + 1 bilinear operations *_0 .. *_level, each held
// as a structure-constant tensor in the same flat layout as Algebra.
struct DyckAlgebra {
  FieldDescriptor field;
  int dim = 0;
  int level = 0;
  // products[i] has dim^3 entries: (j*dim + k)*dim + l.
  std::vector<std::vector<Scalar>> products;

  const Scalar& pc(int op, int j, int k, int l) const {
    return products[static_cast<std::size_t>(op)]
                   [static_cast<std::size_t>((j * dim + k) * dim + l)];
  }
  Scalar& pc(int op, int j, int k, int l) {
    return products[static_cast<std::size_t>(op)]
                   [static_cast<std::size_t>((j * dim + k) * dim + l)];
  }
};

// x *_op y. Throws IndexOutOfRange unless 0 <= op <= level.
Element dyck_multiply(const DyckAlgebra& d, int op, const Element& x, const Element& y);

struct DyckAxiomId {
  enum class Family { a, b, c, d };

  Family family = Family::a;
  int i = -1;  // first index for family a, the index for family d
  int j = -1;  // second index for family a

  std::string str() const;
  auto operator<=>(const DyckAxiomId&) const = default;
};

struct DyckViolation {
  DyckAxiomId axiom;
  std::array<int, 3> triple;
  Element lhs;
  Element rhs;
};

struct DyckCheckReport {
  std::vector<DyckViolation> violations;
  // Number of (axiom instance, basis triple) combinations evaluated.
  std::size_t checks = 0;

  bool passed() const { return violations.empty(); }
};

// Verifies every axiom instance over all dim^3 basis triples (sufficient:
// each axiom is trilinear). Instance count: level(level+1)/2 for the mixed
// associativity family, one each for the leftmost/rightmost splittings, and
// level-1 middle instances (empty for level <= 1). For level 0 only the two
// splitting axioms apply and both reduce to associativity of *_0.
// Violations are ordered by axiom id, then basis triple.
DyckCheckReport check_dyck_axioms(const DyckAlgebra& d);

// The level+1 operations attached to a homothetic Rota-Baxter system:
//   x *_0 y        = R(x) y
//   x *_i y        = (-1)^(i+1) x sigma y          for 0 < i < level
//   x *_level y    = x S(y) - q x sigma y,  q = 1 for even level, 0 for odd.
// Throws UnsupportedLevel for level 0 (the table assigns i = 0 and i = level
// conflicting formulas there) and InvalidInput when h fails its invariants.
// The result is certified with check_dyck_axioms before being returned.
DyckAlgebra build_dyck(const HomotheticRBSystem& h, int level);

struct ProofIdentityReport {
  struct Identity {
    std::vector<std::array<int, 3>> violations;
    bool ok() const { return violations.empty(); }
  };

  // a sigma R(b) c = (a S(b) - a sigma b) sigma c
  Identity even_case;
  // R(a)(R(b) c + b sigma c) = (a S(b)) sigma c, exactly as displayed.
  Identity odd_case_displayed;
  // a sigma (R(b) c + b sigma c) = (a S(b)) sigma c; the displayed form
  // looks like a typo for this one, so both variants are reported and the
  // caller decides which to trust.
  Identity odd_case_sigma;
};

// Evaluates the two intermediate identities behind the middle-operation
// axioms on all basis triples. Accepts invalid h so mutated systems can be
// probed; fixed bracketings are used throughout.
ProofIdentityReport check_theorem_proof_identities(const HomotheticRBSystem& h);

}  // namespace rd
