#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rd/field.hpp"

namespace rd {

// Finite-dimensional algebra given by structure constants:
// e_i * e_j = sum_k c[i][j][k] e_k. Instances are immutable after
// construction; the JSON loader refuses tables that fail check_associative.
struct Algebra {
  FieldDescriptor field;
  int dim = 0;
  // Flat (i*dim + j)*dim + k layout.
  std::vector<Scalar> structure_constants;
  std::string label;

  const Scalar& sc(int i, int j, int k) const {
    return structure_constants[static_cast<std::size_t>((i * dim + j) * dim + k)];
  }
  Scalar& sc(int i, int j, int k) {
    return structure_constants[static_cast<std::size_t>((i * dim + j) * dim + k)];
  }
};

// Fresh all-zero structure-constant table over f.
Algebra make_zero_algebra(const FieldDescriptor& f, int dim, std::string label = "");

// Coordinate vector of an element with respect to the basis of its algebra.
struct Element {
  std::vector<Scalar> coords;

  bool operator==(const Element& o) const { return coords == o.coords; }
};

Element zero_element(const Algebra& a);
Element basis_element(const Algebra& a, int i);
Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element scale(const Scalar& s, const Element& x);

// Bilinear product through the structure constants. Throws AlgebraMismatch
// when coordinate lengths or fields disagree with a.
Element multiply(const Algebra& a, const Element& x, const Element& y);

// Linear operator as an n-by-n matrix; column j holds the image of e_j.
struct LinOp {
  int dim = 0;
  // Column-major: entry(i, j) = m[j*dim + i].
  std::vector<Scalar> m;

  const Scalar& at(int i, int j) const {
    return m[static_cast<std::size_t>(j * dim + i)];
  }
  Scalar& at(int i, int j) {
    return m[static_cast<std::size_t>(j * dim + i)];
  }

  bool operator==(const LinOp& o) const { return dim == o.dim && m == o.m; }
};

LinOp zero_op(const Algebra& a);
LinOp identity_op(const Algebra& a);
LinOp make_op(const Algebra& a, const std::vector<std::vector<Scalar>>& columns);

Element apply(const LinOp& t, const Element& x);
// Composition: (compose(t, u))(x) = t(u(x)).
LinOp compose(const LinOp& t, const LinOp& u);
LinOp add(const LinOp& t, const LinOp& u);
LinOp sub(const LinOp& t, const LinOp& u);
LinOp scale(const Scalar& s, const LinOp& t);

struct AssociativityReport {
  // Basis triples (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k).
  std::vector<std::array<int, 3>> violations;

  bool ok() const { return violations.empty(); }
};

// Checks all dim^3 basis triples; sufficient by trilinearity of both sides.
AssociativityReport check_associative(const Algebra& a);

// Two-sided unit found by solving the 2n^2 linear equations u e_i = e_i,
// e_i u = e_i exactly. nullopt when the system is inconsistent.
std::optional<Element> find_unit(const Algebra& a);

// Exact Gaussian elimination. rows[r] holds ncols coefficients followed by
// the right-hand side; returns any solution, nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const FieldDescriptor& f, int ncols,
                                                std::vector<std::vector<Scalar>> rows);

}  // namespace rd
