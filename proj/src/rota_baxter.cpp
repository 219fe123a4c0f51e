#include "rd/rota_baxter.hpp"

#include <utility>

#include "rd/errors.hpp"

namespace rd {

namespace {

void require_op_over(const Algebra& a, const LinOp& t, const char* name) {
  if (t.dim != a.dim) {
    throw DimensionMismatch(std::string(name) + " has dimension " +
                            std::to_string(t.dim) + ", algebra has " +
                            std::to_string(a.dim));
  }
}

Element op_column(const LinOp& t, int j) {
  Element e;
  e.coords.assign(t.m.begin() + static_cast<std::ptrdiff_t>(j) * t.dim,
                  t.m.begin() + static_cast<std::ptrdiff_t>(j + 1) * t.dim);
  return e;
}

// Coordinates of e_i e_j straight from the tensor.
Element basis_product(const Algebra& a, int i, int j) {
  Element e = zero_element(a);
  for (int k = 0; k < a.dim; ++k) {
    e.coords[static_cast<std::size_t>(k)] = a.sc(i, j, k);
  }
  return e;
}

// Roots of t^2 - alpha t + beta, each listed once, in canonical order.
std::vector<Scalar> quadratic_roots(const FieldDescriptor& f, const Scalar& alpha,
                                    const Scalar& beta, Scalar& discriminant_out) {
  Scalar four = Scalar::of_int(f, 4);
  discriminant_out = alpha * alpha - four * beta;
  if (f.is_prime_field() && f.modulus() == 2) {
    // Characteristic 2: the (alpha +- gamma)/2 formula is unusable, and a
    // monic quadratic with one root in F_2 has both there. Scan directly.
    std::vector<Scalar> roots;
    for (std::int64_t t = 0; t < 2; ++t) {
      Scalar x = Scalar::residue(f, t);
      if ((x * x - alpha * x + beta).is_zero()) {
        roots.push_back(x);
      }
    }
    return roots;
  }
  auto gamma = discriminant_out.sqrt();
  if (!gamma) {
    return {};
  }
  Scalar two = Scalar::of_int(f, 2);
  Scalar lo = (alpha - *gamma) / two;
  Scalar hi = (alpha + *gamma) / two;
  if (lo == hi) {
    return {lo};
  }
  return {lo, hi};
}

}  // namespace

RBWeightReport check_rb_weight(const Algebra& a, const LinOp& r, const Scalar& weight) {
  require_op_over(a, r, "R");
  RBWeightReport report;
  for (int i = 0; i < a.dim; ++i) {
    Element ri = op_column(r, i);
    Element ei = basis_element(a, i);
    for (int j = 0; j < a.dim; ++j) {
      Element rj = op_column(r, j);
      Element ej = basis_element(a, j);
      Element lhs = multiply(a, ri, rj);
      Element inner = add(multiply(a, ri, ej), multiply(a, ei, rj));
      inner = add(inner, scale(weight, basis_product(a, i, j)));
      if (!(lhs == apply(r, inner))) {
        report.violations.push_back({i, j});
      }
    }
  }
  return report;
}

GeneralizedRBReport check_generalized_rb(const Algebra& a, const LinOp& rbar,
                                         const Scalar& alpha, const Scalar& beta) {
  require_op_over(a, rbar, "Rbar");
  GeneralizedRBReport report;
  for (int i = 0; i < a.dim; ++i) {
    Element ri = op_column(rbar, i);
    Element ei = basis_element(a, i);
    for (int j = 0; j < a.dim; ++j) {
      Element rj = op_column(rbar, j);
      Element ej = basis_element(a, j);
      Element lhs = multiply(a, ri, rj);
      Element prod = basis_product(a, i, j);
      Element inner = add(multiply(a, ri, ej), multiply(a, ei, rj));
      inner = add(inner, scale(alpha, prod));
      Element rhs = add(apply(rbar, inner), scale(beta, prod));
      if (!(lhs == rhs)) {
        report.violations.push_back({i, j});
      }
    }
  }
  return report;
}

RBSystemReport check_rb_system(const Algebra& a, const LinOp& r, const LinOp& s) {
  require_op_over(a, r, "R");
  require_op_over(a, s, "S");
  RBSystemReport report;
  for (int i = 0; i < a.dim; ++i) {
    Element ri = op_column(r, i);
    Element si = op_column(s, i);
    Element ei = basis_element(a, i);
    for (int j = 0; j < a.dim; ++j) {
      Element rj = op_column(r, j);
      Element sj = op_column(s, j);
      Element ej = basis_element(a, j);
      // Shared inner term R(a)b + aS(b).
      Element inner = add(multiply(a, ri, ej), multiply(a, ei, sj));
      if (!(multiply(a, ri, rj) == apply(r, inner))) {
        report.violations.push_back({SystemEquation::r_equation, i, j});
      }
      if (!(multiply(a, si, sj) == apply(s, inner))) {
        report.violations.push_back({SystemEquation::s_equation, i, j});
      }
    }
  }
  return report;
}

RBSystem from_weighted(const WeightedRBOperator& w) {
  if (!check_rb_weight(w.algebra, w.r, w.weight).ok()) {
    throw InvalidInput("operator fails the weight-" + w.weight.str() +
                       " Rota-Baxter identity");
  }
  LinOp s = add(w.r, scale(w.weight, identity_op(w.algebra)));
  return RBSystem{w.algebra, w.r, std::move(s)};
}

GeneralizedSplitResult from_generalized(const GeneralizedRBOperator& g) {
  if (!check_generalized_rb(g.algebra, g.rbar, g.alpha, g.beta).ok()) {
    throw InvalidInput("operator fails the generalized Rota-Baxter identity for weights (" +
                       g.alpha.str() + ", " + g.beta.str() + ")");
  }
  GeneralizedSplitResult result;
  result.discriminant = Scalar::zero(g.algebra.field);
  std::vector<Scalar> roots =
      quadratic_roots(g.algebra.field, g.alpha, g.beta, result.discriminant);
  result.roots_found = !roots.empty();
  if (roots.empty()) {
    return result;
  }
  std::vector<std::pair<Scalar, Scalar>> pairs;
  if (roots.size() == 1) {
    pairs.emplace_back(roots[0], roots[0]);
  } else {
    pairs.emplace_back(roots[0], roots[1]);
    pairs.emplace_back(roots[1], roots[0]);
  }
  LinOp id = identity_op(g.algebra);
  for (auto& [lambda, mu] : pairs) {
    RBSystem sys{g.algebra, add(g.rbar, scale(lambda, id)), add(g.rbar, scale(mu, id))};
    if (!check_rb_system(sys.algebra, sys.r, sys.s).ok()) {
      throw Error("internal: split of a verified generalized operator failed its system check");
    }
    result.systems.push_back({std::move(sys), lambda, mu});
  }
  return result;
}

Algebra build_triple_algebra(const Algebra& a) {
  int n = a.dim;
  Algebra b = make_zero_algebra(a.field, 3 * n,
                                a.label.empty() ? "triple" : "triple(" + a.label + ")");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Scalar& c = a.sc(i, j, k);
        if (c.is_zero()) {
          continue;
        }
        b.sc(i, j, k) = c;                          // (a,0,0)(a',0,0) -> slot 1
        b.sc(n + i, n + j, n + k) = c;              // (0,b,0)(0,b',0) -> slot 2
        b.sc(i, 2 * n + j, 2 * n + k) = c;          // a c' -> slot 3
        b.sc(2 * n + i, n + j, 2 * n + k) = c;      // c b' -> slot 3
      }
    }
  }
  return b;
}

LinOp build_nijenhuis_matrix(const Algebra& a, const LinOp& r, const LinOp& s) {
  require_op_over(a, r, "R");
  require_op_over(a, s, "S");
  int n = a.dim;
  Algebra b = make_zero_algebra(a.field, 3 * n);
  LinOp nop = zero_op(b);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      nop.at(i, 2 * n + j) = r.at(i, j);
      nop.at(n + i, 2 * n + j) = s.at(i, j);
    }
  }
  return nop;
}

NijenhuisReport check_nijenhuis(const Algebra& b, const LinOp& n) {
  require_op_over(b, n, "N");
  NijenhuisReport report;
  for (int i = 0; i < b.dim; ++i) {
    Element ni = op_column(n, i);
    Element ei = basis_element(b, i);
    for (int j = 0; j < b.dim; ++j) {
      Element nj = op_column(n, j);
      Element ej = basis_element(b, j);
      Element lhs = multiply(b, ni, nj);
      Element inner = add(multiply(b, ni, ej), multiply(b, ei, nj));
      inner = sub(inner, apply(n, basis_product(b, i, j)));
      if (!(lhs == apply(n, inner))) {
        report.violations.push_back({i, j});
      }
    }
  }
  return report;
}

}  // namespace rd
