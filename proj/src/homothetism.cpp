#include "rd/homothetism.hpp"

#include <cassert>
#include <utility>

#include "rd/errors.hpp"

namespace rd {

namespace {

void require_sigma_over(const Algebra& a, const DoubleOperator& sigma) {
  if (sigma.left.dim != a.dim || sigma.right.dim != a.dim) {
    throw AlgebraMismatch("double operator dimension does not match the algebra");
  }
}

Element op_column(const LinOp& t, int j) {
  Element e;
  e.coords.assign(t.m.begin() + static_cast<std::ptrdiff_t>(j) * t.dim,
                  t.m.begin() + static_cast<std::ptrdiff_t>(j + 1) * t.dim);
  return e;
}

Element basis_product(const Algebra& a, int i, int j) {
  Element e = zero_element(a);
  for (int k = 0; k < a.dim; ++k) {
    e.coords[static_cast<std::size_t>(k)] = a.sc(i, j, k);
  }
  return e;
}

}  // namespace

BimultReport check_bimultiplication(const Algebra& a, const DoubleOperator& sigma) {
  require_sigma_over(a, sigma);
  BimultReport report;
  for (int i = 0; i < a.dim; ++i) {
    Element ei = basis_element(a, i);
    Element li = op_column(sigma.left, i);   // sigma e_i
    Element ri = op_column(sigma.right, i);  // e_i sigma
    for (int j = 0; j < a.dim; ++j) {
      Element ej = basis_element(a, j);
      Element lj = op_column(sigma.left, j);
      Element prod = basis_product(a, i, j);
      if (!(apply(sigma.left, prod) == multiply(a, li, ej))) {
        report.violations.push_back({BimultIdentity::product_left, i, j});
      }
      if (!(apply(sigma.right, prod) ==
            multiply(a, ei, op_column(sigma.right, j)))) {
        report.violations.push_back({BimultIdentity::product_right, i, j});
      }
      if (!(multiply(a, ei, lj) == multiply(a, ri, ej))) {
        report.violations.push_back({BimultIdentity::middle, i, j});
      }
    }
  }
  return report;
}

SelfPermReport check_self_permutable(const DoubleOperator& sigma) {
  if (sigma.left.dim != sigma.right.dim) {
    throw DimensionMismatch("double operator halves have different dimensions");
  }
  SelfPermReport report;
  LinOp lr = compose(sigma.left, sigma.right);
  LinOp rl = compose(sigma.right, sigma.left);
  for (int i = 0; i < sigma.left.dim; ++i) {
    if (!(op_column(lr, i) == op_column(rl, i))) {
      report.violations.push_back({i});
    }
  }
  return report;
}

DoubleOperator inner_homothetism(const Algebra& a, const Element& s) {
  if (static_cast<int>(s.coords.size()) != a.dim) {
    throw AlgebraMismatch("element dimension does not match the algebra");
  }
  LinOp left = zero_op(a);
  LinOp right = zero_op(a);
  for (int j = 0; j < a.dim; ++j) {
    Element ej = basis_element(a, j);
    Element se = multiply(a, s, ej);
    Element es = multiply(a, ej, s);
    for (int i = 0; i < a.dim; ++i) {
      left.at(i, j) = se.coords[static_cast<std::size_t>(i)];
      right.at(i, j) = es.coords[static_cast<std::size_t>(i)];
    }
  }
  return DoubleOperator{std::move(left), std::move(right)};
}

DoubleOperator scalar_homothetism(const Algebra& a, const Scalar& w) {
  LinOp m = scale(w, identity_op(a));
  return DoubleOperator{m, m};
}

CompatReport check_homothetic_compat(const RBSystem& sys, const DoubleOperator& sigma) {
  require_sigma_over(sys.algebra, sigma);
  CompatReport report;
  LinOp lhs = sub(compose(sigma.right, sys.s), compose(sigma.left, sys.r));
  LinOp rhs = compose(sigma.left, sigma.right);
  for (int i = 0; i < sys.algebra.dim; ++i) {
    if (!(op_column(lhs, i) == op_column(rhs, i))) {
      report.violations.push_back({i});
    }
  }
  return report;
}

HomotheticRBSystem make_homothetic(RBSystem sys, DoubleOperator sigma) {
  if (!check_rb_system(sys.algebra, sys.r, sys.s).ok()) {
    throw InvalidInput("pair (R, S) fails the Rota-Baxter system equations");
  }
  if (!check_bimultiplication(sys.algebra, sigma).ok()) {
    throw InvalidInput("sigma fails the bimultiplication identities");
  }
  if (!check_self_permutable(sigma).ok()) {
    throw InvalidInput("sigma is not self-permutable");
  }
  HomotheticRBSystem h{std::move(sys), std::move(sigma)};
  if (!check_homothetic_compat(h.system, h.sigma).ok()) {
    throw InvalidInput("sigma fails the homothetic compatibility constraint");
  }
  return h;
}

bool is_valid_homothetic(const HomotheticRBSystem& h) {
  return check_rb_system(h.system.algebra, h.system.r, h.system.s).ok() &&
         check_bimultiplication(h.system.algebra, h.sigma).ok() &&
         check_self_permutable(h.sigma).ok() &&
         check_homothetic_compat(h.system, h.sigma).ok();
}

Element sandwich(const DoubleOperator& sigma, const Element& x) {
  Element out = apply(sigma.left, apply(sigma.right, x));
  assert(out == apply(sigma.right, apply(sigma.left, x)));
  return out;
}

Element sigma_between(const Algebra& a, const DoubleOperator& sigma,
                      const Element& x, const Element& y) {
  Element out = multiply(a, apply(sigma.right, x), y);
  assert(out == multiply(a, x, apply(sigma.left, y)));
  return out;
}

HomotheticRBSystem gamma_from_weights(const GeneralizedRBOperator& g,
                                      const Scalar& lambda, const Scalar& mu) {
  if (!(lambda + mu == g.alpha) || !(lambda * mu == g.beta)) {
    throw InvalidInput("(" + lambda.str() + ", " + mu.str() +
                       ") is not a root pair for weights (" + g.alpha.str() +
                       ", " + g.beta.str() + ")");
  }
  if (!check_generalized_rb(g.algebra, g.rbar, g.alpha, g.beta).ok()) {
    throw InvalidInput("operator fails the generalized Rota-Baxter identity");
  }
  LinOp id = identity_op(g.algebra);
  RBSystem sys{g.algebra, add(g.rbar, scale(lambda, id)), add(g.rbar, scale(mu, id))};
  return make_homothetic(std::move(sys), scalar_homothetism(g.algebra, mu - lambda));
}

}  // namespace rd
