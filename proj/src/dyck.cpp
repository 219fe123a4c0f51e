#include "rd/dyck.hpp"

#include <utility>

#include "rd/errors.hpp"

namespace rd {

namespace {

Element op_column(const LinOp& t, int j) {
  Element e;
  e.coords.assign(t.m.begin() + static_cast<std::ptrdiff_t>(j) * t.dim,
                  t.m.begin() + static_cast<std::ptrdiff_t>(j + 1) * t.dim);
  return e;
}

Element dyck_zero(const DyckAlgebra& d) {
  return Element{std::vector<Scalar>(static_cast<std::size_t>(d.dim),
                                     Scalar::zero(d.field))};
}

// x *_op e_k for a basis right factor.
Element mul_basis_right(const DyckAlgebra& d, int op, const Element& x, int k) {
  Element r = dyck_zero(d);
  for (int j = 0; j < d.dim; ++j) {
    const Scalar& xj = x.coords[static_cast<std::size_t>(j)];
    if (xj.is_zero()) {
      continue;
    }
    for (int l = 0; l < d.dim; ++l) {
      const Scalar& c = d.pc(op, j, k, l);
      if (!c.is_zero()) {
        r.coords[static_cast<std::size_t>(l)] =
            r.coords[static_cast<std::size_t>(l)] + xj * c;
      }
    }
  }
  return r;
}

// e_j *_op y for a basis left factor.
Element mul_basis_left(const DyckAlgebra& d, int op, int j, const Element& y) {
  Element r = dyck_zero(d);
  for (int k = 0; k < d.dim; ++k) {
    const Scalar& yk = y.coords[static_cast<std::size_t>(k)];
    if (yk.is_zero()) {
      continue;
    }
    for (int l = 0; l < d.dim; ++l) {
      const Scalar& c = d.pc(op, j, k, l);
      if (!c.is_zero()) {
        r.coords[static_cast<std::size_t>(l)] =
            r.coords[static_cast<std::size_t>(l)] + yk * c;
      }
    }
  }
  return r;
}

Element basis_pair_product(const DyckAlgebra& d, int op, int j, int k) {
  Element r = dyck_zero(d);
  for (int l = 0; l < d.dim; ++l) {
    r.coords[static_cast<std::size_t>(l)] = d.pc(op, j, k, l);
  }
  return r;
}

}  // namespace

Element dyck_multiply(const DyckAlgebra& d, int op, const Element& x, const Element& y) {
  if (op < 0 || op > d.level) {
    throw IndexOutOfRange("operation index " + std::to_string(op) +
                          " outside 0.." + std::to_string(d.level));
  }
  if (static_cast<int>(x.coords.size()) != d.dim ||
      static_cast<int>(y.coords.size()) != d.dim) {
    throw DimensionMismatch("element dimension does not match");
  }
  Element r = dyck_zero(d);
  for (int j = 0; j < d.dim; ++j) {
    const Scalar& xj = x.coords[static_cast<std::size_t>(j)];
    if (xj.is_zero()) {
      continue;
    }
    for (int k = 0; k < d.dim; ++k) {
      const Scalar& yk = y.coords[static_cast<std::size_t>(k)];
      if (yk.is_zero()) {
        continue;
      }
      Scalar xy = xj * yk;
      for (int l = 0; l < d.dim; ++l) {
        const Scalar& c = d.pc(op, j, k, l);
        if (!c.is_zero()) {
          r.coords[static_cast<std::size_t>(l)] =
              r.coords[static_cast<std::size_t>(l)] + xy * c;
        }
      }
    }
  }
  return r;
}

std::string DyckAxiomId::str() const {
  switch (family) {
    case Family::a:
      return "9a(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Family::b:
      return "9b";
    case Family::c:
      return "9c";
    case Family::d:
      return "9d(" + std::to_string(i) + ")";
  }
  return "?";
}

DyckCheckReport check_dyck_axioms(const DyckAlgebra& d) {
  DyckCheckReport report;
  int m = d.level;
  int n = d.dim;

  auto record = [&](DyckAxiomId id, int j, int k, int l, Element lhs, Element rhs) {
    ++report.checks;
    if (!(lhs == rhs)) {
      report.violations.push_back(
          {id, {j, k, l}, std::move(lhs), std::move(rhs)});
    }
  };

  // a *_i (b *_j c) = (a *_i b) *_j c for i < j.
  for (int i = 0; i < m; ++i) {
    for (int jj = i + 1; jj <= m; ++jj) {
      DyckAxiomId id{DyckAxiomId::Family::a, i, jj};
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            Element lhs = mul_basis_left(d, i, j, basis_pair_product(d, jj, k, l));
            Element rhs = mul_basis_right(d, jj, basis_pair_product(d, i, j, k), l);
            record(id, j, k, l, std::move(lhs), std::move(rhs));
          }
        }
      }
    }
  }

  // a *_0 (b *_0 c) = (sum_i a *_i b) *_0 c.
  {
    DyckAxiomId id{DyckAxiomId::Family::b};
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Element left_sum = basis_pair_product(d, 0, j, k);
        for (int i = 1; i <= m; ++i) {
          left_sum = add(left_sum, basis_pair_product(d, i, j, k));
        }
        for (int l = 0; l < n; ++l) {
          Element lhs = mul_basis_left(d, 0, j, basis_pair_product(d, 0, k, l));
          Element rhs = mul_basis_right(d, 0, left_sum, l);
          record(id, j, k, l, std::move(lhs), std::move(rhs));
        }
      }
    }
  }

  // a *_m (sum_i b *_i c) = (a *_m b) *_m c.
  {
    DyckAxiomId id{DyckAxiomId::Family::c};
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        Element right_sum = basis_pair_product(d, 0, k, l);
        for (int i = 1; i <= m; ++i) {
          right_sum = add(right_sum, basis_pair_product(d, i, k, l));
        }
        for (int j = 0; j < n; ++j) {
          Element lhs = mul_basis_left(d, m, j, right_sum);
          Element rhs = mul_basis_right(d, m, basis_pair_product(d, m, j, k), l);
          record(id, j, k, l, std::move(lhs), std::move(rhs));
        }
      }
    }
  }

  // a *_i (sum_{k<=i} b *_k c) = (sum_{k>=i} a *_k b) *_i c for 0 < i < m.
  for (int i = 1; i <= m - 1; ++i) {
    DyckAxiomId id{DyckAxiomId::Family::d, i};
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Element left_sum = basis_pair_product(d, i, j, k);
        for (int t = i + 1; t <= m; ++t) {
          left_sum = add(left_sum, basis_pair_product(d, t, j, k));
        }
        for (int l = 0; l < n; ++l) {
          Element right_sum = basis_pair_product(d, 0, k, l);
          for (int t = 1; t <= i; ++t) {
            right_sum = add(right_sum, basis_pair_product(d, t, k, l));
          }
          Element lhs = mul_basis_left(d, i, j, right_sum);
          Element rhs = mul_basis_right(d, i, left_sum, l);
          record(id, j, k, l, std::move(lhs), std::move(rhs));
        }
      }
    }
  }

  return report;
}

DyckAlgebra build_dyck(const HomotheticRBSystem& h, int level) {
  if (level == 0) {
    throw UnsupportedLevel("level 0 is not constructible from the operation table");
  }
  if (level < 0) {
    throw InvalidInput("negative level");
  }
  if (!is_valid_homothetic(h)) {
    throw InvalidInput("homothetic Rota-Baxter system fails its invariants");
  }
  const Algebra& a = h.system.algebra;
  int n = a.dim;
  DyckAlgebra d;
  d.field = a.field;
  d.dim = n;
  d.level = level;
  d.products.assign(static_cast<std::size_t>(level) + 1,
                    std::vector<Scalar>(static_cast<std::size_t>(n) * n * n,
                                        Scalar::zero(a.field)));

  Scalar minus_one = -Scalar::one(a.field);
  bool even_level = level % 2 == 0;
  for (int j = 0; j < n; ++j) {
    Element ej = basis_element(a, j);
    Element rj = op_column(h.system.r, j);
    for (int k = 0; k < n; ++k) {
      Element ek = basis_element(a, k);
      Element first = multiply(a, rj, ek);
      Element middle = sigma_between(a, h.sigma, ej, ek);
      Element last = multiply(a, ej, op_column(h.system.s, k));
      if (even_level) {
        last = sub(last, middle);
      }
      for (int l = 0; l < n; ++l) {
        d.pc(0, j, k, l) = first.coords[static_cast<std::size_t>(l)];
        d.pc(level, j, k, l) = last.coords[static_cast<std::size_t>(l)];
      }
      for (int i = 1; i <= level - 1; ++i) {
        // (-1)^(i+1): + for odd i, - for even i.
        Element signed_middle = i % 2 == 1 ? middle : scale(minus_one, middle);
        for (int l = 0; l < n; ++l) {
          d.pc(i, j, k, l) = signed_middle.coords[static_cast<std::size_t>(l)];
        }
      }
    }
  }

  DyckCheckReport certification = check_dyck_axioms(d);
  if (!certification.passed()) {
    throw Error("internal: constructed operations fail axiom " +
                certification.violations.front().axiom.str());
  }
  return d;
}

ProofIdentityReport check_theorem_proof_identities(const HomotheticRBSystem& h) {
  const Algebra& a = h.system.algebra;
  const LinOp& r = h.system.r;
  const LinOp& s = h.system.s;
  const LinOp& left = h.sigma.left;
  const LinOp& right = h.sigma.right;
  ProofIdentityReport report;
  for (int i = 0; i < a.dim; ++i) {
    Element ei = basis_element(a, i);
    Element ei_sigma = op_column(right, i);
    Element ri = op_column(r, i);
    for (int j = 0; j < a.dim; ++j) {
      Element ej = basis_element(a, j);
      Element rj = op_column(r, j);
      Element sj = op_column(s, j);
      Element ej_sigma = op_column(right, j);
      // a S(b) - a sigma b, with a sigma b read as (a sigma) b.
      Element w = sub(multiply(a, ei, sj), multiply(a, ei_sigma, ej));
      Element w_sigma = apply(right, w);
      Element asb_sigma = apply(right, multiply(a, ei, sj));
      for (int k = 0; k < a.dim; ++k) {
        Element ek = basis_element(a, k);
        // ((a sigma) R(b)) c  vs  ((a S(b) - a sigma b) sigma) c.
        Element even_lhs = multiply(a, multiply(a, ei_sigma, rj), ek);
        Element even_rhs = multiply(a, w_sigma, ek);
        if (!(even_lhs == even_rhs)) {
          report.even_case.violations.push_back({i, j, k});
        }
        Element inner = add(multiply(a, rj, ek), multiply(a, ej_sigma, ek));
        Element odd_rhs = multiply(a, asb_sigma, ek);
        if (!(multiply(a, ri, inner) == odd_rhs)) {
          report.odd_case_displayed.violations.push_back({i, j, k});
        }
        if (!(multiply(a, ei_sigma, inner) == odd_rhs)) {
          report.odd_case_sigma.violations.push_back({i, j, k});
        }
      }
    }
  }
  return report;
}

}  // namespace rd
