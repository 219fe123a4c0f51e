#include "rd/algebra.hpp"

#include <utility>

#include "rd/errors.hpp"

namespace rd {

namespace {

void require_element(const Algebra& a, const Element& x) {
  if (static_cast<int>(x.coords.size()) != a.dim) {
    throw AlgebraMismatch("element has " + std::to_string(x.coords.size()) +
                          " coordinates, algebra has dimension " +
                          std::to_string(a.dim));
  }
}

void require_same_dim(const LinOp& t, const LinOp& u) {
  if (t.dim != u.dim) {
    throw DimensionMismatch("operator dimensions differ: " +
                            std::to_string(t.dim) + " vs " +
                            std::to_string(u.dim));
  }
}

}  // namespace

Algebra make_zero_algebra(const FieldDescriptor& f, int dim, std::string label) {
  if (dim < 1) {
    throw InvalidInput("algebra dimension must be at least 1");
  }
  Algebra a;
  a.field = f;
  a.dim = dim;
  a.structure_constants.assign(static_cast<std::size_t>(dim) * dim * dim,
                               Scalar::zero(f));
  a.label = std::move(label);
  return a;
}

Element zero_element(const Algebra& a) {
  return Element{std::vector<Scalar>(static_cast<std::size_t>(a.dim),
                                     Scalar::zero(a.field))};
}

Element basis_element(const Algebra& a, int i) {
  if (i < 0 || i >= a.dim) {
    throw IndexOutOfRange("basis index " + std::to_string(i));
  }
  Element e = zero_element(a);
  e.coords[static_cast<std::size_t>(i)] = Scalar::one(a.field);
  return e;
}

Element add(const Element& x, const Element& y) {
  if (x.coords.size() != y.coords.size()) {
    throw DimensionMismatch("element sizes differ");
  }
  Element r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    r.coords[i] = r.coords[i] + y.coords[i];
  }
  return r;
}

Element sub(const Element& x, const Element& y) {
  if (x.coords.size() != y.coords.size()) {
    throw DimensionMismatch("element sizes differ");
  }
  Element r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    r.coords[i] = r.coords[i] - y.coords[i];
  }
  return r;
}

Element scale(const Scalar& s, const Element& x) {
  Element r = x;
  for (auto& c : r.coords) {
    c = s * c;
  }
  return r;
}

Element multiply(const Algebra& a, const Element& x, const Element& y) {
  require_element(a, x);
  require_element(a, y);
  Element r = zero_element(a);
  for (int i = 0; i < a.dim; ++i) {
    if (x.coords[static_cast<std::size_t>(i)].is_zero()) {
      continue;
    }
    for (int j = 0; j < a.dim; ++j) {
      if (y.coords[static_cast<std::size_t>(j)].is_zero()) {
        continue;
      }
      Scalar xy = x.coords[static_cast<std::size_t>(i)] *
                  y.coords[static_cast<std::size_t>(j)];
      for (int k = 0; k < a.dim; ++k) {
        const Scalar& c = a.sc(i, j, k);
        if (!c.is_zero()) {
          r.coords[static_cast<std::size_t>(k)] =
              r.coords[static_cast<std::size_t>(k)] + xy * c;
        }
      }
    }
  }
  return r;
}

LinOp zero_op(const Algebra& a) {
  LinOp t;
  t.dim = a.dim;
  t.m.assign(static_cast<std::size_t>(a.dim) * a.dim, Scalar::zero(a.field));
  return t;
}

LinOp identity_op(const Algebra& a) {
  LinOp t = zero_op(a);
  for (int i = 0; i < a.dim; ++i) {
    t.at(i, i) = Scalar::one(a.field);
  }
  return t;
}

LinOp make_op(const Algebra& a, const std::vector<std::vector<Scalar>>& columns) {
  if (static_cast<int>(columns.size()) != a.dim) {
    throw DimensionMismatch("operator needs " + std::to_string(a.dim) +
                            " columns");
  }
  LinOp t = zero_op(a);
  for (int j = 0; j < a.dim; ++j) {
    if (static_cast<int>(columns[static_cast<std::size_t>(j)].size()) != a.dim) {
      throw DimensionMismatch("operator column has wrong length");
    }
    for (int i = 0; i < a.dim; ++i) {
      t.at(i, j) = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
  }
  return t;
}

Element apply(const LinOp& t, const Element& x) {
  if (static_cast<int>(x.coords.size()) != t.dim) {
    throw DimensionMismatch("operator/element dimensions differ");
  }
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(t.dim));
  for (int i = 0; i < t.dim; ++i) {
    Scalar acc = t.at(i, 0) * x.coords[0];
    for (int j = 1; j < t.dim; ++j) {
      acc = acc + t.at(i, j) * x.coords[static_cast<std::size_t>(j)];
    }
    out.push_back(std::move(acc));
  }
  return Element{std::move(out)};
}

LinOp compose(const LinOp& t, const LinOp& u) {
  require_same_dim(t, u);
  LinOp r;
  r.dim = t.dim;
  r.m.reserve(t.m.size());
  for (int j = 0; j < t.dim; ++j) {
    for (int i = 0; i < t.dim; ++i) {
      Scalar acc = t.at(i, 0) * u.at(0, j);
      for (int l = 1; l < t.dim; ++l) {
        acc = acc + t.at(i, l) * u.at(l, j);
      }
      r.m.push_back(std::move(acc));
    }
  }
  return r;
}

LinOp add(const LinOp& t, const LinOp& u) {
  require_same_dim(t, u);
  LinOp r = t;
  for (std::size_t i = 0; i < r.m.size(); ++i) {
    r.m[i] = r.m[i] + u.m[i];
  }
  return r;
}

LinOp sub(const LinOp& t, const LinOp& u) {
  require_same_dim(t, u);
  LinOp r = t;
  for (std::size_t i = 0; i < r.m.size(); ++i) {
    r.m[i] = r.m[i] - u.m[i];
  }
  return r;
}

LinOp scale(const Scalar& s, const LinOp& t) {
  LinOp r = t;
  for (auto& c : r.m) {
    c = s * c;
  }
  return r;
}

AssociativityReport check_associative(const Algebra& a) {
  AssociativityReport report;
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      for (int k = 0; k < a.dim; ++k) {
        // (e_i e_j) e_k via the tensor, then e_i (e_j e_k).
        Element lhs = zero_element(a);
        Element rhs = zero_element(a);
        for (int l = 0; l < a.dim; ++l) {
          const Scalar& cl = a.sc(i, j, l);
          if (!cl.is_zero()) {
            for (int t = 0; t < a.dim; ++t) {
              lhs.coords[static_cast<std::size_t>(t)] =
                  lhs.coords[static_cast<std::size_t>(t)] + cl * a.sc(l, k, t);
            }
          }
          const Scalar& cr = a.sc(j, k, l);
          if (!cr.is_zero()) {
            for (int t = 0; t < a.dim; ++t) {
              rhs.coords[static_cast<std::size_t>(t)] =
                  rhs.coords[static_cast<std::size_t>(t)] + cr * a.sc(i, l, t);
            }
          }
        }
        if (!(lhs == rhs)) {
          report.violations.push_back({i, j, k});
        }
      }
    }
  }
  return report;
}

std::optional<Element> find_unit(const Algebra& a) {
  // Unknowns u_0..u_{n-1}; rows encode u e_i = e_i and e_i u = e_i per
  // output coordinate k.
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(static_cast<std::size_t>(2 * a.dim * a.dim));
  for (int i = 0; i < a.dim; ++i) {
    for (int k = 0; k < a.dim; ++k) {
      std::vector<Scalar> left_row;
      std::vector<Scalar> right_row;
      left_row.reserve(static_cast<std::size_t>(a.dim) + 1);
      right_row.reserve(static_cast<std::size_t>(a.dim) + 1);
      for (int j = 0; j < a.dim; ++j) {
        left_row.push_back(a.sc(j, i, k));
        right_row.push_back(a.sc(i, j, k));
      }
      Scalar rhs = i == k ? Scalar::one(a.field) : Scalar::zero(a.field);
      left_row.push_back(rhs);
      right_row.push_back(rhs);
      rows.push_back(std::move(left_row));
      rows.push_back(std::move(right_row));
    }
  }
  auto sol = solve_linear(a.field, a.dim, std::move(rows));
  if (!sol) {
    return std::nullopt;
  }
  return Element{std::move(*sol)};
}

std::optional<std::vector<Scalar>> solve_linear(const FieldDescriptor& f, int ncols,
                                                std::vector<std::vector<Scalar>> rows) {
  int nrows = static_cast<int>(rows.size());
  std::vector<int> pivot_col(static_cast<std::size_t>(nrows), -1);
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    Scalar inv = Scalar::one(f) / prow[static_cast<std::size_t>(col)];
    for (auto& v : prow) {
      v = v * inv;
    }
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) {
        continue;
      }
      Scalar factor = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (factor.is_zero()) {
        continue;
      }
      for (int c = col; c <= ncols; ++c) {
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
            factor * prow[static_cast<std::size_t>(c)];
      }
    }
    pivot_col[static_cast<std::size_t>(rank)] = col;
    ++rank;
  }
  for (int r = rank; r < nrows; ++r) {
    if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(ncols)].is_zero()) {
      return std::nullopt;
    }
  }
  std::vector<Scalar> sol(static_cast<std::size_t>(ncols), Scalar::zero(f));
  for (int r = 0; r < rank; ++r) {
    sol[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(ncols)];
  }
  return sol;
}

}  // namespace rd
