#include "rd/modp_kernel.hpp"

#include "rd/errors.hpp"

namespace rd::modp {

namespace {

Vec zero_vec() {
  return Vec{};
}

Vec basis_vec(int i) {
  Vec v{};
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool equal_vec(const Vec& x, const Vec& y, int n) {
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)] != y[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  return true;
}

Vec add_vec(const Vec& x, const Vec& y, int n, std::int64_t p) {
  Vec r{};
  for (int i = 0; i < n; ++i) {
    r[static_cast<std::size_t>(i)] =
        (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) % p;
  }
  return r;
}

Vec scale_vec(std::int64_t s, const Vec& x, int n, std::int64_t p) {
  Vec r{};
  for (int i = 0; i < n; ++i) {
    r[static_cast<std::size_t>(i)] = (s * x[static_cast<std::size_t>(i)]) % p;
  }
  return r;
}

}  // namespace

AlgebraTable make_table(const Algebra& a) {
  if (!a.field.is_prime_field()) {
    throw InvalidInput("residue kernel requires a prime-field algebra");
  }
  if (a.dim > kMaxDim) {
    throw InvalidInput("residue kernel supports dimension up to " +
                       std::to_string(kMaxDim));
  }
  AlgebraTable t;
  t.n = a.dim;
  t.p = a.field.modulus();
  t.c.reserve(a.structure_constants.size());
  for (const Scalar& s : a.structure_constants) {
    t.c.push_back(s.residue_value());
  }
  return t;
}

Vec apply(const Mat& m, const Vec& v, std::int64_t p) {
  Vec r{};
  for (int i = 0; i < m.n; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < m.n; ++j) {
      acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
    }
    r[static_cast<std::size_t>(i)] = acc % p;
  }
  return r;
}

Vec product(const AlgebraTable& t, const Vec& x, const Vec& y) {
  Vec r{};
  for (int i = 0; i < t.n; ++i) {
    std::int64_t xi = x[static_cast<std::size_t>(i)];
    if (xi == 0) {
      continue;
    }
    for (int j = 0; j < t.n; ++j) {
      std::int64_t xy = (xi * y[static_cast<std::size_t>(j)]) % t.p;
      if (xy == 0) {
        continue;
      }
      for (int k = 0; k < t.n; ++k) {
        r[static_cast<std::size_t>(k)] =
            (r[static_cast<std::size_t>(k)] + xy * t.sc(i, j, k)) % t.p;
      }
    }
  }
  return r;
}

Vec column(const Mat& m, int j) {
  Vec v{};
  for (int i = 0; i < m.n; ++i) {
    v[static_cast<std::size_t>(i)] = m.at(i, j);
  }
  return v;
}

bool rb_weight_ok(const AlgebraTable& t, const Mat& r, std::int64_t weight) {
  for (int i = 0; i < t.n; ++i) {
    Vec ri = column(r, i);
    Vec ei = basis_vec(i);
    for (int j = 0; j < t.n; ++j) {
      Vec rj = column(r, j);
      Vec ej = basis_vec(j);
      Vec lhs = product(t, ri, rj);
      Vec inner = add_vec(product(t, ri, ej), product(t, ei, rj), t.n, t.p);
      inner = add_vec(inner, scale_vec(weight, product(t, ei, ej), t.n, t.p), t.n, t.p);
      if (!equal_vec(lhs, apply(r, inner, t.p), t.n)) {
        return false;
      }
    }
  }
  return true;
}

bool generalized_ok(const AlgebraTable& t, const Mat& rbar, std::int64_t alpha,
                    std::int64_t beta) {
  for (int i = 0; i < t.n; ++i) {
    Vec ri = column(rbar, i);
    Vec ei = basis_vec(i);
    for (int j = 0; j < t.n; ++j) {
      Vec rj = column(rbar, j);
      Vec ej = basis_vec(j);
      Vec lhs = product(t, ri, rj);
      Vec prod = product(t, ei, ej);
      Vec inner = add_vec(product(t, ri, ej), product(t, ei, rj), t.n, t.p);
      inner = add_vec(inner, scale_vec(alpha, prod, t.n, t.p), t.n, t.p);
      Vec rhs = add_vec(apply(rbar, inner, t.p), scale_vec(beta, prod, t.n, t.p),
                        t.n, t.p);
      if (!equal_vec(lhs, rhs, t.n)) {
        return false;
      }
    }
  }
  return true;
}

bool system_ok(const AlgebraTable& t, const Mat& r, const Mat& s) {
  for (int i = 0; i < t.n; ++i) {
    Vec ri = column(r, i);
    Vec si = column(s, i);
    Vec ei = basis_vec(i);
    for (int j = 0; j < t.n; ++j) {
      Vec rj = column(r, j);
      Vec sj = column(s, j);
      Vec ej = basis_vec(j);
      Vec inner = add_vec(product(t, ri, ej), product(t, ei, sj), t.n, t.p);
      if (!equal_vec(product(t, ri, rj), apply(r, inner, t.p), t.n)) {
        return false;
      }
      if (!equal_vec(product(t, si, sj), apply(s, inner, t.p), t.n)) {
        return false;
      }
    }
  }
  return true;
}

bool bimult_ok(const AlgebraTable& t, const Mat& left, const Mat& right) {
  for (int i = 0; i < t.n; ++i) {
    Vec ei = basis_vec(i);
    Vec li = column(left, i);
    Vec ri = column(right, i);
    for (int j = 0; j < t.n; ++j) {
      Vec ej = basis_vec(j);
      Vec prod = product(t, ei, ej);
      if (!equal_vec(apply(left, prod, t.p), product(t, li, ej), t.n)) {
        return false;
      }
      if (!equal_vec(apply(right, prod, t.p), product(t, ei, column(right, j)), t.n)) {
        return false;
      }
      if (!equal_vec(product(t, ei, column(left, j)), product(t, ri, ej), t.n)) {
        return false;
      }
    }
  }
  return true;
}

bool self_permutable_ok(const Mat& left, const Mat& right, std::int64_t p) {
  int n = left.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t lr = 0;
      std::int64_t rl = 0;
      for (int k = 0; k < n; ++k) {
        lr += left.at(i, k) * right.at(k, j);
        rl += right.at(i, k) * left.at(k, j);
      }
      if (lr % p != rl % p) {
        return false;
      }
    }
  }
  return true;
}

bool compat_ok(const AlgebraTable& t, const Mat& r, const Mat& s, const Mat& left,
               const Mat& right) {
  int n = t.n;
  std::int64_t p = t.p;
  // right*S - left*R = left*right entrywise.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t lhs = 0;
      std::int64_t rhs = 0;
      for (int k = 0; k < n; ++k) {
        lhs += right.at(i, k) * s.at(k, j) - left.at(i, k) * r.at(k, j);
        rhs += left.at(i, k) * right.at(k, j);
      }
      if (((lhs % p) + p) % p != ((rhs % p) + p) % p) {
        return false;
      }
    }
  }
  return true;
}

void decode(std::uint64_t index, int count, int n, std::int64_t p, Mat* out) {
  int digits = count * n * n;
  for (int d = digits - 1; d >= 0; --d) {
    std::int64_t digit = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
    int mat = d / (n * n);
    int entry = d % (n * n);
    out[mat].n = n;
    out[mat].e[static_cast<std::size_t>(entry)] = digit;
  }
}

LinOp to_linop(const Mat& m, const FieldDescriptor& f) {
  LinOp t;
  t.dim = m.n;
  t.m.reserve(static_cast<std::size_t>(m.n) * m.n);
  for (int j = 0; j < m.n; ++j) {
    for (int i = 0; i < m.n; ++i) {
      t.m.push_back(Scalar::residue(f, m.at(i, j)));
    }
  }
  return t;
}

}  // namespace rd::modp
