#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rd/algebra.hpp"

// Residue-arithmetic fast path used by the census scan. Everything here
// mirrors a public predicate one-to-one; hits still go through the public
// checks before they are reported, so this layer never decides membership
// on its own.
namespace rd::modp {

inline constexpr int kMaxDim = 8;

using Vec = std::array<std::int64_t, kMaxDim>;

struct Mat {
  int n = 0;
  // Row-major: e[i*n + j].
  std::array<std::int64_t, kMaxDim * kMaxDim> e{};

  std::int64_t at(int i, int j) const { return e[static_cast<std::size_t>(i * n + j)]; }
  std::int64_t& at(int i, int j) { return e[static_cast<std::size_t>(i * n + j)]; }
};

struct AlgebraTable {
  int n = 0;
  std::int64_t p = 0;
  // (i*n + j)*n + k.
  std::vector<std::int64_t> c;

  std::int64_t sc(int i, int j, int k) const {
    return c[static_cast<std::size_t>((i * n + j) * n + k)];
  }
};

// Requires a prime-field algebra with dim <= kMaxDim.
AlgebraTable make_table(const Algebra& a);

Vec apply(const Mat& m, const Vec& v, std::int64_t p);
Vec product(const AlgebraTable& t, const Vec& x, const Vec& y);
Vec column(const Mat& m, int j);

bool rb_weight_ok(const AlgebraTable& t, const Mat& r, std::int64_t weight);
bool generalized_ok(const AlgebraTable& t, const Mat& rbar, std::int64_t alpha,
                    std::int64_t beta);
bool system_ok(const AlgebraTable& t, const Mat& r, const Mat& s);
bool bimult_ok(const AlgebraTable& t, const Mat& left, const Mat& right);
bool self_permutable_ok(const Mat& left, const Mat& right, std::int64_t p);
bool compat_ok(const AlgebraTable& t, const Mat& r, const Mat& s, const Mat& left,
               const Mat& right);

// Digits of index in base p fill the matrices front to back, each matrix
// row-major, the last entry moving fastest.
void decode(std::uint64_t index, int count, int n, std::int64_t p, Mat* out);

LinOp to_linop(const Mat& m, const FieldDescriptor& f);

}  // namespace rd::modp
