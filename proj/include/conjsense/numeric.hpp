#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers for
// dimension products and scaled Freudenthal sums, rationals for Shapovalov
// Gram matrices, invariant forms and intertwiner solves. No floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace conjsense {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised on invalid or out-of-scope input (bad type/rank, symplectic total,
// odd total dimension, cap exhaustion, ...). The CLI maps it to exit code 1.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;

inline RatMatrix rat_zero_matrix(std::size_t rows, std::size_t cols) {
  return RatMatrix(rows, RatVec(cols, Rational(0)));
}

inline RatMatrix rat_identity(std::size_t n) {
  RatMatrix m = rat_zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);
RatVec rat_apply(const RatMatrix& a, const RatVec& x);
RatMatrix rat_transpose(const RatMatrix& a);

// Determinant by exact Gaussian elimination.
Rational rat_determinant(RatMatrix a);

// Solves a*x = b for square nonsingular a; throws SpecError if singular.
RatVec rat_solve(RatMatrix a, RatVec b);

// Basis of the kernel of the (rows x cols) system, one vector per free
// column after exact row reduction.
std::vector<RatVec> rat_kernel_basis(RatMatrix a);

// Inverse of a square rational matrix; throws SpecError if singular.
RatMatrix rat_inverse(RatMatrix a);

}  // namespace conjsense
