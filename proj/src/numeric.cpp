#include "conjsense/numeric.hpp"

#include <cstddef>

namespace conjsense {

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k ? b[0].size() : 0;
  RatMatrix out = rat_zero_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

RatVec rat_apply(const RatMatrix& a, const RatVec& x) {
  RatVec out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0 && x[j] != 0) out[i] += a[i][j] * x[j];
  return out;
}

RatMatrix rat_transpose(const RatMatrix& a) {
  if (a.empty()) return a;
  RatMatrix out = rat_zero_matrix(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

Rational rat_determinant(RatMatrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

RatVec rat_solve(RatMatrix a, RatVec b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SpecError("rat_solve: singular system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::vector<RatVec> rat_kernel_basis(RatMatrix a) {
  if (a.empty()) return {};
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    Rational inv = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] /= inv;
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || a[rr][c] == 0) continue;
      Rational f = a[rr][c];
      for (std::size_t j = c; j < cols; ++j) a[rr][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(cols, Rational(0));
    v[free_c] = 1;
    for (std::size_t pr = 0; pr < pivot_col.size(); ++pr)
      v[pivot_col[pr]] = -a[pr][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix rat_inverse(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv = rat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SpecError("rat_inverse: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational d = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace conjsense
