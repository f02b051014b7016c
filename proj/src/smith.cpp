#include "conjsense/smith.hpp"

#include <cstddef>
#include <cstdlib>
#include <utility>

namespace conjsense {

namespace {

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithForm smith_form(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  SmithForm out;
  out.u = int_identity(rows);
  out.v = int_identity(cols);

  auto row_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < cols; ++c) m[dst][c] -= f * m[src][c];
    for (std::size_t c = 0; c < rows; ++c) out.u[dst][c] -= f * out.u[src][c];
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < rows; ++r) m[r][dst] -= f * m[r][src];
    for (std::size_t r = 0; r < cols; ++r) out.v[r][dst] -= f * out.v[r][src];
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(m[a], m[b]);
    std::swap(out.u[a], out.u[b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(out.v[r][a], out.v[r][b]);
  };

  std::size_t k = 0;
  while (k < rows && k < cols) {
    std::size_t pr = k, pc = k;
    bool found = false;
    for (std::size_t r = k; r < rows && !found; ++r)
      for (std::size_t c = k; c < cols && !found; ++c)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          found = true;
        }
    if (!found) break;
    row_swap(k, pr);
    col_swap(k, pc);

    for (;;) {
      // euclidean clearing of column and row k; |pivot| strictly drops on
      // every remainder swap, so this terminates
      bool cleared = true;
      for (std::size_t r = k + 1; r < rows; ++r) {
        if (m[r][k] == 0) continue;
        Int q = m[r][k] / m[k][k];
        row_op(r, k, q);
        if (m[r][k] != 0) {
          row_swap(k, r);
          cleared = false;
        }
      }
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (m[k][c] == 0) continue;
        Int q = m[k][c] / m[k][k];
        col_op(c, k, q);
        if (m[k][c] != 0) {
          col_swap(k, c);
          cleared = false;
        }
      }
      if (!cleared) continue;

      // divisibility chain: pull any non-divisible remaining entry into
      // row k and keep reducing
      bool chain_ok = true;
      for (std::size_t r = k + 1; r < rows && chain_ok; ++r)
        for (std::size_t c = k + 1; c < cols && chain_ok; ++c)
          if (m[r][c] % m[k][k] != 0) {
            row_op(k, r, Int(-1));
            chain_ok = false;
          }
      if (chain_ok) break;
    }
    ++k;
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (m[i][i] < 0) {
      for (std::size_t c = 0; c < cols; ++c) m[i][c] = -m[i][c];
      for (std::size_t c = 0; c < rows; ++c) out.u[i][c] = -out.u[i][c];
    }
  }

  out.diag.resize(std::min(rows, cols));
  for (std::size_t i = 0; i < out.diag.size(); ++i) out.diag[i] = m[i][i];
  return out;
}

bool SmithForm::solvable(const std::vector<Int>& b) const {
  std::vector<Int> y(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) y[i] += u[i][j] * b[j];
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < diag.size() && diag[i] != 0) {
      if (y[i] % diag[i] != 0) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace conjsense
