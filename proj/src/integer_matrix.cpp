#include "quandlekit/integer_matrix.hpp"

#include <algorithm>
#include <utility>

namespace quandlekit {

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

IntVector row_times(const IntVector& v, const IntMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  IntVector out(cols, 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += v[k] * m[k][j];
  }
  return out;
}

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

void axpy_row(IntVector& target, const BigInt& q, const IntVector& source) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

// Floor division for the reduction step above a positive pivot.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    // Euclid down column c until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool cleared = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        BigInt q = rows[r][c] / rows[pivot_row][c];
        axpy_row(rows[r], q, rows[pivot_row]);
        if (rows[r][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (pivot_row >= rows.size() || rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    const BigInt& p = rows[pivot_row][c];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      if (rows[r][c] == 0) continue;
      BigInt q = floor_div(rows[r][c], p);
      axpy_row(rows[r], q, rows[pivot_row]);
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& hnf, IntVector v) {
  IntVector coeffs(hnf.size(), 0);
  std::size_t col = 0;
  for (std::size_t r = 0; r < hnf.size(); ++r) {
    std::size_t pc = 0;
    while (hnf[r][pc] == 0) ++pc;
    for (; col < pc; ++col) {
      if (v[col] != 0) return std::nullopt;
    }
    if (v[pc] % hnf[r][pc] != 0) return std::nullopt;
    coeffs[r] = v[pc] / hnf[r][pc];
    axpy_row(v, coeffs[r], hnf[r]);
    col = pc + 1;
  }
  for (; col < v.size(); ++col) {
    if (v[col] != 0) return std::nullopt;
  }
  return coeffs;
}

SmithForm smith_normal_form(IntMatrix a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  SmithForm out{{}, identity_matrix(m), identity_matrix(n), identity_matrix(n)};

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(out.left[i], out.left[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : out.right) std::swap(row[i], row[j]);
    std::swap(out.right_inverse[i], out.right_inverse[j]);
  };
  // row_i -= q * row_t
  auto sub_row = [&](std::size_t i, std::size_t t, const BigInt& q) {
    axpy_row(a[i], q, a[t]);
    axpy_row(out.left[i], q, out.left[t]);
  };
  // col_j -= q * col_t; the inverse picks up row_t += q * row_j.
  auto sub_col = [&](std::size_t j, std::size_t t, const BigInt& q) {
    for (auto& row : a) row[j] -= q * row[t];
    for (auto& row : out.right) row[j] -= q * row[t];
    for (std::size_t k = 0; k < n; ++k) out.right_inverse[t][k] += q * out.right_inverse[j][k];
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == m) break;
    swap_rows(t, bi);
    swap_cols(t, bj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        sub_row(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        sub_col(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot appeared; move it in and retry.
        std::size_t ci = t, cj = t;
        for (std::size_t i = t; i < m; ++i) {
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[ci][cj])) ci = i, cj = t;
        }
        for (std::size_t j = t; j < n; ++j) {
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[ci][cj])) ci = t, cj = j;
        }
        swap_rows(t, ci);
        swap_cols(t, cj);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row.
      std::size_t offending = m;
      for (std::size_t i = t + 1; i < m && offending == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            offending = i;
            break;
          }
        }
      }
      if (offending == m) break;
      sub_row(t, offending, BigInt(-1));
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : out.left[t]) x = -x;
    }
  }
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = a[t][t];
  return out;
}

}  // namespace quandlekit
