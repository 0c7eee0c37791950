#pragma once

// Dense rational matrices: row reduction, rank and nullspace over Q.

#include <cstddef>
#include <utility>
#include <vector>

#include "weylproper/exact.hpp"

namespace weylproper::linalg {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>; // row-major, all rows the same length

struct Echelon {
  Matrix rows;                       // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

inline Echelon rref(Matrix m) {
  Echelon out;
  if (m.empty())
    return out;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[rank], m[pivot]);
    const Rational lead = m[rank][col];
    for (auto& v : m[rank])
      v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0)
        continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] -= factor * m[rank][c];
    }
    out.pivots.push_back(col);
    ++rank;
  }
  m.resize(rank);
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(Matrix m) { return rref(std::move(m)).pivots.size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Row> nullspace(const Matrix& m, std::size_t cols) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    Row v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Transpose of a list of column vectors.
inline Matrix from_columns(const std::vector<Row>& columns, std::size_t rows) {
  Matrix m(rows, Row(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r)
      m[r][c] = columns[c][r];
  return m;
}

/// Scales a nonzero rational vector to coprime integers with a positive leading entry.
inline std::vector<Integer> primitive(const Row& v) {
  Integer lcm = 1;
  for (const auto& q : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    Integer z = q.get_num() * (lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  if (g == 0)
    return out;
  int lead = 0;
  for (const auto& z : out)
    if (z != 0) {
      lead = sgn(z);
      break;
    }
  if (lead < 0)
    g = -g;
  for (auto& z : out)
    z /= g;
  return out;
}

} // namespace weylproper::linalg
