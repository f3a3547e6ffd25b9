#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "innerform/algebra/qscalar.hpp"

namespace innerform {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const QScalar& x) { return x.is_zero(); }

/// Rank of a dense matrix over an exact field, by Gaussian elimination.
template <class Field>
int rank(std::vector<std::vector<Field>> rows) {
  int r = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < ncols && r < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Field inv = Field(1) / rows[r][col];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (is_zero(rows[i][col])) continue;
      const Field factor = rows[i][col] * inv;
      for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace innerform
