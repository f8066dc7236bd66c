#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hm13/poly.hpp"

namespace hm13 {

// Writes f as an exact linear combination of the given polynomials, if one
// exists.  The coefficient space is the full cyclotomic field; solving is
// Gaussian elimination on the (monomial x basis) coefficient matrix.
inline std::optional<std::vector<Cyc>> express_in_basis(
    const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  const int n = static_cast<int>(basis.size());

  std::map<Expo, int, GradedLex> row_of;
  auto note = [&](const MultiPoly& p) {
    for (const auto& [e, c] : p.terms())
      row_of.try_emplace(e, static_cast<int>(row_of.size()));
  };
  for (const auto& b : basis) note(b);
  note(f);
  const int rows = static_cast<int>(row_of.size());

  // Augmented system: columns are basis members, last column is f.
  std::vector<std::vector<Cyc>> m(rows, std::vector<Cyc>(n + 1));
  for (int j = 0; j < n; ++j)
    for (const auto& [e, c] : basis[j].terms()) m[row_of.at(e)][j] = c;
  for (const auto& [e, c] : f.terms()) m[row_of.at(e)][n] = c;

  std::vector<int> pivot_col_of_row(rows, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < rows; ++col) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    Cyc inv = m[rank][col].inverse();
    for (int c = col; c <= n; ++c) m[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Cyc g = m[r][col];
      for (int c = col; c <= n; ++c) m[r][c] -= g * m[rank][c];
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }

  // Inconsistent rows mean f lies outside the span.
  for (int r = rank; r < rows; ++r)
    if (!m[r][n].is_zero()) return std::nullopt;

  std::vector<Cyc> coeffs(n);
  for (int r = 0; r < rank; ++r) coeffs[pivot_col_of_row[r]] = m[r][n];
  return coeffs;
}

}  // namespace hm13
