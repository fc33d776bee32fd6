#include "tracecode/ternary.hpp"

#include <stdexcept>

namespace tracecode {

EchelonForm row_echelon(TritMatrix m) {
  EchelonForm out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index pivot = r;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(r).swap(m.row(pivot));
    // Over F_3 every nonzero element is its own inverse.
    if (m(r, col) == 2) m.row(r) = scale_mod3(2, m.row(r));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, col) == 0) continue;
      const Trit factor = m(i, col);
      m.row(i) = sub_mod3(m.row(i), scale_mod3(factor, m.row(r)));
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.rows = m.topRows(r);
  return out;
}

TritMatrix nullspace_mod3(const TritMatrix& m) {
  const EchelonForm e = row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  TritMatrix basis(cols - e.rank(), cols);
  basis.setZero();
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = 1;
    for (Eigen::Index i = 0; i < e.rank(); ++i) basis(out, e.pivots[i]) = neg3(e.rows(i, free));
    ++out;
  }
  return basis;
}

std::optional<TritColumn> solve_mod3(const TritMatrix& a, const TritColumn& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_mod3: dimension mismatch");
  TritMatrix aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const EchelonForm e = row_echelon(aug);
  const Eigen::Index n = a.cols();
  TritColumn x = TritColumn::Zero(n);
  for (Eigen::Index i = 0; i < e.rank(); ++i) {
    if (e.pivots[i] == n) return std::nullopt;
    x(e.pivots[i]) = e.rows(i, n);
  }
  return x;
}

TritVector combine_rows(const TritMatrix& rows, std::span<const Trit> coeffs) {
  if (static_cast<Eigen::Index>(coeffs.size()) != rows.rows())
    throw std::invalid_argument("combine_rows: coefficient count mismatch");
  TritVector out = TritVector::Zero(rows.cols());
  for (Eigen::Index j = 0; j < rows.rows(); ++j)
    if (coeffs[j] != 0) out = add_mod3(out, scale_mod3(coeffs[j], rows.row(j)));
  return out;
}

std::vector<Trit> ternary_digits(std::uint64_t index, int count) {
  std::vector<Trit> d(count);
  for (int i = 0; i < count; ++i, index /= 3) d[i] = static_cast<Trit>(index % 3);
  return d;
}

}  // namespace tracecode
