// Dense linear algebra over F_3 on Eigen storage.
//
// Entries are kept reduced in {0, 1, 2}. Sums of two reduced trit expressions
// stay below 5 in uint8, so a single mod3() after each +, - or scaling keeps
// everything exact.

#ifndef TRACECODE_TERNARY_HPP
#define TRACECODE_TERNARY_HPP

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tracecode/gf3m.hpp"

namespace tracecode {

using TritMatrix = Eigen::Matrix<Trit, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using TritVector = Eigen::Matrix<Trit, 1, Eigen::Dynamic>;
using TritColumn = Eigen::Matrix<Trit, Eigen::Dynamic, 1>;

template <typename Derived>
auto mod3(const Eigen::MatrixBase<Derived>& x) {
  return x.unaryExpr([](Trit v) { return static_cast<Trit>(v % 3); });
}

template <typename A, typename B>
auto add_mod3(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  return mod3(x + y);
}

template <typename A, typename B>
auto sub_mod3(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  return mod3(x + y.unaryExpr([](Trit v) { return neg3(v); }));
}

template <typename Derived>
auto scale_mod3(Trit s, const Eigen::MatrixBase<Derived>& x) {
  return mod3(x * static_cast<Trit>(s % 3));
}

template <typename Derived>
Eigen::Index hamming_weight(const Eigen::MatrixBase<Derived>& x) {
  return (x.array() != Trit{0}).count();
}

/// Reduced row echelon form with pivot columns in increasing order.
struct EchelonForm {
  TritMatrix rows;                    // rank() rows, zero rows dropped
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

EchelonForm row_echelon(TritMatrix m);

template <typename Derived>
Eigen::Index rank_mod3(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(TritMatrix(m)).rank();
}

/// Basis of {y : m y^T = 0}, one vector per row.
TritMatrix nullspace_mod3(const TritMatrix& m);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<TritColumn> solve_mod3(const TritMatrix& a, const TritColumn& b);

/// sum_j coeffs[j] * rows.row(j).
TritVector combine_rows(const TritMatrix& rows, std::span<const Trit> coeffs);

/// Base-3 digits of index, least significant first.
std::vector<Trit> ternary_digits(std::uint64_t index, int count);

}  // namespace tracecode

#endif  // TRACECODE_TERNARY_HPP
