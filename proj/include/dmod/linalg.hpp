#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice).
// Plain Gauss-Jordan: with exact arithmetic the first nonzero pivot is as
// good as any other, and no tolerance is ever consulted.

#include "dmod/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace dmod::linalg {

template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;     // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> rowEchelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.reduced = input;
  MatrixX<Scalar>& a = out.reduced;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    if (a(r, c) != 1) {
      const Scalar inv = Scalar(1) / a(r, c);
      for (Eigen::Index k = c; k < cols; ++k)
        if (a(r, k) != 0) a(r, k) *= inv;
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index k = c; k < cols; ++k)
        if (a(r, k) != 0) a(i, k) -= f * a(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return rowEchelon(a).rank();
}

/// Columns form a basis of {x : a x = 0}.
template <typename Derived>
MatrixX<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return MatrixX<Scalar>::Identity(n, n);
  const auto e = rowEchelon(a);
  std::vector<bool> isPivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) isPivot[static_cast<std::size_t>(p)] = true;
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(n, n - e.rank());
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (isPivot[static_cast<std::size_t>(f)]) continue;
    basis(f, col) = 1;
    for (Eigen::Index r = 0; r < e.rank(); ++r) basis(e.pivots[r], col) = -e.reduced(r, f);
    ++col;
  }
  return basis;
}

/// A basis of the column space, made of a maximal independent subset of the columns.
template <typename Derived>
MatrixX<typename Derived::Scalar> columnBasis(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.cols() == 0 || a.rows() == 0) return MatrixX<Scalar>(a.rows(), 0);
  const auto e = rowEchelon(a);
  MatrixX<Scalar> out(a.rows(), e.rank());
  for (Eigen::Index k = 0; k < e.rank(); ++k) out.col(k) = a.col(e.pivots[k]);
  return out;
}

/// Some x with a x = b, if one exists.
template <typename DerivedA, typename DerivedB>
std::optional<MatrixX<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.cols(), m = b.cols();
  if (a.rows() == 0) return MatrixX<Scalar>::Zero(n, m);
  MatrixX<Scalar> aug(a.rows(), n + m);
  aug << a, b;
  const auto e = rowEchelon(aug);
  MatrixX<Scalar> x = MatrixX<Scalar>::Zero(n, m);
  for (Eigen::Index r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (Eigen::Index k = 0; k < m; ++k) x(e.pivots[r], k) = e.reduced(r, n + k);
  }
  return x;
}

template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) return std::nullopt;
  if (a.rows() == 0) return MatrixX<Scalar>(0, 0);
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, MatrixX<Scalar>::Identity(a.rows(), a.rows()));
}

/// Columns spanning the sum of the two column spaces, independent.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> spanUnion(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  MatrixX<Scalar> both(a.rows(), a.cols() + b.cols());
  both << a, b;
  return columnBasis(both);
}

/// Coordinates of the columns of `vectors` in the independent column basis `basis`.
/// Throws std::domain_error if some column lies outside the span.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> coordinates(const Eigen::MatrixBase<DerivedA>& basis,
                                               const Eigen::MatrixBase<DerivedB>& vectors) {
  auto x = solve(basis, vectors);
  if (!x) throw std::domain_error("vector outside the spanned subspace");
  return *x;
}

}  // namespace dmod::linalg
