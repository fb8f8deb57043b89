#ifndef LEIBALG_LINALG_HPP
#define LEIBALG_LINALG_HPP

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leibalg/scalar.hpp"

namespace leibalg {

using Index = Eigen::Index;

/// Dense exact matrix. Column j holds the coordinates of the image of e_j, so
/// applying a map is matrix * column vector and composition is the product.
template <ExactScalar S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <ExactScalar S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <ExactScalar S>
Matrix<S> zero_matrix(const Field& f, Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, S::from_int(f, 0));
}

template <ExactScalar S>
Matrix<S> identity_matrix(const Field& f, Index n) {
  Matrix<S> m = zero_matrix<S>(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = S::from_int(f, 1);
  return m;
}

template <ExactScalar S>
Vector<S> zero_vector(const Field& f, Index n) {
  return Vector<S>::Constant(n, S::from_int(f, 0));
}

/// Standard basis vector e_i (0-based i).
template <ExactScalar S>
Vector<S> unit_vector(const Field& f, Index n, Index i) {
  Vector<S> v = zero_vector<S>(f, n);
  v(i) = S::from_int(f, 1);
  return v;
}

/// Builds a matrix from integer rows, reduced into the field.
template <ExactScalar S>
Matrix<S> matrix_from_rows(const Field& f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = r == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
  Matrix<S> m = zero_matrix<S>(f, r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw Error(Errc::DimensionMismatch, "ragged rows");
    Index j = 0;
    for (auto x : row) m(i, j++) = S::from_int(f, x);
    ++i;
  }
  return m;
}

template <ExactScalar S>
Vector<S> vector_from(const Field& f, std::initializer_list<std::int64_t> coords) {
  Vector<S> v = zero_vector<S>(f, static_cast<Index>(coords.size()));
  Index i = 0;
  for (auto x : coords) v(i++) = S::from_int(f, x);
  return v;
}

template <class Derived>
Field field_of(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) throw Error(Errc::DimensionMismatch, "empty matrix has no field");
  return m(0, 0).field();
}

template <class A, class B>
bool same_shape_and_entries(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

/// Exact product a*b.
template <ExactScalar S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows())
    throw Error(Errc::DimensionMismatch, "product of incompatible shapes");
  if (a.size() > 0 && b.size() > 0 && field_of(a) != field_of(b))
    throw Error(Errc::FieldMismatch, field_of(a).descriptor() + " vs " + field_of(b).descriptor());
  return a * b;
}

/// Determinant by Gaussian elimination over the field.
template <ExactScalar S>
S mat_det(Matrix<S> a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const Index n = a.rows();
  const Field f = field_of(a);
  S det = S::from_int(f, 1);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return S::from_int(f, 0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det = det * a(col, col);
    const S inv = a(col, col).inverse();
    for (Index r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const S factor = a(r, col) * inv;
      for (Index c = col; c < n; ++c) a(r, c) = a(r, c) - factor * a(col, c);
    }
  }
  return det;
}

template <ExactScalar S>
struct RowEchelon {
  Matrix<S> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row, strictly increasing
};

/// Reduced row-echelon form.
template <ExactScalar S>
RowEchelon<S> rref(Matrix<S> m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = m(row, col).inverse();
    for (Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const S factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Exact inverse by Gauss-Jordan elimination.
template <ExactScalar S>
Matrix<S> mat_inv(const Matrix<S>& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const Index n = a.rows();
  const Field f = field_of(a);
  Matrix<S> aug(n, 2 * n);
  aug << a, identity_matrix<S>(f, n);
  auto [reduced, pivots] = rref<S>(std::move(aug));
  if (static_cast<Index>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw Error(Errc::SingularMatrix, "matrix is not invertible");
  return reduced.rightCols(n);
}

/// A subspace of F^n stored by its unique reduced row-echelon basis, so
/// equal subspaces compare equal structurally.
template <ExactScalar S>
class Subspace {
 public:
  Subspace(Field f, Index ambient_dim) : field_(f), ambient_(ambient_dim) {}

  static Subspace span(const Field& f, Index ambient_dim, std::span<const Vector<S>> vectors) {
    Subspace out(f, ambient_dim);
    if (vectors.empty()) return out;
    Matrix<S> rows = zero_matrix<S>(f, static_cast<Index>(vectors.size()), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient_dim)
        throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
      if (field_of(vectors[i]) != f) throw Error(Errc::FieldMismatch, "vector over another field");
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    const auto echelon = rref<S>(std::move(rows));
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r)
      out.basis_.push_back(echelon.reduced.row(static_cast<Index>(r)).transpose());
    out.pivots_ = echelon.pivots;
    return out;
  }

  const Field& field() const { return field_; }
  Index ambient_dim() const { return ambient_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  const std::vector<Vector<S>>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const Vector<S>& v) const {
    std::vector<Vector<S>> vs = basis_;
    vs.push_back(v);
    return span(field_, ambient_, vs).dim() == dim();
  }

  bool contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Vector<S>& v) { return contains(v); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.field_ != b.field_ || a.ambient_ != b.ambient_ || a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
      if (a.basis_[i] != b.basis_[i]) return false;
    return true;
  }

 private:
  Field field_;
  Index ambient_;
  std::vector<Vector<S>> basis_;
  std::vector<Index> pivots_;
};

/// Span of a nonempty list of vectors; the ambient space is read off the list.
template <ExactScalar S>
Subspace<S> rref_span(std::span<const Vector<S>> vectors) {
  if (vectors.empty())
    throw Error(Errc::EmptyAmbient, "cannot infer the ambient space of an empty span");
  return Subspace<S>::span(field_of(vectors.front()), vectors.front().size(), vectors);
}

template <ExactScalar S>
Subspace<S> rref_span(const Field& f, Index ambient_dim, std::span<const Vector<S>> vectors) {
  return Subspace<S>::span(f, ambient_dim, vectors);
}

template <ExactScalar S>
struct SolutionSet {
  std::optional<Vector<S>> particular;  // empty when the system is inconsistent
  Subspace<S> nullspace;

  bool consistent() const { return particular.has_value(); }
};

/// Solves a x = b for rectangular a: one particular solution plus the kernel.
template <ExactScalar S>
SolutionSet<S> solve_linear(const Matrix<S>& a, const Vector<S>& b) {
  if (a.rows() == 0 || a.cols() == 0 || b.size() != a.rows())
    throw Error(Errc::DimensionMismatch, "right-hand side does not match the system");
  const Field f = field_of(a);
  const Index rows = a.rows();
  const Index cols = a.cols();
  Matrix<S> aug(rows, cols + 1);
  aug << a, b;
  const auto [reduced, pivots] = rref<S>(std::move(aug));

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivots)
    if (c < cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vector<S>> kernel;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<S> v = zero_vector<S>(f, cols);
    v(free) = S::from_int(f, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < cols) v(pivots[r]) = -reduced(static_cast<Index>(r), free);
    kernel.push_back(std::move(v));
  }

  SolutionSet<S> out{std::nullopt, Subspace<S>::span(f, cols, kernel)};
  const bool inconsistent = !pivots.empty() && pivots.back() == cols;
  if (!inconsistent) {
    Vector<S> x = zero_vector<S>(f, cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x(pivots[r]) = reduced(static_cast<Index>(r), cols);
    out.particular = std::move(x);
  }
  return out;
}

template <ExactScalar S>
Subspace<S> kernel(const Matrix<S>& a) {
  return solve_linear<S>(a, zero_vector<S>(field_of(a), a.rows())).nullspace;
}

/// U ∩ W via the kernel of [U^T | -W^T].
template <ExactScalar S>
Subspace<S> intersect(const Subspace<S>& u, const Subspace<S>& w) {
  if (u.field() != w.field() || u.ambient_dim() != w.ambient_dim())
    throw Error(Errc::DimensionMismatch, "subspaces live in different spaces");
  const Field& f = u.field();
  const Index n = u.ambient_dim();
  if (u.dim() == 0 || w.dim() == 0) return Subspace<S>(f, n);
  Matrix<S> system = zero_matrix<S>(f, n, u.dim() + w.dim());
  for (Index i = 0; i < u.dim(); ++i) system.col(i) = u.basis()[static_cast<std::size_t>(i)];
  for (Index j = 0; j < w.dim(); ++j)
    system.col(u.dim() + j) = -w.basis()[static_cast<std::size_t>(j)];
  const auto coeffs = kernel<S>(system);
  std::vector<Vector<S>> common;
  for (const auto& c : coeffs.basis()) {
    Vector<S> x = zero_vector<S>(f, n);
    for (Index i = 0; i < u.dim(); ++i) x += c(i) * u.basis()[static_cast<std::size_t>(i)];
    common.push_back(std::move(x));
  }
  return Subspace<S>::span(f, n, common);
}

/// Image of a subspace under a linear map.
template <ExactScalar S>
Subspace<S> image(const Matrix<S>& map, const Subspace<S>& u) {
  if (map.cols() != u.ambient_dim()) throw Error(Errc::DimensionMismatch, "map/subspace size");
  std::vector<Vector<S>> images;
  for (const auto& v : u.basis()) images.push_back(map * v);
  return Subspace<S>::span(u.field(), map.rows(), images);
}

}  // namespace leibalg

#endif  // LEIBALG_LINALG_HPP
