#ifndef LEIBALG_LEIBNIZ_HPP
#define LEIBALG_LEIBNIZ_HPP

#include <optional>
#include <utility>
#include <vector>

#include "leibalg/linalg.hpp"

namespace leibalg {

/// A finite-dimensional algebra given by structure constants.
///
/// product(i, j) holds the coordinates of [e_i, e_j]. Any bilinear product is
/// representable; the Leibniz identity is checked separately.
template <ExactScalar S>
class Algebra {
 public:
  using Table = std::vector<std::vector<Vector<S>>>;

  Algebra(Field f, Index dim, Table table) : field_(f), dim_(dim), table_(std::move(table)) {
    if (dim_ < 1) throw Error(Errc::ShapeMismatch, "dimension must be at least 1");
    if (static_cast<Index>(table_.size()) != dim_)
      throw Error(Errc::ShapeMismatch, "table needs one row per basis vector");
    for (const auto& row : table_) {
      if (static_cast<Index>(row.size()) != dim_)
        throw Error(Errc::ShapeMismatch, "table row has the wrong length");
      for (const auto& v : row) {
        if (v.size() != dim_) throw Error(Errc::ShapeMismatch, "structure constant vector length");
        for (Index k = 0; k < dim_; ++k)
          if (v(k).field() != field_) throw Error(Errc::FieldMismatch, "coefficient over another field");
      }
    }
  }

  const Field& field() const { return field_; }
  Index dim() const { return dim_; }
  const Vector<S>& product(Index i, Index j) const {
    return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const Table& table() const { return table_; }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    if (a.field_ != b.field_ || a.dim_ != b.dim_) return false;
    for (Index i = 0; i < a.dim_; ++i)
      for (Index j = 0; j < a.dim_; ++j)
        if (a.product(i, j) != b.product(i, j)) return false;
    return true;
  }

 private:
  Field field_;
  Index dim_;
  Table table_;
};

template <ExactScalar S>
Algebra<S> make_algebra(const Field& f, Index dim, typename Algebra<S>::Table table) {
  return Algebra<S>(f, dim, std::move(table));
}

template <ExactScalar S>
Algebra<S> zero_algebra(const Field& f, Index dim) {
  typename Algebra<S>::Table t(static_cast<std::size_t>(dim),
                               std::vector<Vector<S>>(static_cast<std::size_t>(dim),
                                                      zero_vector<S>(f, dim)));
  return Algebra<S>(f, dim, std::move(t));
}

namespace detail {

// [e1,e1] = [e1,e3] = e3, [e1,e2] = e2 + lambda e3, everything else 0.
template <ExactScalar S>
Algebra<S> three_dim_family(const Field& f, const S& lambda) {
  auto t = zero_algebra<S>(f, 3).table();
  t[0][0] = unit_vector<S>(f, 3, 2);
  t[0][2] = unit_vector<S>(f, 3, 2);
  t[0][1] = unit_vector<S>(f, 3, 1);
  t[0][1](2) = lambda;
  return Algebra<S>(f, 3, std::move(t));
}

}  // namespace detail

/// [e1,e1] = [e1,e3] = e3, [e1,e2] = e2; all other basis brackets vanish.
template <ExactScalar S>
Algebra<S> make_l1(const Field& f) {
  return detail::three_dim_family<S>(f, S::from_int(f, 0));
}

/// As make_l1 but [e1,e2] = e2 + lambda e3, lambda nonzero.
template <ExactScalar S>
Algebra<S> make_l2(const Field& f, const S& lambda) {
  if (lambda.is_zero()) throw Error(Errc::ZeroLambda, "lambda must be nonzero");
  if (lambda.field() != f) throw Error(Errc::FieldMismatch, "lambda over another field");
  return detail::three_dim_family<S>(f, lambda);
}

template <ExactScalar S>
Vector<S> bracket(const Algebra<S>& alg, const Vector<S>& x, const Vector<S>& y) {
  const Index n = alg.dim();
  if (x.size() != n || y.size() != n)
    throw Error(Errc::DimensionMismatch, "vector length differs from algebra dimension");
  Vector<S> out = zero_vector<S>(alg.field(), n);
  for (Index i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < n; ++j) {
      if (y(j).is_zero()) continue;
      out += (x(i) * y(j)) * alg.product(i, j);
    }
  }
  return out;
}

/// A basis triple (0-based) where [x,[y,z]] != [[x,y],z] + [y,[x,z]].
template <ExactScalar S>
struct LeibnizViolation {
  Index i, j, k;
  Vector<S> lhs, rhs;
};

/// Checks the left Leibniz identity on all basis triples in lexicographic
/// order; trilinearity makes that sufficient. Returns the first violation.
template <ExactScalar S>
std::optional<LeibnizViolation<S>> check_leibniz(const Algebra<S>& alg) {
  const Index n = alg.dim();
  const Field& f = alg.field();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const auto x = unit_vector<S>(f, n, i);
        const auto y = unit_vector<S>(f, n, j);
        const auto z = unit_vector<S>(f, n, k);
        Vector<S> lhs = bracket(alg, x, alg.product(j, k));
        Vector<S> rhs = bracket(alg, alg.product(i, j), z) + bracket(alg, y, alg.product(i, k));
        if (lhs != rhs) return LeibnizViolation<S>{i, j, k, std::move(lhs), std::move(rhs)};
      }
  return std::nullopt;
}

template <ExactScalar S>
struct InvariantReport {
  Subspace<S> derived;       // [L,L]
  Subspace<S> leib;          // span of squares [x,x]
  Subspace<S> left_center;   // {x : [x,y] = 0 for all y}
  Subspace<S> right_center;  // {x : [y,x] = 0 for all y}
  Subspace<S> center;
};

template <ExactScalar S>
InvariantReport<S> invariants(const Algebra<S>& alg) {
  if (auto violation = check_leibniz(alg))
    throw Error(Errc::NotLeibniz, "the Leibniz identity fails on a basis triple");
  const Index n = alg.dim();
  const Field& f = alg.field();

  std::vector<Vector<S>> products;
  std::vector<Vector<S>> squares;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) products.push_back(alg.product(i, j));
  // [x,x] is quadratic in x, so the squares of basis vectors and of pairwise
  // sums span every square.
  for (Index i = 0; i < n; ++i) {
    squares.push_back(alg.product(i, i));
    for (Index j = i + 1; j < n; ++j) {
      const Vector<S> v = unit_vector<S>(f, n, i) + unit_vector<S>(f, n, j);
      squares.push_back(bracket(alg, v, v));
    }
  }

  // Row block b of `left` encodes x -> [x, e_b]; of `right`, x -> [e_b, x].
  Matrix<S> left = zero_matrix<S>(f, n * n, n);
  Matrix<S> right = zero_matrix<S>(f, n * n, n);
  for (Index b = 0; b < n; ++b)
    for (Index i = 0; i < n; ++i) {
      left.block(b * n, i, n, 1) = alg.product(i, b);
      right.block(b * n, i, n, 1) = alg.product(b, i);
    }

  auto left_center = kernel<S>(left);
  auto right_center = kernel<S>(right);
  auto center = intersect(left_center, right_center);

  Matrix<S> both(2 * n * n, n);
  both << left, right;
  if (!(center == kernel<S>(both)))
    throw Error(Errc::NotLeibniz, "center disagrees with the joint kernel");

  InvariantReport<S> report{Subspace<S>::span(f, n, products), Subspace<S>::span(f, n, squares),
                            std::move(left_center), std::move(right_center), std::move(center)};
  if (!report.derived.contains(report.leib))
    throw Error(Errc::NotLeibniz, "squares escape the derived subalgebra");
  return report;
}

template <ExactScalar S>
struct AutomorphismCheck {
  bool is_automorphism = false;
  bool invertible = false;
  std::optional<std::pair<Index, Index>> violation;  // first basis pair (0-based)

  explicit operator bool() const { return is_automorphism; }
};

/// True iff f is invertible and f([e_i,e_j]) = [f e_i, f e_j] for every pair.
template <ExactScalar S>
AutomorphismCheck<S> is_automorphism(const Algebra<S>& alg, const Matrix<S>& f) {
  const Index n = alg.dim();
  if (f.rows() != n || f.cols() != n)
    throw Error(Errc::DimensionMismatch, "map size differs from algebra dimension");
  if (field_of(f) != alg.field()) throw Error(Errc::FieldMismatch, "map over another field");
  AutomorphismCheck<S> out;
  out.invertible = !mat_det<S>(f).is_zero();
  for (Index i = 0; i < n && !out.violation; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector<S> lhs = f * alg.product(i, j);
      const Vector<S> rhs = bracket<S>(alg, f.col(i), f.col(j));
      if (lhs != rhs) {
        out.violation = std::make_pair(i, j);
        break;
      }
    }
  out.is_automorphism = out.invertible && !out.violation;
  return out;
}

}  // namespace leibalg

#endif  // LEIBALG_LEIBNIZ_HPP
