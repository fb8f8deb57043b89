#ifndef LEIBALG_GROUP_SET_HPP
#define LEIBALG_GROUP_SET_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "leibalg/linalg.hpp"

namespace leibalg {

/// Entry-lexicographic (row-major) comparison on canonical representatives.
template <ExactScalar S>
std::strong_ordering lex_compare(const Matrix<S>& a, const Matrix<S>& b) {
  if (auto c = a.rows() <=> b.rows(); c != 0) return c;
  if (auto c = a.cols() <=> b.cols(); c != 0) return c;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (auto c = a(i, j) <=> b(i, j); c != 0) return c;
  return std::strong_ordering::equal;
}

template <ExactScalar S>
struct LexLess {
  bool operator()(const Matrix<S>& a, const Matrix<S>& b) const { return lex_compare(a, b) < 0; }
};

enum class Provenance { BruteForce, PrunedEnumeration, ClosedFormFamily, Derived };

constexpr std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::BruteForce: return "brute-force";
    case Provenance::PrunedEnumeration: return "pruned-enumeration";
    case Provenance::ClosedFormFamily: return "closed-form-family";
    case Provenance::Derived: return "derived";
  }
  return "unknown";
}

/// A finite set of invertible square matrices over one field, kept sorted
/// and duplicate-free so set equality is vector equality.
template <ExactScalar S>
class MatrixGroupSet {
 public:
  MatrixGroupSet(Field f, Index n, std::vector<Matrix<S>> elements, Provenance provenance)
      : field_(f), n_(n), elements_(std::move(elements)), provenance_(provenance) {
    for (const auto& m : elements_) {
      if (m.rows() != n_ || m.cols() != n_)
        throw Error(Errc::DimensionMismatch, "group element has the wrong size");
      if (field_of(m) != field_) throw Error(Errc::FieldMismatch, "group element over another field");
      if (mat_det<S>(m).is_zero()) throw Error(Errc::SingularMatrix, "group element is singular");
    }
    std::sort(elements_.begin(), elements_.end(), LexLess<S>{});
    elements_.erase(std::unique(elements_.begin(), elements_.end(),
                                [](const Matrix<S>& a, const Matrix<S>& b) {
                                  return lex_compare(a, b) == 0;
                                }),
                    elements_.end());
  }

  const Field& field() const { return field_; }
  Index size() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  Provenance provenance() const { return provenance_; }
  const std::vector<Matrix<S>>& elements() const { return elements_; }
  const Matrix<S>& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::optional<std::size_t> index_of(const Matrix<S>& m) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), m, LexLess<S>{});
    if (it == elements_.end() || lex_compare(*it, m) != 0) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }
  bool contains(const Matrix<S>& m) const { return index_of(m).has_value(); }

  bool is_subset_of(const MatrixGroupSet& other) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const Matrix<S>& m) { return other.contains(m); });
  }

  template <class Pred>
  MatrixGroupSet filter(Pred pred) const {
    std::vector<Matrix<S>> kept;
    for (const auto& m : elements_)
      if (pred(m)) kept.push_back(m);
    return MatrixGroupSet(field_, n_, std::move(kept), Provenance::Derived);
  }

  /// Same elements; provenance is metadata and does not take part.
  friend bool operator==(const MatrixGroupSet& a, const MatrixGroupSet& b) {
    if (a.field_ != b.field_ || a.n_ != b.n_ || a.order() != b.order()) return false;
    for (std::size_t i = 0; i < a.order(); ++i)
      if (lex_compare(a.elements_[i], b.elements_[i]) != 0) return false;
    return true;
  }

 private:
  Field field_;
  Index n_;
  std::vector<Matrix<S>> elements_;
  Provenance provenance_;
};

}  // namespace leibalg

#endif  // LEIBALG_GROUP_SET_HPP
