#ifndef LEIBALG_GROUPTOOL_HPP
#define LEIBALG_GROUPTOOL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leibalg/group_set.hpp"

namespace leibalg {

// Every scan below walks elements in canonical order, so each witness is the
// lexicographically first failure.

template <ExactScalar S>
struct GroupReport {
  std::size_t order = 0;
  bool is_group = false;
  bool abelian = false;
  bool cyclic = false;
  std::optional<Matrix<S>> generator_witness;
  std::string group_failure;                // empty when is_group
  std::vector<Matrix<S>> group_witness;     // elements exhibiting the failure
  std::optional<std::pair<Matrix<S>, Matrix<S>>> abelian_witness;  // a*b != b*a
};

template <ExactScalar S>
std::string group_failure_reason(const MatrixGroupSet<S>& s, std::vector<Matrix<S>>* witness) {
  if (s.empty()) return "empty set";
  const auto id = identity_matrix<S>(s.field(), s.size());
  if (!s.contains(id)) return "identity missing";
  for (const auto& a : s)
    for (const auto& b : s) {
      Matrix<S> ab = a * b;
      if (!s.contains(ab)) {
        if (witness) *witness = {a, b};
        return "not closed under products";
      }
    }
  for (const auto& a : s)
    if (!s.contains(mat_inv<S>(a))) {
      if (witness) *witness = {a};
      return "not closed under inverses";
    }
  return {};
}

template <ExactScalar S>
bool is_group(const MatrixGroupSet<S>& s) {
  return group_failure_reason<S>(s, nullptr).empty();
}

/// Order of g, found by repeated multiplication; nullopt past `cap`.
template <ExactScalar S>
std::optional<std::size_t> element_order(const Matrix<S>& g, std::size_t cap) {
  const auto id = identity_matrix<S>(field_of(g), g.rows());
  Matrix<S> power = g;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (power == id) return k;
    power = power * g;
  }
  return std::nullopt;
}

template <ExactScalar S>
GroupReport<S> analyze(const MatrixGroupSet<S>& s) {
  if (s.empty()) throw Error(Errc::NotAGroup, "cannot analyze an empty set");
  GroupReport<S> r;
  r.order = s.order();
  r.group_failure = group_failure_reason(s, &r.group_witness);
  r.is_group = r.group_failure.empty();
  r.abelian = true;
  for (std::size_t i = 0; i < s.order() && r.abelian; ++i)
    for (std::size_t j = i + 1; j < s.order(); ++j) {
      if (s[i] * s[j] != s[j] * s[i]) {
        r.abelian = false;
        r.abelian_witness = std::make_pair(s[i], s[j]);
        break;
      }
    }
  if (r.is_group) {
    for (const auto& g : s)
      if (element_order<S>(g, s.order()) == s.order()) {
        r.cyclic = true;
        r.generator_witness = g;
        break;
      }
  }
  return r;
}

/// {a*b : a in A, b in B}.
template <ExactScalar S>
MatrixGroupSet<S> set_product(const MatrixGroupSet<S>& a, const MatrixGroupSet<S>& b) {
  if (a.field() != b.field() || a.size() != b.size())
    throw Error(Errc::FieldMismatch, "set product of sets over different spaces");
  std::vector<Matrix<S>> out;
  out.reserve(a.order() * b.order());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return MatrixGroupSet<S>(a.field(), a.size(), std::move(out), Provenance::Derived);
}

template <ExactScalar S>
MatrixGroupSet<S> set_intersection(const MatrixGroupSet<S>& a, const MatrixGroupSet<S>& b) {
  return a.filter([&](const Matrix<S>& m) { return b.contains(m); });
}

template <ExactScalar S>
struct NormalityCheck {
  bool normal = false;
  std::optional<std::pair<Matrix<S>, Matrix<S>>> witness;  // (g, n) with g n g^-1 outside N

  explicit operator bool() const { return normal; }
};

template <ExactScalar S>
NormalityCheck<S> is_normal(const MatrixGroupSet<S>& n, const MatrixGroupSet<S>& g) {
  if (!n.is_subset_of(g)) throw Error(Errc::NotSubset, "N is not contained in G");
  for (const auto& x : g) {
    const Matrix<S> x_inv = mat_inv<S>(x);
    for (const auto& m : n)
      if (!n.contains(Matrix<S>(x * m * x_inv))) return {false, std::make_pair(x, m)};
  }
  return {true, std::nullopt};
}

enum class DecompositionKind { Semidirect, Direct, SetProduct };

constexpr std::string_view to_string(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::Semidirect: return "semidirect";
    case DecompositionKind::Direct: return "direct";
    case DecompositionKind::SetProduct: return "set-product";
  }
  return "unknown";
}

/// Exact fraction k/n, printed unreduced.
struct Coverage {
  std::size_t covered = 0;
  std::size_t total = 0;

  bool full() const { return covered == total; }
  std::string to_string() const { return std::to_string(covered) + "/" + std::to_string(total); }
};

template <ExactScalar S>
struct DecompositionCertificate {
  DecompositionKind kind;
  MatrixGroupSet<S> normal_part;  // N
  MatrixGroupSet<S> complement;   // H
  bool n_normal = false;
  bool h_subgroup = false;
  bool trivial_intersection = false;
  bool product_covers = false;
  std::optional<bool> h_normal{};  // evaluated for Direct only
  Coverage coverage{};
  std::optional<std::pair<Matrix<S>, Matrix<S>>> normality_witness{};
  std::optional<Matrix<S>> uncovered_witness{};  // first element of G outside N*H

  bool certified() const {
    switch (kind) {
      case DecompositionKind::SetProduct: return product_covers;
      case DecompositionKind::Semidirect:
        return n_normal && h_subgroup && trivial_intersection && product_covers;
      case DecompositionKind::Direct:
        return n_normal && h_subgroup && trivial_intersection && product_covers &&
               h_normal.value_or(false);
    }
    return false;
  }
};

template <ExactScalar S>
DecompositionCertificate<S> certify_decomposition(DecompositionKind kind,
                                                  const MatrixGroupSet<S>& n,
                                                  const MatrixGroupSet<S>& h,
                                                  const MatrixGroupSet<S>& g) {
  if (!n.is_subset_of(g)) throw Error(Errc::NotSubset, "N is not contained in G");
  if (!h.is_subset_of(g)) throw Error(Errc::NotSubset, "H is not contained in G");
  DecompositionCertificate<S> cert{kind, n, h};

  const auto n_norm = is_normal(n, g);
  cert.n_normal = is_group(n) && n_norm.normal;
  cert.normality_witness = n_norm.witness;
  cert.h_subgroup = is_group(h);

  const auto meet = set_intersection(n, h);
  cert.trivial_intersection =
      meet.order() == 1 && meet.contains(identity_matrix<S>(g.field(), g.size()));

  const auto product = set_product(n, h);
  const auto covered = set_intersection(g, product);
  cert.coverage = {covered.order(), g.order()};
  cert.product_covers = cert.coverage.full();
  for (const auto& x : g)
    if (!product.contains(x)) {
      cert.uncovered_witness = x;
      break;
    }

  if (kind == DecompositionKind::Direct) {
    const auto h_norm = is_normal(h, g);
    cert.h_normal = cert.h_subgroup && h_norm.normal;
    if (!h_norm.normal && !cert.normality_witness) cert.normality_witness = h_norm.witness;
  }
  return cert;
}

template <ExactScalar S>
struct CyclicCheck {
  bool isomorphic = false;
  std::optional<Matrix<S>> generator;

  explicit operator bool() const { return isomorphic; }
};

/// For a prime field both the additive and multiplicative groups are cyclic,
/// so isomorphism to either reduces to: |S| = n and S has an element of
/// order n.
template <ExactScalar S>
CyclicCheck<S> iso_to_cyclic(const MatrixGroupSet<S>& s, std::size_t n) {
  if (!is_group(s)) throw Error(Errc::NotAGroup, "set is not closed under the group operations");
  if (s.order() != n) return {};
  for (const auto& g : s)
    if (element_order<S>(g, n) == n) return {true, g};
  return {};
}

template <ExactScalar S>
struct HomCheck {
  bool homomorphism = false;
  bool injective = false;
  bool surjective = false;
  bool kernel_trivial = false;
  std::optional<std::pair<Matrix<S>, Matrix<S>>> witness;  // (a, b) with map(ab) != map(a)map(b)
};

/// Exhaustive homomorphism check of the map domain[i] -> images[i] into the
/// codomain set, using matrix multiplication on both sides.
template <ExactScalar S>
HomCheck<S> hom_check(const MatrixGroupSet<S>& domain, std::span<const Matrix<S>> images,
                      const MatrixGroupSet<S>& codomain) {
  if (images.size() != domain.order())
    throw Error(Errc::PartialMap, "image table does not cover the domain");
  HomCheck<S> out;
  out.homomorphism = true;
  for (std::size_t i = 0; i < domain.order() && out.homomorphism; ++i)
    for (std::size_t j = 0; j < domain.order(); ++j) {
      const auto k = domain.index_of(Matrix<S>(domain[i] * domain[j]));
      if (!k) throw Error(Errc::NotAGroup, "domain is not closed under products");
      if (!same_shape_and_entries(images[*k], images[i] * images[j])) {
        out.homomorphism = false;
        out.witness = std::make_pair(domain[i], domain[j]);
        break;
      }
    }

  std::vector<Matrix<S>> sorted(images.begin(), images.end());
  const MatrixGroupSet<S> image_set(codomain.field(), codomain.size(), std::move(sorted),
                                    Provenance::Derived);
  out.injective = image_set.order() == domain.order();
  out.surjective = image_set == codomain;

  const auto id = identity_matrix<S>(codomain.field(), codomain.size());
  std::size_t kernel_size = 0;
  for (const auto& m : images)
    if (same_shape_and_entries(m, id)) ++kernel_size;
  out.kernel_trivial = kernel_size == 1;
  return out;
}

template <ExactScalar S>
std::vector<Matrix<S>> map_elements(const MatrixGroupSet<S>& domain,
                                    const std::function<Matrix<S>(const Matrix<S>&)>& fn) {
  std::vector<Matrix<S>> out;
  out.reserve(domain.order());
  for (const auto& m : domain) out.push_back(fn(m));
  return out;
}

/// All invertible n x n matrices over GF(p), by exhaustive scan.
MatrixGroupSet<ModInt> general_linear_set(const Field& f, Index n);

}  // namespace leibalg

#endif  // LEIBALG_GROUPTOOL_HPP
