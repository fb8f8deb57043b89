#ifndef LEIBALG_AUTGROUP_HPP
#define LEIBALG_AUTGROUP_HPP

#include <concepts>
#include <utility>
#include <vector>

#include "leibalg/grouptool.hpp"
#include "leibalg/leibniz.hpp"

namespace leibalg {

// Largest primes the enumeration oracles accept: p^9 and p^7 candidates.
inline constexpr std::uint32_t kBruteForceMaxPrime = 3;
inline constexpr std::uint32_t kPrunedMaxPrime = 13;

// ---------------------------------------------------------------------------
// Automorphisms of L1: rows (1,0,0), (a2,b2,a2), (a3,b3,1+a3).

template <ExactScalar S>
struct Family1Params {
  S alpha2, alpha3, beta2, beta3;
};

/// b2(1+a3) - a2 b3; also the determinant of the matrix and of its 2x2 image.
template <ExactScalar S>
S family1_det(const Family1Params<S>& p) {
  const S one = S::from_int(p.alpha2.field(), 1);
  return p.beta2 * (one + p.alpha3) - p.alpha2 * p.beta3;
}

template <ExactScalar S>
Matrix<S> family1_matrix(const Family1Params<S>& p) {
  if (family1_det(p).is_zero())
    throw Error(Errc::SingularParams, "beta2(1+alpha3) - alpha2 beta3 vanishes");
  const Field f = p.alpha2.field();
  const S zero = S::from_int(f, 0);
  const S one = S::from_int(f, 1);
  Matrix<S> m(3, 3);
  m << one, zero, zero,
       p.alpha2, p.beta2, p.alpha2,
       p.alpha3, p.beta3, one + p.alpha3;
  return m;
}

template <ExactScalar S>
bool in_family1_shape(const Matrix<S>& m) {
  if (m.rows() != 3 || m.cols() != 3) return false;
  const S one = S::from_int(field_of(m), 1);
  return m(0, 0) == one && m(0, 1).is_zero() && m(0, 2).is_zero() && m(1, 0) == m(1, 2) &&
         m(2, 0) + one == m(2, 2);
}

template <ExactScalar S>
Family1Params<S> family1_params(const Matrix<S>& m) {
  if (!in_family1_shape(m)) throw Error(Errc::NotInFamily, "matrix is not of the L1 template");
  return {m(1, 0), m(2, 0), m(1, 1), m(2, 1)};
}

// ---------------------------------------------------------------------------
// Automorphisms of L2(lambda): rows (1,0,0), (0,beta,0), (beta-1,sigma,beta).
// (beta, sigma) also appear in the literature as (beta1, beta2) or (beta2, beta3).

template <ExactScalar S>
struct Family2Params {
  S beta, sigma;
};

template <ExactScalar S>
Matrix<S> family2_matrix(const Family2Params<S>& p) {
  if (p.beta.is_zero()) throw Error(Errc::SingularParams, "beta must be nonzero");
  const Field f = p.beta.field();
  const S zero = S::from_int(f, 0);
  const S one = S::from_int(f, 1);
  Matrix<S> m(3, 3);
  m << one, zero, zero,
       zero, p.beta, zero,
       p.beta - one, p.sigma, p.beta;
  return m;
}

template <ExactScalar S>
bool in_family2_shape(const Matrix<S>& m) {
  if (m.rows() != 3 || m.cols() != 3) return false;
  const S one = S::from_int(field_of(m), 1);
  return m(0, 0) == one && m(0, 1).is_zero() && m(0, 2).is_zero() && m(1, 0).is_zero() &&
         m(1, 2).is_zero() && m(2, 2) == m(1, 1) && m(2, 0) + one == m(1, 1);
}

template <ExactScalar S>
Family2Params<S> family2_params(const Matrix<S>& m) {
  if (!in_family2_shape(m)) throw Error(Errc::NotInFamily, "matrix is not of the L2 template");
  return {m(1, 1), m(2, 1)};
}

// ---------------------------------------------------------------------------
// Closed-form sets over GF(p).

MatrixGroupSet<ModInt> family1_set(const Field& f);
MatrixGroupSet<ModInt> family2_set(const Field& f);

// ---------------------------------------------------------------------------
// Phi: the lower-right 2x2 block (b2, a2; b3, 1+a3) of an L1 automorphism.

template <ExactScalar S>
Matrix<S> phi_l1(const Matrix<S>& m) {
  if (!in_family1_shape(m)) throw Error(Errc::NotInFamily, "phi needs the L1 template");
  return m.template bottomRightCorner<2, 2>();
}

/// Preimage rows (1,0,0), (s12,s11,s12), (s22-1,s21,s22).
template <ExactScalar S>
Matrix<S> phi_l1_inverse(const Matrix<S>& g) {
  if (g.rows() != 2 || g.cols() != 2) throw Error(Errc::DimensionMismatch, "phi inverse needs 2x2");
  if (mat_det<S>(g).is_zero()) throw Error(Errc::SingularInput, "2x2 matrix is singular");
  const Field f = field_of(g);
  const S zero = S::from_int(f, 0);
  const S one = S::from_int(f, 1);
  Matrix<S> m(3, 3);
  m << one, zero, zero,
       g(0, 1), g(0, 0), g(0, 1),
       g(1, 1) - one, g(1, 0), g(1, 1);
  return m;
}

// ---------------------------------------------------------------------------
// Subgroup templates.

/// C_G(e1) in L1: rows (1,0,0), (0,b2,0), (0,b3,1).
template <ExactScalar S>
bool in_c1_template(const Matrix<S>& m) {
  return in_family1_shape(m) && m(1, 0).is_zero() && m(2, 0).is_zero();
}

/// C_G(e2) in L1: rows (1,0,0), (a2,1,a2), (a3,0,1+a3).
template <ExactScalar S>
bool in_c2_template(const Matrix<S>& m) {
  return in_family1_shape(m) && m(1, 1) == S::from_int(field_of(m), 1) && m(2, 1).is_zero();
}

/// Unitriangular part of C1: b2 = 1.
template <ExactScalar S>
bool in_c3_template(const Matrix<S>& m) {
  return in_c1_template(m) && m(1, 1) == S::from_int(field_of(m), 1);
}

/// Diagonal part of C1: b3 = 0.
template <ExactScalar S>
bool in_c4_template(const Matrix<S>& m) {
  return in_c1_template(m) && m(2, 1).is_zero();
}

/// {g in G : g e_i = e_i}, i 0-based.
template <ExactScalar S>
MatrixGroupSet<S> centralizer_of_basis(const MatrixGroupSet<S>& g, Index i) {
  if (i < 0 || i >= g.size()) throw Error(Errc::DimensionMismatch, "basis index out of range");
  if (!is_group(g)) throw Error(Errc::NotAGroup, "centralizer needs a group");
  const auto e = unit_vector<S>(g.field(), g.size(), i);
  return g.filter([&](const Matrix<S>& m) { return m.col(i) == e; });
}

/// m = c2 * c1 with c2 in C_G(e2), c1 in C_G(e1), using
/// k3 = b3 (1+a3)^-1 and k2 = b2 - a2 b3 (1+a3)^-1. Defined only where
/// 1 + a3 != 0.
template <ExactScalar S>
std::pair<Matrix<S>, Matrix<S>> factor_c2c1(const Matrix<S>& m) {
  const auto p = family1_params(m);
  const Field f = field_of(m);
  const S zero = S::from_int(f, 0);
  const S one = S::from_int(f, 1);
  const S corner = one + p.alpha3;
  if (corner.is_zero()) throw Error(Errc::NotFactorable, "1 + alpha3 vanishes");
  const S kappa3 = p.beta3 / corner;
  const S kappa2 = p.beta2 - p.alpha2 * kappa3;
  return {family1_matrix<S>({p.alpha2, p.alpha3, one, zero}),
          family1_matrix<S>({zero, zero, kappa2, kappa3})};
}

/// C = {family2(1, s)} and A = {family2(b, 0)} inside the L2 group.
template <ExactScalar S>
std::pair<MatrixGroupSet<S>, MatrixGroupSet<S>> l2_decomposition(const MatrixGroupSet<S>& g) {
  for (const auto& m : g)
    if (!in_family2_shape(m)) throw Error(Errc::NotInFamily, "element outside the L2 template");
  const S one = S::from_int(g.field(), 1);
  auto c = g.filter([&](const Matrix<S>& m) { return m(1, 1) == one; });
  auto a = g.filter([](const Matrix<S>& m) { return m(2, 1).is_zero(); });
  return {std::move(c), std::move(a)};
}

// ---------------------------------------------------------------------------
// Enumeration oracles (prime fields only). Output is independent of `workers`.

/// Filters every n x n matrix over GF(p), p <= 3, n <= 3.
MatrixGroupSet<ModInt> enumerate_aut_bruteforce(const Algebra<ModInt>& alg, unsigned workers = 1);

/// For 3-dimensional algebras with [L,L] = span{e2,e3}: images of e2 and e3
/// range over [L,L] only (p^7 candidates), p <= 13.
MatrixGroupSet<ModInt> enumerate_aut_pruned(const Algebra<ModInt>& alg, unsigned workers = 1);

template <ExactScalar S>
  requires(!std::same_as<S, ModInt>)
MatrixGroupSet<S> enumerate_aut_bruteforce(const Algebra<S>& alg, unsigned = 1) {
  throw Error(Errc::InfiniteField, "cannot enumerate over " + alg.field().descriptor());
}

template <ExactScalar S>
  requires(!std::same_as<S, ModInt>)
MatrixGroupSet<S> enumerate_aut_pruned(const Algebra<S>& alg, unsigned = 1) {
  throw Error(Errc::InfiniteField, "cannot enumerate over " + alg.field().descriptor());
}

}  // namespace leibalg

#endif  // LEIBALG_AUTGROUP_HPP
