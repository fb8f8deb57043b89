#ifndef LEIBALG_TESTS_SUPPORT_HPP
#define LEIBALG_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "leibalg/autgroup.hpp"
#include "oracle.hpp"

namespace testing_support {

using namespace leibalg;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x1eb2a1c3ULL);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline ModInt random_mod(const Field& f) { return ModInt::from_int(f, uniform(0, f.characteristic() - 1)); }

inline Rational random_rational(std::int64_t bound = 9) {
  return Rational(BigInt(uniform(-bound, bound)), BigInt(uniform(1, bound)));
}

inline Rational random_nonzero_rational(std::int64_t bound = 9) {
  for (;;) {
    auto q = random_rational(bound);
    if (!q.is_zero()) return q;
  }
}

template <ExactScalar S>
S random_scalar(const Field& f) {
  if constexpr (std::is_same_v<S, ModInt>)
    return random_mod(f);
  else
    return random_rational();
}

template <ExactScalar S>
Matrix<S> random_matrix(const Field& f, Index rows, Index cols) {
  Matrix<S> m = zero_matrix<S>(f, rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_scalar<S>(f);
  return m;
}

template <ExactScalar S>
Vector<S> random_vector(const Field& f, Index n) {
  Vector<S> v = zero_vector<S>(f, n);
  for (Index i = 0; i < n; ++i) v(i) = random_scalar<S>(f);
  return v;
}

template <ExactScalar S>
Matrix<S> random_invertible(const Field& f, Index n) {
  for (;;) {
    auto m = random_matrix<S>(f, n, n);
    if (!mat_det<S>(m).is_zero()) return m;
  }
}

template <ExactScalar S>
Family1Params<S> random_family1_params(const Field& f) {
  for (;;) {
    Family1Params<S> p{random_scalar<S>(f), random_scalar<S>(f), random_scalar<S>(f), random_scalar<S>(f)};
    if (!family1_det(p).is_zero()) return p;
  }
}

inline Family1Params<Rational> random_family1_rational() {
  return random_family1_params<Rational>(Field::rationals());
}

inline oracle::Mat3 to_mat3(const Matrix<ModInt>& m) {
  oracle::Mat3 out{};
  for (Index r = 0; r < 3; ++r)
    for (Index c = 0; c < 3; ++c) out[static_cast<std::size_t>(3 * r + c)] = static_cast<int>(m(r, c).value());
  return out;
}

inline std::vector<oracle::Mat3> to_mat3s(const MatrixGroupSet<ModInt>& g) {
  std::vector<oracle::Mat3> out;
  for (const auto& m : g) out.push_back(to_mat3(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline Matrix<ModInt> mod_matrix(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  return matrix_from_rows<ModInt>(Field::prime(p), rows);
}

}  // namespace testing_support

#endif  // LEIBALG_TESTS_SUPPORT_HPP
