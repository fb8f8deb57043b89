#ifndef LEIBALG_TESTS_ORACLE_HPP
#define LEIBALG_TESTS_ORACLE_HPP

// Plain-integer reference computations. Nothing here uses the library, so
// agreement with it is an independent check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

// t[i][j][k]: coefficient of e_k in [e_i, e_j].
using Table = std::array<std::array<std::array<int, 3>, 3>, 3>;
// Row-major 3x3; entry (r, c) is the e_r coefficient of f(e_c).
using Mat3 = std::array<int, 9>;

inline int mod(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

// [e1,e1] = [e1,e3] = e3, [e1,e2] = e2 + lambda e3.
inline Table family_table(int lambda) {
  Table t{};
  t[0][0][2] = 1;
  t[0][2][2] = 1;
  t[0][1][1] = 1;
  t[0][1][2] = lambda;
  return t;
}

inline std::array<int, 3> bracket(const Table& t, const std::array<int, 3>& x,
                                  const std::array<int, 3>& y, int p) {
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[k] = mod(out[k] + 1LL * x[i] * y[j] * t[i][j][k], p);
  return out;
}

inline int det3(const Mat3& m, int p) {
  const long long d = 1LL * m[0] * (m[4] * m[8] - m[5] * m[7]) - 1LL * m[1] * (m[3] * m[8] - m[5] * m[6]) +
                      1LL * m[2] * (m[3] * m[7] - m[4] * m[6]);
  return mod(d, p);
}

inline std::array<int, 3> column(const Mat3& m, int c) { return {m[c], m[3 + c], m[6 + c]}; }

inline std::array<int, 3> apply(const Mat3& m, const std::array<int, 3>& v, int p) {
  std::array<int, 3> out{};
  for (int r = 0; r < 3; ++r) out[r] = mod(1LL * m[3 * r] * v[0] + 1LL * m[3 * r + 1] * v[1] + 1LL * m[3 * r + 2] * v[2], p);
  return out;
}

inline bool is_automorphism(const Table& t, const Mat3& m, int p) {
  if (det3(m, p) == 0) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const std::array<int, 3> eij = {t[i][j][0], t[i][j][1], t[i][j][2]};
      if (apply(m, eij, p) != bracket(t, column(m, i), column(m, j), p)) return false;
    }
  return true;
}

// Every invertible 3x3 matrix over GF(p) that preserves the bracket, sorted.
inline std::vector<Mat3> automorphisms(const Table& t, int p) {
  std::vector<Mat3> out;
  Mat3 m{};
  long long total = 1;
  for (int k = 0; k < 9; ++k) total *= p;
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    for (int k = 0; k < 9; ++k) {
      m[k] = static_cast<int>(rest % p);
      rest /= p;
    }
    if (is_automorphism(t, m, p)) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t gl2_order(int p) {
  std::size_t count = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (mod(1LL * a * d - 1LL * b * c, p) != 0) ++count;
  return count;
}

struct Violation {
  int i, j, k;
};

// First basis triple (lexicographic, 0-based) where
// [x,[y,z]] != [[x,y],z] + [y,[x,z]].
inline std::optional<Violation> leibniz_violation(const Table& t, int p) {
  auto e = [](int i) {
    std::array<int, 3> v{};
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const auto lhs = bracket(t, e(i), bracket(t, e(j), e(k), p), p);
        const auto a = bracket(t, bracket(t, e(i), e(j), p), e(k), p);
        const auto b = bracket(t, e(j), bracket(t, e(i), e(k), p), p);
        const std::array<int, 3> rhs = {mod(a[0] + b[0], p), mod(a[1] + b[1], p), mod(a[2] + b[2], p)};
        if (lhs != rhs) return Violation{i, j, k};
      }
  return std::nullopt;
}

}  // namespace oracle

#endif  // LEIBALG_TESTS_ORACLE_HPP
