#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "leibalg/autgroup.hpp"

namespace leibalg {

namespace {

/// Structure constants as residues, with only the nonzero entries kept.
class ResidueAlgebra {
 public:
  explicit ResidueAlgebra(const Algebra<ModInt>& alg)
      : p_(alg.field().characteristic()), n_(static_cast<int>(alg.dim())) {
    table_.assign(static_cast<std::size_t>(n_ * n_ * n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          const auto v = alg.product(i, j)(k).value();
          table_[static_cast<std::size_t>((i * n_ + j) * n_ + k)] = v;
          if (v != 0) nonzero_.push_back({i, j, k, v});
        }
    inverses_.assign(p_, 0);
    for (std::uint32_t x = 1; x < p_; ++x)
      inverses_[x] = ModInt::from_int(alg.field(), x).inverse().value();
  }

  std::uint32_t p() const { return p_; }
  int n() const { return n_; }

  /// `f` is column-major: f[col * n + row] is the coefficient of e_row in f(e_col).
  bool preserves_bracket(const std::uint32_t* f) const {
    const std::uint64_t p = p_;
    std::array<std::uint64_t, 8> lhs{};
    std::array<std::uint64_t, 8> rhs{};
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        // lhs = f([e_i, e_j])
        for (int k = 0; k < n_; ++k) {
          std::uint64_t acc = 0;
          for (int l = 0; l < n_; ++l)
            acc += std::uint64_t{f[l * n_ + k]} * table_[static_cast<std::size_t>((i * n_ + j) * n_ + l)];
          lhs[static_cast<std::size_t>(k)] = acc % p;
          rhs[static_cast<std::size_t>(k)] = 0;
        }
        // rhs = [f(e_i), f(e_j)]
        for (const auto& c : nonzero_) {
          const std::uint64_t a = f[i * n_ + c.a];
          const std::uint64_t b = f[j * n_ + c.b];
          if (a == 0 || b == 0) continue;
          rhs[static_cast<std::size_t>(c.k)] = (rhs[static_cast<std::size_t>(c.k)] + a * b % p * c.v) % p;
        }
        for (int k = 0; k < n_; ++k)
          if (lhs[static_cast<std::size_t>(k)] != rhs[static_cast<std::size_t>(k)]) return false;
      }
    return true;
  }

  bool invertible(const std::uint32_t* f) const {
    std::array<std::uint64_t, 64> m{};
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) m[static_cast<std::size_t>(r * n_ + c)] = f[c * n_ + r];
    const std::uint64_t p = p_;
    for (int col = 0; col < n_; ++col) {
      int pivot = col;
      while (pivot < n_ && m[static_cast<std::size_t>(pivot * n_ + col)] == 0) ++pivot;
      if (pivot == n_) return false;
      for (int c = 0; c < n_; ++c)
        std::swap(m[static_cast<std::size_t>(pivot * n_ + c)], m[static_cast<std::size_t>(col * n_ + c)]);
      const std::uint64_t inv = inverses_[m[static_cast<std::size_t>(col * n_ + col)]];
      for (int r = col + 1; r < n_; ++r) {
        const auto factor = m[static_cast<std::size_t>(r * n_ + col)] * inv % p;
        if (factor == 0) continue;
        for (int c = col; c < n_; ++c) {
          auto& x = m[static_cast<std::size_t>(r * n_ + c)];
          x = (x + p - factor * m[static_cast<std::size_t>(col * n_ + c)] % p) % p;
        }
      }
    }
    return true;
  }

  Matrix<ModInt> to_matrix(const Field& field, const std::uint32_t* f) const {
    Matrix<ModInt> m = zero_matrix<ModInt>(field, n_, n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) m(r, c) = ModInt::from_int(field, f[c * n_ + r]);
    return m;
  }

 private:
  struct Entry {
    int a, b, k;
    std::uint64_t v;
  };

  std::uint32_t p_;
  int n_;
  std::vector<std::uint32_t> table_;
  std::vector<Entry> nonzero_;
  std::vector<std::uint64_t> inverses_;
};

/// Scans every matrix whose `free` cells (column-major offsets) range over
/// GF(p) and whose other cells are 0. The index range is split into
/// contiguous blocks, one per worker, each walked as an odometer.
MatrixGroupSet<ModInt> filter_candidates(const Algebra<ModInt>& alg, const std::vector<int>& free,
                                         unsigned workers, Provenance provenance) {
  const ResidueAlgebra kernel(alg);
  const int n = kernel.n();
  const std::uint32_t p = kernel.p();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < free.size(); ++k) total *= p;
  workers = std::max(1u, workers);
  std::vector<std::vector<std::vector<std::uint32_t>>> found(workers);

  auto scan = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    std::vector<std::uint32_t> f(static_cast<std::size_t>(n * n), 0);
    auto rest = begin;
    for (int cell : free) {
      f[static_cast<std::size_t>(cell)] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (kernel.preserves_bracket(f.data()) && kernel.invertible(f.data())) found[w].push_back(f);
      for (int cell : free) {
        auto& d = f[static_cast<std::size_t>(cell)];
        if (++d < p) break;
        d = 0;
      }
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }

  std::vector<Matrix<ModInt>> elements;
  for (const auto& block : found)
    for (const auto& f : block) elements.push_back(kernel.to_matrix(alg.field(), f.data()));
  return MatrixGroupSet<ModInt>(alg.field(), n, std::move(elements), provenance);
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

MatrixGroupSet<ModInt> enumerate_aut_bruteforce(const Algebra<ModInt>& alg, unsigned workers) {
  const auto p = alg.field().characteristic();
  if (p > kBruteForceMaxPrime || alg.dim() > 3)
    throw Error(Errc::FieldTooLarge, "brute force is limited to GF(p), p <= 3, dimension <= 3");
  std::vector<int> free(static_cast<std::size_t>(alg.dim() * alg.dim()));
  for (std::size_t k = 0; k < free.size(); ++k) free[k] = static_cast<int>(k);
  return filter_candidates(alg, free, workers, Provenance::BruteForce);
}

MatrixGroupSet<ModInt> enumerate_aut_pruned(const Algebra<ModInt>& alg, unsigned workers) {
  const auto p = alg.field().characteristic();
  if (p > kPrunedMaxPrime)
    throw Error(Errc::FieldTooLarge, "pruned enumeration is limited to GF(p), p <= 13");
  if (alg.dim() != 3) throw Error(Errc::ShapeUnsupported, "pruned enumeration needs dimension 3");
  const Field& f = alg.field();
  std::vector<Vector<ModInt>> products;
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) products.push_back(alg.product(i, j));
  const std::vector<Vector<ModInt>> e23 = {unit_vector<ModInt>(f, 3, 1), unit_vector<ModInt>(f, 3, 2)};
  if (!(Subspace<ModInt>::span(f, 3, products) == Subspace<ModInt>::span(f, 3, e23)))
    throw Error(Errc::ShapeUnsupported, "[L,L] is not span{e2, e3}");

  // Column 0 free; columns 1 and 2 inside span{e2, e3}.
  return filter_candidates(alg, {0, 1, 2, 4, 5, 7, 8}, workers, Provenance::PrunedEnumeration);
}

MatrixGroupSet<ModInt> family1_set(const Field& f) {
  const auto elements = enumerate_elements(f);
  std::vector<Matrix<ModInt>> out;
  for (const auto& a2 : elements)
    for (const auto& a3 : elements)
      for (const auto& b2 : elements)
        for (const auto& b3 : elements) {
          const Family1Params<ModInt> params{a2, a3, b2, b3};
          if (!family1_det(params).is_zero()) out.push_back(family1_matrix(params));
        }
  return MatrixGroupSet<ModInt>(f, 3, std::move(out), Provenance::ClosedFormFamily);
}

MatrixGroupSet<ModInt> family2_set(const Field& f) {
  const auto elements = enumerate_elements(f);
  std::vector<Matrix<ModInt>> out;
  for (const auto& beta : elements)
    for (const auto& sigma : elements)
      if (!beta.is_zero()) out.push_back(family2_matrix<ModInt>({beta, sigma}));
  return MatrixGroupSet<ModInt>(f, 3, std::move(out), Provenance::ClosedFormFamily);
}

MatrixGroupSet<ModInt> general_linear_set(const Field& f, Index n) {
  if (!f.is_finite()) throw Error(Errc::InfiniteField, "cannot enumerate over " + f.descriptor());
  const auto p = f.characteristic();
  const auto cells = static_cast<unsigned>(n * n);
  if (n < 1 || static_cast<double>(cells) * std::log2(static_cast<double>(p)) > 24.0)
    throw Error(Errc::FieldTooLarge, "GL_n(p) scan limited to p^(n^2) <= 2^24");
  std::vector<Matrix<ModInt>> out;
  const auto total = ipow(p, cells);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix<ModInt> m = zero_matrix<ModInt>(f, n, n);
    auto rest = idx;
    for (Index k = 0; k < n * n; ++k) {
      m(k / n, k % n) = ModInt::from_int(f, static_cast<std::int64_t>(rest % p));
      rest /= p;
    }
    if (!mat_det<ModInt>(m).is_zero()) out.push_back(std::move(m));
  }
  return MatrixGroupSet<ModInt>(f, n, std::move(out), Provenance::BruteForce);
}

}  // namespace leibalg
