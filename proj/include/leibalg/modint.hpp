#ifndef LEIBALG_MODINT_HPP
#define LEIBALG_MODINT_HPP

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "leibalg/field.hpp"

namespace leibalg {

/// An element of GF(p) with a runtime modulus.
///
/// A value built from a bare integer (as Eigen does for Scalar(0) and
/// Scalar(1)) is an unbound literal. It adopts the modulus of the first bound
/// operand it meets. Two bound operands with different moduli raise
/// FieldMismatch.
class ModInt {
 public:
  ModInt() = default;
  explicit ModInt(std::int64_t literal) : v_(literal) {}

  static ModInt from_int(const Field& f, std::int64_t n) {
    if (!f.is_prime_field()) throw Error(Errc::FieldMismatch, "ModInt needs a prime field");
    return ModInt(reduce(n, f.characteristic()), f.characteristic());
  }
  static ModInt parse(const Field& f, std::string_view text);

  bool bound() const noexcept { return p_ != 0; }
  std::uint32_t modulus() const noexcept { return p_; }
  /// Canonical representative in [0, p).
  std::uint32_t value() const noexcept { return static_cast<std::uint32_t>(v_); }
  Field field() const {
    if (!bound()) throw Error(Errc::FieldMismatch, "unbound integer literal has no field");
    return Field(Field::Kind::Prime, p_);
  }

  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  ModInt inverse() const;
  std::string to_string() const { return std::to_string(v_); }

  friend ModInt operator+(const ModInt& a, const ModInt& b) {
    const auto p = common(a, b);
    if (p == 0) return ModInt(a.v_ + b.v_);
    return ModInt((lift(a, p) + lift(b, p)) % p, p);
  }
  friend ModInt operator-(const ModInt& a, const ModInt& b) {
    const auto p = common(a, b);
    if (p == 0) return ModInt(a.v_ - b.v_);
    return ModInt((lift(a, p) + p - lift(b, p)) % p, p);
  }
  friend ModInt operator*(const ModInt& a, const ModInt& b) {
    const auto p = common(a, b);
    if (p == 0) return ModInt(a.v_ * b.v_);
    return ModInt((lift(a, p) * lift(b, p)) % p, p);
  }
  friend ModInt operator/(const ModInt& a, const ModInt& b) {
    const auto p = common(a, b);
    if (p == 0) throw Error(Errc::FieldMismatch, "division of unbound literals");
    return a * ModInt(lift(b, p), p).inverse();
  }
  ModInt operator-() const { return p_ == 0 ? ModInt(-v_) : ModInt((p_ - v_) % p_, p_); }

  ModInt& operator+=(const ModInt& o) { return *this = *this + o; }
  ModInt& operator-=(const ModInt& o) { return *this = *this - o; }
  ModInt& operator*=(const ModInt& o) { return *this = *this * o; }
  ModInt& operator/=(const ModInt& o) { return *this = *this / o; }

  friend bool operator==(const ModInt& a, const ModInt& b) {
    const auto p = common(a, b);
    if (p == 0) return a.v_ == b.v_;
    return lift(a, p) == lift(b, p);
  }
  friend std::strong_ordering operator<=>(const ModInt& a, const ModInt& b) {
    const auto p = common(a, b);
    if (p == 0) return a.v_ <=> b.v_;
    return lift(a, p) <=> lift(b, p);
  }

 private:
  ModInt(std::uint64_t v, std::uint32_t p) : v_(static_cast<std::int64_t>(v)), p_(p) {}

  static std::uint64_t reduce(std::int64_t n, std::uint32_t p) {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((n % m) + m) % m);
  }
  static std::uint32_t common(const ModInt& a, const ModInt& b) {
    if (a.p_ == b.p_ || b.p_ == 0) return a.p_;
    if (a.p_ == 0) return b.p_;
    throw Error(Errc::FieldMismatch,
                "GF(" + std::to_string(a.p_) + ") vs GF(" + std::to_string(b.p_) + ")");
  }
  static std::uint64_t lift(const ModInt& x, std::uint32_t p) {
    return x.p_ == p ? static_cast<std::uint64_t>(x.v_) : reduce(x.v_, p);
  }

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ModInt& x) { return os << x.to_string(); }

/// 0, 1, ..., p-1 in ascending order.
std::vector<ModInt> enumerate_elements(const Field& f);

}  // namespace leibalg

namespace Eigen {

template <>
struct NumTraits<leibalg::ModInt> : GenericNumTraits<leibalg::ModInt> {
  using Real = leibalg::ModInt;
  using NonInteger = leibalg::ModInt;
  using Literal = leibalg::ModInt;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // LEIBALG_MODINT_HPP
