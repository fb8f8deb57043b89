#ifndef LEIBALG_RATIONAL_HPP
#define LEIBALG_RATIONAL_HPP

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "leibalg/field.hpp"

namespace leibalg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number: reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  explicit Rational(std::int64_t n) : q_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  static Rational from_int(const Field& f, std::int64_t n) {
    if (f.kind() != Field::Kind::Rationals)
      throw Error(Errc::FieldMismatch, "Rational needs the rationals");
    return Rational(n);
  }
  /// Accepts "n" or "n/d".
  static Rational parse(const Field& f, std::string_view text);

  static Field field() { return Field::rationals(); }

  BigInt numerator() const { return boost::multiprecision::numerator(q_); }
  BigInt denominator() const { return boost::multiprecision::denominator(q_); }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  Rational inverse() const;
  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  /// Always "n/d".
  std::string to_fraction_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational operator-() const { return Rational(Repr(-q_)); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.q_ < b.q_) return std::strong_ordering::less;
    if (b.q_ < a.q_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Repr = boost::multiprecision::cpp_rational;
  explicit Rational(Repr q) : q_(std::move(q)) {}

  Repr q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace leibalg

namespace Eigen {

template <>
struct NumTraits<leibalg::Rational> : GenericNumTraits<leibalg::Rational> {
  using Real = leibalg::Rational;
  using NonInteger = leibalg::Rational;
  using Literal = leibalg::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // LEIBALG_RATIONAL_HPP
