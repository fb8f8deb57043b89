#ifndef LEIBALG_SCALAR_HPP
#define LEIBALG_SCALAR_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "leibalg/field.hpp"
#include "leibalg/modint.hpp"
#include "leibalg/rational.hpp"

namespace leibalg {

/// Exact field scalar usable as an Eigen coefficient type.
template <class S>
concept ExactScalar = requires(const S a, const S b, const Field f, std::int64_t n,
                               std::string_view text) {
  { S::from_int(f, n) } -> std::same_as<S>;
  { S::parse(f, text) } -> std::same_as<S>;
  { a.field() } -> std::same_as<Field>;
  { a.inverse() } -> std::same_as<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a <=> b } -> std::convertible_to<std::strong_ordering>;
};

static_assert(ExactScalar<ModInt>);
static_assert(ExactScalar<Rational>);

}  // namespace leibalg

#endif  // LEIBALG_SCALAR_HPP
