#ifndef LEIBALG_FIELD_HPP
#define LEIBALG_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "leibalg/error.hpp"

namespace leibalg {

bool is_prime(std::uint64_t n);

/// The ground field: a prime field GF(p) or the rationals.
///
/// Descriptors are "gf:<p>" and "rationals". A prime field is only ever
/// constructed with a verified prime modulus.
class Field {
 public:
  enum class Kind { Prime, Rationals };

  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field parse(std::string_view descriptor);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::Prime; }
  bool is_finite() const noexcept { return kind_ == Kind::Prime; }
  /// p for GF(p), 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string descriptor() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class ModInt;
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace leibalg

#endif  // LEIBALG_FIELD_HPP
