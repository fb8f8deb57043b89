#include "leibalg/field.hpp"

#include <charconv>
#include <limits>

namespace leibalg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  // Products of two residues must fit in 64 bits and sums in 32.
  if (p > (std::uint64_t{1} << 31))
    throw Error(Errc::MalformedSpec, "modulus " + std::to_string(p) + " is too large");
  if (!is_prime(p)) throw Error(Errc::CompositeModulus, std::to_string(p) + " is not prime");
  return Field(Kind::Prime, static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view descriptor) {
  if (descriptor == "rationals") return rationals();
  constexpr std::string_view prefix = "gf:";
  if (descriptor.substr(0, prefix.size()) != prefix)
    throw Error(Errc::MalformedSpec, "expected 'gf:<p>' or 'rationals', got '" +
                                         std::string(descriptor) + "'");
  auto digits = descriptor.substr(prefix.size());
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw Error(Errc::MalformedSpec, "bad modulus in '" + std::string(descriptor) + "'");
  return prime(p);
}

std::string Field::descriptor() const {
  return kind_ == Kind::Rationals ? "rationals" : "gf:" + std::to_string(p_);
}

}  // namespace leibalg
