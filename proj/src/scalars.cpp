#include <charconv>
#include <utility>

#include "leibalg/modint.hpp"
#include "leibalg/rational.hpp"

namespace leibalg {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

ModInt ModInt::parse(const Field& f, std::string_view text) {
  if (!f.is_prime_field()) throw Error(Errc::FieldMismatch, "ModInt needs a prime field");
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(Errc::MalformedSpec, "bad GF(p) literal '" + std::string(text) + "'");
  return from_int(f, n);
}

ModInt ModInt::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0");
  if (!bound()) {
    if (v_ == 1 || v_ == -1) return *this;
    throw Error(Errc::FieldMismatch, "inverse of an unbound literal");
  }
  // Extended Euclid on (v, p).
  std::int64_t r0 = p_, r1 = v_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const auto q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return ModInt(reduce(s0, p_), p_);
}

std::vector<ModInt> enumerate_elements(const Field& f) {
  if (!f.is_finite()) throw Error(Errc::InfiniteField, "cannot enumerate " + f.descriptor());
  std::vector<ModInt> out;
  out.reserve(f.characteristic());
  for (std::uint32_t v = 0; v < f.characteristic(); ++v) out.push_back(ModInt::from_int(f, v));
  return out;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  // Boost rejects negative denominators, so move the sign to the numerator.
  q_ = den < 0 ? Repr(-num, -den) : Repr(num, den);
}

Rational Rational::parse(const Field& f, std::string_view text) {
  if (f.kind() != Field::Kind::Rationals)
    throw Error(Errc::FieldMismatch, "Rational needs the rationals");
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(Errc::MalformedSpec, "bad rational literal '" + std::string(text) + "'");
  auto strip = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  return Rational(BigInt(strip(num)), BigInt(strip(den)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0");
  return Rational(Repr(1) / q_);
}

std::string Rational::to_string() const {
  if (denominator() == 1) return numerator().str();
  return to_fraction_string();
}

std::string Rational::to_fraction_string() const {
  return numerator().str() + "/" + denominator().str();
}

}  // namespace leibalg
