#include "leibalg/serialize.hpp"

namespace leibalg {

namespace {

template <ExactScalar S>
Algebra<S> parse_table(const Field& f, Index dim, const Json& table) {
  if (!table.is_array() || static_cast<Index>(table.size()) != dim)
    throw Error(Errc::ShapeMismatch, "table must have dim rows");
  typename Algebra<S>::Table t;
  for (const auto& row : table) {
    if (!row.is_array() || static_cast<Index>(row.size()) != dim)
      throw Error(Errc::ShapeMismatch, "table row must have dim entries");
    std::vector<Vector<S>> out_row;
    for (const auto& coords : row) {
      if (!coords.is_array() || static_cast<Index>(coords.size()) != dim)
        throw Error(Errc::ShapeMismatch, "structure constant vector must have dim coordinates");
      Vector<S> v = zero_vector<S>(f, dim);
      for (Index k = 0; k < dim; ++k) v(k) = element_from_json<S>(f, coords[static_cast<std::size_t>(k)]);
      out_row.push_back(std::move(v));
    }
    t.push_back(std::move(out_row));
  }
  return Algebra<S>(f, dim, std::move(t));
}

}  // namespace

AnyAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("dim") || !j.contains("table"))
    throw Error(Errc::MalformedSpec, "algebra JSON needs 'field', 'dim' and 'table'");
  if (!j["field"].is_string() || !j["dim"].is_number_integer())
    throw Error(Errc::MalformedSpec, "'field' must be a string and 'dim' an integer");
  const Field f = Field::parse(j["field"].get<std::string>());
  const auto dim = j["dim"].get<Index>();
  if (dim < 1) throw Error(Errc::ShapeMismatch, "dimension must be at least 1");
  if (f.is_prime_field()) return parse_table<ModInt>(f, dim, j["table"]);
  return parse_table<Rational>(f, dim, j["table"]);
}

}  // namespace leibalg
