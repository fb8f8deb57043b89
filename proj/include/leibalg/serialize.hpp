#ifndef LEIBALG_SERIALIZE_HPP
#define LEIBALG_SERIALIZE_HPP

#include <json.hpp>

#include <string>
#include <variant>

#include "leibalg/autgroup.hpp"

namespace leibalg {

using Json = nlohmann::ordered_json;

// Field elements: GF(p) as decimal integers, rationals as "num/den".
inline std::string element_string(const ModInt& x) { return x.to_string(); }
inline std::string element_string(const Rational& x) { return x.to_fraction_string(); }

inline Json element_json(const ModInt& x) { return x.value(); }
inline Json element_json(const Rational& x) { return x.to_fraction_string(); }

template <ExactScalar S>
S element_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return S::from_int(f, j.get<std::int64_t>());
  if (j.is_string()) return S::parse(f, j.get<std::string>());
  throw Error(Errc::MalformedSpec, "field element must be an integer or a string");
}

/// "e1 + 4e3", "e1 - e3", "0". Indices are 1-based.
template <ExactScalar S>
std::string format_vector(const Vector<S>& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    std::string coeff = v(i).to_string();
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (coeff != "1") out += coeff.find('/') != std::string::npos ? "(" + coeff + ")" : coeff;
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

template <ExactScalar S>
std::string format_subspace(const Subspace<S>& u) {
  if (u.dim() == 0) return "<0>";
  std::string out = "span{";
  for (std::size_t i = 0; i < u.basis().size(); ++i) {
    if (i > 0) out += ", ";
    out += format_vector<S>(u.basis()[i]);
  }
  return out + "}";
}

template <ExactScalar S>
Json subspace_json(const Subspace<S>& u) {
  Json basis = Json::array();
  for (const auto& v : u.basis()) basis.push_back(format_vector<S>(v));
  return Json{{"dim", u.dim()}, {"basis", basis}, {"text", format_subspace(u)}};
}

/// Row-major nested arrays of element strings.
template <ExactScalar S>
Json matrix_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(element_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <ExactScalar S>
Json family1_params_json(const Family1Params<S>& p) {
  return Json{{"alpha2", element_string(p.alpha2)},
              {"alpha3", element_string(p.alpha3)},
              {"beta2", element_string(p.beta2)},
              {"beta3", element_string(p.beta3)}};
}

template <ExactScalar S>
Json family2_params_json(const Family2Params<S>& p) {
  return Json{{"beta", element_string(p.beta)}, {"sigma", element_string(p.sigma)}};
}

enum class FamilyTag { None, L1, L2 };

template <ExactScalar S>
Json group_set_json(const MatrixGroupSet<S>& g, const std::string& algebra,
                    FamilyTag family = FamilyTag::None) {
  Json elements = Json::array();
  for (const auto& m : g) {
    if (family == FamilyTag::L1 && in_family1_shape(m))
      elements.push_back(Json{{"params", family1_params_json(family1_params(m))}, {"matrix", matrix_json(m)}});
    else if (family == FamilyTag::L2 && in_family2_shape(m))
      elements.push_back(Json{{"params", family2_params_json(family2_params(m))}, {"matrix", matrix_json(m)}});
    else
      elements.push_back(matrix_json(m));
  }
  return Json{{"field", g.field().descriptor()},
              {"algebra", algebra},
              {"provenance", std::string(to_string(g.provenance()))},
              {"order", g.order()},
              {"elements", std::move(elements)}};
}

template <ExactScalar S>
Json algebra_json(const Algebra<S>& alg) {
  Json table = Json::array();
  for (Index i = 0; i < alg.dim(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < alg.dim(); ++j) {
      Json coords = Json::array();
      for (Index k = 0; k < alg.dim(); ++k) coords.push_back(element_json(alg.product(i, j)(k)));
      row.push_back(std::move(coords));
    }
    table.push_back(std::move(row));
  }
  return Json{{"field", alg.field().descriptor()}, {"dim", alg.dim()}, {"table", std::move(table)}};
}

using AnyAlgebra = std::variant<Algebra<ModInt>, Algebra<Rational>>;

/// Parses { "field", "dim", "table" }; table[i][j] holds the coordinates of
/// [e_i, e_j] with 0-based indices.
AnyAlgebra algebra_from_json(const Json& j);

template <ExactScalar S>
Json certificate_json(const DecompositionCertificate<S>& c) {
  Json checks{{"n_normal", c.n_normal},
              {"h_subgroup", c.h_subgroup},
              {"trivial_intersection", c.trivial_intersection},
              {"product_covers", c.product_covers}};
  if (c.h_normal) checks["h_normal"] = *c.h_normal;
  Json out{{"kind", std::string(to_string(c.kind))},
           {"n_order", c.normal_part.order()},
           {"h_order", c.complement.order()},
           {"checks", std::move(checks)},
           {"coverage", c.coverage.to_string()},
           {"certified", c.certified()}};
  if (c.normality_witness)
    out["normality_witness"] = Json::array(
        {matrix_json(c.normality_witness->first), matrix_json(c.normality_witness->second)});
  if (c.uncovered_witness) out["uncovered_witness"] = matrix_json(*c.uncovered_witness);
  return out;
}

template <ExactScalar S>
Json group_report_json(const GroupReport<S>& r) {
  Json out{{"order", r.order}, {"is_group", r.is_group}, {"abelian", r.abelian}, {"cyclic", r.cyclic}};
  if (!r.is_group) {
    out["group_failure"] = r.group_failure;
    Json w = Json::array();
    for (const auto& m : r.group_witness) w.push_back(matrix_json(m));
    out["group_witness"] = std::move(w);
  }
  if (r.abelian_witness)
    out["abelian_witness"] =
        Json::array({matrix_json(r.abelian_witness->first), matrix_json(r.abelian_witness->second)});
  if (r.generator_witness) out["generator"] = matrix_json(*r.generator_witness);
  return out;
}

template <ExactScalar S>
Json hom_check_json(const HomCheck<S>& h) {
  Json out{{"homomorphism", h.homomorphism},
           {"injective", h.injective},
           {"surjective", h.surjective},
           {"kernel_trivial", h.kernel_trivial}};
  if (h.witness)
    out["witness"] = Json::array({matrix_json(h.witness->first), matrix_json(h.witness->second)});
  return out;
}

template <ExactScalar S>
Json cyclic_json(const CyclicCheck<S>& c, std::size_t n) {
  Json out{{"target_order", n}, {"isomorphic", c.isomorphic}};
  if (c.generator) out["generator"] = matrix_json(*c.generator);
  return out;
}

}  // namespace leibalg

#endif  // LEIBALG_SERIALIZE_HPP
