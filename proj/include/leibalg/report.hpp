#ifndef LEIBALG_REPORT_HPP
#define LEIBALG_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibalg/serialize.hpp"

namespace leibalg {

/// Group-structure scans are quadratic in the order; larger groups only get
/// the linear-time checks.
inline constexpr std::size_t kExhaustiveOrderLimit = 500;

enum class AlgebraKind { L1, L2, Custom };

struct AlgebraSource {
  AlgebraKind kind = AlgebraKind::L1;
  std::string name;                  // "L1", "L2" or the file path
  std::optional<std::string> lambda;  // canonical literal, L2 only
};

/// Outcome of one command: the report plus whether every asserted check held.
struct PipelineResult {
  Json report;
  bool passed = true;
};

PipelineResult run_check(const AnyAlgebra& alg, const AlgebraSource& source);
PipelineResult run_aut(const Algebra<ModInt>& alg, const AlgebraSource& source, unsigned workers);
/// One row per (algebra, field, lambda) for every prime; L2 rows cover every
/// nonzero lambda.
PipelineResult run_sweep(const std::vector<AlgebraKind>& algebras,
                         const std::vector<std::uint32_t>& primes, unsigned workers);

/// Human-readable rendering of a report produced above.
std::string render_text(const Json& report);

}  // namespace leibalg

#endif  // LEIBALG_REPORT_HPP
