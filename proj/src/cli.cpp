#include "leibalg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>

#include "leibalg/report.hpp"

namespace leibalg {

namespace {

struct Options {
  std::string algebra;
  std::string file;
  std::string field;
  std::string lambda;
  std::string primes;
  std::string format = "json";
  std::string output;
  unsigned workers = 1;
};

AlgebraKind parse_kind(const std::string& name) {
  if (name == "L1") return AlgebraKind::L1;
  if (name == "L2") return AlgebraKind::L2;
  throw Error(Errc::MalformedSpec, "unknown algebra '" + name + "' (expected L1 or L2)");
}

template <ExactScalar S>
Algebra<S> build_builtin(AlgebraKind kind, const Field& f, const std::string& lambda) {
  if (kind == AlgebraKind::L1) {
    if (!lambda.empty()) throw Error(Errc::MalformedSpec, "--lambda only applies to L2");
    return make_l1<S>(f);
  }
  if (lambda.empty()) throw Error(Errc::MalformedSpec, "L2 needs --lambda");
  return make_l2<S>(f, S::parse(f, lambda));
}

/// Builds the algebra named by --algebra/--field/--lambda or read from --file.
std::pair<AnyAlgebra, AlgebraSource> load_algebra(const Options& opt) {
  if (opt.algebra.empty() == opt.file.empty())
    throw Error(Errc::MalformedSpec, "give exactly one of --algebra and --file");

  if (!opt.file.empty()) {
    if (!opt.lambda.empty()) throw Error(Errc::MalformedSpec, "--lambda does not apply to --file");
    std::ifstream in(opt.file);
    if (!in) throw Error(Errc::MalformedSpec, "cannot read " + opt.file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw Error(Errc::MalformedSpec, opt.file + ": " + e.what());
    }
    auto alg = algebra_from_json(j);
    if (!opt.field.empty()) {
      const Field requested = Field::parse(opt.field);
      const Field& actual = std::visit([](const auto& a) -> const Field& { return a.field(); }, alg);
      if (!(requested == actual))
        throw Error(Errc::FieldMismatch, "--field disagrees with the field in " + opt.file);
    }
    return {std::move(alg), AlgebraSource{AlgebraKind::Custom, opt.file, std::nullopt}};
  }

  if (opt.field.empty()) throw Error(Errc::MalformedSpec, "--field is required with --algebra");
  const AlgebraKind kind = parse_kind(opt.algebra);
  const Field f = Field::parse(opt.field);
  AlgebraSource source{kind, opt.algebra, std::nullopt};
  if (f.is_prime_field()) {
    auto alg = build_builtin<ModInt>(kind, f, opt.lambda);
    if (kind == AlgebraKind::L2) source.lambda = ModInt::parse(f, opt.lambda).to_string();
    return {std::move(alg), source};
  }
  auto alg = build_builtin<Rational>(kind, f, opt.lambda);
  if (kind == AlgebraKind::L2) source.lambda = Rational::parse(f, opt.lambda).to_string();
  return {std::move(alg), source};
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string token = text.substr(start, end - start);
    std::uint32_t p = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), p);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw Error(Errc::MalformedSpec, "bad prime '" + token + "' in --primes");
    out.push_back(p);
    start = end + 1;
  }
  return out;
}

void emit(const Options& opt, const Json& report, std::ostream& out) {
  const std::string text = opt.format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw Error(Errc::MalformedSpec, "cannot write " + opt.output);
  file << text;
}

int finish(const Options& opt, const PipelineResult& res, std::ostream& out) {
  emit(opt, res.report, out);
  return res.passed ? kExitOk : kExitMismatch;
}

int cmd_check(const Options& opt, std::ostream& out) {
  if (!opt.primes.empty()) throw Error(Errc::MalformedSpec, "--primes only applies to sweep");
  const auto [alg, source] = load_algebra(opt);
  return finish(opt, run_check(alg, source), out);
}

int cmd_aut(const Options& opt, std::ostream& out) {
  if (!opt.primes.empty()) throw Error(Errc::MalformedSpec, "--primes only applies to sweep");
  const auto [alg, source] = load_algebra(opt);
  const auto* finite = std::get_if<Algebra<ModInt>>(&alg);
  if (finite == nullptr) throw Error(Errc::InfiniteField, "automorphism enumeration needs a prime field");
  return finish(opt, run_aut(*finite, source, opt.workers), out);
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  if (!opt.file.empty() || !opt.lambda.empty() || !opt.field.empty())
    throw Error(Errc::MalformedSpec, "sweep takes --primes and optionally --algebra");
  std::vector<AlgebraKind> kinds = {AlgebraKind::L1, AlgebraKind::L2};
  if (!opt.algebra.empty()) kinds = {parse_kind(opt.algebra)};
  return finish(opt, run_sweep(kinds, parse_primes(opt.primes), opt.workers), out);
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InfiniteField:
    case Errc::FieldTooLarge:
    case Errc::ShapeUnsupported:
      return kExitGuard;
    case Errc::NotLeibniz:
    case Errc::SingularMatrix:
    case Errc::NotAGroup:
    case Errc::NotFactorable:
    case Errc::NotSubset:
      return kExitMismatch;
    default:
      return kExitInput;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leibniz algebra invariants and automorphism groups over exact fields", "leibalg"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("LEIBALG_WORKERS")) {
    unsigned w = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), w);
    if (ec == std::errc() && ptr == s.data() + s.size() && w > 0) opt.workers = w;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", opt.algebra, "Built-in algebra")->check(CLI::IsMember({"L1", "L2"}));
    sub->add_option("--field", opt.field, "gf:<p> or rationals");
    sub->add_option("--lambda", opt.lambda, "L2 parameter, a nonzero field element");
    sub->add_option("--file", opt.file, "Algebra JSON file");
    sub->add_option("--primes", opt.primes, "Comma-separated primes for sweep");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", opt.output, "Write the report here instead of stdout");
    sub->add_option("--workers", opt.workers, "Enumeration threads (default LEIBALG_WORKERS or 1)")
        ->check(CLI::Range(1u, 256u));
  };
  auto* check = app.add_subcommand("check", "Leibniz identity and invariant subspaces");
  auto* aut = app.add_subcommand("aut", "Automorphism group with oracle cross-checks");
  auto* sweep = app.add_subcommand("sweep", "Automorphism summary over several primes");
  for (auto* sub : {check, aut, sweep}) add_common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (aut->parsed()) return cmd_aut(opt, out);
    return cmd_sweep(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace leibalg
