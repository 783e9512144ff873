#include "cyclonorm/cli/run.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <vector>

#include "cyclonorm/cli/expr.hpp"
#include "cyclonorm/cli/output.hpp"
#include "cyclonorm/domino.hpp"
#include "cyclonorm/error.hpp"
#include "cyclonorm/norms.hpp"
#include "cyclonorm/quadfield.hpp"
#include "cyclonorm/sequences.hpp"
#include "cyclonorm/sweep.hpp"

namespace cyclonorm::cli {

namespace {

struct Options {
  std::string format = "text";
  unsigned jobs = 1;

  std::string poly;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t max_prime = 0;
  bool all_roots = false;
  bool brute_force = false;
  bool real = false;
  bool imag = false;
  bool all_k = false;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::kJson;
  if (f == "csv") return Format::kCsv;
  return Format::kText;
}

[[noreturn]] void usage_error(const std::string& msg) {
  throw Error(ErrorKind::kPreconditionViolated, msg);
}

void require_range(const Options& o, std::uint64_t lowest, const char* what) {
  if (o.min < lowest) {
    usage_error(std::string(what) + " requires --min >= " + std::to_string(lowest));
  }
  if (o.min > o.max) usage_error("--min must not exceed --max");
}

void require_odd_prime_bound(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    usage_error("--max-prime must be an odd prime (the largest prime checked), got " +
                std::to_string(p));
  }
}

ResultRow norm_row(const std::string& command, const NormReport& rep, const std::string& poly) {
  ResultRow row;
  row.command = command;
  row.n = rep.n;
  row.poly = poly;
  row.value = rep.value;
  row.unit = rep.is_unit;
  row.method = std::string(to_string(rep.method));
  return row;
}

// Runs one verification sweep and emits rows in order; returns whether
// every row came out ok.
bool sweep(const std::vector<std::uint64_t>& items, const Options& o, Emitter& emitter,
           const std::function<ResultRow(std::uint64_t)>& work) {
  bool all_ok = true;
  ordered_parallel_for<std::uint64_t>(std::span<const std::uint64_t>(items), o.jobs, work,
                                      [&](std::uint64_t, ResultRow row) {
                                        if (row.ok && !*row.ok) all_ok = false;
                                        emitter.emit(row);
                                      });
  return all_ok;
}

ResultRow summary_row(const std::string& command, std::size_t checked, bool ok) {
  ResultRow row;
  row.command = command;
  row.value = BigInt(static_cast<unsigned long>(checked));
  row.ok = ok;
  row.note = "summary checked=" + std::to_string(checked);
  return row;
}

std::vector<std::uint64_t> coprime_to_six(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (std::gcd<std::uint64_t>(n, 6) == 1) v.push_back(n);
  }
  return v;
}

std::vector<std::uint64_t> primes_matching(std::uint64_t lo, std::uint64_t hi, std::uint64_t mod4) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (is_prime(p) && (mod4 == 0 || p % 4 == mod4)) v.push_back(p);
  }
  return v;
}

int cmd_norm(const Options& o, Emitter& emitter) {
  const IntPoly r = parse_poly(o.poly);
  if (r.is_zero()) usage_error("--poly must be a nonzero polynomial");
  if (o.n < 2) usage_error("--n must be at least 2");
  const std::string text = render_poly(r);
  if (o.all_roots) {
    emitter.emit(norm_row("norm all-roots", all_roots_report(r, o.n), text));
  } else {
    emitter.emit(norm_row("norm", norm_primitive(r, o.n), text));
  }
  return kExitOk;
}

int cmd_theorem1(const Options& o, Emitter& emitter) {
  require_range(o, 5, "verify theorem1");
  const auto items = coprime_to_six(o.min, o.max);
  const IntPoly r{1, -1, 1};
  const std::string text = render_poly(r);
  const bool ok = sweep(items, o, emitter, [&](std::uint64_t n) {
    const NormReport all = all_roots_report(r, n);
    const NormReport prim = norm_primitive(r, n);
    ResultRow row = norm_row("verify theorem1", all, text);
    row.unit = prim.is_unit;
    row.ok = theorem1_verify(n);
    row.note = "primitive=" + prim.value.get_str();
    return row;
  });
  emitter.emit(summary_row("verify theorem1", items.size(), ok));
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_theorem2(const Options& o, Emitter& emitter) {
  require_odd_prime_bound(o.max_prime);
  const auto items = primes_matching(3, o.max_prime, 0);
  const IntPoly r{1, -1, -1};
  const IntPoly twin{1, 1, -1};
  const std::string text = render_poly(r);
  const bool ok = sweep(items, o, emitter, [&](std::uint64_t p) {
    ResultRow row = norm_row("verify theorem2", norm_primitive(r, p), text);
    row.ok = theorem2_verify(p);
    row.note = "lucas=" + lucas(p).get_str() + " twin=" + norm_primitive(twin, p).value.get_str();
    return row;
  });
  emitter.emit(summary_row("verify theorem2", items.size(), ok));
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_corollary(const Options& o, Emitter& emitter) {
  require_range(o, 5, "verify corollary");
  const auto items = coprime_to_six(o.min, o.max);
  const bool ok = sweep(items, o, emitter, [&](std::uint64_t n) {
    const auto sides = corollary_sides(n);
    ResultRow row;
    row.command = "verify corollary";
    row.n = n;
    row.value = BigInt(1) + sides.even_nonzero - sides.odd;
    row.ok = sides.even_nonzero == sides.odd;
    row.note = "even_nonzero=" + sides.even_nonzero.get_str() + " odd=" + sides.odd.get_str();
    return row;
  });
  emitter.emit(summary_row("verify corollary", items.size(), ok));
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_relnorm(const Options& o, Emitter& emitter) {
  if (o.real == o.imag) usage_error("verify relnorm needs exactly one of --real or --imag");
  require_odd_prime_bound(o.max_prime);
  if (o.real) {
    if (o.all_k) usage_error("--all-k applies to --imag only");
    const auto items = primes_matching(5, o.max_prime, 1);
    const std::string text = render_poly(IntPoly{1, -1});
    const bool ok = sweep(items, o, emitter, [&](std::uint64_t p) {
      const auto res = verify_real_relnorm(p);
      ResultRow row;
      row.command = "verify relnorm real";
      row.n = p;
      row.poly = text;
      row.value = gauss_period_relnorm(p, 1);
      row.ok = res.ok;
      row.note = "m=" + std::to_string(res.m) + " sign=" + std::to_string(res.sign) +
                 " h=" + std::to_string(res.class_number);
      return row;
    });
    emitter.emit(summary_row("verify relnorm real", items.size(), ok));
    return ok ? kExitOk : kExitVerificationFailed;
  }

  // Items encode (p, k) as p * 2^32 + k to reuse the ordered sweep.
  std::vector<std::uint64_t> items;
  for (auto p : primes_matching(7, o.max_prime, 3)) {
    const std::uint64_t last_k = o.all_k ? p - 1 : 1;
    for (std::uint64_t k = 1; k <= last_k; ++k) items.push_back((p << 32) | k);
  }
  const bool ok = sweep(items, o, emitter, [&](std::uint64_t item) {
    const std::uint64_t p = item >> 32;
    const auto k = static_cast<std::int64_t>(item & 0xffffffffu);
    ResultRow row;
    row.command = "verify relnorm imag";
    row.n = p;
    row.poly = render_poly(IntPoly::constant(1) - IntPoly::monomial(1, static_cast<std::size_t>(k)));
    row.value = gauss_period_relnorm(p, k);
    row.ok = verify_imag_relnorm(p, k);
    row.note = "k=" + std::to_string(k) + " predicted_sign=" + std::to_string(imag_relnorm_sign(p, k)) +
               " h=" + std::to_string(class_number_imaginary(p));
    return row;
  });
  emitter.emit(summary_row("verify relnorm imag", items.size(), ok));
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_domino(const Options& o, Emitter& emitter) {
  if (o.n < 1) usage_error("--n must be positive");
  const DominoTable table = o.brute_force ? domino_enumerate(o.n) : domino_table(o.n);
  ResultRow row;
  row.command = "domino";
  row.n = o.n;
  row.value = table.counts;
  row.method = o.brute_force ? "brute_force" : "closed_form";
  row.note = "total=" + table.total().get_str();
  emitter.emit(row);
  return kExitOk;
}

int cmd_lucas(const Options& o, Emitter& emitter) {
  ResultRow row;
  row.command = "lucas";
  row.n = o.m;
  row.value = lucas(o.m);
  emitter.emit(row);
  return kExitOk;
}

int cmd_sweep_unit(const Options& o, Emitter& emitter) {
  const IntPoly r = parse_poly(o.poly);
  if (r.is_zero()) usage_error("--poly must be a nonzero polynomial");
  if (o.min < 2) usage_error("sweep unit requires --min >= 2");
  if (o.min > o.max) usage_error("--min must not exceed --max");
  std::vector<std::uint64_t> items(o.max - o.min + 1);
  std::iota(items.begin(), items.end(), o.min);
  const std::string text = render_poly(r);
  sweep(items, o, emitter,
        [&](std::uint64_t n) { return norm_row("sweep unit", norm_primitive(r, n), text); });
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax:
    case ErrorKind::kEmptyInput:
    case ErrorKind::kPreconditionViolated:
    case ErrorKind::kOutOfRange:
    case ErrorKind::kPerfectSquare:
    case ErrorKind::kUndefined:
      return kExitUsage;
    default:
      return kExitVerificationFailed;
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact norms of integer polynomials at roots of unity", "cyclonorm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  auto* norm = app.add_subcommand("norm", "Norm of a polynomial at a primitive n-th root of unity");
  norm->add_option("--poly", o.poly, "Polynomial in x, e.g. \"1-x+x^2\"")->required();
  norm->add_option("--n", o.n, "Order of the root of unity")->required();
  norm->add_flag("--all-roots", o.all_roots, "Product over all k = 1..n-1 instead");

  auto* verify = app.add_subcommand("verify", "Mechanical verification sweeps");
  verify->require_subcommand(1);
  auto* t1 = verify->add_subcommand("theorem1", "1 - x + x^2 is a unit for gcd(n, 6) = 1");
  t1->add_option("--min", o.min)->required();
  t1->add_option("--max", o.max)->required();
  auto* t2 = verify->add_subcommand("theorem2", "Norms of 1 - x - x^2 and 1 + x - x^2 equal L(p)");
  t2->add_option("--max-prime", o.max_prime)->required();
  auto* cor = verify->add_subcommand("corollary", "Even-nonzero vs odd domino placements");
  cor->add_option("--min", o.min)->required();
  cor->add_option("--max", o.max)->required();
  auto* rel = verify->add_subcommand("relnorm", "Relative norms of 1 - zeta over Q(sqrt(+-p))");
  rel->add_flag("--real", o.real, "p = 1 (mod 4): sqrt(p) times a power of the fundamental unit");
  rel->add_flag("--imag", o.imag, "p = 3 (mod 4): the signed sqrt(-p) formula");
  rel->add_option("--max-prime", o.max_prime)->required();
  rel->add_flag("--all-k", o.all_k, "Check every k in [1, p-1] (imaginary case)");

  auto* domino = app.add_subcommand("domino", "Domino placements on a cycle, counted by size");
  domino->add_option("--n", o.n)->required();
  domino->add_flag("--brute-force", o.brute_force, "Exhaustive enumeration (3 <= n <= 30)");

  auto* luc = app.add_subcommand("lucas", "Lucas number L(m)");
  luc->add_option("--m", o.m)->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Streaming sweeps");
  sweep_cmd->require_subcommand(1);
  auto* unit = sweep_cmd->add_subcommand("unit", "Primitive norm for every n in a range");
  unit->add_option("--poly", o.poly)->required();
  unit->add_option("--min", o.min)->required();
  unit->add_option("--max", o.max)->required();

  std::vector<const char*> argv{"cyclonorm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cyclonorm: " << e.what() << '\n';
    return kExitUsage;
  }

  Emitter emitter(out, parse_format(o.format));
  try {
    if (norm->parsed()) return cmd_norm(o, emitter);
    if (t1->parsed()) return cmd_theorem1(o, emitter);
    if (t2->parsed()) return cmd_theorem2(o, emitter);
    if (cor->parsed()) return cmd_corollary(o, emitter);
    if (rel->parsed()) return cmd_relnorm(o, emitter);
    if (domino->parsed()) return cmd_domino(o, emitter);
    if (luc->parsed()) return cmd_lucas(o, emitter);
    if (unit->parsed()) return cmd_sweep_unit(o, emitter);
  } catch (const Error& e) {
    err << "cyclonorm: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  err << "cyclonorm: no command given\n";
  return kExitUsage;
}

}  // namespace cyclonorm::cli
