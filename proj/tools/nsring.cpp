// nsring: numerical semigroup ring classification at the command line.
//
// Subcommands:
//   analyze <gens>              classify one semigroup (human table or --json)
//   enumerate --genus G         list all semigroups of genus <= G
//   verify --genus G            run the cross-check battery, exit 1 on any hit
//   family <variant> <params>   compare a parametric family against its
//                               closed-form predictions
//
// All JSON output is byte-deterministic for a fixed command line: object keys
// have a fixed order, lists are sorted, and wall-clock readings appear only
// behind --timing. NSRING_THREADS overrides the verify worker count.
//
// Exit codes: 0 ok, 1 verify found violations, 2 bad input, 3 resource limit.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsring/nsring.hpp"

namespace {

using nsring::ClassificationReport;
using nsring::NumericalSemigroup;
using nsring::ordered_json;

// Generators arrive as positional tokens, each either one integer or a
// comma-separated run ("11,12,14,15" and "11 12 14 15" both work).
std::vector<int64_t> parse_generators(const std::vector<std::string>& tokens) {
  std::vector<int64_t> gens;
  for (const std::string& token : tokens) {
    size_t start = 0;
    while (start <= token.size()) {
      const size_t comma = token.find(',', start);
      const size_t end = comma == std::string::npos ? token.size() : comma;
      if (end > start) {
        const std::string_view chunk(token.data() + start, end - start);
        int64_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(chunk.data(), chunk.data() + chunk.size(), value);
        if (ec != std::errc{} || ptr != chunk.data() + chunk.size()) {
          throw nsring::ParameterViolation("generator \"" +
                                           std::string(chunk) +
                                           "\" is not an integer");
        }
        gens.push_back(value);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (gens.empty()) {
    throw nsring::EmptyInput("no generators given");
  }
  return gens;
}

std::string join(const std::vector<int64_t>& xs, const char* sep = ", ") {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_human(const nsring::ReportDocument& doc) {
  const ClassificationReport& c = doc.report;
  const auto& inv = c.invariants;
  std::cout << "generators         " << join(doc.input) << "\n";
  if (doc.input != c.min_gens) {
    std::cout << "minimal generators " << join(c.min_gens) << "\n";
  }
  std::cout << "multiplicity       " << inv.multiplicity << "\n"
            << "embdim             " << inv.embdim << " (codim " << inv.codim
            << ")\n"
            << "type               " << inv.type << "\n"
            << "frobenius          " << inv.frobenius << "\n"
            << "conductor          " << inv.conductor << "\n"
            << "genus              " << inv.genus << "\n"
            << "min_multiplicity   " << yes_no(inv.min_multiplicity) << "\n"
            << "pf                 " << join(c.pf) << "\n"
            << "symmetric          " << yes_no(c.symmetric) << "\n"
            << "pseudo_symmetric   " << yes_no(c.pseudo_symmetric) << "\n"
            << "almost_symmetric   " << yes_no(c.almost_symmetric) << "\n"
            << "nearly_gorenstein  " << yes_no(c.nearly_gorenstein) << "\n";
  std::cout << "teter              " << yes_no(c.teter);
  if (!c.teter_reason.empty()) std::cout << " (" << c.teter_reason << ")";
  std::cout << "\n";
  if (c.certificate) {
    const auto& cert = *c.certificate;
    std::cout << "  gamma " << cert.gamma << ", delta " << cert.delta
              << ", omitted generator index " << cert.omitted_index << "\n"
              << "  matches:";
    for (const auto& [j, i] : cert.matches) {
      std::cout << " a_" << j << "=gamma-pf_" << i;
    }
    std::cout << "\n";
  }
  std::cout << "trace_min_gens     " << join(c.trace_min_gens) << "\n"
            << "trace_is_unit      " << yes_no(c.trace_is_unit) << "\n";
  if (doc.timing_ms) {
    std::cout << "timing_ms          " << *doc.timing_ms << "\n";
  }
}

int cmd_analyze(const std::vector<std::string>& tokens, bool as_json,
                bool timing) {
  nsring::ReportDocument doc;
  doc.input = parse_generators(tokens);
  const auto started = std::chrono::steady_clock::now();
  doc.report = nsring::classify(NumericalSemigroup::from_generators(doc.input));
  if (timing) {
    doc.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
  }
  if (as_json) {
    std::cout << nsring::to_json(doc).dump(2) << "\n";
  } else {
    print_human(doc);
  }
  return 0;
}

bool passes_filter(const ClassificationReport& c, const std::string& filter) {
  if (filter == "all") return true;
  if (filter == "teter") return c.teter;
  if (filter == "nearly-gorenstein") return c.nearly_gorenstein;
  if (filter == "almost-symmetric") return c.almost_symmetric;
  if (filter == "pseudo-symmetric") return c.pseudo_symmetric;
  if (filter == "min-multiplicity") return c.invariants.min_multiplicity;
  throw nsring::ParameterViolation(
      "unknown filter \"" + filter +
      "\" (expected all, teter, nearly-gorenstein, almost-symmetric, "
      "pseudo-symmetric or min-multiplicity)");
}

std::string flag_list(const ClassificationReport& c) {
  std::vector<std::string> flags;  // kept in alphabetical order
  if (c.almost_symmetric) flags.push_back("almost-symmetric");
  if (c.invariants.min_multiplicity) flags.push_back("min-multiplicity");
  if (c.nearly_gorenstein) flags.push_back("nearly-gorenstein");
  if (c.pseudo_symmetric) flags.push_back("pseudo-symmetric");
  if (c.symmetric) flags.push_back("symmetric");
  if (c.teter) flags.push_back("teter");
  std::string out;
  for (size_t i = 0; i < flags.size(); ++i) {
    if (i > 0) out += ",";
    out += flags[i];
  }
  return out.empty() ? "-" : out;
}

int cmd_enumerate(int64_t g_max, const std::string& filter, bool ndjson) {
  // Validate the filter before doing any work.
  passes_filter(ClassificationReport{}, filter);
  // Records go out sorted by (genus, generators), independent of tree order.
  for (const NumericalSemigroup& h : nsring::enumerate_by_genus(g_max)) {
    const ClassificationReport c = nsring::classify(h);
    if (!passes_filter(c, filter)) continue;
    if (ndjson) {
      std::cout << nsring::to_json(c).dump() << "\n";
    } else {
      std::cout << "gens=" << join(c.min_gens, ",")
                << " genus=" << c.invariants.genus
                << " type=" << c.invariants.type
                << " frobenius=" << c.invariants.frobenius
                << " flags=" << flag_list(c) << "\n";
    }
  }
  return 0;
}

int cmd_verify(int64_t g_max, const std::string& suite, bool paranoid) {
  nsring::SweepOptions options;
  options.g_max = g_max;
  options.suite = nsring::parse_suite(suite);
  options.paranoid = paranoid;
  const nsring::SweepReport report = nsring::sweep(options);

  ordered_json j = nsring::to_json(report);
  // Violations carry the offender's full report so a failure is
  // reproducible from the output alone.
  for (size_t i = 0; i < report.violations.size(); ++i) {
    j["violations"][i]["report"] = nsring::to_json(nsring::classify(
        NumericalSemigroup::from_generators(report.violations[i].min_gens)));
  }
  std::cout << j.dump(2) << "\n";
  return report.violations.empty() ? 0 : 1;
}

int cmd_family(const std::string& variant,
               const std::vector<int64_t>& params) {
  nsring::FamilySpec spec;
  if (variant == "pseudosym") {
    if (params.size() != 3) {
      throw nsring::ParameterViolation(
          "family pseudosym takes exactly 3 parameters: a b c");
    }
    spec = nsring::PseudoSymmetric3GenParams{params[0], params[1], params[2]};
  } else if (variant == "arith") {
    if (params.size() != 4) {
      throw nsring::ParameterViolation(
          "family arith takes exactly 4 parameters: a s d n");
    }
    spec = nsring::GeneralizedArithmeticParams{params[0], params[1],
                                               params[2], params[3]};
  } else {
    throw nsring::ParameterViolation("unknown family \"" + variant +
                                     "\" (expected pseudosym or arith)");
  }
  std::cout << nsring::to_json(spec, nsring::predicted_vs_actual(spec)).dump(2)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup ring classifier"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "classify the semigroup generated by the given integers");
  std::vector<std::string> tokens;
  bool as_json = false;
  bool timing = false;
  analyze->add_option("gens", tokens, "generators (space or comma separated)")
      ->required()
      ->expected(-1);
  analyze->add_flag("--json", as_json, "emit JSON instead of the table");
  analyze->add_flag("--timing", timing,
                    "include wall-clock milliseconds (breaks determinism)");

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "list every semigroup of genus at most G");
  int64_t enum_genus = 0;
  std::string filter = "all";
  bool ndjson = false;
  enumerate->add_option("--genus", enum_genus, "genus bound")->required();
  enumerate->add_option(
      "--filter", filter,
      "all, teter, nearly-gorenstein, almost-symmetric, pseudo-symmetric or "
      "min-multiplicity");
  enumerate->add_flag("--ndjson", ndjson, "one JSON record per line");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "cross-check the classification battery up to a genus bound");
  int64_t verify_genus = 0;
  std::string suite = "all";
  bool paranoid = false;
  verify->add_option("--genus", verify_genus, "genus bound")->required();
  verify->add_option("--suite", suite,
                     "all, teter, min-multiplicity or embdim3");
  verify->add_flag("--paranoid", paranoid,
                   "widen the shift scan and check the shift floor");

  // family
  auto* family = app.add_subcommand(
      "family", "compare a parametric family against its predictions");
  std::string variant;
  std::vector<int64_t> params;
  family->add_option("variant", variant, "pseudosym or arith")->required();
  family->add_option("params", params, "family parameters")
      ->required()
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help and friends
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(tokens, as_json, timing);
    if (enumerate->parsed()) return cmd_enumerate(enum_genus, filter, ndjson);
    if (verify->parsed()) return cmd_verify(verify_genus, suite, paranoid);
    if (family->parsed()) return cmd_family(variant, params);
  } catch (const nsring::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
