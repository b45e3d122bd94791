// cyclicdef: cyclic-subgroup census and verification from the command line.
//
// Exit codes: 0 success / clean, 1 violations or diagnostics found, 2 input
// error. CYCLICDEF_CLOSURE_CAP overrides the closure cap (default 10000).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cyclicdef/catalog.hpp"
#include "cyclicdef/census.hpp"
#include "cyclicdef/constructors.hpp"
#include "cyclicdef/errors.hpp"
#include "cyclicdef/invariants.hpp"
#include "cyclicdef/isomorphism.hpp"
#include "cyclicdef/oracle.hpp"
#include "cyclicdef/spec_parser.hpp"

namespace {

using namespace cyclicdef;

constexpr int kClean = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;

std::size_t closure_cap() {
  const char* env = std::getenv("CYCLICDEF_CLOSURE_CAP");
  if (!env || !*env) return kDefaultClosureCap;
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(env, &used);
    if (used == std::string(env).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("CYCLICDEF_CLOSURE_CAP is not a positive integer: ") +
                              env);
}

Catalog catalog_from(const std::string& path) {
  if (path.empty() || path == "desk") return bundled_desk_catalog();
  return load_catalog(path, ParseOptions{closure_cap()});
}

void print_violations(const std::string& check, const std::vector<Violation>& violations) {
  for (const auto& v : violations) {
    std::cout << check << ": " << display_name(v.name);
    if (v.id) std::cout << " " << to_string(*v.id);
    std::cout << ": " << v.message << "\n";
  }
}

int cmd_census(const std::string& catalog_path, std::uint64_t delta_max, const std::string& format,
               const std::string& out_path) {
  const Catalog catalog = catalog_from(catalog_path);
  const CensusResult result = run_census(catalog, delta_max);
  const std::string report = emit_report(
      result, format == "structured" ? ReportFormat::structured : ReportFormat::text);
  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CatalogError("cannot write " + out_path);
    out << report;
  }
  return kClean;
}

int cmd_delta(const std::string& spec_text) {
  const Group g = build(parse_group_spec(spec_text), closure_cap());
  const DeltaReport r = delta_report(g);
  std::cout << "group: " << display_name(g.name()) << "\n"
            << "order: " << r.group_order << "\n"
            << "cyclic_subgroups: " << r.cyclic_count << "\n"
            << "delta: " << r.delta << "\n"
            << "i2: " << r.i2 << "\n"
            << "bound_ok: " << (r.bound_ok ? "true" : "false") << "\n"
            << "equality_case: " << (r.equality_case ? "true" : "false") << "\n";
  return kClean;
}

int cmd_verify(const std::string& catalog_path) {
  const Catalog catalog = catalog_from(catalog_path);
  std::uint64_t delta_max = 1;
  for (const auto& e : catalog.entries) delta_max = std::max<std::uint64_t>(delta_max, e.order);
  const auto bound = verify_bound(run_census(catalog, delta_max));
  const auto miller = verify_miller(catalog);
  const auto identity = verify_star_identity(catalog);
  print_violations("bound", bound);
  print_violations("miller", miller);
  print_violations("generator-count", identity);
  std::cout << catalog.entries.size() << " groups checked: " << bound.size()
            << " bound, " << miller.size() << " miller, " << identity.size()
            << " generator-count violations\n";
  return bound.empty() && miller.empty() && identity.empty() ? kClean : kViolations;
}

int cmd_catalog_validate(const std::string& path) {
  const Catalog catalog = catalog_from(path);
  const auto diagnostics = validate_catalog(catalog, closure_cap());
  for (const auto& d : diagnostics) {
    std::cout << to_string(d.kind);
    if (d.id) std::cout << " " << to_string(*d.id);
    std::cout << ": " << d.message << "\n";
  }
  std::cout << catalog.entries.size() << " entries, " << diagnostics.size() << " diagnostics\n";
  return diagnostics.empty() ? kClean : kViolations;
}

int cmd_oracle_enumerate(std::size_t n) {
  const auto groups = oracle::enumerate_order(n);
  std::cout << groups.size() << " groups of order " << n << "\n";
  for (const auto& g : groups) {
    const DeltaReport r = delta_report(g);
    const Fingerprint f = fingerprint(g);
    std::cout << "delta=" << r.delta << " i2=" << r.i2 << " exponent=" << f.exponent
              << " abelian=" << (f.abelian ? "yes" : "no") << " orders=";
    for (std::size_t i = 0; i < f.order_spectrum.size(); ++i) {
      std::cout << (i ? "," : "") << f.order_spectrum[i];
    }
    std::cout << "\n";
  }
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic subgroup census for finite groups"};
  app.require_subcommand(1);

  std::string catalog_path, format = "text", out_path, spec_text, validate_path;
  std::uint64_t delta_max = 0;
  std::size_t oracle_order = 0;

  auto* census = app.add_subcommand("census", "Bucket catalog groups by Delta and print tables");
  census->add_option("--catalog", catalog_path, "Catalog file ('desk' for the bundled one)")
      ->default_val("desk");
  census->add_option("--delta-max", delta_max, "Largest difference to report")
      ->required()
      ->check(CLI::PositiveNumber);
  census->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));
  census->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* delta_cmd = app.add_subcommand("delta", "Print the DeltaReport of a constructed group");
  delta_cmd->add_option("--group", spec_text, "Constructor expression, e.g. D8 or C3:C4@-1")
      ->required();

  auto* verify = app.add_subcommand("verify", "Check the 8*Delta bound, the Miller bound and the generator-count identity");
  verify->add_option("--catalog", catalog_path, "Catalog file ('desk' for the bundled one)")
      ->default_val("desk");

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog utilities");
  catalog_cmd->require_subcommand(1);
  auto* validate = catalog_cmd->add_subcommand("validate", "Validate a catalog file");
  validate->add_option("file", validate_path, "Catalog file ('desk' for the bundled one)")
      ->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive enumeration of small groups");
  oracle_cmd->require_subcommand(1);
  auto* enumerate = oracle_cmd->add_subcommand("enumerate", "All groups of order N (N <= 10)");
  enumerate->add_option("N", oracle_order, "Group order")->required()->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kClean : kInputError;
  }

  try {
    if (*census) return cmd_census(catalog_path, delta_max, format, out_path);
    if (*delta_cmd) return cmd_delta(spec_text);
    if (*verify) return cmd_verify(catalog_path);
    if (*validate) return cmd_catalog_validate(validate_path);
    if (*enumerate) return cmd_oracle_enumerate(oracle_order);
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ClosureCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
