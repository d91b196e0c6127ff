// ordcalc: exact order calculus in finite groups.
//
// Subcommands:
//   order    per-pair order data (m, n, e, D, epsilon, o(a,b), o(ab), ...)
//   hall     basic-commutator basis, collection polynomials, class constants
//   verify   exhaustive theorem sweeps over the group catalog
//   catalog  list the built-in groups

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordcalc/catalog.hpp"
#include "ordcalc/class2.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/hall.hpp"
#include "ordcalc/io.hpp"
#include "ordcalc/order.hpp"
#include "ordcalc/sweep.hpp"

namespace {

// Exit codes, also documented in the README.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 64;
constexpr int kExitDataError = 65;
constexpr int kExitUnknownGroup = 66;
constexpr int kExitCapExceeded = 67;
constexpr int kExitViolation = 70;

struct UnknownGroupError : ordcalc::Error {
  using Error::Error;
};

struct NamedGroup {
  std::string name;
  ordcalc::FiniteGroup group;
};

NamedGroup resolve_group(const std::string& source, std::size_t cap) {
  if (const ordcalc::CatalogEntry* entry = ordcalc::find_entry(source))
    return NamedGroup{entry->name, ordcalc::build_entry(*entry, cap)};
  std::ifstream in(source);
  if (!in)
    throw UnknownGroupError("unknown group '" + source +
                            "': not a catalog name and not a readable file");
  ordcalc::GroupFileSpec spec = ordcalc::parse_group_file(in);
  std::string name = spec.name.empty() ? source : spec.name;
  return NamedGroup{std::move(name), ordcalc::FiniteGroup::generate(spec.generators, cap)};
}

int run_order(const std::string& source, const std::string& a_text,
              const std::string& b_text, std::size_t cap) {
  const NamedGroup named = resolve_group(source, cap);
  const ordcalc::FiniteGroup& G = named.group;
  const ordcalc::GroupShape shape = ordcalc::shape_of(G);
  const ordcalc::GroupElement a = ordcalc::parse_element(a_text, shape);
  const ordcalc::GroupElement b = ordcalc::parse_element(b_text, shape);
  if (!G.contains(a)) throw ordcalc::MembershipError("element a is not in the group");
  if (!G.contains(b)) throw ordcalc::MembershipError("element b is not in the group");

  const ordcalc::PairOrderReport rep = ordcalc::jungnickel_data(a, b);
  std::cout << "group: " << named.name << " (order " << G.order() << ", class ";
  if (G.nilpotency_class()) std::cout << *G.nilpotency_class();
  else std::cout << "-";
  std::cout << ")\n";
  std::cout << "a: " << ordcalc::format_element(a) << "\n";
  std::cout << "b: " << ordcalc::format_element(b) << "\n";
  std::cout << "m = " << rep.m << "\n";
  std::cout << "n = " << rep.n << "\n";
  std::cout << "e = " << rep.e << "\n";
  std::cout << "D = " << rep.D << "\n";
  std::cout << "epsilon = " << rep.epsilon << "\n";
  std::cout << "o(a,b) = " << rep.mutual << "\n";
  std::cout << "o(ab) = " << rep.product_order << "\n";
  std::cout << "ratio = " << ordcalc::to_string(rep.ratio) << "\n";
  std::cout << "r = o([b,a]) = " << rep.r_commutator << "\n";
  if (G.nilpotency_class() && *G.nilpotency_class() <= 2) {
    const ordcalc::Class2Verdict v = ordcalc::classify_pair(G, a, b);
    std::cout << "class2: case=" << ordcalc::to_string(v.case_tag) << " q=" << v.q
              << " witness_equality=" << (v.witness_equality ? "yes" : "no")
              << " half_quotient_odd=" << (v.half_quotient_odd ? "yes" : "no")
              << " predicted=" << ordcalc::to_string(v.predicted_ratio) << "\n";
  }
  return kExitOk;
}

int run_hall(int gamma, int max_class, const std::string& golden_path) {
  const ordcalc::hall::Basis& basis = ordcalc::hall::Basis::for_class(gamma, max_class);
  const ordcalc::hall::FormalCount fc = ordcalc::hall::formal_commutator_count(gamma);
  const ordcalc::hall::ClassConstants cc = ordcalc::hall::class_constants(gamma, max_class);

  std::cout << "class: " << gamma << "\n";
  std::cout << "basis size: " << basis.size() << "\n";
  for (int k = 0; k < basis.size(); ++k)
    std::cout << "c" << k << " = " << basis.name(k) << " weight " << basis.at(k).weight
              << "\n";
  std::cout << "formal commutator counts:";
  for (std::size_t w = 0; w < fc.per_weight.size(); ++w)
    std::cout << " N(" << (w + 1) << ")=" << fc.per_weight[w];
  std::cout << "\n";
  std::cout << "r_formal = " << fc.r_formal << "\n";
  std::cout << "A = " << cc.A << "\n";
  std::cout << "B = " << cc.B << "\n";
  std::cout << "C = " << cc.C << "\n";
  std::cout << "B' = " << cc.B_prime << "\n";
  std::cout << "C' = " << cc.C_prime << "\n";
  std::cout << "lambda records (gamma k weight lambda_1..lambda_w):\n";
  std::cout << ordcalc::render_lambda_records(gamma, max_class);

  if (!golden_path.empty()) {
    std::ifstream in(golden_path);
    if (!in) throw ordcalc::ParseError("cannot open golden file '" + golden_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string diag =
        ordcalc::compare_lambda_golden(gamma, max_class, buffer.str());
    if (!diag.empty()) {
      std::cerr << "ordcalc hall: " << diag << "\n";
      return kExitViolation;
    }
    std::cout << "golden: match\n";
  }
  return kExitOk;
}

int run_verify(const std::string& group_name, bool all, const std::string& checks_arg,
               int workers, const std::string& output_path, const std::string& format,
               std::size_t cap) {
  if (all == !group_name.empty())
    throw CLI::ValidationError("verify", "choose exactly one of --group and --all");

  std::vector<const ordcalc::CatalogEntry*> entries;
  if (all) {
    for (const ordcalc::CatalogEntry& e : ordcalc::catalog()) entries.push_back(&e);
  } else {
    const ordcalc::CatalogEntry* e = ordcalc::find_entry(group_name);
    if (!e) throw UnknownGroupError("unknown catalog group '" + group_name + "'");
    entries.push_back(e);
  }

  std::vector<ordcalc::Check> requested;
  if (!checks_arg.empty()) {
    std::istringstream in(checks_arg);
    std::string token;
    while (std::getline(in, token, ',')) {
      const auto c = ordcalc::check_from_name(token);
      if (!c) throw CLI::ValidationError("--checks", "unknown check '" + token + "'");
      requested.push_back(*c);
    }
  }

  std::ostringstream report;
  if (format == "tabular") ordcalc::render_tabular_header(report);
  std::uint64_t total_pairs = 0;
  std::uint64_t total_violations = 0;
  for (const ordcalc::CatalogEntry* entry : entries) {
    const ordcalc::FiniteGroup G = ordcalc::build_entry(*entry, cap);
    const std::vector<ordcalc::Check> checks =
        requested.empty() ? ordcalc::applicable_checks(G) : requested;
    const ordcalc::SweepReport rep = ordcalc::sweep(G, entry->name, checks, workers);
    total_pairs += rep.pairs_checked;
    total_violations += rep.violations.size();
    if (format == "tabular") ordcalc::render_tabular(rep, report);
    else ordcalc::render_structured(rep, report);
    std::cerr << "verify " << entry->name << ": " << rep.orbit_count << " orbits, "
              << rep.violations.size() << " violations, " << std::fixed
              << std::setprecision(2) << rep.seconds << "s\n";
  }
  if (format != "tabular") {
    report << "summary\n";
    report << "  groups " << entries.size() << "\n";
    report << "  pairs " << total_pairs << "\n";
    report << "  violations " << total_violations << "\n";
    report << "end\n";
  }

  if (output_path.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw ordcalc::ParseError("cannot open output file '" + output_path + "'");
    out << report.str();
  }
  return total_violations == 0 ? kExitOk : kExitViolation;
}

int run_catalog() {
  std::cout << std::left << std::setw(10) << "name" << std::setw(8) << "order"
            << std::setw(7) << "class" << std::setw(7) << "prime"
            << "description\n";
  for (const ordcalc::CatalogEntry& e : ordcalc::catalog()) {
    std::cout << std::left << std::setw(10) << e.name << std::setw(8) << e.expected_order
              << std::setw(7)
              << (e.expected_class ? std::to_string(*e.expected_class) : std::string("-"))
              << std::setw(7)
              << (e.prime ? std::to_string(*e.prime) : std::string("-")) << e.description
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact order calculus in finite groups"};
  app.require_subcommand(1);

  std::string group_source, a_text, b_text;
  std::size_t cap = ordcalc::kDefaultClosureCap;
  auto* order_cmd = app.add_subcommand("order", "order data for one pair of elements");
  order_cmd->add_option("--group", group_source, "catalog name or group file path")
      ->required();
  order_cmd->add_option("--a", a_text, "first element")->required();
  order_cmd->add_option("--b", b_text, "second element")->required();
  order_cmd->add_option("--cap", cap, "closure cap");

  int gamma = 2;
  int max_class = ordcalc::hall::kDefaultMaxClass;
  std::string golden_path;
  auto* hall_cmd = app.add_subcommand("hall", "collection data for one nilpotency class");
  hall_cmd->add_option("--class", gamma, "nilpotency class")->required();
  hall_cmd->add_option("--max-class", max_class, "largest supported class");
  hall_cmd->add_option("--golden", golden_path, "compare lambda records against this file");

  std::string verify_group, checks_arg, output_path;
  std::string format = "structured";
  bool verify_all = false;
  int workers = 1;
  auto* verify_cmd = app.add_subcommand("verify", "run theorem sweeps");
  verify_cmd->add_option("--group", verify_group, "catalog group to sweep");
  verify_cmd->add_flag("--all", verify_all, "sweep the whole catalog");
  verify_cmd->add_option("--checks", checks_arg, "comma-separated check list");
  verify_cmd->add_option("--workers", workers, "worker thread count")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--output", output_path, "write the report here instead of stdout");
  verify_cmd->add_option("--format", format, "structured or tabular")
      ->check(CLI::IsMember({"structured", "tabular"}));
  verify_cmd->add_option("--cap", cap, "closure cap");

  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (order_cmd->parsed()) return run_order(group_source, a_text, b_text, cap);
    if (hall_cmd->parsed()) return run_hall(gamma, max_class, golden_path);
    if (verify_cmd->parsed())
      return run_verify(verify_group, verify_all, checks_arg, workers, output_path, format,
                        cap);
    if (catalog_cmd->parsed()) return run_catalog();
  } catch (const ordcalc::GroupTooLarge& e) {
    std::cerr << "ordcalc: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const UnknownGroupError& e) {
    std::cerr << "ordcalc: " << e.what() << "\n";
    return kExitUnknownGroup;
  } catch (const ordcalc::ParseError& e) {
    std::cerr << "ordcalc: " << e.what() << "\n";
    return kExitDataError;
  } catch (const ordcalc::MembershipError& e) {
    std::cerr << "ordcalc: " << e.what() << "\n";
    return kExitDataError;
  } catch (const ordcalc::ConfigError& e) {
    std::cerr << "ordcalc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ordcalc::DomainError& e) {
    std::cerr << "ordcalc: " << e.what() << "\n";
    return kExitDataError;
  } catch (const CLI::Error& e) {
    std::cerr << "ordcalc: " << e.get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ordcalc::Error& e) {
    // TheoremViolation, InternalInconsistency and anything else unexpected
    std::cerr << "ordcalc: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
