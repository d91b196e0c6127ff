#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordcalc/catalog.hpp"
#include "ordcalc/group.hpp"
#include "ordcalc/numeric.hpp"

namespace ordcalc {

/// The exhaustive per-pair checks a sweep can run.
enum class Check {
  Sandwich,   // divisibility sandwich + closed form + symmetry (any group)
  WeakBound,  // abelian two-sided bound (class 1 only)
  Bounds34,   // o(ab) | o(a,b) B and o(a,b) | o(ab) C (nilpotent)
  Cor38,      // o(ab) | lcm B/eps and lcm/D | o(ab) C (nilpotent)
  Hall36,     // o(ab) = o(a,b) when class < every prime dividing |G|
  Comm37,     // o([a,b]) / least-commuting-exponent has primes <= class
  Class2,     // full class-2 classification + commutator-order formulas
};

std::string check_name(Check c);
std::optional<Check> check_from_name(std::string_view name);
std::vector<Check> all_checks();

/// Checks that are valid for this group; requesting any other check is a
/// configuration error, not a silent skip.
std::vector<Check> applicable_checks(const FiniteGroup& G);

struct Violation {
  std::string check;
  std::uint32_t a_id = 0;
  std::uint32_t b_id = 0;
  std::string a_text;
  std::string b_text;
  std::string message;
};

struct SweepReport {
  std::string group_name;
  std::int64_t order = 1;
  std::optional<int> nilpotency_class;
  std::vector<Check> checks;
  std::uint64_t pairs_checked = 0;
  std::uint64_t orbit_count = 0;
  std::map<Ratio, std::uint64_t> ratio_census;  // o(ab)/o(a,b) with pair counts
  std::vector<Violation> violations;
  double seconds = 0.0;  // wall time; never part of the rendered report
};

/// Runs the selected checks over every ordered pair of G. Internally the
/// pair space is reduced to orbits of simultaneous conjugation: every
/// quantity the checks look at (orders of words in a and b, element
/// equalities between such words, cyclic-subgroup and centralizer
/// intersection sizes) is conjugation-invariant, so one representative
/// per orbit decides the whole orbit. Orbit multiplicities keep the
/// reported pair counts exact.
SweepReport sweep(const FiniteGroup& G, const std::string& name,
                  const std::vector<Check>& checks, int workers = 1);

/// Union of observed ratio sets grouped by nilpotency class. All reports
/// must come from nilpotent groups; asserts the prime-factor bound and,
/// for class 2, containment in {1/2, 1, 2}.
std::map<int, std::map<Ratio, std::uint64_t>> ratio_census(
    const std::vector<SweepReport>& reports);

void render_structured(const SweepReport& report, std::ostream& out);
void render_tabular_header(std::ostream& out);
void render_tabular(const SweepReport& report, std::ostream& out);

}  // namespace ordcalc
