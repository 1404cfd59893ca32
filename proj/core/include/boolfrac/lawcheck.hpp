#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boolfrac/conditional.hpp"
#include "boolfrac/probability.hpp"

namespace boolfrac {

/// Catalog of exhaustively checkable laws. Each id names one claim;
/// iff-statements are checked in both directions.
enum class LawId {
  kConjunctionDistributivity,   // t2.4
  kDisjunctionDistributivity,   // c2.5
  kDisjunctionModularity,       // t2.6
  kConjunctionModularity,       // c2.7
  kWeakModularity,              // c2.8
  kWeakDualModularity,          // c2.9
  kBasicProperties,             // props2.3
  kAdditiveLaw,                 // t2.13
  kOrthogonalFamily,            // t2.18
  kOrthogonalClosure,           // t2.19
  kRelativeComplement,          // p2.20
  kTruthTables,                 // truth-tables
  kSuperposition,               // superposition
  kSimultaneousVerifiability,   // t3.2
  kVerifiabilityByConjunction,  // c3.3
  kSimultaneousFalsifiability,  // c3.5
  kVerifiableAndFalsifiable,    // c3.6
  kBooleanSubalgebra,           // t3.7
  kSubalgebraByVerifiability,   // c3.8
  kNegationUniqueness,          // t3.9
  kOrthoSum,                    // t3.11
  kSasakiProjection,            // t3.15
  kSasakiRelations,             // c3.16
  kCompatibility,               // t3.17
  kSchayLattices,               // schay-lattice
  kSchayCoincidence,            // schay-coincide
  kSchayIteration,              // schay-2.12
};

std::string_view to_string(LawId law);
std::optional<LawId> parse_law(std::string_view id);
/// Every law in catalog order.
std::span<const LawId> all_laws();
/// `all` expands to the whole catalog. Throws UnknownLaw.
std::vector<LawId> parse_law_selector(std::string_view id);
/// Largest atom count the law's quantifier budget allows.
std::size_t max_atoms(LawId law);
/// One-line statement of what the law asserts.
std::string_view describe(LawId law);

struct Counterexample {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct LawReport {
  LawId law = LawId::kBasicProperties;
  std::size_t atom_count = 0;
  std::uint64_t instances_checked = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  /// Informational findings that are not asserted.
  std::vector<std::string> notes;
};

struct CheckOptions {
  /// Probabilistic laws quantify over every weight vector in
  /// {0..max_weight}^n with positive total.
  int max_weight = 3;
};

/// Every normalized conditional of the space, U included: 3^n of them,
/// grouped by condition in ascending bit order. Throws TooLarge for n > 5.
std::vector<Conditional> enumerate_conditionals(const SampleSpace& space);

/// Every weight vector in {0..max_weight}^n with positive total, in
/// lexicographic order.
std::vector<Measure> enumerate_measures(const SampleSpace& space, int max_weight);

/// Exhaustive check over the space with atoms named 1..atoms. The first
/// failure in enumeration order becomes the counterexample. Throws TooLarge
/// when `atoms` exceeds the law's budget.
LawReport check(LawId law, std::size_t atoms, const CheckOptions& options = {});

/// Runs every law at min(atoms, max_atoms(law)), in catalog order.
std::vector<LawReport> check_all(std::size_t atoms, const CheckOptions& options = {});

}  // namespace boolfrac
