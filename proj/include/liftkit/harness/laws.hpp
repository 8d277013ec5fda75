#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liftkit/harness/report.hpp"

namespace liftkit::harness {

/// How a law is checked; each kind has one runner.
enum class LawKind {
  EnumerationCounts,  // homeomorphism-class counts against published values
  MapDictionary,      // args[0]: dictionary id; lifting verdict vs map oracle
  SpaceDictionary,    // args[0]: dictionary id; lifting verdict vs space oracle
  MembersSatisfy,     // args[0]: class; every member satisfies oracle `oracle`
  MapsSatisfy,        // args: maps; each satisfies oracle `oracle`
  ClosureLaws,        // args[0]: one-step class
  ClosureDirection,   // all closure classes; which direction holds
  IsoSelfLifting,
  IdentityMembership,
  Antitonicity,
  Reflexivity,        // C inside C^lr and C^rl
  Inheritance,        // X->* and A->X in C^l give A->* in C^l for monos A->X
  PrimeToP,           // args[0]: p
  SplitLaw,
  ClassVsReadings,    // args[0]: class; `readings` compared over all maps
  TerminalProbe,      // args: classes; membership of every K->{*}
  BoundedDictionary,  // args[0]: dictionary id; bounded verdicts vs oracle
  GroupPGroup,        // args[0]: p
  GroupNilpotent,
  GroupSolvable,
  GroupCyclicSurjection,
};

/// One row of the law registry.
struct Law {
  std::string id;
  std::string suite;
  LawKind kind;
  /// Asserted laws pass or fail; experimental laws only report.
  bool asserted = true;
  /// The formula being checked, in notation syntax.
  std::string citation;
  std::string description;
  std::vector<std::string> args;
  /// Oracle or reading names.
  std::vector<std::string> oracles;
  /// Cap applied to the suite bound (0: none).
  std::size_t max_bound = 0;
  /// For experimental laws: why the result cannot be asserted.
  std::string rationale;
};

std::span<const Law> law_registry();
/// topology, appendixA, closure, groups, experimental.
std::vector<std::string> suite_names();
/// Generator sets used by the engine laws: every one-step class of the
/// registry, plus C_T.
std::vector<std::string> registry_generator_sets();

inline constexpr std::size_t kDefaultBound = 4;
inline constexpr std::size_t kMaxBound = 5;
inline constexpr std::size_t kMaxExtendedBound = 6;
inline constexpr std::size_t kDefaultInnerBound = 3;

struct RunOptions {
  std::size_t max_size = kDefaultBound;
  bool extended = false;
  /// Truncation for unbounded inner steps of experimental laws.
  std::optional<std::size_t> inner_bound;
  unsigned threads = 1;
};

/// Throws std::invalid_argument for an unknown suite or a bound over the guard.
Report run_suite(const std::string& suite, const RunOptions& options);
LawRecord run_law(const Law& law, const RunOptions& options);

}  // namespace liftkit::harness
