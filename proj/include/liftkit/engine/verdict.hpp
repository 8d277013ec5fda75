#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftkit/engine/category.hpp"
#include "liftkit/engine/expr.hpp"

namespace liftkit::engine {

enum class VerdictKind { ExactYes, ExactNo, BoundedYes, BoundedNo };

/// How a computed morphism set relates to the class it stands for.
enum class Approx {
  Exact,    // equal (within the step's own bound)
  Under,    // subset of the true class
  Over,     // superset of the true class
  Unknown,  // neither inclusion is guaranteed
};

inline std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::ExactYes: return "ExactYes";
    case VerdictKind::ExactNo: return "ExactNo";
    case VerdictKind::BoundedYes: return "BoundedYes";
    case VerdictKind::BoundedNo: return "BoundedNo";
  }
  return "?";
}

inline std::string_view to_string(Approx a) {
  switch (a) {
    case Approx::Exact: return "exact";
    case Approx::Under: return "under-approximation";
    case Approx::Over: return "over-approximation";
    case Approx::Unknown: return "unknown";
  }
  return "?";
}

/// What happened at one inner step of an evaluation.
struct StepTrace {
  Step step;
  /// Largest object size enumerated for this step's class.
  std::size_t max_size = 0;
  Approx approx = Approx::Exact;
  std::size_t members = 0;
  /// Name of the oracle used instead of lifting, if any.
  std::string oracle;
};

template <class M>
struct Verdict {
  VerdictKind kind = VerdictKind::ExactNo;
  /// Whether the answer also holds for the unbounded class. Always true for
  /// exact kinds; true for BoundedNo whose witness lies in the true class.
  bool definitive = true;
  std::vector<StepTrace> steps;
  /// Member of the opposing class against which lifting fails.
  std::optional<M> witness;
  std::optional<Square<M>> square;
  std::string note;

  bool member() const { return kind == VerdictKind::ExactYes || kind == VerdictKind::BoundedYes; }
  bool exact() const { return kind == VerdictKind::ExactYes || kind == VerdictKind::ExactNo; }
};

template <class M>
struct ClassEntry {
  M morphism;
  Verdict<M> verdict;
};

}  // namespace liftkit::engine
