#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace liftkit::harness {

enum class LawStatus { Pass, Fail, Experimental };

std::string_view to_string(LawStatus s);

/// A failing lifting pair, or the offending morphism with the oracle's view
/// in `right` when lifting accepted it.
struct Counterexample {
  std::string left;
  std::string right;
};

struct LawRecord {
  std::string id;
  std::string citation;
  std::string description;
  LawStatus status = LawStatus::Pass;
  std::size_t checked = 0;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;
};

struct Report {
  std::string suite;
  std::size_t bound = 0;
  std::optional<std::size_t> inner_bound;
  bool extended = false;
  std::vector<LawRecord> laws;

  /// True when no asserted law failed.
  bool passed() const;
};

nlohmann::ordered_json to_json(const Report& report);
std::string to_text(const Report& report);

}  // namespace liftkit::harness
