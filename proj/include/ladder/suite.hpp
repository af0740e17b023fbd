#pragma once

#include "ladder/extension.hpp"
#include "ladder/lie.hpp"
#include "ladder/module.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ladder {

/// A named set of rule overrides. "none" is the real algebra.
struct Mutation {
  std::string name = "none";
  BracketRules bracket;
  ActionRules action;
  ExtensionRules extension;
};

/// none, theta-zero, drop-term-0 .. drop-term-5, action-guard, rho.
std::vector<Mutation> known_mutations();
std::optional<Mutation> find_mutation(std::string_view name);

struct SuiteItem {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

struct SuiteReport {
  std::uint32_t bound = 0;
  std::string mutation;
  /// Sorted by name.
  std::vector<SuiteItem> items;
  bool passed() const;
  std::size_t failures() const;
};

/// Runs every invariant family at window `bound` (>= 1; throws
/// std::invalid_argument otherwise). Items run concurrently when
/// `parallel` is set; the report order does not depend on it.
SuiteReport run_verify_suite(std::uint32_t bound, const Mutation& mutation = {}, bool parallel = true);

}  // namespace ladder
