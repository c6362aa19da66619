#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planar/weight_family.hpp"

namespace planar {

struct SuiteOptions {
  // oracle suite: restrict to one family
  std::optional<FamilyKind> family;
};

struct SuiteReport {
  std::string name;
  bool pass = true;
  long checks = 0;
  std::string first_failure;  // empty when pass
  double seconds = 0;
};

// Atomic suites, in execution order.
const std::vector<std::string>& suite_names();
// Expands a group name ("cross-formula", "all") or an atomic name; throws DomainError if unknown.
std::vector<std::string> expand_suite(std::string_view name);
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {});
// Runs each suite on up to `threads` workers; reports keep the order of `names`.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteOptions& opts = {},
                                    int threads = 1);

}  // namespace planar
