#pragma once

// End-to-end verification checks for a catalog entry with expected data.

#include <cstdint>
#include <string>
#include <vector>

#include "reflectinv/catalog.hpp"
#include "reflectinv/group.hpp"
#include "reflectinv/kernels.hpp"

namespace reflectinv {

enum class CheckStatus { Pass, Fail, NotApplicable };

const char* status_name(CheckStatus s) noexcept;

struct CheckResult {
  int id = 0;
  std::string title;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
  /// Wall time, including any shared state first built by this check.
  double seconds = 0;
};

struct VerifyOptions {
  unsigned max_degree = 40;
  /// Degrees up to which Molien and slice dimensions, and the two basis
  /// methods, are compared directly.
  unsigned oracle_degree = 20;
  unsigned random_inputs = 50;
  unsigned random_max_degree = 10;
  std::uint64_t seed = 20240607;
  std::size_t cap = kDefaultGroupCap;
  /// Check ids to run; empty runs all.
  std::vector<int> only;
  kernels::Backend backend = kernels::default_backend();
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  /// True when no check failed; not-applicable checks do not count.
  bool all_passed() const noexcept;
  std::vector<int> failed() const;
  /// One `PASS|FAIL|N/A  <id>  <title>: <detail>` line per check.
  std::string str() const;
  std::string json() const;
};

VerifyReport verify_paper(const CatalogEntry& entry, const VerifyOptions& opts = {});

}  // namespace reflectinv
