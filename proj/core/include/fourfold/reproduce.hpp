#pragma once

// Regression harness: recomputes every quantitative claim about the catalog
// families, the spin family, the odd-m, m = 2 mod 4 and m = 1 mod 4 regions,
// the branched-cover example and the Hitchin-Thorpe boundary cases, and
// compares each against its closed-form expectation.

#include <string>
#include <string_view>
#include <vector>

#include "fourfold/catalog.hpp"

namespace fourfold {

struct ClaimRow {
  std::string tag;     // xk, spin, zi, prop6, molti, lots, example, boundary, catalog
  std::string claim;   // what is being checked, e.g. "X_2 invariants"
  std::string anchor;  // the statement the claim comes from
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ReproduceReport {
  std::vector<ClaimRow> rows;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Tags accepted by run_reproduce's filter, in report order.
const std::vector<std::string>& reproduce_tags();

/// Runs the claim table. `filter` is empty or "all" for everything, or one
/// tag. Catalog issues (from loading an override file) become failing
/// "catalog" rows. Throws std::invalid_argument for an unknown filter tag.
ReproduceReport run_reproduce(const Catalog& catalog = Catalog::builtin(), std::string_view filter = {},
                              const std::vector<std::string>& catalog_issues = {});

}  // namespace fourfold
