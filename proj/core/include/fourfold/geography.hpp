#pragma once

// The (m, n) plane of homeotypes m CP2 # n CP2bar: region predicates,
// witness construction with end-to-end re-verification, and the spin family
// n(K3) # (n+1)(S2xS2).
//
// "Claimed" means a region predicate holds; "certified" means an explicit
// witness manifold was built and re-verified through the lattice, obstruction
// and monopole modules. The two are reported separately: near the region
// boundaries the witness constructions need a few more CP2bar summands than
// the predicates allow for.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourfold/catalog.hpp"
#include "fourfold/manifold.hpp"
#include "fourfold/monopole.hpp"
#include "fourfold/obstruction.hpp"

namespace fourfold {

enum class RegionTheorem { Prop6, Molti, Lots, Spin };

/// "prop6", "molti", "lots", "spin".
std::string_view to_string(RegionTheorem t);

/// Throws UnknownTheorem.
RegionTheorem parse_region_theorem(std::string_view tag);

/// Odd m:               3n > 7m + 24.
bool claimed_prop6(std::int64_t m, std::int64_t n);
/// m = 2 mod 4, m >= 6: 3n > 7m + 48.
bool claimed_molti(std::int64_t m, std::int64_t n);
/// m = 1 mod 4, m >= 9: 3n > 7m + 36.
bool claimed_lots(std::int64_t m, std::int64_t n);

/// Strict Hitchin-Thorpe for chi = 2 + m + n, tau = m - n.
bool strict_hitchin_thorpe(std::int64_t m, std::int64_t n);

enum class WitnessStatus {
  Certified,
  NegativeBlowups,
  ObstructionThresholdMissed,
  HomeotypeMismatch,
  BandwidthTooSmall,
  HitchinThorpeNotStrict,  // spin family only
  ParameterOutOfRange      // scan only: construction parameter outside the catalog
};

std::string_view to_string(WitnessStatus s);

struct WitnessResult {
  RegionTheorem theorem = RegionTheorem::Molti;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t ell = 1;
  std::int64_t family_index = 0;  // j for molti/lots, i for prop6, n for spin
  std::int64_t blowups = 0;
  std::string expression;         // parseable sum expression of the witness
  WitnessStatus status = WitnessStatus::Certified;
  std::optional<ManifoldSpec> manifold;
  bool homeomorphic_to_target = false;
  std::optional<Verdict> verdict;
  std::optional<Bandwidth> bandwidth;
  HitchinThorpe hitchin_thorpe = HitchinThorpe::Violated;
  std::string detail;

  bool certified() const { return status == WitnessStatus::Certified; }
};

/// Builds and re-verifies the witness for (m, n). For Spin, `n` is the spin
/// parameter and `m` is ignored. Throws UnknownTheorem (never, for a valid
/// enum), ParameterOutOfRange when the congruence/range conditions of the
/// theorem fail or ell < 0.
WitnessResult witness(std::int64_t m, std::int64_t n, RegionTheorem theorem, std::int64_t ell = 1,
                      const Catalog& catalog = Catalog::builtin());

struct SpinFamilyResult {
  std::int64_t n = 0;
  std::int64_t ell = 0;
  std::string expression;
  ManifoldSpec manifold;
  ManifoldSpec target;  // n(K3) # (n+1)(S2xS2)
  bool homeomorphic_to_target = false;
  std::int64_t euler = 0;
  std::int64_t signature = 0;
  HitchinThorpe hitchin_thorpe = HitchinThorpe::Violated;
  Verdict verdict;
  Bandwidth bandwidth;

  /// All of: homeomorphic, chi = 24n+4, tau = -16n, strict HT, Obstructed
  /// with a verifying certificate, bandwidth >= 2l.
  bool certified() const;
};

/// M = X_{n-2} # Y_0 # Y_l. Throws ParameterOutOfRange for n < 4 or l < 0.
SpinFamilyResult spin_family(std::int64_t n, std::int64_t ell, const Catalog& catalog = Catalog::builtin());

struct RegionReport {
  std::int64_t m = 0;
  std::int64_t n = 0;
  bool claimed_prop6 = false;
  bool claimed_molti = false;
  bool claimed_lots = false;
  bool strict_ht = false;
  std::vector<WitnessResult> attempts;  // one per claimed theorem when certifying

  std::vector<RegionTheorem> claimed() const;
  std::vector<RegionTheorem> certified() const;
};

/// Claimed part only.
RegionReport region_membership(std::int64_t m, std::int64_t n);

struct ScanOptions {
  bool certify = false;
  std::int64_t ell = 1;
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;  // inclusive; empty when hi < lo
};

/// One report per (m, n), ordered by m then n. Points are evaluated
/// concurrently.
std::vector<RegionReport> scan(IntRange m_range, IntRange n_range, const ScanOptions& options = {},
                               const Catalog& catalog = Catalog::builtin());

}  // namespace fourfold
