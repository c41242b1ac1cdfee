#pragma once

// Monopole classes of connected sums of symplectic pieces, and the
// bandwidth invariant built from them.
//
// For X # Y [# Z] with every piece simply connected, symplectic and
// b+ = 3 mod 4, every class  ±c1(X) ± c1(Y) [± c1(Z)] + sum_j ±E_j  is a
// monopole class, where E_j are the exceptional classes of blow-ups folded
// into the first piece. A MonopoleSet stores this family symbolically as
// its sign axes and materializes the classes on demand.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourfold/classes.hpp"
#include "fourfold/manifold.hpp"

namespace fourfold {

enum class MonopoleSource { BauerDouble, BauerTriple };

std::string_view to_string(MonopoleSource s);

struct AdmissibilityEvidence {
  std::vector<std::string> piece_names;
  std::vector<std::int64_t> piece_b_plus;
  std::int64_t blowups = 0;
};

class MonopoleSet {
 public:
  /// One independent sign: ±coefficient * generator(index).
  struct Axis {
    std::size_t generator;
    std::int64_t coefficient;  // > 0
  };

  MonopoleSet(BasisPtr basis, std::vector<Axis> axes, MonopoleSource source, AdmissibilityEvidence evidence);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Axis>& axes() const { return axes_; }
  MonopoleSource source() const { return source_; }
  const AdmissibilityEvidence& evidence() const { return evidence_; }

  /// Number of distinct classes, 2^axes.
  std::size_t size() const;

  bool contains(const CohClass& c) const;

  /// All classes, sorted by their string form. Throws std::length_error
  /// beyond `limit` classes.
  std::vector<CohClass> classes(std::size_t limit = std::size_t{1} << 20) const;

  /// The sorted class strings (serialization form).
  std::vector<std::string> to_strings(std::size_t limit = std::size_t{1} << 20) const;

 private:
  BasisPtr basis_;
  std::vector<Axis> axes_;
  MonopoleSource source_;
  AdmissibilityEvidence evidence_;
};

/// Throws InadmissiblePiece unless the piece is symplectic data with
/// b+ = 3 mod 4 and consistent invariants.
void require_admissible(const SymplecticPiece& piece);

/// Throws InadmissiblePiece (per piece), TooManyPieces for more than three
/// pieces, ParameterOutOfRange for fewer than two or k < 0.
MonopoleSet bauer_monopole_set(const std::vector<SymplecticPiece>& pieces, std::int64_t blowups);

struct Bandwidth {
  std::int64_t lower_bound = 0;
  /// A pair a != b with divisibility(a - b) = 2 * lower_bound, when
  /// lower_bound > 0.
  std::optional<std::pair<CohClass, CohClass>> witness;
};

/// Bandwidth over an explicit finite class set: 0 when the set is inside
/// {0}, else the maximum over pairs a != b of divisibility(a - b) / 2.
Bandwidth bandwidth(const std::vector<CohClass>& classes);

/// Bandwidth of a generated set. Uses the sign-axis structure: flipping a
/// set T of axes changes the class by 2 * sum_{t in T} ±c_t g_t, whose
/// divisibility is maximal for a single axis. Agrees with the pairwise
/// definition (checked in tests) without materializing 2^axes classes.
Bandwidth bandwidth(const MonopoleSet& s);

/// (c1^2 - tau)/8; throws CongruenceViolation unless c1^2 = tau mod 8.
std::int64_t bf_index(std::int64_t c1_squared, std::int64_t tau);

/// A sum description parameterized by l: given l, the ordered pieces and
/// blow-up count.
struct FamilyInstance {
  std::string label;
  std::vector<SymplecticPiece> pieces;
  std::int64_t blowups = 0;
};

struct FamilyRow {
  std::int64_t ell = 0;
  std::string label;
  Bandwidth bandwidth;
};

struct FamilyCertificate {
  std::vector<FamilyRow> rows;  // in the order of the requested l list
  bool unbounded_certified = false;
};

/// Evaluates bandwidth lower bounds along a family. The verdict is
/// "unbounded-certified" when the bounds, ordered by l, are strictly
/// increasing and affine in l (at least two distinct l values needed).
/// Rows are computed concurrently; the output order is the input order.
template <typename Family>
FamilyCertificate family_certificate(Family&& family, const std::vector<std::int64_t>& ells);

FamilyCertificate family_certificate_from(const std::vector<FamilyInstance>& instances,
                                          const std::vector<std::int64_t>& ells);

template <typename Family>
FamilyCertificate family_certificate(Family&& family, const std::vector<std::int64_t>& ells) {
  std::vector<FamilyInstance> instances;
  instances.reserve(ells.size());
  for (auto ell : ells) instances.push_back(family(ell));
  return family_certificate_from(instances, ells);
}

}  // namespace fourfold
