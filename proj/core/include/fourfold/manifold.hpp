#pragma once

// Invariant records of smooth simply connected closed 4-manifolds and the
// connected-sum / blow-up calculus on them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourfold/classes.hpp"
#include "fourfold/lattice.hpp"

namespace fourfold {

/// A simply connected symplectic summand. Its first Chern class is stored as
/// c1 = c1_divisibility * g with g a primitive generator of square
/// c1_squared / c1_divisibility^2; c1_divisibility = 0 means c1 = 0.
struct SymplecticPiece {
  std::string name;  // display label, e.g. "X_2"
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;
  std::int64_t c1_squared = 0;
  std::int64_t c1_divisibility = 1;

  std::int64_t euler() const { return 2 + b_plus + b_minus; }
  std::int64_t signature() const { return b_plus - b_minus; }

  /// Name of the primitive generator g: "c1(<name>)" when c1 is itself
  /// primitive, otherwise "f(<name>)". Empty when c1 = 0.
  std::string generator_name() const;

  /// Square of the primitive generator.
  std::int64_t generator_square() const;

  /// c1 over a basis holding just this piece's generator.
  CohClass c1() const;

  /// Consistency problems: c1^2 = 2chi + 3tau, b+ odd, divisibility data.
  std::vector<std::string> validate() const;

  friend bool operator==(const SymplecticPiece&, const SymplecticPiece&) = default;
};

struct ManifoldSpec {
  std::string label;
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;
  bool spin = true;
  UnimodularForm form;
  std::vector<SymplecticPiece> pieces;
  std::int64_t blowups = 0;  // CP2bar summands folded in
  std::optional<std::string> einstein_known;

  std::int64_t euler() const { return 2 + b_plus + b_minus; }
  std::int64_t signature() const { return b_plus - b_minus; }

  /// Violations of the record invariants (rank, signature, parity vs spin...).
  std::vector<std::string> validate() const;

  /// Field-wise equality ignoring the display label.
  bool same_invariants(const ManifoldSpec& other) const;
};

/// S^4: the unit for connected sum.
ManifoldSpec sphere();

ManifoldSpec connected_sum(const ManifoldSpec& a, const ManifoldSpec& b);

/// a # k CP2bar. Throws ParameterOutOfRange for k < 0.
ManifoldSpec blow_up(const ManifoldSpec& a, std::int64_t k);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, reduced

  bool is_integer() const { return den == 1; }
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct CharNumbers {
  std::int64_t euler = 0;
  std::int64_t signature = 0;
  std::int64_t two_chi_plus_three_tau = 0;
  Rational todd_genus;  // (chi + tau)/4
};

CharNumbers char_numbers(const ManifoldSpec& a);

/// Freedman: simply connected smooth closed 4-manifolds are homeomorphic iff
/// their intersection forms are isomorphic. Propagates UnsupportedDefinite.
bool homeomorphic(const ManifoldSpec& a, const ManifoldSpec& b);

/// The basis a manifold's classes live over: one block per symplectic piece
/// holding its primitive c1 generator (omitted when c1 = 0), followed by
/// exceptional classes E1..Ek. Repeated piece names get "[2]", "[3]"...
/// suffixes so generator names stay unique.
BasisPtr class_basis(const std::vector<SymplecticPiece>& pieces, std::int64_t blowups);

/// Unique generator label for the i-th piece, consistent with class_basis.
std::vector<std::string> piece_generator_names(const std::vector<SymplecticPiece>& pieces);

}  // namespace fourfold
