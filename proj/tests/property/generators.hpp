#pragma once

// Seeded random generators shared by the property suites.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "fourfold/catalog.hpp"
#include "fourfold/classes.hpp"
#include "fourfold/expression.hpp"
#include "fourfold/lattice.hpp"

namespace gen {

inline constexpr int kCases = 1000;

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items.at(static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(items.size()) - 1)));
  }

 private:
  std::mt19937 engine_;
};

/// Any block form with at most `max_blocks` blocks of each kind.
inline fourfold::UnimodularForm form(Rng& r, std::int64_t max_blocks = 6) {
  fourfold::UnimodularForm f;
  f.pos_diag = r.uniform(0, max_blocks);
  f.neg_diag = r.uniform(0, max_blocks);
  f.hyperbolic = r.uniform(0, max_blocks);
  f.e8 = r.uniform(-max_blocks / 2, max_blocks / 2);
  return f;
}

/// Block form of rank <= max_rank, small enough for the Gram oracle.
inline fourfold::UnimodularForm small_form(Rng& r, std::int64_t max_rank) {
  fourfold::UnimodularForm f;
  std::int64_t room = max_rank;
  if (room >= 8 && r.uniform(0, 3) == 0) {
    f.e8 = r.coin() ? 1 : -1;
    room -= 8;
  }
  f.hyperbolic = r.uniform(0, room / 2);
  room -= 2 * f.hyperbolic;
  f.pos_diag = r.uniform(0, room);
  room -= f.pos_diag;
  f.neg_diag = r.uniform(0, room);
  return f;
}

/// Indefinite form (so classification is complete).
inline fourfold::UnimodularForm indefinite_form(Rng& r) {
  while (true) {
    const fourfold::UnimodularForm f = form(r);
    if (f.b_plus() > 0 && f.b_minus() > 0) return f;
  }
}

/// A single catalog summand as expression text.
inline std::string summand(Rng& r) {
  switch (r.uniform(0, 8)) {
    case 0: return "K3";
    case 1: return "S2xS2";
    case 2: return "CP2";
    case 3: return "CP2bar";
    case 4: return "X(" + std::to_string(r.uniform(2, 12)) + ")";
    case 5: return "Y(" + std::to_string(r.uniform(0, 12)) + ")";
    case 6: return "Z(" + std::to_string(r.uniform(2, 12)) + ")";
    case 7: return "R22";
    default: return "BC(" + std::to_string(6 + 4 * r.uniform(0, 3)) + ")";
  }
}

/// A connected-sum expression with 1..max_terms terms and small multiplicities.
inline fourfold::SumExpression expression(Rng& r, int max_terms = 4) {
  std::string text;
  const auto terms = r.uniform(1, max_terms);
  for (std::int64_t i = 0; i < terms; ++i) {
    if (i) text += " # ";
    const auto mult = r.uniform(1, 3);
    if (mult > 1) text += std::to_string(mult) + "*";
    text += summand(r);
  }
  return fourfold::parse_expression(text);
}

inline fourfold::ManifoldSpec manifold(Rng& r, int max_terms = 4) { return fourfold::evaluate(expression(r, max_terms)); }

/// An admissible symplectic piece (b+ = 3 mod 4) from the catalog.
inline fourfold::SymplecticPiece admissible_piece(Rng& r) {
  const auto& c = fourfold::Catalog::builtin();
  switch (r.uniform(0, 4)) {
    case 0: return c.get("K3", {}).pieces.at(0);
    case 1: return c.get("X", {r.uniform(2, 15)}).pieces.at(0);
    case 2: return c.get("Y", {r.uniform(0, 15)}).pieces.at(0);
    case 3: return c.get("Z", {2 * r.uniform(1, 8)}).pieces.at(0);
    default: return c.get("R22", {}).pieces.at(0);
  }
}

inline std::vector<fourfold::SymplecticPiece> admissible_pieces(Rng& r, std::int64_t count) {
  std::vector<fourfold::SymplecticPiece> out;
  for (std::int64_t i = 0; i < count; ++i) out.push_back(admissible_piece(r));
  return out;
}

/// Basis of `n` mutually orthogonal generators with known squares and
/// random divisibilities; the first one optionally opaque.
inline fourfold::BasisPtr orthogonal_basis(Rng& r, std::size_t n) {
  auto b = std::make_shared<fourfold::GeneratorBasis>();
  for (std::size_t i = 0; i < n; ++i) {
    fourfold::Generator g;
    g.name = "g" + std::to_string(i);
    g.self_intersection = r.uniform(-3, 3);
    g.divisibility = r.uniform(1, 4);
    g.block = b->next_block();
    b->add(g);
  }
  return b;
}

inline fourfold::CohClass random_class(Rng& r, const fourfold::BasisPtr& basis, std::int64_t bound = 6) {
  fourfold::CohClass c(basis);
  for (std::size_t i = 0; i < basis->size(); ++i)
    c = c + r.uniform(-bound, bound) * fourfold::CohClass::generator(basis, basis->at(i).name);
  return c;
}

}  // namespace gen
