#pragma once

// Connected-sum expressions:
//
//   expr := term ('#' term)*
//   term := [INT '*'] NAME ['(' INT (',' INT)* ')']
//
// Whitespace is ignored. NAME is resolved against the catalog (builtins:
// K3, S2xS2, CP2, CP2bar, X, Y, Z, R22, BC). In family mode a parameter may
// also be the placeholder `l`, substituted by instantiate().

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fourfold/catalog.hpp"
#include "fourfold/manifold.hpp"

namespace fourfold {

/// Upper bound on expanded summands accepted by evaluate() and decompose().
inline constexpr std::int64_t kMaxSummands = 10'000;

struct ExprParam {
  std::int64_t value = 0;
  bool is_ell = false;

  friend bool operator==(const ExprParam&, const ExprParam&) = default;
};

struct ExprTerm {
  std::int64_t multiplicity = 1;
  std::string name;
  std::vector<ExprParam> params;
  std::size_t offset = 0;  // byte offset of the term in the source text

  std::vector<std::int64_t> values() const;

  friend bool operator==(const ExprTerm& a, const ExprTerm& b) {
    return a.multiplicity == b.multiplicity && a.name == b.name && a.params == b.params;
  }
};

struct SumExpression {
  std::vector<ExprTerm> terms;

  /// Number of summands after expanding multiplicities.
  std::int64_t summand_count() const;
  bool has_placeholder() const;

  /// Normalized text: "4*K3 # X(2) # Y(l)"; multiplicity 1 is omitted.
  std::string to_string() const;

  friend bool operator==(const SumExpression&, const SumExpression&) = default;
};

/// Throws SyntaxError (with byte offset). The placeholder `l` is accepted
/// only when allow_placeholder is set.
SumExpression parse_expression(std::string_view text, bool allow_placeholder = false);

/// Replaces every `l` parameter by ell.
SumExpression instantiate(const SumExpression& e, std::int64_t ell);

/// Evaluates the expanded summands left to right through connected_sum.
/// Throws UnknownCatalogEntry, ParameterOutOfRange (also for a remaining
/// placeholder), CatalogError when the catalog entry is inconsistent.
ManifoldSpec evaluate(const SumExpression& e, const Catalog& catalog = Catalog::builtin());

/// Convenience: parse then evaluate.
ManifoldSpec evaluate(std::string_view text, const Catalog& catalog = Catalog::builtin());

/// Split of an expression into symplectic pieces and CP2bar blow-ups, as
/// used by the Einstein check.
struct Decomposition {
  std::vector<SymplecticPiece> pieces;
  std::int64_t blowups = 0;
  std::vector<std::string> other_summands;  // neither a piece nor CP2bar
};

Decomposition decompose(const SumExpression& e, const Catalog& catalog = Catalog::builtin());

}  // namespace fourfold
