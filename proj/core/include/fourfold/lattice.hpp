#pragma once

// Unimodular symmetric bilinear forms over Z, stored as block multisets
// aE8 + bH + p<1> + q<-1>. Classification is stable: for indefinite forms
// (rank, signature, parity) is a complete invariant.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fourfold {

enum class Parity { Even, Odd };
enum class Definiteness { Positive, Negative, Indefinite, ZeroRank };

std::string_view to_string(Parity p);
std::string_view to_string(Definiteness d);

struct UnimodularForm {
  std::int64_t pos_diag = 0;    // <1> blocks
  std::int64_t neg_diag = 0;    // <-1> blocks
  std::int64_t hyperbolic = 0;  // H blocks
  std::int64_t e8 = 0;          // signed count; negative means -E8 summands

  static UnimodularForm diagonal(std::int64_t pos, std::int64_t neg) { return {pos, neg, 0, 0}; }
  static UnimodularForm even(std::int64_t e8_count, std::int64_t h_count) { return {0, 0, h_count, e8_count}; }

  std::int64_t rank() const;
  std::int64_t signature() const;
  bool is_even() const { return pos_diag == 0 && neg_diag == 0; }
  Parity parity() const { return is_even() ? Parity::Even : Parity::Odd; }

  /// Maximal positive / negative subspace dimensions.
  std::int64_t b_plus() const;
  std::int64_t b_minus() const;

  /// Canonical text form, e.g. "-2E8 + 3H" or "1<1> + 19<-1>"; the zero form is "0".
  std::string to_string() const;

  /// Parses `aE8 + bH + p<1> + q<-1>` (any order, whitespace-insensitive,
  /// repeated terms add). Throws SyntaxError.
  static UnimodularForm parse(std::string_view text);

  friend bool operator==(const UnimodularForm&, const UnimodularForm&) = default;
};

struct FormClass {
  std::int64_t rank = 0;
  std::int64_t signature = 0;
  Parity parity = Parity::Even;
  Definiteness definiteness = Definiteness::ZeroRank;

  friend bool operator==(const FormClass&, const FormClass&) = default;
};

/// Blockwise sum. Opposite-sign E8 pairs are rewritten as 8H each, so the
/// result is isomorphic but not always the literal block union.
UnimodularForm direct_sum(const UnimodularForm& a, const UnimodularForm& b);

/// Throws UnsupportedDefinite for a definite form that contains E8 or H blocks.
FormClass classify(const UnimodularForm& f);

/// Isomorphism over Z. Indefinite and zero-rank forms compare by FormClass;
/// diagonal definite forms by block counts.
bool is_isomorphic(const UnimodularForm& a, const UnimodularForm& b);

/// The canonical representative of f's isomorphism class: aE8 + bH for even
/// indefinite forms, p<1> + q<-1> for odd or diagonal ones.
UnimodularForm normal_form(const UnimodularForm& f);

/// The unique form with the given rank, signature and parity among the
/// normal forms. Throws ParameterOutOfRange if no such form exists (or it
/// would be definite and even).
UnimodularForm form_from_invariants(std::int64_t b_plus, std::int64_t b_minus, bool even);

/// Non-fatal realizability hints for forms of closed smooth 4-manifolds.
/// Currently only the Rokhlin-style check: an even form of a closed spin
/// smooth manifold has signature divisible by 16.
std::vector<std::string> realizability_warnings(const UnimodularForm& f);

}  // namespace fourfold
