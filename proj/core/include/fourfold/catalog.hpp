#pragma once

// Catalog of building-block manifolds. Builtin families are axiomatic data:
// the engine checks their internal consistency but does not re-derive the
// surgeries that produce them.
//
// Catalog file format: one record per line, `key=value` fields separated by
// whitespace, '#' starts a comment. Values containing spaces are
// double-quoted. "-" marks an absent value.
//
//   name=X params=2 b_plus=11 b_minus=43 spin=true c1_squared=16
//     c1_divisibility=1 provenance="..." einstein_known=-
//
// (shown wrapped; a record must fit on one line)
//
// Records override the builtin entry with the same name and parameters, or
// add new entries.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fourfold/manifold.hpp"

namespace fourfold {

/// Largest accepted family parameter; keeps every invariant inside int64.
inline constexpr std::int64_t kMaxParameter = 1'000'000;

struct CatalogRecord {
  std::string name;
  std::vector<std::int64_t> params;
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;
  bool spin = false;
  std::optional<std::int64_t> c1_squared;  // present iff the entry is a symplectic piece
  std::int64_t c1_divisibility = 1;
  std::string provenance;
  std::optional<std::string> einstein_known;

  /// "X_2", "BC_6", "K3"...
  std::string label() const;

  /// One line of the catalog file format (no trailing newline).
  std::string to_line() const;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

/// Parses catalog text. Throws CatalogError on malformed lines.
std::vector<CatalogRecord> parse_catalog_text(std::string_view text);

/// Consistency issues of a record; empty when it is sound.
std::vector<std::string> validate_record(const CatalogRecord& r);

/// Builds the invariant record; the record is assumed validated.
ManifoldSpec to_manifold(const CatalogRecord& r);

class Catalog {
 public:
  /// Catalog holding only the builtin families.
  static Catalog builtin();

  /// Builtin catalog plus the records of `text`. Invalid records are kept
  /// and their issues appended to `issues`.
  static Catalog with_overrides(std::string_view text, std::vector<std::string>& issues);

  /// Reads a catalog file. Throws CatalogError when the file cannot be read.
  static Catalog from_file(const std::string& path, std::vector<std::string>& issues);

  /// Builtin catalog, or the file named by FOURFOLD_CATALOG when set.
  static Catalog from_environment(std::vector<std::string>& issues);

  /// Throws UnknownCatalogEntry or ParameterOutOfRange.
  CatalogRecord record(std::string_view name, const std::vector<std::int64_t>& params) const;
  ManifoldSpec get(std::string_view name, const std::vector<std::int64_t>& params) const;

  bool knows(std::string_view name) const;

  /// Builtin family names in display order.
  static const std::vector<std::string>& builtin_names();

  const std::map<std::pair<std::string, std::vector<std::int64_t>>, CatalogRecord>& overrides() const {
    return overrides_;
  }

 private:
  std::map<std::pair<std::string, std::vector<std::int64_t>>, CatalogRecord> overrides_;
};

/// Builtin record for a family, checking parameter ranges. Throws
/// UnknownCatalogEntry or ParameterOutOfRange.
CatalogRecord builtin_record(std::string_view name, const std::vector<std::int64_t>& params);

}  // namespace fourfold
