#pragma once

// Symbolic classes in H^2(M; Z)/torsion over a named generator basis.
//
// Generators live in blocks. Generators in distinct blocks pair to zero;
// within a block only declared pairings are known. Every generator carries a
// declared divisibility in the lattice (1 when it is primitive or when
// nothing better is known).

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fourfold {

struct Generator {
  std::string name;
  std::optional<std::int64_t> self_intersection;  // nullopt: unknown
  std::int64_t divisibility = 1;
  int block = 0;
  bool opaque = false;  // c1 of a catalog piece; only its square is known
};

class GeneratorBasis {
 public:
  /// Appends a generator and returns its index. Throws std::invalid_argument
  /// on duplicate names, malformed names or non-positive divisibility.
  std::size_t add(Generator g);

  /// Declares the pairing of two distinct generators in the same block.
  /// Pairings between two opaque generators are rejected.
  void declare_pairing(std::size_t i, std::size_t j, std::int64_t value);

  std::optional<std::size_t> find(std::string_view name) const;
  const Generator& at(std::size_t i) const { return generators_.at(i); }
  std::size_t size() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }

  /// nullopt when the pairing is not known.
  std::optional<std::int64_t> pairing(std::size_t i, std::size_t j) const;

  /// Next unused block id.
  int next_block() const;

  friend bool operator==(const GeneratorBasis& a, const GeneratorBasis& b);

 private:
  std::vector<Generator> generators_;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> pairings_;
};

using BasisPtr = std::shared_ptr<const GeneratorBasis>;

class CohClass {
 public:
  /// The zero class over `basis`.
  explicit CohClass(BasisPtr basis);

  /// coefficient * generator(name). Throws std::invalid_argument for names
  /// outside the basis.
  static CohClass generator(BasisPtr basis, std::string_view name, std::int64_t coefficient = 1);

  /// Parses "c1(X_2) - 4*f(Y_2) + E1" style linear combinations. Throws
  /// SyntaxError, or std::invalid_argument for names outside the basis.
  static CohClass parse(BasisPtr basis, std::string_view text);

  const BasisPtr& basis() const { return basis_; }
  const std::map<std::size_t, std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(std::size_t index) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Self-intersection. Throws UnknownPairing when a needed pairing is undeclared.
  std::int64_t square() const;

  /// Greatest D dividing every coefficient times its generator's
  /// divisibility; 0 for the zero class.
  std::int64_t divisibility() const;

  std::string to_string() const;

  CohClass operator-() const;
  CohClass operator+(const CohClass& other) const;
  CohClass operator-(const CohClass& other) const;
  friend CohClass operator*(std::int64_t n, const CohClass& c);

  friend bool operator==(const CohClass& a, const CohClass& b);
  friend bool operator<(const CohClass& a, const CohClass& b);

 private:
  void check_same_basis(const CohClass& other) const;
  void set(std::size_t index, std::int64_t value);

  BasisPtr basis_;
  std::map<std::size_t, std::int64_t> coeffs_;  // no zero entries
};

/// Pairing a.b of two classes over the same basis.
std::int64_t intersect(const CohClass& a, const CohClass& b);

}  // namespace fourfold
