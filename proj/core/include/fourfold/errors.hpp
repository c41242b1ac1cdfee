#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fourfold {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A definite form containing E8 or H blocks; only diagonal definite forms
/// are classified.
class UnsupportedDefinite : public Error {
 public:
  using Error::Error;
};

class UnknownCatalogEntry : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Catalog data failed its consistency checks on load.
class CatalogError : public Error {
 public:
  using Error::Error;
};

class BasisMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownPairing : public Error {
 public:
  using Error::Error;
};

class InadmissiblePiece : public Error {
 public:
  using Error::Error;
};

class TooManyPieces : public Error {
 public:
  using Error::Error;
};

class CongruenceViolation : public Error {
 public:
  using Error::Error;
};

class UnknownTheorem : public Error {
 public:
  using Error::Error;
};

/// Parse failure; `offset()` is the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace fourfold
