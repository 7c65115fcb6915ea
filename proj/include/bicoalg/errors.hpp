#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicoalg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or labels of composed maps do not match.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// solve_preimage: the target vector is not in the image.
class NoPreimage : public Error {
 public:
  using Error::Error;
};

/// corestrict: a column of the map leaves the subspace.
class NotInSubspace : public Error {
 public:
  NotInSubspace(std::size_t column, const std::string& what)
      : Error(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// factor_through_cocenter: the map does not kill the W_M spanning set.
class CocenterObstruction : public Error {
 public:
  CocenterObstruction(std::size_t basis_index, std::string witness)
      : Error("map does not vanish on the cocenter relation of basis vector " +
              std::to_string(basis_index) + ": " + witness),
        basis_index_(basis_index),
        witness_(std::move(witness)) {}
  std::size_t basis_index() const noexcept { return basis_index_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::size_t basis_index_;
  std::string witness_;
};

/// A restricted map (multiplication, action) was fed a tensor outside its
/// cotensor domain.
class NotInCotensorDomain : public Error {
 public:
  using Error::Error;
};

/// scalar_extension refused an input that is not a braided cocommutative
/// coalgebra.
class BCCViolation : public Error {
 public:
  using Error::Error;
};

/// Set-level YD-G / BCC-G condition fails in a G-set generator.
class SetLevelViolation : public Error {
 public:
  using Error::Error;
};

/// Document does not match the schema; `pointer` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(pointer.empty() ? what : pointer + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace bicoalg
