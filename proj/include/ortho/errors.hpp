#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared across the library.
 */

#include <stdexcept>
#include <string>

namespace ortho {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands belong to different field specs (no implicit promotion).
class spec_mismatch_error : public error {
 public:
  using error::error;
};

/// Square root of a negative element of an ordered field.
class no_real_root_error : public error {
 public:
  using error::error;
};

/// Square-root adjunction requested over a spec that does not support it.
class unsupported_extension_error : public error {
 public:
  using error::error;
};

/// An operation precondition was violated.
class precondition_error : public error {
 public:
  using error::error;
};

/// quotient() called on a partition that is not a congruence.
class not_a_congruence_error : public precondition_error {
 public:
  not_a_congruence_error(int u, int v)
      : precondition_error("partition is not a congruence: edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ") lies within a block"),
        edge_u(u),
        edge_v(v) {}
  int edge_u;
  int edge_v;
};

/// A matrix failed exact orthogonality validation.
class validation_error : public error {
 public:
  validation_error(const std::string& what, int i, int j) : error(what), row(i), col(j) {}
  int row;
  int col;
};

/// Determinant -1 operator passed where a rotation is required.
class not_a_rotation_error : public error {
 public:
  using error::error;
};

/// A 2x2 block is not in the canonical rotation form [[a,-b],[b,a]], a^2+b^2=1.
class not_basic_error : public error {
 public:
  using error::error;
};

/// Configured size cap exceeded (tower adjunctions, lattice family size).
class cap_exceeded_error : public error {
 public:
  using error::error;
};

/// Malformed textual or JSON input; `where` describes the location.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  explicit parse_error(const std::string& what) : error(what), position(0) {}
  std::size_t position;
};

}  // namespace ortho
