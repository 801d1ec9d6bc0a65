#pragma once

/**
 * @file scalar.hpp
 * @brief Exact arithmetic and linear order for three ordered-field families.
 *
 * Supported field specs:
 *  - rationals:      Q
 *  - tower:          Q(sqrt d1)(sqrt d2)... each radicand positive and not a
 *                    square at its level; elements are coordinate vectors over
 *                    the multiplicative basis of the adjoined radicals, ordered
 *                    by the real embedding that takes every sqrt positive
 *  - infinitesimal:  Q(eps), rational functions in one generator, ordered as
 *                    germs at 0+ so that eps is a positive infinitesimal
 *
 * Every value has a unique canonical representation; equality is
 * representational. Arithmetic never promotes across specs: mixing specs is a
 * spec_mismatch_error.
 */

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ortho/errors.hpp"

namespace ortho {

using Rat = mpq_class;
using Int = mpz_class;

/// Dense integer polynomial in eps; coeffs[i] is the coefficient of eps^i.
/// Invariant: empty means zero, otherwise the top coefficient is non-zero.
using Poly = std::vector<Int>;

enum class FieldKind { rationals, tower, infinitesimal };

enum class Order { less, equal, greater };

/// Magnitude classes with respect to the field order.
/// I_K = {zero, infinitesimal}; M_K = {medial}.
enum class MagnitudeClass { zero, infinitesimal, medial, infinite };

class FieldSpec;
class Scalar;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// A declared ordered field. Immutable; safe to share across threads.
class FieldSpec {
 public:
  static FieldSpecPtr rationals();
  static FieldSpecPtr infinitesimal();

  /// Extends `base` (rationals or tower) by sqrt(radicand). The radicand must
  /// be a strictly positive non-square element of `base`.
  static FieldSpecPtr tower(const FieldSpecPtr& base, const Scalar& radicand);

  FieldKind kind() const { return kind_; }

  /// Number of adjoined radicands (0 for rationals and infinitesimal specs).
  std::size_t depth() const { return radicands_.size(); }

  /// Raw coordinates of the k-th radicand over the basis of the first k
  /// radicands (length 2^k).
  const std::vector<Rat>& radicand_coords(std::size_t k) const { return radicands_[k]; }

  /// The k-th radicand as a scalar of the level-k prefix spec.
  Scalar radicand(std::size_t k) const;

  /// Spec consisting of the first k radicands.
  FieldSpecPtr prefix(std::size_t k) const;

  bool operator==(const FieldSpec& other) const;
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  /// True if `this` equals a prefix of `wider` (lifting is possible).
  bool prefix_of(const FieldSpec& wider) const;

  std::string describe() const;  // e.g. "Q", "Q(sqrt1)(sqrt2)", "Q(eps)"

 private:
  FieldSpec(FieldKind kind, std::vector<std::vector<Rat>> radicands)
      : kind_(kind), radicands_(std::move(radicands)) {}

  FieldKind kind_;
  std::vector<std::vector<Rat>> radicands_;
};

bool same_spec(const FieldSpecPtr& a, const FieldSpecPtr& b);

/// An exact element of a declared field. Immutable value type.
class Scalar {
 public:
  /// Zero over Q.
  Scalar();

  static Scalar zero(const FieldSpecPtr& spec);
  static Scalar one(const FieldSpecPtr& spec);
  static Scalar integer(const FieldSpecPtr& spec, long v);
  static Scalar rational(const FieldSpecPtr& spec, const Rat& v);
  /// The generator eps of an infinitesimal spec.
  static Scalar eps(const FieldSpecPtr& spec);
  /// The basis radical sqrt<k+1> of a tower spec.
  static Scalar radical(const FieldSpecPtr& spec, std::size_t k);

  const FieldSpecPtr& spec() const { return spec_; }
  FieldKind kind() const;

  bool is_zero() const;
  bool is_one() const;
  int sign() const;  // -1, 0, +1 in the field order

  Scalar operator-() const;
  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

  Scalar inverse() const;
  Scalar abs() const;
  Scalar pow(unsigned e) const;

  /// Requires identical specs; equality of canonical representations.
  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  bool operator<(const Scalar& rhs) const;
  bool operator<=(const Scalar& rhs) const;
  bool operator>(const Scalar& rhs) const { return rhs < *this; }
  bool operator>=(const Scalar& rhs) const { return rhs <= *this; }

  /// Re-expresses the value in a wider spec of which spec() is a prefix.
  Scalar lifted(const FieldSpecPtr& wider) const;

  /// eps-adic valuation of a non-zero element of an infinitesimal spec.
  long valuation() const;

  /// The value as a rational, when the representation is rational
  /// (depth-0 coordinates, or a tower element supported on the unit basis).
  Rat as_rational() const;
  bool is_rational_valued() const;

  /// Text form in the scalar grammar (parse_scalar round-trips it).
  std::string str() const;

  // Raw representation access (used by the io layer and FieldSpec).
  const std::vector<Rat>& coords() const { return coords_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  /// Constructs a tower/rational scalar from raw coordinates (canonical).
  static Scalar from_coords(const FieldSpecPtr& spec, std::vector<Rat> coords);
  /// Constructs a rational-function scalar; normalizes to canonical form.
  static Scalar from_fraction(const FieldSpecPtr& spec, Poly num, Poly den);

 private:
  friend class FieldSpec;

  FieldSpecPtr spec_;
  std::vector<Rat> coords_;  // rationals/tower representation, size 2^depth
  Poly num_, den_;           // infinitesimal representation
};

/// Total order of the field (spec-mismatch on different specs).
Order compare(const Scalar& a, const Scalar& b);

/// zero / infinitesimal / medial / infinite per the field's order.
/// Archimedean specs classify every non-zero element as medial; over Q(eps)
/// the class is determined by the eps-adic valuation.
MagnitudeClass classify_magnitude(const Scalar& a);

struct SqrtAdjoinResult {
  FieldSpecPtr spec;  // possibly extended
  Scalar root;        // non-negative, root*root == a (lifted)
  bool extended;
};

/// Exact square root of a >= 0, adjoining one radicand if a is not a square
/// at its level. Infinitesimal specs are unsupported; a < 0 has no real root.
SqrtAdjoinResult sqrt_adjoin(const Scalar& a);

/// Exact square root within the same spec, if one exists.
std::optional<Scalar> try_sqrt(const Scalar& a);

}  // namespace ortho
