#pragma once

/**
 * @file quadspace.hpp
 * @brief Positive-definite diagonal quadratic spaces and projective points.
 *
 * The form is <u,v> = sum_i g_i u_i v_i with every g_i > 0, which makes the
 * form anisotropic. Projective points are stored with a canonical
 * representative (first non-zero coordinate scaled to 1), so point equality
 * is exact representational equality.
 */

#include <memory>
#include <optional>
#include <vector>

#include "ortho/scalar.hpp"

namespace ortho {

class QuadSpace;
using QuadSpacePtr = std::shared_ptr<const QuadSpace>;

class QuadSpace {
 public:
  const FieldSpecPtr& spec() const { return spec_; }
  int dim() const { return dim_; }
  const std::vector<Scalar>& gram() const { return gram_; }
  const Scalar& gram_at(int i) const { return gram_[static_cast<std::size_t>(i)]; }

  bool operator==(const QuadSpace& other) const;
  bool operator!=(const QuadSpace& other) const { return !(*this == other); }

 private:
  friend QuadSpacePtr make_space(const FieldSpecPtr&, int, std::vector<Scalar>);
  QuadSpace(FieldSpecPtr spec, int dim, std::vector<Scalar> gram)
      : spec_(std::move(spec)), dim_(dim), gram_(std::move(gram)) {}

  FieldSpecPtr spec_;
  int dim_;
  std::vector<Scalar> gram_;
};

/// Validates positivity of the diagonal and constructs the space.
QuadSpacePtr make_space(const FieldSpecPtr& spec, int dim, std::vector<Scalar> gram);

/// Euclidean space: gram diagonal all ones.
QuadSpacePtr make_euclidean(const FieldSpecPtr& spec, int dim);

bool same_space(const QuadSpacePtr& a, const QuadSpacePtr& b);

/// Re-expresses a space over a wider spec (gram entries lifted).
QuadSpacePtr lift_space(const QuadSpacePtr& space, const FieldSpecPtr& wider);

class Vector {
 public:
  Vector(QuadSpacePtr space, std::vector<Scalar> coords);

  const QuadSpacePtr& space() const { return space_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int dim() const { return space_->dim(); }

  bool is_zero() const;
  Vector operator+(const Vector& rhs) const;
  Vector operator-(const Vector& rhs) const;
  Vector scaled(const Scalar& c) const;
  bool operator==(const Vector& rhs) const;
  bool operator!=(const Vector& rhs) const { return !(*this == rhs); }

  Vector lifted(const QuadSpacePtr& wider_space) const;

  static Vector zero(const QuadSpacePtr& space);
  static Vector basis(const QuadSpacePtr& space, int i);

 private:
  QuadSpacePtr space_;
  std::vector<Scalar> coords_;
};

/// A one-dimensional subspace, stored by its canonical representative.
class ProjPoint {
 public:
  /// Canonicalizes any non-zero vector in the class.
  explicit ProjPoint(const Vector& representative);

  const QuadSpacePtr& space() const { return rep_.space(); }
  const Vector& rep() const { return rep_; }

  bool operator==(const ProjPoint& rhs) const;
  bool operator!=(const ProjPoint& rhs) const { return !(*this == rhs); }

  ProjPoint lifted(const QuadSpacePtr& wider_space) const;

 private:
  Vector rep_;
};

/// <u,v> = sum g_i u_i v_i, exactly.
Scalar inner(const Vector& u, const Vector& v);

/// z = y - <y,x><x,x>^{-1} x; orthogonal to x, spans {x,y} with x whenever
/// y is not collinear with x; the zero vector exactly when it is.
Vector l1_witness(const Vector& x, const Vector& y);

struct NormalizeResult {
  FieldSpecPtr spec;  // possibly extended
  Vector unit;        // lives in the lifted space
  bool extended;
};

/// Unit vector spanning the same line, adjoining sqrt(<x,x>) if needed.
NormalizeResult normalize(const Vector& x);

struct PosDefReport {
  bool positive_definite;
  std::optional<int> index;                   // offending diagonal position
  std::optional<std::vector<Scalar>> witness; // basis vector with <v,v> <= 0
};

/// Checks a candidate gram diagonal before space construction.
PosDefReport is_positive_definite(const FieldSpecPtr& spec, const std::vector<Scalar>& gram);

bool proj_orthogonal(const ProjPoint& p, const ProjPoint& q);

}  // namespace ortho
