#pragma once

/**
 * @file rotation.hpp
 * @brief Exact orthogonal operators on a quadratic space.
 *
 * An OrthoMatrix is validated against U^T G U = G entrywise; the determinant
 * (always +1 or -1) is cached. Basic rotations carry their plane as an
 * ordered pair of orthonormal vectors together with the canonical block
 * parameters (alpha, beta), alpha^2 + beta^2 = 1.
 *
 * Square roots demanded by constructions (unit vectors, Givens pivots,
 * half angles) extend the scalar spec lazily through sqrt_adjoin; operations
 * that may extend return the working spec alongside their result.
 */

#include <cstddef>
#include <vector>

#include "ortho/quadspace.hpp"

namespace ortho {

class OrthoMatrix {
 public:
  const QuadSpacePtr& space() const { return space_; }
  int dim() const { return space_->dim(); }
  const Scalar& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * dim() + c];
  }
  const std::vector<Scalar>& entries() const { return entries_; }
  const Scalar& det() const { return det_; }

  Vector apply(const Vector& v) const;
  OrthoMatrix operator*(const OrthoMatrix& rhs) const;
  OrthoMatrix inverse() const;  // G^{-1} U^T G
  bool operator==(const OrthoMatrix& rhs) const;
  bool operator!=(const OrthoMatrix& rhs) const { return !(*this == rhs); }

  OrthoMatrix lifted(const QuadSpacePtr& wider_space) const;

  static OrthoMatrix identity(const QuadSpacePtr& space);

 private:
  friend OrthoMatrix verify_orthogonal(const QuadSpacePtr&, std::vector<Scalar>);
  OrthoMatrix(QuadSpacePtr space, std::vector<Scalar> entries, Scalar det)
      : space_(std::move(space)), entries_(std::move(entries)), det_(std::move(det)) {}

  QuadSpacePtr space_;
  std::vector<Scalar> entries_;  // row-major
  Scalar det_;
};

/// Validates U^T G U = G exactly and computes the determinant. Throws
/// validation_error naming the offending inner-product pair.
OrthoMatrix verify_orthogonal(const QuadSpacePtr& space, std::vector<Scalar> entries);

/// Determinant by exact Gaussian elimination (any square scalar matrix).
Scalar exact_det(const QuadSpacePtr& space, const std::vector<Scalar>& entries);

struct BasicRotation {
  OrthoMatrix matrix;
  Vector plane_u, plane_v;  // orthonormal, ordered
  Scalar alpha, beta;       // block [[a,-b],[b,a]] on the plane
};

/// Determinant-1 operator acting as [[alpha,-beta],[beta,alpha]] on the plane
/// spanned by the orthonormal pair (u, v) and as the identity on its
/// complement. Validates the pair and alpha^2 + beta^2 = 1.
BasicRotation plane_rotation(const QuadSpacePtr& space, const Vector& u, const Vector& v,
                             const Scalar& alpha, const Scalar& beta);

struct CoordinateRotationResult {
  FieldSpecPtr spec;  // extended when sqrt(g_i) was adjoined
  BasicRotation rotation;
};

/// Basic rotation in the coordinate plane (e_i, e_j); normalizing the basis
/// vectors may extend the spec when the gram entries are not squares.
CoordinateRotationResult coordinate_rotation(const QuadSpacePtr& space, int i, int j,
                                             const Scalar& alpha, const Scalar& beta);

struct BasicRotationResult {
  FieldSpecPtr spec;
  BasicRotation rotation;
};

/// The basic rotation moving p to q inside span{p,q}, identity on the
/// complement. Extends the spec by the unit-vector adjunctions (at most 3).
BasicRotationResult basic_rotation_mapping(const ProjPoint& p, const ProjPoint& q);

/// Exchange regression: for orthogonal p, q with phi_U(p) = q, the
/// image of q must land back on p's line.
bool swap_check(const BasicRotation& u, const ProjPoint& p, const ProjPoint& q);

/// Half-angle square root within the same plane: V with V^2 = U. The half
/// turn (alpha = -1) maps to the oriented quarter turn.
BasicRotationResult rotation_sqrt(const BasicRotation& u);

struct GivensDecomposition {
  FieldSpecPtr spec;                  // working spec after pivot adjunctions
  std::vector<BasicRotation> factors; // ordered; product equals the input
};

/// Factors a rotation (det +1) into basic rotations in coordinate planes,
/// left-multiplication Givens style; residual -1 diagonal pairs become half
/// turns. Pivots sqrt(g_r1 c1^2 + g_r2 c2^2) adjoin radicals as needed, up to
/// `max_adjunctions` beyond the input spec.
GivensDecomposition givens_decompose(const OrthoMatrix& u,
                                     std::size_t max_adjunctions = std::size_t(-1));

/// Images of projective points under phi_U, canonicalized.
std::vector<ProjPoint> induced_map(const OrthoMatrix& u, const std::vector<ProjPoint>& pts);

enum class FixpointClass { identity_on_line, fixpoint_free_on_line };

struct FixpointReport {
  FixpointClass cls;
  Scalar discriminant;  // 4(alpha^2 - 1); negative exactly in the free case
};

/// Classifies the projective action of a canonical SO(2) block.
FixpointReport fixpoint_class(const Scalar& alpha, const Scalar& beta);
FixpointReport fixpoint_class(const BasicRotation& u);

/// Classifies a raw 2x2 block [[a,b],[c,d]]; throws not_basic_error unless it
/// is in canonical rotation form (det -1 reflections are reported as having
/// the two eigenvalues +1/-1).
FixpointReport fixpoint_class_block(const Scalar& a, const Scalar& b, const Scalar& c,
                                    const Scalar& d);

}  // namespace ortho
