#pragma once

/**
 * @file nonarch.hpp
 * @brief Infinitesimal/medial vectors over Q(eps) and the relation approx.
 *
 * approx identifies projective points that admit medial representatives with
 * infinitesimal difference. Over Q(eps) it is a non-trivial congruence of
 * (P(H), perp) invariant under rotations with medial or infinitesimal
 * entries; over an Archimedean spec it degenerates to point equality.
 */

#include <functional>
#include <vector>

#include "ortho/orthograph.hpp"  // CheckReport
#include "ortho/quadspace.hpp"
#include "ortho/rotation.hpp"

namespace ortho {

enum class VectorClass { infinitesimal, medial, neither };

/// Classifies <x,x>: infinitesimal / medial / neither (I_H, M_H membership).
/// Requires a space over the infinitesimal spec.
VectorClass classify_vector(const Vector& x);

/// A medial representative of the line: the canonical representative rescaled
/// by eps^(-v) where 2v is the valuation of its norm. Over Archimedean specs
/// the canonical representative is already medial.
Vector medial_representative(const ProjPoint& p);

/// p approx q: some medial representatives differ by an infinitesimal vector.
/// Decided by rescaling to medial representatives and scanning both signs.
bool approx(const ProjPoint& p, const ProjPoint& q);

/// Schwarz-inequality consequence: for x, y in I_H u M_H with at least one
/// infinitesimal, <x,y>^2 <= <x,x><y,y> and <x,y> is in I_K.
bool schwarz_check(const Vector& x, const Vector& y);

/// Proof obligations of the approx-congruence argument, checked exhaustively
/// on a finite sample: equivalence laws, the congruence property (approx
/// implies not-orthogonal), invariance under each rotation, and the
/// non-triviality witness <u> approx <u + eps v>.
/// Rotations must be validated operators with medial or infinitesimal entries.
CheckReport congruence_suite(const std::vector<ProjPoint>& sample,
                             const std::vector<OrthoMatrix>& rotations);

/// congruence_suite with the relation replaced; lets tests verify that a
/// corrupted relation is detected. The public suite passes `approx`.
CheckReport congruence_suite_with_relation(
    const std::vector<ProjPoint>& sample, const std::vector<OrthoMatrix>& rotations,
    const std::function<bool(const ProjPoint&, const ProjPoint&)>& relation);

/// Deterministic sample for the suite: rational unit-coordinate points
/// perturbed by eps-multiples.
std::vector<ProjPoint> default_sample(const QuadSpacePtr& space, int count, std::uint64_t seed);

/// Four rotations with medial/infinitesimal entries: two eps-parametrized
/// blocks ((1-eps^2)/(1+eps^2), 2eps/(1+eps^2)) and two rational 3/5-4/5
/// blocks, in different coordinate planes.
std::vector<OrthoMatrix> default_rotations(const QuadSpacePtr& space);

}  // namespace ortho
