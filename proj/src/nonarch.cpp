#include "ortho/nonarch.hpp"

#include <utility>

#include "ortho/rng.hpp"

namespace ortho {

namespace {

bool in_ik(const Scalar& s) {
  const MagnitudeClass m = classify_magnitude(s);
  return m == MagnitudeClass::zero || m == MagnitudeClass::infinitesimal;
}

void require_infinitesimal_spec(const FieldSpecPtr& spec, const char* what) {
  if (spec->kind() != FieldKind::infinitesimal)
    throw precondition_error(std::string(what) + " requires the infinitesimal spec, got " +
                             spec->describe());
}

// Identity except for the canonical block [[a,-b],[b,a]] on coordinates i, j.
// Needs no square roots, so it works over Q(eps); requires g_i = g_j.
OrthoMatrix block_matrix(const QuadSpacePtr& space, int i, int j, const Scalar& a,
                         const Scalar& b) {
  if (!(space->gram_at(i) == space->gram_at(j)))
    throw precondition_error("block rotation needs equal gram entries on its plane");
  const int n = space->dim();
  std::vector<Scalar> m(static_cast<std::size_t>(n) * n, Scalar::zero(space->spec()));
  for (int r = 0; r < n; ++r) m[static_cast<std::size_t>(r) * n + r] = Scalar::one(space->spec());
  m[static_cast<std::size_t>(i) * n + i] = a;
  m[static_cast<std::size_t>(i) * n + j] = -b;
  m[static_cast<std::size_t>(j) * n + i] = b;
  m[static_cast<std::size_t>(j) * n + j] = a;
  return verify_orthogonal(space, std::move(m));
}

}  // namespace

VectorClass classify_vector(const Vector& x) {
  require_infinitesimal_spec(x.space()->spec(), "classify_vector");
  switch (classify_magnitude(inner(x, x))) {
    case MagnitudeClass::zero:
    case MagnitudeClass::infinitesimal:
      return VectorClass::infinitesimal;
    case MagnitudeClass::medial:
      return VectorClass::medial;
    case MagnitudeClass::infinite:
      return VectorClass::neither;
  }
  return VectorClass::neither;
}

Vector medial_representative(const ProjPoint& p) {
  Vector x = p.rep();
  if (x.space()->spec()->kind() != FieldKind::infinitesimal) return x;
  const Scalar nrm = inner(x, x);
  const long v = nrm.valuation();
  if (v % 2 != 0)
    throw precondition_error(
        "norm has odd eps-adic valuation; no medial representative exists on this line");
  if (v == 0) return x;
  const Scalar e = Scalar::eps(x.space()->spec());
  const unsigned half = static_cast<unsigned>(v > 0 ? v / 2 : -(v / 2));
  const Scalar factor = v > 0 ? e.pow(half).inverse() : e.pow(half);
  return x.scaled(factor);
}

bool approx(const ProjPoint& p, const ProjPoint& q) {
  if (!same_space(p.space(), q.space()))
    throw spec_mismatch_error("approx requires points of one space");
  const Vector xp = medial_representative(p);
  const Vector yq = medial_representative(q);
  // Any witnessing scalar between medial representatives is medial, and it is
  // determined modulo I_K by the coordinate ratio at any medial coordinate of
  // yq (such a coordinate exists since yq is medial). Testing that single
  // candidate is therefore a complete decision procedure.
  int istar = -1;
  for (int i = 0; i < yq.dim() && istar < 0; ++i)
    if (classify_magnitude(yq[i]) == MagnitudeClass::medial) istar = i;
  if (istar < 0) throw error("medial representative without a medial coordinate");
  const Scalar ratio = xp[istar] / yq[istar];
  if (classify_magnitude(ratio) != MagnitudeClass::medial) return false;
  const Vector diff = xp - yq.scaled(ratio);
  return in_ik(inner(diff, diff));
}

bool schwarz_check(const Vector& x, const Vector& y) {
  const VectorClass cx = classify_vector(x);
  const VectorClass cy = classify_vector(y);
  if (cx == VectorClass::neither || cy == VectorClass::neither)
    throw precondition_error("schwarz_check requires vectors in I_H or M_H");
  if (cx != VectorClass::infinitesimal && cy != VectorClass::infinitesimal)
    throw precondition_error("schwarz_check requires at least one infinitesimal vector");
  const Scalar ip = inner(x, y);
  const bool inequality = ip * ip <= inner(x, x) * inner(y, y);
  return inequality && in_ik(ip);
}

CheckReport congruence_suite_with_relation(
    const std::vector<ProjPoint>& sample, const std::vector<OrthoMatrix>& rotations,
    const std::function<bool(const ProjPoint&, const ProjPoint&)>& relation) {
  if (sample.empty()) throw precondition_error("congruence suite needs a non-empty sample");
  const QuadSpacePtr& space = sample.front().space();
  require_infinitesimal_spec(space->spec(), "congruence_suite");
  if (space->dim() < 2) throw precondition_error("congruence suite needs dimension >= 2");
  for (const auto& p : sample)
    if (!same_space(p.space(), space))
      throw spec_mismatch_error("sample points live in different spaces");
  for (const auto& u : rotations) {
    if (!same_space(u.space(), space))
      throw spec_mismatch_error("rotation lives in another space");
    for (const auto& e : u.entries())
      if (classify_magnitude(e) == MagnitudeClass::infinite)
        throw precondition_error(
            "rotation entries must be medial or infinitesimal for the invariance argument");
  }

  // the automatic non-triviality witness <e1> approx <e1 + eps e2>
  const Scalar eps = Scalar::eps(space->spec());
  Vector u = Vector::basis(space, 0);
  Vector v = Vector::basis(space, 1);
  const ProjPoint w1(u);
  const ProjPoint w2(u + v.scaled(eps));

  std::vector<ProjPoint> pts = sample;
  pts.push_back(w1);
  pts.push_back(w2);
  const std::size_t n = pts.size();

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = relation(pts[i], pts[j]);

  CheckReport report;

  Check reflexive{"reflexive", true, ""};
  for (std::size_t i = 0; i < n && reflexive.pass; ++i) {
    if (!rel[i][i]) {
      reflexive.pass = false;
      reflexive.witness = "point #" + std::to_string(i);
    }
  }
  report.checks.push_back(reflexive);

  Check symmetric{"symmetric", true, ""};
  for (std::size_t i = 0; i < n && symmetric.pass; ++i)
    for (std::size_t j = 0; j < n && symmetric.pass; ++j)
      if (rel[i][j] != rel[j][i]) {
        symmetric.pass = false;
        symmetric.witness = "points #" + std::to_string(i) + ", #" + std::to_string(j);
      }
  report.checks.push_back(symmetric);

  Check transitive{"transitive", true, ""};
  for (std::size_t i = 0; i < n && transitive.pass; ++i)
    for (std::size_t j = 0; j < n && transitive.pass; ++j)
      for (std::size_t k = 0; k < n && transitive.pass; ++k)
        if (rel[i][j] && rel[j][k] && !rel[i][k]) {
          transitive.pass = false;
          transitive.witness = "points #" + std::to_string(i) + ", #" + std::to_string(j) + ", #" +
                               std::to_string(k);
        }
  report.checks.push_back(transitive);

  Check congruence{"congruence", true, ""};
  for (std::size_t i = 0; i < n && congruence.pass; ++i)
    for (std::size_t j = 0; j < n && congruence.pass; ++j)
      if (rel[i][j] && proj_orthogonal(pts[i], pts[j])) {
        congruence.pass = false;
        congruence.witness = "orthogonal related pair #" + std::to_string(i) + ", #" +
                             std::to_string(j);
      }
  report.checks.push_back(congruence);

  Check invariance{"invariance", true, ""};
  for (std::size_t r = 0; r < rotations.size() && invariance.pass; ++r) {
    const std::vector<ProjPoint> images = induced_map(rotations[r], pts);
    for (std::size_t i = 0; i < n && invariance.pass; ++i)
      for (std::size_t j = 0; j < n && invariance.pass; ++j)
        if (rel[i][j] != relation(images[i], images[j])) {
          invariance.pass = false;
          invariance.witness = "rotation #" + std::to_string(r) + ", points #" + std::to_string(i) +
                               ", #" + std::to_string(j);
        }
  }
  report.checks.push_back(invariance);

  const bool related = relation(w1, w2);
  const bool distinct = !(w1 == w2);
  Check nontrivial{"nontrivial", related && distinct,
                   std::string("pair (<e1>, <e1 + eps e2>), related=") + (related ? "yes" : "no")};
  report.checks.push_back(nontrivial);

  return report;
}

CheckReport congruence_suite(const std::vector<ProjPoint>& sample,
                             const std::vector<OrthoMatrix>& rotations) {
  return congruence_suite_with_relation(
      sample, rotations, [](const ProjPoint& a, const ProjPoint& b) { return approx(a, b); });
}

std::vector<ProjPoint> default_sample(const QuadSpacePtr& space, int count, std::uint64_t seed) {
  require_infinitesimal_spec(space->spec(), "default_sample");
  const FieldSpecPtr& spec = space->spec();
  SplitMix64 rng(seed);
  const Scalar eps = Scalar::eps(spec);
  std::vector<ProjPoint> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Scalar> coords;
    coords.reserve(static_cast<std::size_t>(space->dim()));
    const int pivot = static_cast<int>(rng.below(static_cast<std::uint64_t>(space->dim())));
    for (int i = 0; i < space->dim(); ++i) {
      Rat base(static_cast<long>(rng.range(-2, 2)));
      if (i == pivot) base = 1;
      Scalar c = Scalar::rational(spec, base);
      if (rng.below(3) == 0) {
        // eps-perturbation
        Rat small(static_cast<long>(rng.range(-3, 3)));
        c += Scalar::rational(spec, small) * eps;
      }
      coords.push_back(std::move(c));
    }
    Vector v(space, std::move(coords));
    if (v.is_zero()) continue;
    if (classify_vector(v) != VectorClass::medial) continue;
    out.emplace_back(v);
  }
  return out;
}

std::vector<OrthoMatrix> default_rotations(const QuadSpacePtr& space) {
  require_infinitesimal_spec(space->spec(), "default_rotations");
  if (space->dim() < 4) throw precondition_error("default rotations need dimension >= 4");
  const FieldSpecPtr& spec = space->spec();
  const Scalar one = Scalar::one(spec);
  const Scalar eps = Scalar::eps(spec);
  const Scalar denom = one + eps * eps;
  const Scalar alpha_eps = (one - eps * eps) / denom;
  const Scalar beta_eps = (Scalar::integer(spec, 2) * eps) / denom;
  const Scalar a35 = Scalar::rational(spec, Rat(3, 5));
  const Scalar b45 = Scalar::rational(spec, Rat(4, 5));
  const Scalar a513 = Scalar::rational(spec, Rat(5, 13));
  const Scalar b1213 = Scalar::rational(spec, Rat(12, 13));
  return {
      block_matrix(space, 0, 1, alpha_eps, beta_eps),
      block_matrix(space, 2, 3, alpha_eps, -beta_eps),
      block_matrix(space, 0, 2, a35, b45),
      block_matrix(space, 1, 3, a513, b1213),
  };
}

}  // namespace ortho
