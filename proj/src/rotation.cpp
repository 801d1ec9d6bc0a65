#include "ortho/rotation.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace ortho {

namespace {

std::size_t idx(int r, int c, int n) { return static_cast<std::size_t>(r) * n + c; }

}  // namespace

Vector OrthoMatrix::apply(const Vector& v) const {
  if (!same_space(space_, v.space())) throw spec_mismatch_error("vector lives in another space");
  const int n = dim();
  std::vector<Scalar> out(static_cast<std::size_t>(n), Scalar::zero(space_->spec()));
  for (int r = 0; r < n; ++r) {
    Scalar acc = Scalar::zero(space_->spec());
    for (int c = 0; c < n; ++c) acc += at(r, c) * v[c];
    out[static_cast<std::size_t>(r)] = std::move(acc);
  }
  return Vector(space_, std::move(out));
}

OrthoMatrix OrthoMatrix::operator*(const OrthoMatrix& rhs) const {
  if (!same_space(space_, rhs.space_)) throw spec_mismatch_error("matrices live in different spaces");
  const int n = dim();
  std::vector<Scalar> out(static_cast<std::size_t>(n) * n, Scalar::zero(space_->spec()));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Scalar acc = Scalar::zero(space_->spec());
      for (int k = 0; k < n; ++k) acc += at(r, k) * rhs.at(k, c);
      out[idx(r, c, n)] = std::move(acc);
    }
  }
  return OrthoMatrix(space_, std::move(out), det_ * rhs.det_);
}

OrthoMatrix OrthoMatrix::inverse() const {
  const int n = dim();
  std::vector<Scalar> out(static_cast<std::size_t>(n) * n, Scalar::zero(space_->spec()));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out[idx(r, c, n)] = space_->gram_at(c) * at(c, r) / space_->gram_at(r);
  return OrthoMatrix(space_, std::move(out), det_);
}

bool OrthoMatrix::operator==(const OrthoMatrix& rhs) const {
  if (!same_space(space_, rhs.space_)) throw spec_mismatch_error("matrices live in different spaces");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!(entries_[i] == rhs.entries_[i])) return false;
  return true;
}

OrthoMatrix OrthoMatrix::lifted(const QuadSpacePtr& wider_space) const {
  std::vector<Scalar> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.lifted(wider_space->spec()));
  return OrthoMatrix(wider_space, std::move(out), det_.lifted(wider_space->spec()));
}

OrthoMatrix OrthoMatrix::identity(const QuadSpacePtr& space) {
  const int n = space->dim();
  std::vector<Scalar> out(static_cast<std::size_t>(n) * n, Scalar::zero(space->spec()));
  for (int r = 0; r < n; ++r) out[idx(r, r, n)] = Scalar::one(space->spec());
  return OrthoMatrix(space, std::move(out), Scalar::one(space->spec()));
}

Scalar exact_det(const QuadSpacePtr& space, const std::vector<Scalar>& entries) {
  const int n = space->dim();
  std::vector<Scalar> m = entries;
  Scalar det = Scalar::one(space->spec());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n && pivot < 0; ++r)
      if (!m[idx(r, col, n)].is_zero()) pivot = r;
    if (pivot < 0) return Scalar::zero(space->spec());
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m[idx(pivot, c, n)], m[idx(col, c, n)]);
      det = -det;
    }
    const Scalar p = m[idx(col, col, n)];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      if (m[idx(r, col, n)].is_zero()) continue;
      const Scalar f = m[idx(r, col, n)] / p;
      for (int c = col; c < n; ++c) m[idx(r, c, n)] -= f * m[idx(col, c, n)];
    }
  }
  return det;
}

OrthoMatrix verify_orthogonal(const QuadSpacePtr& space, std::vector<Scalar> entries) {
  const int n = space->dim();
  if (entries.size() != static_cast<std::size_t>(n) * n)
    throw precondition_error("matrix must be square over the space");
  for (const auto& e : entries)
    if (!same_spec(e.spec(), space->spec()))
      throw spec_mismatch_error("matrix entry does not belong to the space's spec");
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Scalar acc = Scalar::zero(space->spec());
      for (int k = 0; k < n; ++k)
        acc += space->gram_at(k) * entries[idx(k, i, n)] * entries[idx(k, j, n)];
      const Scalar expected = i == j ? space->gram_at(i) : Scalar::zero(space->spec());
      if (!(acc == expected))
        throw validation_error("not orthogonal: <U e_" + std::to_string(i) + ", U e_" +
                                   std::to_string(j) + "> = " + acc.str() + ", expected " +
                                   expected.str(),
                               i, j);
    }
  }
  Scalar det = exact_det(space, entries);
  if (!(det * det == Scalar::one(space->spec())))
    throw validation_error("determinant is not +1 or -1", 0, 0);
  return OrthoMatrix(space, std::move(entries), std::move(det));
}

BasicRotation plane_rotation(const QuadSpacePtr& space, const Vector& u, const Vector& v,
                             const Scalar& alpha, const Scalar& beta) {
  const FieldSpecPtr& spec = space->spec();
  if (!(inner(u, u) == Scalar::one(spec)) || !(inner(v, v) == Scalar::one(spec)))
    throw precondition_error("plane basis vectors must be unit vectors");
  if (!inner(u, v).is_zero()) throw precondition_error("plane basis vectors must be orthogonal");
  if (!(alpha * alpha + beta * beta == Scalar::one(spec)))
    throw precondition_error("rotation parameters must satisfy alpha^2 + beta^2 = 1");

  const int n = space->dim();
  const Scalar am1 = alpha - Scalar::one(spec);
  std::vector<Scalar> m(static_cast<std::size_t>(n) * n, Scalar::zero(spec));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Scalar gu = space->gram_at(c) * u[c];
      const Scalar gv = space->gram_at(c) * v[c];
      Scalar e = am1 * (u[r] * gu + v[r] * gv) + beta * (v[r] * gu - u[r] * gv);
      if (r == c) e += Scalar::one(spec);
      m[idx(r, c, n)] = std::move(e);
    }
  }
  OrthoMatrix mat = verify_orthogonal(space, std::move(m));
  if (!(mat.det() == Scalar::one(spec))) throw error("plane rotation has determinant != 1");
  return BasicRotation{std::move(mat), u, v, alpha, beta};
}

CoordinateRotationResult coordinate_rotation(const QuadSpacePtr& space, int i, int j,
                                             const Scalar& alpha, const Scalar& beta) {
  if (i == j || i < 0 || j < 0 || i >= space->dim() || j >= space->dim())
    throw precondition_error("coordinate plane needs two distinct valid indices");
  auto si = sqrt_adjoin(space->gram_at(i));
  QuadSpacePtr sp = lift_space(space, si.spec);
  auto sj = sqrt_adjoin(sp->gram_at(j));
  sp = lift_space(sp, sj.spec);
  Vector u = Vector::basis(sp, i).scaled(si.root.lifted(sj.spec).inverse());
  Vector v = Vector::basis(sp, j).scaled(sj.root.inverse());
  BasicRotation rot = plane_rotation(sp, u, v, alpha.lifted(sj.spec), beta.lifted(sj.spec));
  return {sp->spec(), std::move(rot)};
}

BasicRotationResult basic_rotation_mapping(const ProjPoint& p, const ProjPoint& q) {
  if (!same_space(p.space(), q.space()))
    throw spec_mismatch_error("projective points live in different spaces");
  if (p == q) throw precondition_error("basic_rotation_mapping requires distinct points");

  NormalizeResult nu = normalize(p.rep());
  QuadSpacePtr sp = nu.unit.space();
  Vector z = l1_witness(p.rep().lifted(sp), q.rep().lifted(sp));
  NormalizeResult nv = normalize(z);
  sp = nv.unit.space();
  NormalizeResult nw = normalize(q.rep().lifted(sp));
  sp = nw.unit.space();

  Vector u = nu.unit.lifted(sp);
  Vector v = nv.unit.lifted(sp);
  const Vector& w = nw.unit;
  Scalar alpha = inner(w, u);
  Scalar beta = inner(w, v);
  BasicRotation rot = plane_rotation(sp, u, v, alpha, beta);
  return {sp->spec(), std::move(rot)};
}

bool swap_check(const BasicRotation& u, const ProjPoint& p, const ProjPoint& q) {
  if (!proj_orthogonal(p, q)) throw precondition_error("swap_check requires orthogonal points");
  const QuadSpacePtr& space = u.matrix.space();
  ProjPoint pl = p.lifted(space);
  ProjPoint ql = q.lifted(space);
  if (ProjPoint(u.matrix.apply(pl.rep())) != ql)
    throw precondition_error("swap_check requires phi_U(p) = q");
  return ProjPoint(u.matrix.apply(ql.rep())) == pl;
}

BasicRotationResult rotation_sqrt(const BasicRotation& u) {
  const QuadSpacePtr& space = u.matrix.space();
  const FieldSpecPtr& spec = space->spec();
  if (spec->kind() == FieldKind::infinitesimal)
    throw unsupported_extension_error("rotation_sqrt is unsupported over Q(eps)");

  if (u.alpha == -Scalar::one(spec)) {
    // half turn: the oriented quarter turn squares to it
    BasicRotation quarter =
        plane_rotation(space, u.plane_u, u.plane_v, Scalar::zero(spec), Scalar::one(spec));
    return {spec, std::move(quarter)};
  }
  const Scalar half = (Scalar::one(spec) + u.alpha) / Scalar::integer(spec, 2);
  SqrtAdjoinResult root = sqrt_adjoin(half);
  QuadSpacePtr sp = lift_space(space, root.spec);
  const Scalar alpha2 = root.root;
  const Scalar beta2 = u.beta.lifted(root.spec) / (Scalar::integer(root.spec, 2) * alpha2);
  BasicRotation rot =
      plane_rotation(sp, u.plane_u.lifted(sp), u.plane_v.lifted(sp), alpha2, beta2);
  return {root.spec, std::move(rot)};
}

namespace {

struct GivensState {
  QuadSpacePtr base_space;
  QuadSpacePtr space;
  FieldSpecPtr spec;
  std::size_t base_depth;
  std::size_t max_adjoin;
  std::vector<Scalar> w;          // working matrix entries
  std::vector<Scalar> scale;      // sqrt(g_i)
  struct Raw {
    int r1, r2;
    Scalar alpha, beta;
  };
  std::vector<Raw> raw;

  void lift_to(const FieldSpecPtr& wider) {
    if (same_spec(spec, wider)) return;
    if (wider->depth() - base_depth > max_adjoin)
      throw cap_exceeded_error("Givens decomposition needs more than " +
                               std::to_string(max_adjoin) + " adjunctions");
    for (auto& e : w) e = e.lifted(wider);
    for (auto& s : scale) s = s.lifted(wider);
    for (auto& f : raw) {
      f.alpha = f.alpha.lifted(wider);
      f.beta = f.beta.lifted(wider);
    }
    spec = wider;
    space = lift_space(base_space, wider);
  }
};

}  // namespace

GivensDecomposition givens_decompose(const OrthoMatrix& u, std::size_t max_adjunctions) {
  const QuadSpacePtr& space0 = u.space();
  const FieldSpecPtr& spec0 = space0->spec();
  if (spec0->kind() == FieldKind::infinitesimal)
    throw unsupported_extension_error("Givens decomposition is unsupported over Q(eps)");
  if (!(u.det() == Scalar::one(spec0)))
    throw not_a_rotation_error("determinant is " + u.det().str() + ", not a rotation");

  const int n = space0->dim();
  GivensState st{space0, space0, spec0, spec0->depth(), max_adjunctions, u.entries(), {}, {}};

  // normalized coordinate frame: sqrt of every gram entry
  for (int i = 0; i < n; ++i) {
    SqrtAdjoinResult r = sqrt_adjoin(st.space->gram_at(i));
    st.lift_to(r.spec);
    st.scale.push_back(r.root.lifted(st.spec));
  }

  auto at = [&](int r, int c) -> Scalar& { return st.w[idx(r, c, n)]; };

  for (int col = 0; col + 1 < n; ++col) {
    for (;;) {
      std::vector<int> targets;
      for (int i = col + 1; i < n; ++i)
        if (!at(i, col).is_zero()) targets.push_back(i);
      if (targets.empty()) break;

      // pair (r1, r2): r2's entry is zeroed; prefer pivots that are already
      // squares in the working spec
      int pr1 = -1, pr2 = -1;
      std::optional<Scalar> rho;
      for (int r1 = col; r1 < n && !rho; ++r1) {
        if (r1 != col && at(r1, col).is_zero()) continue;
        for (int r2 : targets) {
          if (r2 <= r1) continue;
          const Scalar piv = st.space->gram_at(r1) * at(r1, col) * at(r1, col) +
                             st.space->gram_at(r2) * at(r2, col) * at(r2, col);
          if (auto root = try_sqrt(piv)) {
            pr1 = r1;
            pr2 = r2;
            rho = *root;
            break;
          }
        }
      }
      if (!rho) {
        pr1 = col;
        pr2 = targets.front();
        const Scalar piv = st.space->gram_at(pr1) * at(pr1, col) * at(pr1, col) +
                           st.space->gram_at(pr2) * at(pr2, col) * at(pr2, col);
        SqrtAdjoinResult r = sqrt_adjoin(piv);
        st.lift_to(r.spec);
        rho = r.root;
      }

      const Scalar& s1 = st.scale[static_cast<std::size_t>(pr1)];
      const Scalar& s2 = st.scale[static_cast<std::size_t>(pr2)];
      const Scalar gamma = at(pr1, col);
      const Scalar delta = at(pr2, col);
      const Scalar alpha = s1 * gamma / *rho;
      const Scalar beta = -(s2 * delta / *rho);

      // left-multiply rows pr1, pr2 by [[alpha, -beta s2/s1],[beta s1/s2, alpha]]
      const Scalar q12 = beta * s2 / s1;
      const Scalar q21 = beta * s1 / s2;
      for (int c = 0; c < n; ++c) {
        const Scalar a = at(pr1, c);
        const Scalar b = at(pr2, c);
        at(pr1, c) = alpha * a - q12 * b;
        at(pr2, c) = q21 * a + alpha * b;
      }
      st.raw.push_back({pr1, pr2, alpha, beta});
    }
  }

  // residual diagonal: +1/-1 entries, an even number of -1
  std::vector<int> minus;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!at(i, j).is_zero()) throw error("Givens reduction did not reach a diagonal");
    }
    if (at(i, i) == Scalar::one(st.spec)) continue;
    if (at(i, i) == -Scalar::one(st.spec)) {
      minus.push_back(i);
      continue;
    }
    throw error("Givens reduction produced a non-unit diagonal entry");
  }
  if (minus.size() % 2 != 0) throw error("odd number of -1 diagonal entries for a rotation");

  GivensDecomposition out;
  out.spec = st.spec;
  auto unit_axis = [&](int i) {
    return Vector::basis(st.space, i).scaled(st.scale[static_cast<std::size_t>(i)].inverse());
  };
  for (const auto& f : st.raw) {
    out.factors.push_back(
        plane_rotation(st.space, unit_axis(f.r1), unit_axis(f.r2), f.alpha, -f.beta));
  }
  for (std::size_t k = 0; k + 1 < minus.size(); k += 2) {
    out.factors.push_back(plane_rotation(st.space, unit_axis(minus[k]), unit_axis(minus[k + 1]),
                                         -Scalar::one(st.spec), Scalar::zero(st.spec)));
  }
  return out;
}

std::vector<ProjPoint> induced_map(const OrthoMatrix& u, const std::vector<ProjPoint>& pts) {
  std::vector<ProjPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    if (!same_space(p.space(), u.space()))
      throw spec_mismatch_error("point lives in another space");
    out.emplace_back(u.apply(p.rep()));
  }
  return out;
}

FixpointReport fixpoint_class(const Scalar& alpha, const Scalar& beta) {
  const FieldSpecPtr& spec = alpha.spec();
  if (!(alpha * alpha + beta * beta == Scalar::one(spec)))
    throw not_basic_error("block parameters do not satisfy alpha^2 + beta^2 = 1");
  const Scalar disc = Scalar::integer(spec, 4) * (alpha * alpha - Scalar::one(spec));
  if (beta.is_zero()) return {FixpointClass::identity_on_line, disc};
  if (disc.sign() >= 0) throw error("discriminant certificate failed for beta != 0");
  return {FixpointClass::fixpoint_free_on_line, disc};
}

FixpointReport fixpoint_class(const BasicRotation& u) { return fixpoint_class(u.alpha, u.beta); }

FixpointReport fixpoint_class_block(const Scalar& a, const Scalar& b, const Scalar& c,
                                    const Scalar& d) {
  const FieldSpecPtr& spec = a.spec();
  const Scalar det = a * d - b * c;
  if (det == -Scalar::one(spec))
    throw not_basic_error(
        "determinant -1: the block has the distinct eigenvalues 1 and -1 and fixes two lines");
  if (!(det == Scalar::one(spec)) || !(d == a) || !(b == -c))
    throw not_basic_error("block is not in the canonical rotation form [[a,-b],[b,a]]");
  return fixpoint_class(a, c);
}

}  // namespace ortho
