#include "ortho/quadspace.hpp"

#include <utility>

namespace ortho {

bool QuadSpace::operator==(const QuadSpace& other) const {
  if (dim_ != other.dim_ || !same_spec(spec_, other.spec_)) return false;
  for (int i = 0; i < dim_; ++i)
    if (!(gram_[i] == other.gram_[i])) return false;
  return true;
}

QuadSpacePtr make_space(const FieldSpecPtr& spec, int dim, std::vector<Scalar> gram) {
  if (dim < 1) throw precondition_error("space dimension must be at least 1");
  if (gram.size() != static_cast<std::size_t>(dim))
    throw precondition_error("gram diagonal length must equal the dimension");
  PosDefReport report = is_positive_definite(spec, gram);
  if (!report.positive_definite)
    throw precondition_error("gram diagonal is not positive definite (entry " +
                             std::to_string(*report.index) + ")");
  return QuadSpacePtr(new QuadSpace(spec, dim, std::move(gram)));
}

QuadSpacePtr make_euclidean(const FieldSpecPtr& spec, int dim) {
  return make_space(spec, dim, std::vector<Scalar>(static_cast<std::size_t>(dim), Scalar::one(spec)));
}

bool same_space(const QuadSpacePtr& a, const QuadSpacePtr& b) { return a == b || *a == *b; }

QuadSpacePtr lift_space(const QuadSpacePtr& space, const FieldSpecPtr& wider) {
  if (same_spec(space->spec(), wider)) return space;
  std::vector<Scalar> gram;
  gram.reserve(space->gram().size());
  for (const auto& g : space->gram()) gram.push_back(g.lifted(wider));
  return make_space(wider, space->dim(), std::move(gram));
}

PosDefReport is_positive_definite(const FieldSpecPtr& spec, const std::vector<Scalar>& gram) {
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (!same_spec(gram[i].spec(), spec))
      throw spec_mismatch_error("gram entry does not belong to the declared spec");
    if (gram[i].sign() <= 0) {
      std::vector<Scalar> witness(gram.size(), Scalar::zero(spec));
      witness[i] = Scalar::one(spec);
      return {false, static_cast<int>(i), std::move(witness)};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

Vector::Vector(QuadSpacePtr space, std::vector<Scalar> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(space_->dim()))
    throw precondition_error("coordinate count must equal the space dimension");
  for (const auto& c : coords_)
    if (!same_spec(c.spec(), space_->spec()))
      throw spec_mismatch_error("vector coordinate does not belong to the space's spec");
}

bool Vector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

Vector Vector::operator+(const Vector& rhs) const {
  if (!same_space(space_, rhs.space_)) throw spec_mismatch_error("vectors live in different spaces");
  std::vector<Scalar> out;
  out.reserve(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out.push_back(coords_[i] + rhs.coords_[i]);
  return Vector(space_, std::move(out));
}

Vector Vector::operator-(const Vector& rhs) const {
  if (!same_space(space_, rhs.space_)) throw spec_mismatch_error("vectors live in different spaces");
  std::vector<Scalar> out;
  out.reserve(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out.push_back(coords_[i] - rhs.coords_[i]);
  return Vector(space_, std::move(out));
}

Vector Vector::scaled(const Scalar& c) const {
  std::vector<Scalar> out;
  out.reserve(coords_.size());
  for (const auto& x : coords_) out.push_back(x * c);
  return Vector(space_, std::move(out));
}

bool Vector::operator==(const Vector& rhs) const {
  if (!same_space(space_, rhs.space_)) throw spec_mismatch_error("vectors live in different spaces");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!(coords_[i] == rhs.coords_[i])) return false;
  return true;
}

Vector Vector::lifted(const QuadSpacePtr& wider_space) const {
  std::vector<Scalar> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.lifted(wider_space->spec()));
  return Vector(wider_space, std::move(out));
}

Vector Vector::zero(const QuadSpacePtr& space) {
  return Vector(space, std::vector<Scalar>(static_cast<std::size_t>(space->dim()),
                                           Scalar::zero(space->spec())));
}

Vector Vector::basis(const QuadSpacePtr& space, int i) {
  Vector v = zero(space);
  std::vector<Scalar> coords = v.coords();
  coords[static_cast<std::size_t>(i)] = Scalar::one(space->spec());
  return Vector(space, std::move(coords));
}

ProjPoint::ProjPoint(const Vector& representative) : rep_(representative) {
  if (representative.is_zero())
    throw precondition_error("a projective point needs a non-zero representative");
  std::size_t first = 0;
  while (representative.coords()[first].is_zero()) ++first;
  const Scalar lead = representative.coords()[first];
  rep_ = representative.scaled(lead.inverse());
}

bool ProjPoint::operator==(const ProjPoint& rhs) const { return rep_ == rhs.rep_; }

ProjPoint ProjPoint::lifted(const QuadSpacePtr& wider_space) const {
  return ProjPoint(rep_.lifted(wider_space));
}

Scalar inner(const Vector& u, const Vector& v) {
  if (!same_space(u.space(), v.space()))
    throw spec_mismatch_error("inner product requires a common space");
  Scalar acc = Scalar::zero(u.space()->spec());
  for (int i = 0; i < u.dim(); ++i) acc += u.space()->gram_at(i) * u[i] * v[i];
  return acc;
}

Vector l1_witness(const Vector& x, const Vector& y) {
  if (x.is_zero()) throw precondition_error("l1_witness requires x != 0");
  const Scalar xx = inner(x, x);
  const Scalar yx = inner(y, x);
  return y - x.scaled(yx / xx);
}

NormalizeResult normalize(const Vector& x) {
  if (x.is_zero()) throw precondition_error("cannot normalize the zero vector");
  const Scalar nrm = inner(x, x);
  SqrtAdjoinResult root = sqrt_adjoin(nrm);
  QuadSpacePtr space = lift_space(x.space(), root.spec);
  Vector lifted = x.lifted(space);
  return {root.spec, lifted.scaled(root.root.inverse()), root.extended};
}

bool proj_orthogonal(const ProjPoint& p, const ProjPoint& q) {
  return inner(p.rep(), q.rep()).is_zero();
}

}  // namespace ortho
