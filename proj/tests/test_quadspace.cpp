#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "ortho/quadspace.hpp"
#include "ortho/scalar_text.hpp"

using namespace ortho;
using namespace ortho::testing;

namespace {

const FieldSpecPtr Q = FieldSpec::rationals();
const FieldSpecPtr QE = FieldSpec::infinitesimal();

QuadSpacePtr q4() {
  static const QuadSpacePtr space = make_euclidean(Q, 4);
  return space;
}

Vector vec(const QuadSpacePtr& space, std::initializer_list<const char*> coords) {
  std::vector<Scalar> out;
  for (const char* c : coords) out.push_back(parse_scalar(c, space->spec()));
  return Vector(space, std::move(out));
}

Vector random_vector(SplitMix64& rng, const QuadSpacePtr& space, long height = 9) {
  std::vector<Scalar> out;
  for (int i = 0; i < space->dim(); ++i)
    out.push_back(Scalar::rational(space->spec(), random_rat(rng, height)));
  return Vector(space, std::move(out));
}

Vector random_nonzero_vector(SplitMix64& rng, const QuadSpacePtr& space, long height = 9) {
  for (;;) {
    Vector v = random_vector(rng, space, height);
    if (!v.is_zero()) return v;
  }
}

}  // namespace

TEST_CASE("inner: frozen examples") {
  CHECK(inner(vec(q4(), {"1", "2", "0", "0"}), vec(q4(), {"2", "1", "0", "0"})) ==
        Scalar::integer(Q, 4));
  CHECK(inner(Vector::zero(q4()), Vector::zero(q4())).is_zero());
  CHECK(inner(Vector::basis(q4(), 0), Vector::basis(q4(), 1)).is_zero());

  QuadSpacePtr weighted = make_space(Q, 2, {parse_scalar("2", Q), parse_scalar("3", Q)});
  CHECK(inner(vec(weighted, {"1", "1"}), vec(weighted, {"1", "1"})) == Scalar::integer(Q, 5));
}

TEST_CASE("inner: bilinear and symmetric on random triples") {
  SplitMix64 rng(0xb111);
  for (int it = 0; it < 100; ++it) {
    Vector u = random_vector(rng, q4());
    Vector v = random_vector(rng, q4());
    Vector w = random_vector(rng, q4());
    Scalar a = Scalar::rational(Q, random_rat(rng, 9));
    Scalar b = Scalar::rational(Q, random_rat(rng, 9));
    CHECK(inner(u.scaled(a) + v.scaled(b), w) == a * inner(u, w) + b * inner(v, w));
    CHECK(inner(u, v) == inner(v, u));
  }
}

TEST_CASE("anisotropy: positive norms for non-zero vectors") {
  SplitMix64 rng(0xa215);
  QuadSpacePtr weighted =
      make_space(Q, 4, {parse_scalar("1", Q), parse_scalar("2", Q), parse_scalar("1/3", Q),
                        parse_scalar("5", Q)});
  for (int it = 0; it < 200; ++it) {
    Vector v = random_nonzero_vector(rng, it % 2 ? q4() : weighted);
    CHECK(inner(v, v).sign() > 0);
  }
}

TEST_CASE("l1_witness: frozen examples") {
  Vector z1 = l1_witness(vec(q4(), {"1", "0", "0", "0"}), vec(q4(), {"1", "2", "0", "0"}));
  CHECK(z1 == vec(q4(), {"0", "2", "0", "0"}));
  CHECK(inner(z1, vec(q4(), {"1", "0", "0", "0"})).is_zero());

  Vector z2 = l1_witness(vec(q4(), {"1", "0", "0", "0"}), vec(q4(), {"3", "0", "0", "0"}));
  CHECK(z2.is_zero());

  Vector z3 = l1_witness(vec(q4(), {"1", "1", "0", "0"}), vec(q4(), {"1", "0", "0", "0"}));
  CHECK(z3 == vec(q4(), {"1/2", "-1/2", "0", "0"}));

  CHECK_THROWS_AS(l1_witness(Vector::zero(q4()), vec(q4(), {"1", "0", "0", "0"})),
                  precondition_error);
}

TEST_CASE("l1_witness: orthogonality and span preservation on random pairs") {
  SplitMix64 rng(0x117e55);
  int checked = 0;
  while (checked < 100) {
    Vector x = random_nonzero_vector(rng, q4(), 10);
    Vector y = random_nonzero_vector(rng, q4(), 10);
    Vector z = l1_witness(x, y);
    if (z.is_zero()) continue;  // y collinear with x
    ++checked;
    CHECK(inner(z, x).is_zero());
    CHECK(same_row_span({x.coords(), y.coords()}, {x.coords(), z.coords()}));
  }
}

TEST_CASE("l1_witness is zero exactly on collinear pairs") {
  SplitMix64 rng(0xc0111);
  for (int it = 0; it < 50; ++it) {
    Vector x = random_nonzero_vector(rng, q4());
    Scalar c = Scalar::rational(Q, random_nonzero_rat(rng, 9));
    CHECK(l1_witness(x, x.scaled(c)).is_zero());
  }
}

TEST_CASE("normalize: frozen examples") {
  auto r1 = normalize(vec(q4(), {"3", "4", "0", "0"}));
  CHECK_FALSE(r1.extended);
  CHECK(r1.unit == vec(q4(), {"3/5", "4/5", "0", "0"}));

  auto r2 = normalize(vec(q4(), {"1", "1", "0", "0"}));
  CHECK(r2.extended);
  CHECK(r2.spec->depth() == 1);
  CHECK(inner(r2.unit, r2.unit) == Scalar::one(r2.spec));

  auto r3 = normalize(Vector::basis(q4(), 0));
  CHECK_FALSE(r3.extended);
  CHECK(r3.unit == Vector::basis(q4(), 0));

  CHECK_THROWS_AS(normalize(Vector::zero(q4())), precondition_error);
  QuadSpacePtr qe4 = make_euclidean(QE, 4);
  CHECK_THROWS_AS(normalize(Vector(qe4, {parse_scalar("1", QE), parse_scalar("1", QE),
                                         parse_scalar("0", QE), parse_scalar("0", QE)})),
                  unsupported_extension_error);
}

TEST_CASE("normalize: unit norm after at most one adjunction, random vectors") {
  SplitMix64 rng(0x2024);
  for (int it = 0; it < 60; ++it) {
    Vector x = random_nonzero_vector(rng, q4(), 8);
    auto r = normalize(x);
    CHECK(inner(r.unit, r.unit) == Scalar::one(r.spec));
    CHECK(r.spec->depth() <= 1);
    // the unit vector stays on the line of x
    Vector lifted = x.lifted(r.unit.space());
    CHECK(l1_witness(lifted, r.unit).is_zero());
  }
}

TEST_CASE("is_positive_definite: frozen examples") {
  auto ones = std::vector<Scalar>{Scalar::one(Q), Scalar::one(Q), Scalar::one(Q), Scalar::one(Q)};
  CHECK(is_positive_definite(Q, ones).positive_definite);

  auto bad = std::vector<Scalar>{Scalar::one(Q), Scalar::integer(Q, -1), Scalar::one(Q),
                                 Scalar::one(Q)};
  PosDefReport r = is_positive_definite(Q, bad);
  CHECK_FALSE(r.positive_definite);
  CHECK(*r.index == 1);
  REQUIRE(r.witness.has_value());
  // the witness basis vector has non-positive norm under the candidate gram
  Scalar norm = Scalar::zero(Q);
  for (std::size_t i = 0; i < bad.size(); ++i) norm += bad[i] * (*r.witness)[i] * (*r.witness)[i];
  CHECK(norm.sign() <= 0);

  auto geps = std::vector<Scalar>{Scalar::one(QE), Scalar::eps(QE), Scalar::one(QE),
                                  Scalar::one(QE)};
  CHECK(is_positive_definite(QE, geps).positive_definite);
  CHECK_NOTHROW(make_space(QE, 4, geps));
  CHECK_THROWS_AS(make_space(Q, 4, bad), precondition_error);
}

TEST_CASE("proj_orthogonal: frozen examples") {
  ProjPoint e1(Vector::basis(q4(), 0)), e2(Vector::basis(q4(), 1));
  CHECK(proj_orthogonal(e1, e2));
  CHECK_FALSE(proj_orthogonal(e1, e1));
  CHECK(proj_orthogonal(ProjPoint(vec(q4(), {"1", "1", "0", "0"})),
                        ProjPoint(vec(q4(), {"1", "-1", "0", "0"}))));
}

TEST_CASE("proj points canonicalize and orthogonality is representative-independent") {
  SplitMix64 rng(0x9e0);
  CHECK(ProjPoint(vec(q4(), {"2", "4", "0", "0"})) == ProjPoint(vec(q4(), {"1", "2", "0", "0"})));
  CHECK(ProjPoint(vec(q4(), {"0", "-3", "0", "6"})) == ProjPoint(vec(q4(), {"0", "1", "0", "-2"})));
  CHECK_THROWS_AS(ProjPoint(Vector::zero(q4())), precondition_error);

  for (int it = 0; it < 100; ++it) {
    Vector x = random_nonzero_vector(rng, q4());
    Vector y = random_nonzero_vector(rng, q4());
    Scalar cx = Scalar::rational(Q, random_nonzero_rat(rng, 9));
    Scalar cy = Scalar::rational(Q, random_nonzero_rat(rng, 9));
    ProjPoint p(x), q(y);
    CHECK(proj_orthogonal(p, q) == proj_orthogonal(ProjPoint(x.scaled(cx)), ProjPoint(y.scaled(cy))));
    CHECK(proj_orthogonal(p, q) == proj_orthogonal(q, p));  // symmetric
    CHECK_FALSE(proj_orthogonal(p, p));                     // irreflexive
  }
}

TEST_CASE("space mismatch errors") {
  QuadSpacePtr q3 = make_euclidean(Q, 3);
  CHECK_THROWS_AS(inner(Vector::zero(q4()), Vector::zero(q3)), spec_mismatch_error);
  QuadSpacePtr weighted = make_space(Q, 4, {parse_scalar("2", Q), parse_scalar("1", Q),
                                            parse_scalar("1", Q), parse_scalar("1", Q)});
  CHECK_THROWS_AS(inner(Vector::zero(q4()), Vector::zero(weighted)), spec_mismatch_error);
  CHECK_THROWS_AS(Vector(q4(), {parse_scalar("1", QE), parse_scalar("0", QE),
                                parse_scalar("0", QE), parse_scalar("0", QE)}),
                  spec_mismatch_error);
}
