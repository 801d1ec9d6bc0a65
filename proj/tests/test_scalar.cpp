#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "ortho/scalar.hpp"
#include "ortho/scalar_text.hpp"

using namespace ortho;
using namespace ortho::testing;

namespace {

const FieldSpecPtr Q = FieldSpec::rationals();
const FieldSpecPtr QE = FieldSpec::infinitesimal();

Scalar q(const std::string& text) { return parse_scalar(text, Q); }
Scalar qe(const std::string& text) { return parse_scalar(text, QE); }

}  // namespace

TEST_CASE("compare: frozen examples") {
  CHECK(compare(q("1/3"), q("2/5")) == Order::less);

  auto adj = sqrt_adjoin(Scalar::integer(Q, 2));
  REQUIRE(adj.extended);
  const Scalar sqrt2 = adj.root;
  const Scalar seven_fifths = Scalar::rational(adj.spec, Rat(7, 5));
  // oracle: square both sides, 2 > 49/25
  CHECK(compare(sqrt2 * sqrt2, seven_fifths * seven_fifths) == Order::greater);
  CHECK(compare(sqrt2, seven_fifths) == Order::greater);

  CHECK(compare(Scalar::eps(QE), qe("1/1000000")) == Order::less);
  CHECK(compare(Scalar::eps(QE), Scalar::zero(QE)) == Order::greater);
}

TEST_CASE("compare: spec mismatch is an error") {
  CHECK_THROWS_AS((void)compare(q("1"), qe("1")), spec_mismatch_error);
  CHECK_THROWS_AS((void)(q("1") + qe("1")), spec_mismatch_error);
}

TEST_CASE("sqrt_adjoin: frozen examples") {
  auto perfect = sqrt_adjoin(q("9/4"));
  CHECK_FALSE(perfect.extended);
  CHECK(perfect.root == q("3/2"));

  auto two = sqrt_adjoin(Scalar::integer(Q, 2));
  CHECK(two.extended);
  CHECK(two.spec->depth() == 1);
  CHECK(two.root * two.root == Scalar::integer(two.spec, 2));
  CHECK(two.root.sign() > 0);

  CHECK_THROWS_AS(sqrt_adjoin(Scalar::integer(Q, -1)), no_real_root_error);
  CHECK_THROWS_AS(sqrt_adjoin(Scalar::integer(QE, 2)), unsupported_extension_error);
}

TEST_CASE("sqrt_adjoin: adjoining an existing radical does not extend again") {
  auto first = sqrt_adjoin(Scalar::integer(Q, 2));
  auto again = sqrt_adjoin(Scalar::integer(first.spec, 2));
  CHECK_FALSE(again.extended);
  CHECK(again.root == first.root);
  // 8 = (2*sqrt2)^2: square part extraction keeps the spec unchanged
  auto eight = sqrt_adjoin(Scalar::integer(first.spec, 8));
  CHECK_FALSE(eight.extended);
  CHECK(eight.root == Scalar::integer(first.spec, 2) * first.root);
}

TEST_CASE("classify_magnitude: frozen examples") {
  CHECK(classify_magnitude(qe("2 + eps")) == MagnitudeClass::medial);
  CHECK(classify_magnitude(qe("eps/(1+eps)")) == MagnitudeClass::infinitesimal);
  CHECK(qe("eps/(1+eps)").valuation() == 1);
  CHECK(classify_magnitude(Scalar::zero(QE)) == MagnitudeClass::zero);
  CHECK(classify_magnitude(qe("1/eps")) == MagnitudeClass::infinite);
  CHECK(classify_magnitude(q("-7/3")) == MagnitudeClass::medial);
  CHECK(classify_magnitude(Scalar::zero(Q)) == MagnitudeClass::zero);

  auto t = sample_tower();
  CHECK(classify_magnitude(Scalar::radical(t, 0)) == MagnitudeClass::medial);
}

TEST_CASE("field axioms hold exactly on randomized triples") {
  const std::vector<FieldSpecPtr> specs{Q, sample_tower(), QE};
  SplitMix64 rng(0x5ca1ab1e);
  for (const auto& spec : specs) {
    for (int it = 0; it < 200; ++it) {
      Scalar a = random_scalar(rng, spec);
      Scalar b = random_scalar(rng, spec);
      Scalar c = random_scalar(rng, spec);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(spec));
      CHECK(a * Scalar::one(spec) == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(spec));
    }
  }
}

TEST_CASE("order axioms hold on randomized triples") {
  const std::vector<FieldSpecPtr> specs{Q, sample_tower(), QE};
  SplitMix64 rng(0xfeedbeef);
  for (const auto& spec : specs) {
    for (int it = 0; it < 200; ++it) {
      Scalar a = random_scalar(rng, spec);
      Scalar b = random_scalar(rng, spec);
      Scalar c = random_scalar(rng, spec);
      if (a <= b) CHECK(a + c <= b + c);
      Scalar pa = a.abs(), pb = b.abs();
      CHECK(pa * pb >= Scalar::zero(spec));
    }
  }
}

TEST_CASE("compare is a total order: trichotomy and transitivity") {
  const std::vector<FieldSpecPtr> specs{Q, sample_tower(), QE};
  SplitMix64 rng(0x0ddba11);
  for (const auto& spec : specs) {
    for (int it = 0; it < 200; ++it) {
      Scalar a = random_scalar(rng, spec);
      Scalar b = random_scalar(rng, spec);
      Scalar c = random_scalar(rng, spec);
      int cnt = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (b < a ? 1 : 0);
      CHECK(cnt == 1);
      if (a <= b && b <= c) CHECK(a <= c);
    }
  }
}

TEST_CASE("sqrt_adjoin round-trip on random non-negative tower scalars") {
  SplitMix64 rng(0xacce55);
  auto t = sample_tower();
  for (int it = 0; it < 100; ++it) {
    Scalar a = random_scalar(rng, t, 6).abs();
    auto res = sqrt_adjoin(a);
    CHECK(res.root * res.root == a.lifted(res.spec));
    CHECK(res.root.sign() >= 0);
  }
}

TEST_CASE("try_sqrt recovers |a| from a^2") {
  SplitMix64 rng(0x59a2e);
  auto t = sample_tower();
  for (int it = 0; it < 100; ++it) {
    Scalar a = random_scalar(rng, t, 6);
    auto r = try_sqrt(a * a);
    REQUIRE(r.has_value());
    CHECK(*r == a.abs());
  }
}

TEST_CASE("arithmetic and order in a nested tower Q(sqrt2)(sqrt(1+sqrt2))") {
  auto q = FieldSpec::rationals();
  auto t1 = FieldSpec::tower(q, Scalar::integer(q, 2));
  Scalar rad = Scalar::one(t1) + Scalar::radical(t1, 0);
  auto t2 = FieldSpec::tower(t1, rad);
  const Scalar g = Scalar::radical(t2, 1);  // sqrt(1 + sqrt2)
  CHECK(g * g == rad.lifted(t2));
  CHECK(g.sign() > 0);
  // 1 < sqrt(1+sqrt2) < 2, since 1 < 1+sqrt2 < 4
  CHECK(Scalar::one(t2) < g);
  CHECK(g < Scalar::integer(t2, 2));

  SplitMix64 rng(0x2e57ed);
  for (int it = 0; it < 50; ++it) {
    Scalar a = random_scalar(rng, t2, 4);
    Scalar b = random_scalar(rng, t2, 4);
    Scalar c = random_scalar(rng, t2, 4);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(t2));
    const int cnt = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (b < a ? 1 : 0);
    CHECK(cnt == 1);
    CHECK(parse_scalar(a.str(), t2) == a);
  }
}

TEST_CASE("I_K and M_K closure over Q(eps)") {
  SplitMix64 rng(0x1df0c5);
  auto in_I = [](const Scalar& s) {
    auto m = classify_magnitude(s);
    return m == MagnitudeClass::zero || m == MagnitudeClass::infinitesimal;
  };
  auto in_M = [](const Scalar& s) { return classify_magnitude(s) == MagnitudeClass::medial; };
  for (int it = 0; it < 200; ++it) {
    Scalar i1 = random_infinitesimal(rng, QE);
    Scalar i2 = random_infinitesimal(rng, QE);
    Scalar m1 = random_medial(rng, QE);
    Scalar m2 = random_medial(rng, QE);
    CHECK(in_I(i1 + i2));
    CHECK(in_I(i1 * i2));
    CHECK(in_M(m1 * m2));
    CHECK(in_M(m1.inverse()));
    CHECK(in_I(i1 * m1));
    CHECK(in_M(m1 + i1));
  }
}

TEST_CASE("Q(eps) canonical form is unique per value") {
  // (1 - eps^2)/(1 - eps) == 1 + eps, representationally
  CHECK(qe("(1 - eps*eps)/(1 - eps)") == qe("1 + eps"));
  CHECK(qe("(2 + 2*eps)/2") == qe("1 + eps"));
  CHECK(qe("eps/eps") == qe("1"));
  // sign normalization of the denominator
  CHECK(qe("1/(0 - 1 + eps)") == qe("(0 - 1)/(1 - eps)"));
}

TEST_CASE("scalar text round-trips through str/parse") {
  const std::vector<FieldSpecPtr> specs{Q, sample_tower(), QE};
  SplitMix64 rng(0x7e57ab1e);
  for (const auto& spec : specs) {
    for (int it = 0; it < 100; ++it) {
      Scalar a = random_scalar(rng, spec);
      CHECK(parse_scalar(a.str(), spec) == a);
    }
  }
}

TEST_CASE("parse errors carry a location") {
  CHECK_THROWS_AS(parse_scalar("1 +", Q), parse_error);
  CHECK_THROWS_AS(parse_scalar("eps", Q), parse_error);
  CHECK_THROWS_AS(parse_scalar("sqrt1", Q), parse_error);
  CHECK_THROWS_AS(parse_scalar("2 $ 3", Q), parse_error);
  CHECK_THROWS_AS(parse_scalar("1/0", Q), parse_error);
  CHECK(parse_scalar("-(3/2 + 1) * 2", Q) == q("0 - 5"));
}

TEST_CASE("tower radicand invariants are enforced") {
  CHECK_THROWS_AS(FieldSpec::tower(Q, Scalar::integer(Q, -2)), precondition_error);
  CHECK_THROWS_AS(FieldSpec::tower(Q, Scalar::integer(Q, 4)), precondition_error);
  CHECK_THROWS_AS(FieldSpec::tower(QE, Scalar::integer(QE, 2)), unsupported_extension_error);
}

TEST_CASE("lifting embeds prefixes and rejects unrelated specs") {
  auto t = sample_tower();
  Scalar half = q("1/2");
  Scalar lifted = half.lifted(t);
  CHECK(lifted == Scalar::rational(t, Rat(1, 2)));
  CHECK_THROWS_AS(q("1").lifted(QE), spec_mismatch_error);

  auto q5 = FieldSpec::tower(Q, Scalar::integer(Q, 5));
  CHECK_THROWS_AS(Scalar::radical(q5, 0).lifted(t), spec_mismatch_error);
}
