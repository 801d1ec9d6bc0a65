#pragma once

// Shared deterministic generators and fixtures for the randomized suites.

#include <vector>

#include "ortho/orthograph.hpp"
#include "ortho/rng.hpp"
#include "ortho/scalar.hpp"

namespace ortho::testing {

// ---- graph fixtures (the named spaces used throughout the examples) ----

inline OrthoGraph two_edges() { return OrthoGraph(4, {{0, 1}, {2, 3}}); }
inline OrthoGraph square() { return OrthoGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline OrthoGraph k4() { return OrthoGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline OrthoGraph c6() {
  return OrthoGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

inline OrthoGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return OrthoGraph(n, edges);
}

// k disjoint orthogonal pairs (C(X) is the MO_k pattern).
inline OrthoGraph matching(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return OrthoGraph(2 * k, edges);
}

inline OrthoGraph random_graph(SplitMix64& rng, int n, int edge_percent = 50) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < static_cast<std::uint64_t>(edge_percent)) edges.emplace_back(i, j);
  return OrthoGraph(n, edges);
}

inline Rat random_rat(SplitMix64& rng, long height) {
  long num = rng.range(-height, height);
  long den = rng.range(1, height);
  Rat v(num, den);
  v.canonicalize();
  return v;
}

inline Rat random_nonzero_rat(SplitMix64& rng, long height) {
  for (;;) {
    Rat v = random_rat(rng, height);
    if (sgn(v) != 0) return v;
  }
}

// Q(sqrt 2)(sqrt 3), shared by the tower suites.
inline FieldSpecPtr sample_tower() {
  static const FieldSpecPtr spec = [] {
    auto q = FieldSpec::rationals();
    auto t1 = FieldSpec::tower(q, Scalar::integer(q, 2));
    return FieldSpec::tower(t1, Scalar::integer(t1, 3));
  }();
  return spec;
}

inline Poly random_poly(SplitMix64& rng, long height, std::size_t max_deg, bool nonzero) {
  for (;;) {
    Poly p(rng.below(max_deg + 1) + 1);
    for (auto& c : p) c = Int(static_cast<long>(rng.range(-height, height)));
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    if (!nonzero || !p.empty()) return p;
  }
}

inline Scalar random_scalar(SplitMix64& rng, const FieldSpecPtr& spec, long height = 9) {
  switch (spec->kind()) {
    case FieldKind::rationals:
      return Scalar::rational(spec, random_rat(rng, height));
    case FieldKind::tower: {
      std::vector<Rat> coords(std::size_t(1) << spec->depth());
      for (auto& c : coords) c = random_rat(rng, height);
      return Scalar::from_coords(spec, std::move(coords));
    }
    case FieldKind::infinitesimal: {
      Poly num = random_poly(rng, height, 2, false);
      Poly den = random_poly(rng, height, 2, true);
      return Scalar::from_fraction(spec, std::move(num), std::move(den));
    }
  }
  return Scalar();
}

inline Scalar random_nonzero_scalar(SplitMix64& rng, const FieldSpecPtr& spec, long height = 9) {
  for (;;) {
    Scalar s = random_scalar(rng, spec, height);
    if (!s.is_zero()) return s;
  }
}

// Non-zero element of Q(eps) with valuation 0.
inline Scalar random_medial(SplitMix64& rng, const FieldSpecPtr& spec, long height = 9) {
  for (;;) {
    Scalar s = random_scalar(rng, spec, height);
    if (!s.is_zero() && s.valuation() == 0) return s;
  }
}

// Non-zero infinitesimal of Q(eps): eps^k * medial, k >= 1.
inline Scalar random_infinitesimal(SplitMix64& rng, const FieldSpecPtr& spec, long height = 9) {
  Scalar m = random_medial(rng, spec, height);
  Scalar e = Scalar::eps(spec);
  unsigned k = static_cast<unsigned>(rng.range(1, 3));
  return m * e.pow(k);
}

// Rational point on the unit circle from the Pythagorean parametrization:
// alpha = (m^2-n^2)/(m^2+n^2), beta = 2mn/(m^2+n^2), randomly signed.
inline std::pair<Rat, Rat> random_circle_point(SplitMix64& rng, bool nonzero_beta = false) {
  for (;;) {
    const long m = rng.range(1, 9);
    const long n = rng.range(nonzero_beta ? 1 : 0, 9);
    if (m == n) continue;
    Rat den(m * m + n * n);
    Rat a(m * m - n * n), b(2 * m * n);
    a /= den;
    b /= den;
    if (rng.coin()) a = -a;
    if (rng.coin()) b = -b;
    return {a, b};
  }
}

}  // namespace ortho::testing
