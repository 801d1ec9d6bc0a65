// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Each criterion states its check and runs it at full exactness.
//
// Usage: acceptance [criterion numbers...]   (default: all)

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "helpers.hpp"
#include "oracles.hpp"
#include "ortho/nonarch.hpp"
#include "ortho/ortholat.hpp"
#include "ortho/rotation.hpp"

using namespace ortho;
using namespace ortho::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  std::string summary;
  double budget_seconds;
  bool (*run)(std::string& detail);
};

// every labeled graph on n points, as edge bitmasks
std::vector<OrthoGraph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<OrthoGraph> out;
  const std::uint64_t count = std::uint64_t(1) << slots.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if ((mask >> b) & 1u) edges.push_back(slots[b]);
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<OrthoGraph> criterion_corpus() {
  std::vector<OrthoGraph> corpus;
  for (int n = 1; n <= 5; ++n) {
    auto gs = all_graphs(n);
    corpus.insert(corpus.end(), gs.begin(), gs.end());
  }
  SplitMix64 rng(0xacce97a9ce);
  for (int i = 0; i < 500; ++i) {
    const int n = 6 + static_cast<int>(rng.below(2));
    corpus.push_back(random_graph(rng, n, 35 + static_cast<int>(rng.below(40))));
  }
  return corpus;
}

// --- criterion 1: Dacey test vs direct orthomodular law, oracle family ---

bool run_c1(std::string& detail) {
  const auto corpus = criterion_corpus();
  const int total = static_cast<int>(corpus.size());
  int mismatches = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : mismatches)
#endif
  for (int i = 0; i < total; ++i) {
    const bool dacey = dacey_test_serial(corpus[static_cast<std::size_t>(i)]).all_pass();
    const bool oracle = naive_orthomodular(corpus[static_cast<std::size_t>(i)]);
    if (dacey != oracle) ++mismatches;
  }
  detail = std::to_string(total) + " graphs, " + std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

// --- criterion 2: the four irreducibility conditions agree on L1 graphs ---

bool run_c2(std::string& detail) {
  const auto corpus = criterion_corpus();
  const int total = static_cast<int>(corpus.size());
  int l1_count = 0, disagreements = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : l1_count, disagreements)
#endif
  for (int i = 0; i < total; ++i) {
    const OrthoGraph& g = corpus[static_cast<std::size_t>(i)];
    const CheckReport lin = linearity_report(g);
    if (!lin.find("l1")->pass) continue;
    ++l1_count;

    const bool l2 = lin.find("l2")->pass;
    bool third = true;
    for (int e = 0; e < g.size() && third; ++e)
      for (int f = e + 1; f < g.size() && third; ++f)
        if (g.orthogonal(e, f))
          third = std::popcount(closure(g, (PointSet(1) << e) | (PointSet(1) << f))) >= 3;
    const bool girr = graph_irreducible(g);
    const bool lirr = property_report_serial(build_lattice(g)).irreducible;
    if (l2 != third || l2 != girr || l2 != lirr) ++disagreements;
  }
  detail = std::to_string(l1_count) + " L1 graphs, " + std::to_string(disagreements) +
           " disagreements";
  return l1_count > 0 && disagreements == 0;
}

// --- criterion 3: the explicit L1 witness in Q^4 ---

bool run_c3(std::string& detail) {
  const FieldSpecPtr Q = FieldSpec::rationals();
  QuadSpacePtr q4 = make_euclidean(Q, 4);
  SplitMix64 rng(0x3175);
  int done = 0, failures = 0;
  while (done < 100) {
    std::vector<Scalar> xc, yc;
    for (int k = 0; k < 4; ++k) {
      xc.push_back(Scalar::rational(Q, random_rat(rng, 10)));
      yc.push_back(Scalar::rational(Q, random_rat(rng, 10)));
    }
    Vector x(q4, std::move(xc)), y(q4, std::move(yc));
    if (x.is_zero()) continue;
    Vector z = l1_witness(x, y);
    if (z.is_zero()) continue;  // y collinear with x; resample
    ++done;
    const bool orth = inner(z, x).is_zero();
    const bool span = same_row_span({x.coords(), y.coords()}, {x.coords(), z.coords()});
    if (!orth || !span) ++failures;
  }
  detail = "100 pairs, " + std::to_string(failures) + " failures";
  return failures == 0;
}

// --- criterion 4: Givens round-trip on Pythagorean rotation products ---

bool run_c4(std::string& detail) {
  const FieldSpecPtr Q = FieldSpec::rationals();
  SplitMix64 rng(0x91ae25);
  int failures = 0;
  std::size_t max_depth = 0;
  for (int it = 0; it < 50; ++it) {
    const int dim = 4 + static_cast<int>(rng.below(3));
    QuadSpacePtr space = make_euclidean(Q, dim);
    OrthoMatrix u = OrthoMatrix::identity(space);
    const int nf = 3 + static_cast<int>(rng.below(3));
    for (int k = 0; k < nf; ++k) {
      const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(dim)));
      int j = i;
      while (j == i) j = static_cast<int>(rng.below(static_cast<std::uint64_t>(dim)));
      auto [a, b] = random_circle_point(rng);
      auto cr = coordinate_rotation(space, i, j, Scalar::rational(Q, a), Scalar::rational(Q, b));
      u = u * cr.rotation.matrix;
    }
    bool ok = true;
    try {
      verify_orthogonal(space, u.entries());  // U^T G U = G, recomputed
      ok = u.det() == Scalar::one(Q);
      GivensDecomposition dec = givens_decompose(u);
      max_depth = std::max(max_depth, dec.spec->depth());
      QuadSpacePtr wide = lift_space(space, dec.spec);
      OrthoMatrix acc = OrthoMatrix::identity(wide);
      for (const auto& f : dec.factors) acc = acc * f.matrix;
      ok = ok && acc == u.lifted(wide);
      ok = ok && dec.factors.size() <=
                     static_cast<std::size_t>(dim * (dim - 1) / 2 + dim / 2);
    } catch (const error&) {
      ok = false;
    }
    if (!ok) ++failures;
  }
  detail = "50 rotations (dims 4-6), " + std::to_string(failures) +
           " failures, max tower depth " + std::to_string(max_depth);
  return failures == 0;
}

// --- criterion 5: swap lemma and iterated half-angle roots ---

bool run_c5(std::string& detail) {
  const FieldSpecPtr Q = FieldSpec::rationals();
  QuadSpacePtr q4 = make_euclidean(Q, 4);
  SplitMix64 rng(0x5a9d00);
  int swap_fail = 0, root_fail = 0;
  int done = 0;
  while (done < 100) {
    std::vector<Scalar> xc, yc;
    for (int k = 0; k < 4; ++k) {
      xc.push_back(Scalar::rational(Q, random_rat(rng, 9)));
      yc.push_back(Scalar::rational(Q, random_rat(rng, 9)));
    }
    Vector x(q4, std::move(xc)), y(q4, std::move(yc));
    if (x.is_zero()) continue;
    Vector z = l1_witness(x, y);
    if (z.is_zero()) continue;
    ++done;
    ProjPoint p(x), q(z);
    try {
      auto res = basic_rotation_mapping(p, q);
      const QuadSpacePtr& sp = res.rotation.matrix.space();
      if (!swap_check(res.rotation, p.lifted(sp), q.lifted(sp))) ++swap_fail;
    } catch (const error&) {
      ++swap_fail;
    }
  }
  for (int it = 0; it < 20; ++it) {
    auto [a, b] = random_circle_point(rng);
    auto base = coordinate_rotation(q4, 0, 2, Scalar::rational(Q, a), Scalar::rational(Q, b));
    BasicRotation w = base.rotation;
    bool ok = true;
    try {
      for (int step = 0; step < 3; ++step) w = rotation_sqrt(w).rotation;
      ok = w.matrix.space()->spec()->depth() <= 3;
      OrthoMatrix acc = w.matrix;
      for (int step = 0; step < 3; ++step) acc = acc * acc;
      ok = ok && acc == base.rotation.matrix.lifted(w.matrix.space());
    } catch (const error&) {
      ok = false;
    }
    if (!ok) ++root_fail;
  }
  detail = "100 swaps (" + std::to_string(swap_fail) + " failures), 20 iterated roots (" +
           std::to_string(root_fail) + " failures)";
  return swap_fail == 0 && root_fail == 0;
}

// --- criterion 6: fixpoint classification of SO(2) blocks ---

bool run_c6(std::string& detail) {
  const FieldSpecPtr Q = FieldSpec::rationals();
  QuadSpacePtr q4 = make_euclidean(Q, 4);
  SplitMix64 rng(0xf1c5);
  int failures = 0;
  for (int it = 0; it < 100; ++it) {
    auto [a, b] = random_circle_point(rng, /*nonzero_beta=*/true);
    const Scalar alpha = Scalar::rational(Q, a), beta = Scalar::rational(Q, b);
    try {
      FixpointReport r = fixpoint_class(alpha, beta);
      if (r.cls != FixpointClass::fixpoint_free_on_line || r.discriminant.sign() >= 0) ++failures;
    } catch (const error&) {
      ++failures;
    }
    // the matching reflection must be rejected
    try {
      fixpoint_class_block(alpha, beta, beta, -alpha);
      ++failures;
    } catch (const not_basic_error&) {
    }
  }
  // beta = 0 blocks act as the projective identity on their line
  for (const long sign : {1L, -1L}) {
    const Scalar alpha = Scalar::integer(Q, sign);
    FixpointReport r = fixpoint_class(alpha, Scalar::zero(Q));
    if (r.cls != FixpointClass::identity_on_line) ++failures;
    auto rot = coordinate_rotation(q4, 0, 1, alpha, Scalar::zero(Q));
    for (int s = 0; s < 20; ++s) {
      Rat ca = random_rat(rng, 9), cb = random_rat(rng, 9);
      if (sgn(ca) == 0 && sgn(cb) == 0) continue;
      Vector v(q4, {Scalar::rational(Q, ca), Scalar::rational(Q, cb), Scalar::zero(Q),
                    Scalar::zero(Q)});
      if (ProjPoint(rot.rotation.matrix.apply(v)) != ProjPoint(v)) ++failures;
    }
  }
  detail = "100 blocks + reflections + identity blocks, " + std::to_string(failures) +
           " failures";
  return failures == 0;
}

// --- criterion 7: the Q(eps) congruence suite and the Archimedean collapse ---

bool run_c7(std::string& detail) {
  const FieldSpecPtr QE = FieldSpec::infinitesimal();
  QuadSpacePtr qe4 = make_euclidean(QE, 4);
  CheckReport suite = congruence_suite(default_sample(qe4, 20, 0), default_rotations(qe4));
  int failures = suite.all_pass() ? 0 : 1;

  auto adj = sqrt_adjoin(Scalar::integer(FieldSpec::rationals(), 2));
  QuadSpacePtr t4 = make_euclidean(adj.spec, 4);
  SplitMix64 rng(0xa2c41);
  std::vector<ProjPoint> pts;
  while (pts.size() < 100) {
    std::vector<Scalar> coords;
    for (int k = 0; k < 4; ++k) coords.push_back(random_scalar(rng, adj.spec, 5));
    Vector v(t4, std::move(coords));
    if (!v.is_zero()) pts.emplace_back(v);
  }
  int collapse_fail = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (approx(pts[i], pts[j]) != (pts[i] == pts[j])) ++collapse_fail;

  detail = std::string("suite ") + (suite.all_pass() ? "passed" : "FAILED") +
           ", Archimedean collapse failures: " + std::to_string(collapse_fail);
  return failures == 0 && collapse_fail == 0;
}

// --- criterion 8: field/order axioms and sqrt round-trip ---

bool run_c8(std::string& detail) {
  const std::vector<FieldSpecPtr> specs{FieldSpec::rationals(), sample_tower(),
                                        FieldSpec::infinitesimal()};
  SplitMix64 rng(0xa1e8);
  long failures = 0;
  for (const auto& spec : specs) {
    for (int it = 0; it < 1000; ++it) {
      Scalar a = random_scalar(rng, spec, 6);
      Scalar b = random_scalar(rng, spec, 6);
      Scalar c = random_scalar(rng, spec, 6);
      if (!((a + b) + c == a + (b + c))) ++failures;
      if (!((a * b) * c == a * (b * c))) ++failures;
      if (!(a + b == b + a)) ++failures;
      if (!(a * b == b * a)) ++failures;
      if (!(a * (b + c) == a * b + a * c)) ++failures;
      if (!(a + (-a) == Scalar::zero(spec))) ++failures;
      if (!a.is_zero() && !(a * a.inverse() == Scalar::one(spec))) ++failures;
      if (a <= b && !(a + c <= b + c)) ++failures;
      if (!(a.abs() * b.abs() >= Scalar::zero(spec))) ++failures;
      const int cnt = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (b < a ? 1 : 0);
      if (cnt != 1) ++failures;
      if (a <= b && b <= c && !(a <= c)) ++failures;
    }
  }
  auto tower = sample_tower();
  for (int it = 0; it < 100; ++it) {
    Scalar a = random_scalar(rng, tower, 5).abs();
    auto res = sqrt_adjoin(a);
    if (!(res.root * res.root == a.lifted(res.spec))) ++failures;
  }
  detail = "3 specs x 1000 axiom cases + 100 roots, " + std::to_string(failures) + " failures";
  return failures == 0;
}

const Criterion kCriteria[] = {
    {1, "Dacey criterion equals the orthomodular-law oracle", 120.0, run_c1},
    {2, "irreducibility equivalences agree on L1 graphs", 120.0, run_c2},
    {3, "explicit L1 witness: orthogonality and span preservation", 5.0, run_c3},
    {4, "Givens decomposition round-trip on rotation products", 30.0, run_c4},
    {5, "orthogonal swap and iterated half-angle roots", 30.0, run_c5},
    {6, "SO(2) block fixpoint classification", 30.0, run_c6},
    {7, "Q(eps) congruence suite and Archimedean collapse", 20.0, run_c7},
    {8, "field and order axioms, exact square roots", 60.0, run_c8},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    const auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed > c.budget_seconds) {
      ok = false;
      detail += " [over budget]";
    }
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " - " << c.summary
              << " (" << detail << "; " << elapsed << "s, budget " << c.budget_seconds << "s)"
              << std::endl;
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
