// Benchmark: serial reference sweeps vs the OpenMP kernels.
//
// Two workloads: per-graph checks batched over a random corpus, and the
// property sweep on a single larger lattice.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ortho/orthograph.hpp"
#include "ortho/ortholat.hpp"
#include "ortho/rng.hpp"

using namespace ortho;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

OrthoGraph random_graph(SplitMix64& rng, int n, int edge_percent) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < static_cast<std::uint64_t>(edge_percent)) edges.emplace_back(i, j);
  return OrthoGraph(n, edges);
}

}  // namespace

int main(int argc, char** argv) {
  int corpus_size = 400;
  int corpus_n = 8;
  int big_n = 14;
  if (argc > 1) corpus_size = std::atoi(argv[1]);
  if (argc > 2) corpus_n = std::atoi(argv[2]);
  if (argc > 3) big_n = std::atoi(argv[3]);

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP: not enabled in this build\n";
#endif

  SplitMix64 rng(2024);
  std::vector<OrthoGraph> corpus;
  corpus.reserve(static_cast<std::size_t>(corpus_size));
  for (int i = 0; i < corpus_size; ++i) corpus.push_back(random_graph(rng, corpus_n, 45));

  // workload 1: dacey + property report per graph, whole corpus
  {
    auto t0 = Clock::now();
    int fails_serial = 0;
    for (const auto& g : corpus) {
      if (!dacey_test_serial(g).all_pass()) ++fails_serial;
      (void)property_report_serial(build_lattice(g));
    }
    const double serial = seconds_since(t0);

    auto t1 = Clock::now();
    int fails_par = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : fails_par)
#endif
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!dacey_test_serial(corpus[i]).all_pass()) ++fails_par;
      (void)property_report_serial(build_lattice(corpus[i]));
    }
    const double parallel = seconds_since(t1);

    if (fails_serial != fails_par) {
      std::cerr << "corpus sweep mismatch between serial and parallel runs\n";
      return 1;
    }
    std::cout << "corpus sweep (" << corpus_size << " graphs, n=" << corpus_n << "):\n"
              << "  serial   " << serial << " s\n"
              << "  parallel " << parallel << " s  (speedup " << serial / parallel << "x, "
              << fails_serial << " non-orthomodular)\n";
  }

  // workload 2: property sweep kernels on one larger lattice (dense graphs
  // have the large orthoclosed families)
  {
    OrthoGraph g = random_graph(rng, big_n, 85);
    OrthoLattice L = build_lattice(g);
    auto t0 = Clock::now();
    LatticeProperties serial_report = property_report_serial(L);
    const double serial = seconds_since(t0);
    auto t1 = Clock::now();
    LatticeProperties parallel_report = property_report(L);
    const double parallel = seconds_since(t1);
    const bool agree = serial_report.orthomodular == parallel_report.orthomodular &&
                       serial_report.modular == parallel_report.modular &&
                       serial_report.irreducible == parallel_report.irreducible &&
                       serial_report.orthomodular_witness == parallel_report.orthomodular_witness &&
                       serial_report.modular_witness == parallel_report.modular_witness;
    if (!agree) {
      std::cerr << "lattice sweep mismatch between serial and parallel runs\n";
      return 1;
    }
    std::cout << "lattice sweep (n=" << big_n << ", " << L.size() << " elements):\n"
              << "  serial   " << serial << " s\n"
              << "  parallel " << parallel << " s  (speedup " << serial / parallel << "x)\n";
  }

  return 0;
}
