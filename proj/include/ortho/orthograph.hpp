#pragma once

/**
 * @file orthograph.hpp
 * @brief Finite orthogonality spaces as graphs.
 *
 * Points are 0..n-1 and the orthogonality relation is a symmetric irreflexive
 * adjacency, stored as per-point bitmasks (n <= 32). Point sets are bitmasks.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ortho/errors.hpp"

namespace ortho {

using PointSet = std::uint32_t;

class OrthoGraph {
 public:
  OrthoGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  bool orthogonal(int i, int j) const { return (adj_[i] >> j) & 1u; }
  PointSet neighbors(int i) const { return adj_[i]; }
  PointSet all() const { return n_ == 32 ? ~PointSet(0) : ((PointSet(1) << n_) - 1u); }
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const OrthoGraph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  int n_;
  std::vector<PointSet> adj_;
};

std::string set_str(PointSet s);

/// { e : e orthogonal to every element of a }; perp of the empty set is X.
PointSet perp(const OrthoGraph& g, PointSet a);

/// perp(perp(a)); extensive, monotone, idempotent.
PointSet closure(const OrthoGraph& g, PointSet a);

/// Maximum number of mutually orthogonal points (exact branch and bound with
/// a greedy coloring bound).
int rank(const OrthoGraph& g);

struct Check {
  std::string name;
  bool pass;
  std::string witness;  // non-empty whenever pass is false
};

struct CheckReport {
  std::vector<Check> checks;
  bool all_pass() const;
  const Check* find(const std::string& name) const;
};

class Partition {
 public:
  /// Blocks must disjointly cover {0..n-1}; stored canonically (each block
  /// sorted, blocks ordered by least element).
  Partition(int n, std::vector<std::vector<int>> blocks);
  static Partition identity(int n);

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int e) const { return block_of_[e]; }
  bool same_block(int e, int f) const { return block_of_[e] == block_of_[f]; }
  bool operator==(const Partition& other) const { return blocks_ == other.blocks_; }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

/// Lists every pair of distinct points with equal perps.
CheckReport irredundance(const OrthoGraph& g);

/// Identifies points with equal perps; the quotient is irredundant.
std::pair<OrthoGraph, Partition> irredundant_quotient(const OrthoGraph& g);

/// Exhaustive checks of L1, L2 and point-closedness, with witnesses.
CheckReport linearity_report(const OrthoGraph& g);

/// Dacey's criterion: every orthoclosed A equals closure(D) for each maximal
/// orthogonal D inside A. Equivalent to orthomodularity of the lattice.
CheckReport dacey_test(const OrthoGraph& g);
CheckReport dacey_test_serial(const OrthoGraph& g);

/// True iff no orthogonal pair shares a block.
CheckReport congruence_check(const OrthoGraph& g, const Partition& theta);

/// Quotient orthogonality space of a congruence; blocks become points,
/// ordered by least element. Throws not_a_congruence_error otherwise.
OrthoGraph quotient(const OrthoGraph& g, const Partition& theta);

bool is_automorphism(const OrthoGraph& g, const std::vector<int>& perm);

/// theta is invariant under every listed automorphism. Each permutation must
/// pass is_automorphism.
bool invariant_congruence(const OrthoGraph& g, const Partition& theta,
                          const std::vector<std::vector<int>>& autos);

/// No split X = A | B with every cross pair orthogonal; decided through
/// connectivity of the non-orthogonality graph.
bool graph_irreducible(const OrthoGraph& g);

/// Maximal pairwise-orthogonal subsets of `within`, in deterministic order.
std::vector<PointSet> maximal_orthogonal_subsets(const OrthoGraph& g, PointSet within);

}  // namespace ortho
