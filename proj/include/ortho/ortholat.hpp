#pragma once

/**
 * @file ortholat.hpp
 * @brief The ortholattice C(X,perp) of orthoclosed sets of a finite graph.
 */

#include <cstddef>
#include <vector>

#include "ortho/orthograph.hpp"

namespace ortho {

class OrthoLattice {
 public:
  const OrthoGraph& graph() const { return graph_; }
  const std::vector<PointSet>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  PointSet element(int i) const { return elems_[static_cast<std::size_t>(i)]; }

  /// Index of an element value, -1 if not in the lattice.
  int index_of(PointSet a) const;

  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  bool leq(int i, int j) const {
    return (elems_[static_cast<std::size_t>(i)] & elems_[static_cast<std::size_t>(j)]) ==
           elems_[static_cast<std::size_t>(i)];
  }

  int ortho(int i) const { return ortho_[static_cast<std::size_t>(i)]; }
  int meet(int i, int j) const;
  int join(int i, int j) const;

  const std::vector<int>& atoms() const { return atoms_; }

 private:
  friend OrthoLattice build_lattice(const OrthoGraph& g, std::size_t family_cap);
  explicit OrthoLattice(OrthoGraph g) : graph_(std::move(g)) {}

  OrthoGraph graph_;
  std::vector<PointSet> elems_;  // ascending by bitmask value
  std::vector<int> ortho_;
  std::vector<int> atoms_;
};

/// Materializes every orthoclosed set (intersections of point perps plus X).
/// Throws cap_exceeded_error if the family would outgrow `family_cap`.
OrthoLattice build_lattice(const OrthoGraph& g, std::size_t family_cap = std::size_t(1) << 16);

struct LatticeProperties {
  bool ortholattice = false;   // complementation well-formedness
  bool orthomodular = false;
  bool modular = false;
  bool atomistic = false;
  bool covering = false;
  bool irreducible = false;
  int length = 0;

  std::string ortholattice_witness;
  std::string orthomodular_witness;
  std::string modular_witness;
  std::string atomistic_witness;
  std::string covering_witness;
  std::string irreducible_witness;

  std::vector<Check> as_checks() const;
};

/// Exhaustive quantifier evaluation of the lattice properties. The default
/// entry point parallelizes the sweeps with OpenMP when available; the serial
/// variant is the reference implementation and produces identical output.
LatticeProperties property_report(const OrthoLattice& L);
LatticeProperties property_report_serial(const OrthoLattice& L);

/// The lattice map A -> { perm(e) : e in A } of a graph automorphism, as a
/// permutation of element indices. Throws if perm is not an automorphism.
std::vector<int> lift_automorphism(const OrthoGraph& g, const std::vector<int>& perm,
                                   const OrthoLattice& L);

}  // namespace ortho
