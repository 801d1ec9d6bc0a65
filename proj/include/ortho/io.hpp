#pragma once

/**
 * @file io.hpp
 * @brief JSON parsing/serialization for the file formats and reports.
 *
 * Scalars travel as strings in the scalar grammar; field specs, spaces,
 * graphs, matrices, partitions and permutations use the documented JSON
 * shapes. Parsers throw parse_error with a description of the offending
 * location.
 */

#include <string>
#include <vector>

#include "json.hpp"
#include "ortho/nonarch.hpp"
#include "ortho/orthograph.hpp"
#include "ortho/ortholat.hpp"
#include "ortho/quadspace.hpp"
#include "ortho/rotation.hpp"

namespace ortho {

using Json = nlohmann::json;

// {"kind":"rationals"} | {"kind":"tower","adjoined":["2","5"]} |
// {"kind":"infinitesimal"}
FieldSpecPtr parse_field_spec(const Json& j);
Json field_spec_to_json(const FieldSpecPtr& spec);

// {"field":{...},"dim":4,"gram":["1","1","1","1"]}
QuadSpacePtr parse_space(const Json& j);
Json space_to_json(const QuadSpacePtr& space);

// vectors and points: arrays of scalar strings (numbers accepted)
Vector parse_vector(const Json& j, const QuadSpacePtr& space);
ProjPoint parse_point(const Json& j, const QuadSpacePtr& space);
Json vector_to_json(const Vector& v);

// {"n":6,"edges":[[0,1],[1,2]]}
OrthoGraph parse_graph(const Json& j);
Json graph_to_json(const OrthoGraph& g);

// {"space":{...},"matrix":[["3/5","-4/5",...],...]} (row-major rows)
OrthoMatrix parse_matrix(const Json& j);
Json matrix_to_json(const OrthoMatrix& m);

// {"space":{...},"plane":[0,1],"alpha":"3/5","beta":"4/5"} or an explicit
// "plane_basis":[[...],[...]] pair of unit vectors
BasicRotation parse_basic_rotation(const Json& j);
Json basic_rotation_to_json(const BasicRotation& r);

Partition parse_partition(const Json& j, int n);
std::vector<int> parse_permutation(const Json& j, int n);

Json check_report_to_json(const CheckReport& report);
Json lattice_to_json(const OrthoLattice& L);

/// FNV-1a 64-bit digest, hex-encoded; used for input digests in reports.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ortho
