#include "ortho/io.hpp"

#include <sstream>

#include "ortho/scalar_text.hpp"

namespace ortho {

namespace {

[[noreturn]] void fail(const std::string& what) { throw parse_error(what); }

const Json& field_or_fail(const Json& j, const char* key, const char* ctx) {
  if (!j.is_object() || !j.contains(key))
    fail(std::string(ctx) + ": missing field '" + key + "'");
  return j.at(key);
}

Scalar parse_scalar_json(const Json& j, const FieldSpecPtr& spec, const char* ctx) {
  if (j.is_number_integer())
    return Scalar::integer(spec, j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>(), spec);
  fail(std::string(ctx) + ": scalar must be a string in the scalar grammar or an integer");
}

}  // namespace

FieldSpecPtr parse_field_spec(const Json& j) {
  const Json& kind = field_or_fail(j, "kind", "field spec");
  if (!kind.is_string()) fail("field spec: 'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "rationals") return FieldSpec::rationals();
  if (k == "infinitesimal") return FieldSpec::infinitesimal();
  if (k != "tower") fail("field spec: unknown kind '" + k + "'");
  FieldSpecPtr spec = FieldSpec::rationals();
  if (!j.contains("adjoined")) return spec;
  const Json& adj = j.at("adjoined");
  if (!adj.is_array()) fail("field spec: 'adjoined' must be an array of scalar strings");
  for (const Json& r : adj) {
    Scalar radicand = parse_scalar_json(r, spec, "field spec radicand");
    spec = FieldSpec::tower(spec, radicand);
  }
  return spec;
}

Json field_spec_to_json(const FieldSpecPtr& spec) {
  switch (spec->kind()) {
    case FieldKind::rationals:
      return Json{{"kind", "rationals"}};
    case FieldKind::infinitesimal:
      return Json{{"kind", "infinitesimal"}};
    case FieldKind::tower: {
      Json adj = Json::array();
      for (std::size_t k = 0; k < spec->depth(); ++k) adj.push_back(spec->radicand(k).str());
      return Json{{"kind", "tower"}, {"adjoined", adj}};
    }
  }
  return Json();
}

QuadSpacePtr parse_space(const Json& j) {
  FieldSpecPtr spec = parse_field_spec(field_or_fail(j, "field", "space"));
  const Json& dim = field_or_fail(j, "dim", "space");
  if (!dim.is_number_integer() || dim.get<int>() < 1) fail("space: 'dim' must be a positive integer");
  const int n = dim.get<int>();
  const Json& gram = field_or_fail(j, "gram", "space");
  if (!gram.is_array() || gram.size() != static_cast<std::size_t>(n))
    fail("space: 'gram' must be an array of dim scalars");
  std::vector<Scalar> diag;
  for (const Json& g : gram) diag.push_back(parse_scalar_json(g, spec, "gram entry"));
  PosDefReport pd = is_positive_definite(spec, diag);
  if (!pd.positive_definite)
    fail("space: gram entry " + std::to_string(*pd.index) + " is not strictly positive");
  return make_space(spec, n, std::move(diag));
}

Json space_to_json(const QuadSpacePtr& space) {
  Json gram = Json::array();
  for (const auto& g : space->gram()) gram.push_back(g.str());
  return Json{{"field", field_spec_to_json(space->spec())}, {"dim", space->dim()}, {"gram", gram}};
}

Vector parse_vector(const Json& j, const QuadSpacePtr& space) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(space->dim()))
    fail("vector: expected an array of " + std::to_string(space->dim()) + " scalars");
  std::vector<Scalar> coords;
  for (const Json& c : j) coords.push_back(parse_scalar_json(c, space->spec(), "vector entry"));
  return Vector(space, std::move(coords));
}

ProjPoint parse_point(const Json& j, const QuadSpacePtr& space) {
  Vector v = parse_vector(j, space);
  if (v.is_zero()) fail("point: the zero vector spans no projective point");
  return ProjPoint(v);
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(c.str());
  return out;
}

OrthoGraph parse_graph(const Json& j) {
  const Json& n = field_or_fail(j, "n", "graph");
  if (!n.is_number_integer() || n.get<int>() < 1) fail("graph: 'n' must be a positive integer");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    const Json& es = j.at("edges");
    if (!es.is_array()) fail("graph: 'edges' must be an array of pairs");
    for (const Json& e : es) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        fail("graph: each edge must be a pair of point indices");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  try {
    return OrthoGraph(n.get<int>(), edges);
  } catch (const precondition_error& e) {
    fail(std::string("graph: ") + e.what());
  }
}

Json graph_to_json(const OrthoGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  return Json{{"n", g.size()}, {"edges", edges}};
}

OrthoMatrix parse_matrix(const Json& j) {
  QuadSpacePtr space = parse_space(field_or_fail(j, "space", "matrix"));
  const Json& rows = field_or_fail(j, "matrix", "matrix");
  const int n = space->dim();
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    fail("matrix: expected " + std::to_string(n) + " rows");
  std::vector<Scalar> entries;
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      fail("matrix: each row needs " + std::to_string(n) + " entries");
    for (const Json& e : row) entries.push_back(parse_scalar_json(e, space->spec(), "matrix entry"));
  }
  return verify_orthogonal(space, std::move(entries));
}

Json matrix_to_json(const OrthoMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return Json{{"space", space_to_json(m.space())}, {"matrix", rows}, {"det", m.det().str()}};
}

BasicRotation parse_basic_rotation(const Json& j) {
  QuadSpacePtr space = parse_space(field_or_fail(j, "space", "basic rotation"));
  const Scalar alpha =
      parse_scalar_json(field_or_fail(j, "alpha", "basic rotation"), space->spec(), "alpha");
  const Scalar beta =
      parse_scalar_json(field_or_fail(j, "beta", "basic rotation"), space->spec(), "beta");
  if (j.contains("plane")) {
    const Json& plane = j.at("plane");
    if (!plane.is_array() || plane.size() != 2 || !plane[0].is_number_integer() ||
        !plane[1].is_number_integer())
      fail("basic rotation: 'plane' must be a pair of coordinate indices");
    auto res =
        coordinate_rotation(space, plane[0].get<int>(), plane[1].get<int>(), alpha, beta);
    return std::move(res.rotation);
  }
  if (j.contains("plane_basis")) {
    const Json& basis = j.at("plane_basis");
    if (!basis.is_array() || basis.size() != 2)
      fail("basic rotation: 'plane_basis' must be a pair of vectors");
    Vector u = parse_vector(basis[0], space);
    Vector v = parse_vector(basis[1], space);
    return plane_rotation(space, u, v, alpha, beta);
  }
  fail("basic rotation: need either 'plane' indices or a 'plane_basis'");
}

Json basic_rotation_to_json(const BasicRotation& r) {
  return Json{{"space", space_to_json(r.matrix.space())},
              {"plane_basis", Json::array({vector_to_json(r.plane_u), vector_to_json(r.plane_v)})},
              {"alpha", r.alpha.str()},
              {"beta", r.beta.str()},
              {"matrix", matrix_to_json(r.matrix).at("matrix")}};
}

Partition parse_partition(const Json& j, int n) {
  if (!j.is_array()) fail("partition: expected an array of blocks");
  std::vector<std::vector<int>> blocks;
  for (const Json& b : j) {
    if (!b.is_array()) fail("partition: each block must be an array of point indices");
    std::vector<int> block;
    for (const Json& e : b) {
      if (!e.is_number_integer()) fail("partition: block entries must be integers");
      block.push_back(e.get<int>());
    }
    blocks.push_back(std::move(block));
  }
  try {
    return Partition(n, std::move(blocks));
  } catch (const precondition_error& e) {
    fail(std::string("partition: ") + e.what());
  }
}

std::vector<int> parse_permutation(const Json& j, int n) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n))
    fail("permutation: expected an array of " + std::to_string(n) + " indices");
  std::vector<int> out;
  for (const Json& e : j) {
    if (!e.is_number_integer()) fail("permutation: entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

Json check_report_to_json(const CheckReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) item["witness"] = c.witness;
    checks.push_back(item);
  }
  return Json{{"checks", checks}, {"all_pass", report.all_pass()}};
}

Json lattice_to_json(const OrthoLattice& L) {
  Json elems = Json::array();
  for (int i = 0; i < L.size(); ++i) {
    PointSet rest = L.element(i);
    Json members = Json::array();
    while (rest) {
      const int v = __builtin_ctz(rest);
      rest &= rest - 1;
      members.push_back(v);
    }
    elems.push_back(Json{{"bits", L.element(i)}, {"points", members}});
  }
  Json ortho = Json::array();
  for (int i = 0; i < L.size(); ++i) ortho.push_back(L.ortho(i));
  Json atoms = Json::array();
  for (int a : L.atoms()) atoms.push_back(a);
  Json out{{"elements", elems}, {"ortho", ortho}, {"atoms", atoms}};
  // Hasse edges are cubic to enumerate; omitted for very large lattices
  if (L.size() <= 512) {
    Json hasse = Json::array();
    for (int i = 0; i < L.size(); ++i) {
      for (int j = 0; j < L.size(); ++j) {
        if (i == j || !L.leq(i, j)) continue;
        bool covers = true;
        for (int k = 0; k < L.size() && covers; ++k)
          if (k != i && k != j && L.leq(i, k) && L.leq(k, j)) covers = false;
        if (covers) hasse.push_back(Json::array({i, j}));
      }
    }
    out["hasse"] = hasse;
  } else {
    out["hasse_omitted"] = true;
  }
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace ortho
