// ortho: exact checks for finite orthogonality spaces, ortholattices,
// quadratic spaces and their rotation groups.

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ortho/io.hpp"
#include "ortho/scalar_text.hpp"
#include "ortho/version.hpp"

namespace {

using namespace ortho;

struct Options {
  std::string format = "text";
  std::size_t max_adjunctions = 4;
  bool timings = false;
  std::uint64_t seed = 0;
};

struct Report {
  Json doc;
  CheckReport checks;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool with_timings = false;

  explicit Report(const std::string& command) {
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    doc["command"] = command;
    doc["inputs"] = Json::object();
    doc["results"] = Json::object();
  }

  void add_check(const Check& c) { checks.checks.push_back(c); }
  void add_checks(const CheckReport& r) {
    for (const auto& c : r.checks) checks.checks.push_back(c);
  }

  // Timings are opt-in so that default reports stay byte-identical across
  // runs with the same inputs and seed.
  void finalize() {
    doc["checks"] = check_report_to_json(checks)["checks"];
    if (with_timings) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      doc["timings"] = Json{
          {"total_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
    }
  }

  int exit_code() const { return checks.all_pass() ? 0 : 1; }
};

std::string read_file(const std::string& path, Report& report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  report.doc["inputs"][path] = "fnv1a:" + fnv1a_hex(bytes);
  return bytes;
}

Json load_json(const std::string& path, Report& report) {
  const std::string bytes = read_file(path, report);
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw parse_error("malformed JSON in " + path + ": " + e.what(), e.byte);
  }
}

void print_report(Report& report, const Options& opt) {
  report.with_timings = opt.timings;
  report.finalize();
  if (opt.format == "json") {
    std::cout << report.doc.dump(2) << "\n";
    return;
  }
  for (const auto& c : report.checks.checks) {
    std::cout << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
    std::cout << "\n";
  }
  const Json& results = report.doc["results"];
  for (auto it = results.begin(); it != results.end(); ++it) {
    std::cout << it.key() << ": "
              << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
              << "\n";
  }
}

void enforce_adjunction_cap(const FieldSpecPtr& before, const FieldSpecPtr& after,
                            const Options& opt) {
  if (after->depth() - before->depth() > opt.max_adjunctions)
    throw cap_exceeded_error("operation needs more than " + std::to_string(opt.max_adjunctions) +
                             " radical adjunctions (see --max-adjunctions)");
}

// ---- graph ----

int cmd_graph(const std::string& path, std::vector<std::string> selected, const Options& opt) {
  Report report("graph " + path);
  OrthoGraph g = parse_graph(load_json(path, report));
  if (g.size() > 16) throw parse_error("graph: the CLI caps graphs at 16 points");

  if (selected.empty())
    selected = {"closure", "rank", "irredundance", "linearity", "dacey", "lattice"};

  for (const std::string& name : selected) {
    if (name == "closure") {
      // operator laws, exhaustively: extensive + idempotent on every subset,
      // monotone along one-point extensions
      Check law{"closure", true, ""};
      for (PointSet a = 0; a <= g.all() && law.pass; ++a) {
        const PointSet ca = closure(g, a);
        if ((a & ca) != a || closure(g, ca) != ca) {
          law.pass = false;
          law.witness = "A=" + set_str(a);
          break;
        }
        for (int e = 0; e < g.size(); ++e) {
          const PointSet b = a | (PointSet(1) << e);
          if ((ca & closure(g, b)) != ca) {
            law.pass = false;
            law.witness = "A=" + set_str(a) + ", B=" + set_str(b);
            break;
          }
        }
        if (a == g.all()) break;
      }
      report.add_check(law);
      Json singles = Json::object();
      for (int e = 0; e < g.size(); ++e)
        singles[std::to_string(e)] = set_str(closure(g, PointSet(1) << e));
      report.doc["results"]["singleton_closures"] = singles;
    } else if (name == "rank") {
      report.doc["results"]["rank"] = rank(g);
      report.add_check({"rank", true, "rank=" + std::to_string(rank(g))});
    } else if (name == "irredundance") {
      report.add_checks(irredundance(g));
    } else if (name == "linearity") {
      report.add_checks(linearity_report(g));
    } else if (name == "dacey") {
      report.add_checks(dacey_test(g));
    } else if (name == "lattice") {
      OrthoLattice L = build_lattice(g);
      if (L.size() > 2048)
        throw cap_exceeded_error("lattice property checks are capped at 2048 elements");
      LatticeProperties p = property_report(L);
      for (const auto& c : p.as_checks()) report.add_check(c);
      report.doc["results"]["lattice"] = lattice_to_json(L);
      report.doc["results"]["lattice_size"] = L.size();
    } else {
      throw parse_error("unknown graph check '" + name + "'");
    }
  }

  print_report(report, opt);
  return report.exit_code();
}

// ---- rot ----

int cmd_rot_verify(const std::string& path, const Options& opt) {
  Report report("rot verify " + path);
  Json j = load_json(path, report);
  QuadSpacePtr space = parse_space(j.at("space"));
  try {
    OrthoMatrix m = parse_matrix(j);
    report.add_check({"orthogonal", true, "det=" + m.det().str()});
    report.doc["results"]["det"] = m.det().str();
  } catch (const validation_error& e) {
    report.add_check({"orthogonal", false, e.what()});
  }
  print_report(report, opt);
  return report.exit_code();
}

int cmd_rot_map(const std::string& path, const std::string& points_path, const Options& opt) {
  Report report("rot map " + path + " --points " + points_path);
  OrthoMatrix m = parse_matrix(load_json(path, report));
  Json pj = load_json(points_path, report);
  const Json& arr = pj.contains("points") ? pj.at("points") : pj;
  if (!arr.is_array()) throw parse_error("points: expected an array of coordinate arrays");
  std::vector<ProjPoint> pts;
  for (const Json& p : arr) pts.push_back(parse_point(p, m.space()));

  std::vector<ProjPoint> images = induced_map(m, pts);
  Json imgs = Json::array();
  for (const auto& p : images) imgs.push_back(vector_to_json(p.rep()));
  report.doc["results"]["images"] = imgs;

  Check preserved{"orthogonality_preserved", true, ""};
  for (std::size_t i = 0; i < pts.size() && preserved.pass; ++i)
    for (std::size_t j = i + 1; j < pts.size() && preserved.pass; ++j)
      if (proj_orthogonal(pts[i], pts[j]) != proj_orthogonal(images[i], images[j])) {
        preserved.pass = false;
        preserved.witness = "points #" + std::to_string(i) + ", #" + std::to_string(j);
      }
  report.add_check(preserved);
  print_report(report, opt);
  return report.exit_code();
}

int cmd_rot_sqrt(const std::string& path, const Options& opt) {
  Report report("rot sqrt " + path);
  BasicRotation u = parse_basic_rotation(load_json(path, report));
  BasicRotationResult v = rotation_sqrt(u);
  enforce_adjunction_cap(u.matrix.space()->spec(), v.spec, opt);
  report.doc["results"]["root"] = basic_rotation_to_json(v.rotation);
  report.doc["results"]["field"] = field_spec_to_json(v.spec);
  OrthoMatrix sq = v.rotation.matrix * v.rotation.matrix;
  const bool ok = sq == u.matrix.lifted(v.rotation.matrix.space());
  report.add_check({"squares_to_input", ok, ok ? "" : "V*V differs from U"});
  print_report(report, opt);
  return report.exit_code();
}

int cmd_rot_givens(const std::string& path, const Options& opt) {
  Report report("rot givens " + path);
  OrthoMatrix u = parse_matrix(load_json(path, report));
  GivensDecomposition dec = givens_decompose(u, opt.max_adjunctions);
  QuadSpacePtr wide = lift_space(u.space(), dec.spec);

  Json factors = Json::array();
  OrthoMatrix acc = OrthoMatrix::identity(wide);
  for (const auto& f : dec.factors) {
    factors.push_back(basic_rotation_to_json(f));
    acc = acc * f.matrix;
  }
  report.doc["results"]["factors"] = factors;
  report.doc["results"]["factor_count"] = dec.factors.size();
  report.doc["results"]["field"] = field_spec_to_json(dec.spec);

  const bool ok = acc == u.lifted(wide);
  report.add_check({"round_trip", ok, ok ? "" : "product of factors differs from input"});
  print_report(report, opt);
  return report.exit_code();
}

int cmd_rot_fixclass(const std::string& alpha, const std::string& beta, const std::string& block,
                     const Options& opt) {
  Report report(block.empty() ? "rot fixclass --alpha " + alpha + " --beta " + beta
                              : "rot fixclass --block " + block);
  const FieldSpecPtr Q = FieldSpec::rationals();
  FixpointReport r{FixpointClass::identity_on_line, Scalar::zero(Q)};
  if (!block.empty()) {
    std::vector<Scalar> entries;
    std::stringstream ss(block);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(parse_scalar(item, Q));
    if (entries.size() != 4) throw parse_error("--block needs four comma-separated scalars");
    r = fixpoint_class_block(entries[0], entries[1], entries[2], entries[3]);
  } else {
    r = fixpoint_class(parse_scalar(alpha, Q), parse_scalar(beta, Q));
  }
  const char* cls =
      r.cls == FixpointClass::identity_on_line ? "identity_on_line" : "fixpoint_free_on_line";
  report.doc["results"]["class"] = cls;
  report.doc["results"]["discriminant"] = r.discriminant.str();
  report.add_check({"fixclass", true, cls});
  print_report(report, opt);
  return report.exit_code();
}

// ---- nonarch ----

// Accepts "[1,eps,0,0]": a bracketed, comma-separated list of scalar-grammar
// expressions (quoted entries also work).
std::vector<std::string> split_vector_literal(const std::string& text) {
  std::string body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.erase(0, 1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw parse_error("vector literal must be of the form [c1,c2,...]");
  body = body.substr(1, body.size() - 2);
  std::vector<std::string> out;
  std::string item;
  int depth = 0;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  out.push_back(item);
  for (auto& s : out) {
    std::erase(s, '"');
    if (s.find_first_not_of(" \t") == std::string::npos)
      throw parse_error("vector literal has an empty entry");
  }
  return out;
}

Vector parse_vector_literal(const std::string& text, const QuadSpacePtr& space) {
  const auto items = split_vector_literal(text);
  if (items.size() != static_cast<std::size_t>(space->dim()))
    throw parse_error("vector literal needs " + std::to_string(space->dim()) + " entries");
  std::vector<Scalar> coords;
  for (const auto& s : items) coords.push_back(parse_scalar(s, space->spec()));
  return Vector(space, std::move(coords));
}

QuadSpacePtr nonarch_space(const Json* space_json, int dim) {
  if (space_json) {
    QuadSpacePtr space = parse_space(*space_json);
    if (space->spec()->kind() != FieldKind::infinitesimal)
      throw parse_error("nonarch commands need a space over the infinitesimal field spec");
    return space;
  }
  return make_euclidean(FieldSpec::infinitesimal(), dim);
}

int cmd_nonarch_classify(const std::string& v_text, const std::string& space_path,
                         const Options& opt) {
  Report report("nonarch classify --v " + v_text);
  const auto items = split_vector_literal(v_text);
  Json space_json;
  if (!space_path.empty()) space_json = load_json(space_path, report);
  QuadSpacePtr space =
      nonarch_space(space_path.empty() ? nullptr : &space_json, static_cast<int>(items.size()));
  Vector v = parse_vector_literal(v_text, space);
  const VectorClass c = classify_vector(v);
  const char* name = c == VectorClass::infinitesimal ? "infinitesimal"
                     : c == VectorClass::medial      ? "medial"
                                                     : "neither";
  report.doc["results"]["class"] = name;
  report.doc["results"]["norm"] = inner(v, v).str();
  print_report(report, opt);
  return report.exit_code();
}

int cmd_nonarch_approx(const std::string& p_text, const std::string& q_text,
                       const std::string& space_path, const Options& opt) {
  Report report("nonarch approx --p " + p_text + " --q " + q_text);
  const auto p_items = split_vector_literal(p_text);
  Json space_json;
  if (!space_path.empty()) space_json = load_json(space_path, report);
  QuadSpacePtr space =
      nonarch_space(space_path.empty() ? nullptr : &space_json, static_cast<int>(p_items.size()));
  Vector pv = parse_vector_literal(p_text, space);
  Vector qv = parse_vector_literal(q_text, space);
  if (pv.is_zero() || qv.is_zero())
    throw parse_error("the zero vector spans no projective point");
  ProjPoint p(pv);
  ProjPoint q(qv);
  report.doc["results"]["approx"] = approx(p, q);
  print_report(report, opt);
  return report.exit_code();
}

int cmd_nonarch_suite(int dim, int count, const std::string& space_path, const Options& opt) {
  Report report("nonarch suite --dim " + std::to_string(dim) + " --seed " +
                std::to_string(opt.seed));
  Json space_json;
  if (!space_path.empty()) space_json = load_json(space_path, report);
  QuadSpacePtr space = nonarch_space(space_path.empty() ? nullptr : &space_json, dim);
  report.doc["seed"] = opt.seed;

  std::vector<ProjPoint> sample = default_sample(space, count, opt.seed);
  std::vector<OrthoMatrix> rotations = default_rotations(space);
  report.add_checks(congruence_suite(sample, rotations));

  Json sample_json = Json::array();
  for (const auto& p : sample) sample_json.push_back(vector_to_json(p.rep()));
  report.doc["results"]["sample"] = sample_json;
  report.doc["results"]["rotation_count"] = rotations.size();
  // the automatic non-triviality witness, as coordinate arrays
  const Scalar eps = Scalar::eps(space->spec());
  Vector u = Vector::basis(space, 0);
  Vector v = Vector::basis(space, 1);
  report.doc["results"]["nontrivial_witness"] =
      Json::array({vector_to_json(u), vector_to_json(u + v.scaled(eps))});
  print_report(report, opt);
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for orthogonality spaces and quadratic-space rotations"};
  app.set_version_flag("--version", std::string(ortho::kToolVersion));

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-adjunctions", opt.max_adjunctions,
                 "cap on radical adjunctions per operation")
      ->capture_default_str();
  app.add_flag("--timings", opt.timings, "include wall-clock timings in the report");

  std::string graph_path;
  std::vector<std::string> graph_checks;
  CLI::App* graph = app.add_subcommand("graph", "checks on a finite orthogonality space");
  graph->add_option("path", graph_path, "graph JSON file")->required();
  graph->add_option("--checks", graph_checks,
                    "subset of closure,rank,irredundance,linearity,dacey,lattice")
      ->delimiter(',');

  CLI::App* rot = app.add_subcommand("rot", "exact rotation operations");
  rot->require_subcommand(1);
  std::string rot_path, rot_points, fix_alpha, fix_beta, fix_block;
  CLI::App* rot_verify = rot->add_subcommand("verify", "validate U^T G U = G");
  rot_verify->add_option("path", rot_path, "matrix JSON file")->required();
  CLI::App* rot_map = rot->add_subcommand("map", "apply the induced projective map");
  rot_map->add_option("path", rot_path, "matrix JSON file")->required();
  rot_map->add_option("--points", rot_points, "points JSON file")->required();
  CLI::App* rot_sqrt = rot->add_subcommand("sqrt", "half-angle square root of a basic rotation");
  rot_sqrt->add_option("path", rot_path, "basic rotation JSON file")->required();
  CLI::App* rot_givens = rot->add_subcommand("givens", "decompose a rotation into basic rotations");
  rot_givens->add_option("path", rot_path, "matrix JSON file")->required();
  CLI::App* rot_fix = rot->add_subcommand("fixclass", "classify a canonical SO(2) block");
  rot_fix->add_option("--alpha", fix_alpha, "block parameter alpha");
  rot_fix->add_option("--beta", fix_beta, "block parameter beta");
  rot_fix->add_option("--block", fix_block, "four comma-separated entries a,b,c,d");

  CLI::App* nonarch = app.add_subcommand("nonarch", "Q(eps) infinitesimal machinery");
  nonarch->require_subcommand(1);
  std::string na_v, na_p, na_q, na_space;
  int na_dim = 4, na_count = 20;
  CLI::App* na_classify = nonarch->add_subcommand("classify", "classify a vector");
  na_classify->add_option("--v", na_v, "vector as a JSON array of scalars")->required();
  na_classify->add_option("--space", na_space, "space JSON file");
  CLI::App* na_approx = nonarch->add_subcommand("approx", "decide p approx q");
  na_approx->add_option("--p", na_p, "point as a JSON array")->required();
  na_approx->add_option("--q", na_q, "point as a JSON array")->required();
  na_approx->add_option("--space", na_space, "space JSON file");
  CLI::App* na_suite = nonarch->add_subcommand("suite", "run the congruence proof obligations");
  na_suite->add_option("--dim", na_dim, "space dimension")->capture_default_str();
  na_suite->add_option("--count", na_count, "sample size")->capture_default_str();
  na_suite->add_option("--space", na_space, "space JSON file");
  na_suite->add_option("--seed", opt.seed, "sample seed")->envname("ORTHO_SEED");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*graph) return cmd_graph(graph_path, graph_checks, opt);
    if (*rot) {
      if (*rot_verify) return cmd_rot_verify(rot_path, opt);
      if (*rot_map) return cmd_rot_map(rot_path, rot_points, opt);
      if (*rot_sqrt) return cmd_rot_sqrt(rot_path, opt);
      if (*rot_givens) return cmd_rot_givens(rot_path, opt);
      if (*rot_fix) {
        if (fix_block.empty() && (fix_alpha.empty() || fix_beta.empty()))
          throw ortho::parse_error("fixclass needs --alpha/--beta or --block");
        return cmd_rot_fixclass(fix_alpha, fix_beta, fix_block, opt);
      }
    }
    if (*nonarch) {
      if (*na_classify) return cmd_nonarch_classify(na_v, na_space, opt);
      if (*na_approx) return cmd_nonarch_approx(na_p, na_q, na_space, opt);
      if (*na_suite) return cmd_nonarch_suite(na_dim, na_count, na_space, opt);
    }
    std::cerr << app.help() << "\n";
    return 2;
  } catch (const ortho::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ortho::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
