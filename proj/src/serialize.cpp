#include "linkednets/serialize.hpp"

#include <limits>
#include <set>

#include "linkednets/errors.hpp"

namespace linkednets {

namespace {

void require_object(const Json& j, const std::string& what, const std::set<std::string>& required,
                    const std::set<std::string>& optional) {
  if (!j.is_object()) throw InvalidInput(what + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      throw InvalidInput("unknown field '" + key + "' in " + what);
    }
  }
  for (const auto& key : required) {
    if (!j.contains(key)) throw InvalidInput("missing field '" + key + "' in " + what);
  }
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = j.at(key);
  if (!a.is_array()) throw InvalidInput(std::string("field '") + key + "' must be an array");
  return a;
}

Int int_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
      throw InvalidInput(what + " is out of range");
    }
    return j.get<Int>();
  }
  throw InvalidInput(what + " must be an integer");
}

IntTuple tuple_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array of integers");
  IntTuple out;
  for (const auto& x : j) out.push_back(int_from_json(x, what));
  return out;
}

Json tuple_to_json(const IntTuple& t) {
  Json out = Json::array();
  for (Int x : t) out.push_back(x);
  return out;
}

}  // namespace

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return static_cast<std::int64_t>(q.get_num().get_si());
  return to_string(q);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(std::to_string(j.get<std::uint64_t>()));
    return Rational(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("rational must be an integer or a \"p/q\" string");
}

Json vertex_to_json(const Vertex& v) { return tuple_to_json(v.twists()); }

Vertex vertex_from_json(const Json& j, int n) {
  IntTuple t = tuple_from_json(j, "vertex");
  if (t.size() != static_cast<std::size_t>(n) + 1) {
    throw InvalidInput("vertex must have " + std::to_string(n + 1) + " entries");
  }
  return Vertex::from_twists(std::move(t));
}

Json type_set_to_json(TypeSet s) {
  Json out = Json::array();
  for (int t : s.elements()) out.push_back(t);
  return out;
}

TypeSet type_set_from_json(const Json& j, int n) {
  IntTuple t = tuple_from_json(j, "type set");
  std::vector<int> types;
  for (Int x : t) {
    if (x < 0 || x > n) throw InvalidInput("arrow type " + std::to_string(x) + " out of range");
    types.push_back(static_cast<int>(x));
  }
  return TypeSet::from_elements(types);
}

Json matrix_to_json(const RMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

RMatrix matrix_from_json(const Json& j, std::size_t cols) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  if (!j.empty()) {
    if (!j.front().is_array()) throw InvalidInput("matrix rows must be arrays");
    cols = j.front().size();
  }
  RMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InvalidInput("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json vector_to_json(const RVector& x) {
  Json out = Json::array();
  for (const auto& q : x) out.push_back(rational_to_json(q));
  return out;
}

RVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("vector must be an array");
  RVector out;
  for (const auto& q : j) out.push_back(rational_from_json(q));
  return out;
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"ambient_dim", s.ambient_dim()}, {"basis", matrix_to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j) {
  require_object(j, "subspace", {"ambient_dim", "basis"}, {});
  Int d = int_from_json(j.at("ambient_dim"), "ambient_dim");
  if (d < 0) throw InvalidInput("ambient_dim must be nonnegative");
  RMatrix basis = matrix_from_json(j.at("basis"), static_cast<std::size_t>(d));
  if (basis.cols() != static_cast<std::size_t>(d)) throw InvalidInput("subspace basis has the wrong width");
  Subspace s = Subspace::row_space(basis);
  if (s.dim() != basis.rows()) throw InvalidInput("subspace basis is not independent");
  return s;
}

Json frame_to_json(const MultidegreeFrame& f) {
  Json gens = Json::array();
  for (const auto& g : f.generators) gens.push_back(tuple_to_json(g));
  return Json{{"base", tuple_to_json(f.base)}, {"generators", std::move(gens)}};
}

MultidegreeFrame frame_from_json(const Json& j) {
  require_object(j, "frame", {"base", "generators"}, {});
  MultidegreeFrame f;
  f.base = tuple_from_json(j.at("base"), "frame base");
  for (const auto& g : array_field(j, "generators")) f.generators.push_back(tuple_from_json(g, "frame generator"));
  f.validate();
  return f;
}

Json net_to_json(const NetPresentation& p) {
  Json window = Json::array();
  Json dims = Json::array();
  for (std::size_t i = 0; i < p.window().size(); ++i) {
    window.push_back(vertex_to_json(p.window()[i]));
    dims.push_back(p.dims()[i]);
  }
  Json gens = Json::array();
  for (const auto& g : p.generators()) gens.push_back(vertex_to_json(g));
  Json arrows = Json::array();
  for (const auto& [ref, m] : p.arrows()) {
    arrows.push_back(Json{{"from", vertex_to_json(ref.source)}, {"type", ref.type.index}, {"matrix", matrix_to_json(m)}});
  }
  Json out{{"n", p.n()}, {"window", std::move(window)}, {"dims", std::move(dims)}, {"generators", std::move(gens)},
           {"arrows", std::move(arrows)}};
  if (!p.labels().empty()) {
    Json labels = Json::array();
    for (const auto& v : p.window()) {
      auto it = p.labels().find(v);
      labels.push_back(it == p.labels().end() ? Json(nullptr) : tuple_to_json(it->second));
    }
    out["labels"] = std::move(labels);
  }
  if (p.frame()) out["frame"] = frame_to_json(*p.frame());
  if (!p.boundary_zero_arrows().empty()) {
    Json zeros = Json::array();
    for (const auto& ref : p.boundary_zero_arrows()) {
      zeros.push_back(Json{{"from", vertex_to_json(ref.source)}, {"type", ref.type.index}});
    }
    out["boundary_zero_arrows"] = std::move(zeros);
  }
  return out;
}

NetPresentation net_from_json(const Json& j) {
  require_object(j, "net", {"n", "window", "dims", "generators", "arrows"},
                 {"labels", "frame", "boundary_zero_arrows"});
  Int n64 = int_from_json(j.at("n"), "n");
  if (n64 < 1 || n64 > kMaxQuiverN) throw InvalidInput("n must lie in [1, " + std::to_string(kMaxQuiverN) + "]");
  const int n = static_cast<int>(n64);

  std::vector<Vertex> window;
  for (const auto& v : array_field(j, "window")) window.push_back(vertex_from_json(v, n));
  std::vector<std::size_t> dims;
  for (const auto& d : array_field(j, "dims")) {
    Int x = int_from_json(d, "dimension");
    if (x < 0) throw InvalidInput("dimensions must be nonnegative");
    dims.push_back(static_cast<std::size_t>(x));
  }
  if (dims.size() != window.size()) throw InvalidInput("window and dims differ in length");
  std::map<Vertex, std::size_t> dim_of;
  for (std::size_t i = 0; i < window.size(); ++i) dim_of.emplace(window[i], dims[i]);

  std::vector<Vertex> gens;
  for (const auto& g : array_field(j, "generators")) gens.push_back(vertex_from_json(g, n));

  std::map<ArrowRef, RMatrix> arrows;
  for (const auto& a : array_field(j, "arrows")) {
    require_object(a, "arrow", {"from", "type", "matrix"}, {});
    Vertex from = vertex_from_json(a.at("from"), n);
    Int type = int_from_json(a.at("type"), "arrow type");
    if (type < 0 || type > n) throw InvalidInput("arrow type " + std::to_string(type) + " out of range");
    ArrowRef ref{from, ArrowType{static_cast<int>(type)}};
    auto src = dim_of.find(from);
    RMatrix m = matrix_from_json(a.at("matrix"), src == dim_of.end() ? 0 : src->second);
    if (!arrows.emplace(ref, std::move(m)).second) throw InvalidInput("duplicate arrow " + ref.to_string());
  }

  NetPresentation p(n, window, dims, std::move(arrows), std::move(gens));

  if (j.contains("labels")) {
    const Json& labels = array_field(j, "labels");
    if (labels.size() != window.size()) throw InvalidInput("labels must parallel the window");
    std::map<Vertex, IntTuple> out;
    for (std::size_t i = 0; i < window.size(); ++i) {
      if (!labels[i].is_null()) out.emplace(window[i], tuple_from_json(labels[i], "label"));
    }
    p.set_labels(std::move(out));
  }
  if (j.contains("frame")) p.set_frame(frame_from_json(j.at("frame")));
  if (j.contains("boundary_zero_arrows")) {
    std::set<ArrowRef> zeros;
    for (const auto& a : array_field(j, "boundary_zero_arrows")) {
      require_object(a, "boundary arrow", {"from", "type"}, {});
      Int type = int_from_json(a.at("type"), "arrow type");
      if (type < 0 || type > n) throw InvalidInput("arrow type " + std::to_string(type) + " out of range");
      zeros.insert(ArrowRef{vertex_from_json(a.at("from"), n), ArrowType{static_cast<int>(type)}});
    }
    p.set_boundary_zero_arrows(std::move(zeros));
  }
  return p;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

std::string dump_net(const NetPresentation& p, bool pretty) { return dump_json(net_to_json(p), pretty); }

NetPresentation parse_net(const std::string& text) {
  try {
    return net_from_json(parse_json(text));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed net file: ") + e.what());
  }
}

Json report_to_json(const CheckReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json vs = Json::array(), ts = Json::array(), ms = Json::array(), xs = Json::array();
    for (const auto& v : w.vertices) vs.push_back(vertex_to_json(v));
    for (const auto& t : w.type_sets) ts.push_back(type_set_to_json(t));
    for (const auto& m : w.matrices) ms.push_back(matrix_to_json(m));
    for (const auto& x : w.vectors) xs.push_back(vector_to_json(x));
    witnesses.push_back(Json{{"condition", w.condition}, {"vertices", vs}, {"type_sets", ts},
                             {"matrices", ms}, {"vectors", xs}, {"detail", w.detail}});
  }
  Json coverage = Json::array();
  for (const auto& g : r.coverage) {
    Json vs = Json::array(), ts = Json::array();
    for (const auto& v : g.vertices) vs.push_back(vertex_to_json(v));
    for (const auto& t : g.type_sets) ts.push_back(type_set_to_json(t));
    coverage.push_back(Json{{"condition", g.condition}, {"vertices", vs}, {"type_sets", ts}, {"detail", g.detail}});
  }
  Json out{{"check", r.check}, {"passed", r.passed}, {"witnesses", witnesses}, {"coverage", coverage}};
  if (!r.minimal_generators.empty()) {
    Json gens = Json::array();
    for (const auto& v : r.minimal_generators) gens.push_back(vertex_to_json(v));
    out["minimal_generators"] = std::move(gens);
  }
  return out;
}

Json certificate_to_json(const ViolationCertificate& c) {
  Json summands = Json::array();
  for (TypeSet s : c.summands) summands.push_back(type_set_to_json(s));
  return Json{{"vertex", vertex_to_json(c.vertex)}, {"I0", type_set_to_json(c.i0)}, {"summands", summands},
              {"lhs", subspace_to_json(c.lhs)}, {"rhs", subspace_to_json(c.rhs)}};
}

ViolationCertificate certificate_from_json(const Json& j, int n) {
  require_object(j, "certificate", {"vertex", "I0", "summands", "lhs", "rhs"}, {});
  ViolationCertificate c;
  c.vertex = vertex_from_json(j.at("vertex"), n);
  c.i0 = type_set_from_json(j.at("I0"), n);
  for (const auto& s : array_field(j, "summands")) c.summands.push_back(type_set_from_json(s, n));
  c.lhs = subspace_from_json(j.at("lhs"));
  c.rhs = subspace_from_json(j.at("rhs"));
  return c;
}

Json profile_to_json(const KernelProfile& k) {
  Json kernels = Json::array();
  for (const auto& [types, space] : k.kernels) {
    kernels.push_back(Json{{"types", type_set_to_json(types)}, {"kernel", subspace_to_json(space)}});
  }
  return Json{{"vertex", vertex_to_json(k.vertex)}, {"kernels", kernels}};
}

Json summand_to_json(const SimpleSummand& s) {
  return Json{{"generator_vertex", vertex_to_json(s.generator_vertex)},
              {"generator_vector", vector_to_json(s.generator_vector)}};
}

Json decomposition_to_json(const NetPresentation& p, const DecompositionResult& d) {
  Json out = net_to_json(p);
  Json summands = Json::array();
  for (const auto& s : d.summands) summands.push_back(summand_to_json(s));
  out["summands"] = std::move(summands);
  return out;
}

Json gen_spec_to_json(const GenSpec& s) {
  Json seeds = Json::array();
  for (const auto& v : s.seeds) seeds.push_back(vertex_to_json(v));
  return Json{{"n", s.n}, {"window_radius", s.window_radius}, {"seeds", seeds}, {"seed_rng", s.seed_rng},
              {"conjugate", s.conjugate}};
}

GenSpec gen_spec_from_json(const Json& j) {
  require_object(j, "generator spec", {"n", "seeds"}, {"window_radius", "seed_rng", "conjugate"});
  GenSpec s;
  Int n = int_from_json(j.at("n"), "n");
  if (n < 1 || n > kMaxQuiverN) throw InvalidInput("n out of range");
  s.n = static_cast<int>(n);
  s.window_radius = j.contains("window_radius") ? int_from_json(j.at("window_radius"), "window_radius") : n + 1;
  for (const auto& v : array_field(j, "seeds")) s.seeds.push_back(vertex_from_json(v, s.n));
  if (j.contains("seed_rng")) {
    if (!j.at("seed_rng").is_number_unsigned()) throw InvalidInput("seed_rng must be a nonnegative integer");
    s.seed_rng = j.at("seed_rng").get<std::uint64_t>();
  }
  if (j.contains("conjugate")) {
    if (!j.at("conjugate").is_boolean()) throw InvalidInput("conjugate must be a boolean");
    s.conjugate = j.at("conjugate").get<bool>();
  }
  s.validate();
  return s;
}

}  // namespace linkednets
