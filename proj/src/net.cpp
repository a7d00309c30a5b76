#include "linkednets/net.hpp"

#include <algorithm>

#include "linkednets/errors.hpp"

namespace linkednets {

std::string ArrowRef::to_string() const {
  return source.to_string() + " -[" + std::to_string(type.index) + "]-> " + target().to_string();
}

// ---------------------------------------------------------------------------
// NetPresentation

NetPresentation::NetPresentation(int n, std::vector<Vertex> window, std::vector<std::size_t> dims,
                                 std::map<ArrowRef, RMatrix> arrows, std::vector<Vertex> generators)
    : n_(n), arrows_(std::move(arrows)) {
  if (n < 1 || n > kMaxQuiverN) throw InvalidInput("n must lie in [1, " + std::to_string(kMaxQuiverN) + "]");
  if (window.size() != dims.size()) throw InvalidInput("window and dims differ in length");
  std::vector<std::size_t> order(window.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return window[a] < window[b]; });
  for (std::size_t i : order) {
    if (window[i].n() != n) throw InvalidInput("window vertex " + window[i].to_string() + " does not match n");
    if (!index_.emplace(window[i], window_.size()).second) {
      throw InvalidInput("duplicate window vertex " + window[i].to_string());
    }
    window_.push_back(window[i]);
    dims_.push_back(dims[i]);
  }
  set_generators(std::move(generators));
}

void NetPresentation::set_generators(std::vector<Vertex> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  generators_ = std::move(generators);
}

std::optional<std::size_t> NetPresentation::index_of(const Vertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t NetPresentation::dim(const Vertex& v) const {
  auto idx = index_of(v);
  if (!idx) throw InvalidInput("vertex " + v.to_string() + " is outside the window");
  return dims_[*idx];
}

const RMatrix* NetPresentation::arrow(const Vertex& source, ArrowType type) const {
  auto it = arrows_.find(ArrowRef{source, type});
  return it == arrows_.end() ? nullptr : &it->second;
}

std::size_t NetPresentation::max_dim() const {
  return dims_.empty() ? 0 : *std::max_element(dims_.begin(), dims_.end());
}

bool NetPresentation::operator==(const NetPresentation& other) const {
  return n_ == other.n_ && window_ == other.window_ && dims_ == other.dims_ && arrows_ == other.arrows_ &&
         generators_ == other.generators_ && labels_ == other.labels_ && frame_ == other.frame_ &&
         boundary_zero_ == other.boundary_zero_;
}

// ---------------------------------------------------------------------------
// Path maps

const std::optional<RMatrix>& PathEvaluator::try_path_map(const Vertex& u, const Vertex& w) {
  static const std::optional<RMatrix> kNone;
  auto iu = net_.index_of(u);
  auto iw = net_.index_of(w);
  if (!iu || !iw) return kNone;
  auto key = std::make_pair(*iu, *iw);
  if (auto it = paths_.find(key); it != paths_.end()) return it->second;

  std::optional<RMatrix> result;
  if (u == w) {
    result = RMatrix::identity(net_.dims()[*iu]);
  } else {
    PathTypeVector t = delta(u, w);
    for (int i = 0; i <= net_.n() && !result; ++i) {
      if (t[static_cast<std::size_t>(i)] == 0) continue;
      Vertex x = arrow_source(w, ArrowType{i});
      const RMatrix* last = net_.arrow(x, ArrowType{i});
      if (!last || !net_.in_window(x)) continue;
      const auto& prefix = try_path_map(u, x);
      if (prefix) result = (*last) * (*prefix);
    }
  }
  return paths_.emplace(key, std::move(result)).first->second;
}

const RMatrix& PathEvaluator::path_map(const Vertex& u, const Vertex& w) {
  const auto& m = try_path_map(u, w);
  if (!m) {
    throw WindowInsufficient("no in-window admissible path from " + u.to_string() + " to " + w.to_string(),
                             missing_arrows(net_, u, w));
  }
  return *m;
}

std::optional<RMatrix> PathEvaluator::try_simple_map(const Vertex& v, TypeSet types) {
  if (!types.is_proper(net_.n())) throw InvalidInput("simple maps need a proper type set");
  return try_path_map(v, move_by(v, types));
}

RMatrix PathEvaluator::simple_map(const Vertex& v, TypeSet types) {
  if (!types.is_proper(net_.n())) throw InvalidInput("simple maps need a proper type set");
  return path_map(v, move_by(v, types));
}

const std::optional<Subspace>& PathEvaluator::try_simple_kernel(const Vertex& v, TypeSet types) {
  static const std::optional<Subspace> kNone;
  auto iv = net_.index_of(v);
  if (!iv) return kNone;
  auto key = std::make_pair(*iv, types.mask());
  if (auto it = kernels_.find(key); it != kernels_.end()) return it->second;
  std::optional<Subspace> k;
  if (auto m = try_simple_map(v, types)) k = kernel(*m);
  return kernels_.emplace(key, std::move(k)).first->second;
}

std::vector<std::string> missing_arrows(const NetPresentation& p, const Vertex& u, const Vertex& w) {
  std::vector<std::string> out;
  if (!p.in_window(u)) out.push_back("vertex " + u.to_string() + " outside window");
  if (!p.in_window(w)) out.push_back("vertex " + w.to_string() + " outside window");
  if (!out.empty()) return out;
  for (const auto& [src, type] : canonical_path(u, delta(u, w))) {
    ArrowRef ref{src, type};
    if (!p.in_window(src) || !p.in_window(ref.target()) || !p.arrow(src, type)) out.push_back(ref.to_string());
  }
  return out;
}

RMatrix path_map(const NetPresentation& p, const Vertex& u, const Vertex& w) {
  PathEvaluator eval(p);
  return eval.path_map(u, w);
}

RMatrix simple_map(const NetPresentation& p, const Vertex& v, TypeSet types) {
  PathEvaluator eval(p);
  return eval.simple_map(v, types);
}

// ---------------------------------------------------------------------------
// Verifiers

CheckReport validate(const NetPresentation& p) {
  CheckReport r{.check = "validate"};
  if (p.window().empty()) {
    r.fail({.condition = "window", .detail = "window is empty"});
    return r;
  }
  if (p.generators().empty()) r.fail({.condition = "generators", .detail = "generating set is empty"});
  for (const auto& g : p.generators()) {
    if (!p.in_window(g)) {
      r.fail({.condition = "generators", .vertices = {g}, .detail = "generator outside the window"});
    }
  }
  for (const auto& [ref, m] : p.arrows()) {
    if (ref.source.n() != p.n() || ref.type.index < 0 || ref.type.index > p.n()) {
      r.fail({.condition = "arrow", .vertices = {ref.source}, .detail = "arrow does not belong to this quiver"});
      continue;
    }
    Vertex tgt = ref.target();
    if (!p.in_window(ref.source) || !p.in_window(tgt)) {
      r.fail({.condition = "arrow",
              .vertices = {ref.source, tgt},
              .type_sets = {TypeSet{ref.type.index}},
              .detail = "arrow " + ref.to_string() + " leaves the window"});
      continue;
    }
    if (m.rows() != p.dim(tgt) || m.cols() != p.dim(ref.source)) {
      r.fail({.condition = "shape",
              .vertices = {ref.source, tgt},
              .type_sets = {TypeSet{ref.type.index}},
              .matrices = {m},
              .detail = "arrow " + ref.to_string() + " has shape " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", expected " + std::to_string(p.dim(tgt)) + "x" +
                        std::to_string(p.dim(ref.source))});
    }
  }
  for (const auto& v : p.window()) {
    for (int t = 0; t <= p.n(); ++t) {
      Vertex tgt = arrow_target(v, ArrowType{t});
      if (p.in_window(tgt) && !p.arrow(v, ArrowType{t})) {
        r.fail({.condition = "missing_arrow",
                .vertices = {v, tgt},
                .type_sets = {TypeSet{t}},
                .detail = "in-window arrow " + ArrowRef{v, ArrowType{t}}.to_string() + " has no matrix"});
      }
    }
  }
  for (const auto& ref : p.boundary_zero_arrows()) {
    if (ref.source.n() != p.n() || p.in_window(ref.source) || !p.in_window(ref.target())) {
      r.fail({.condition = "boundary",
              .vertices = {ref.source},
              .detail = "boundary arrow " + ref.to_string() + " must enter the window from outside"});
    }
  }
  if (p.frame()) {
    try {
      p.frame()->validate();
      if (p.frame()->n() != p.n()) throw InvalidInput("frame does not match n");
    } catch (const InvalidInput& e) {
      r.fail({.condition = "frame", .detail = e.what()});
    }
  }
  for (const auto& [v, md] : p.labels()) {
    if (!p.in_window(v)) {
      r.fail({.condition = "label", .vertices = {v}, .detail = "label on a vertex outside the window"});
    } else if (md.size() != static_cast<std::size_t>(p.n()) + 1) {
      r.fail({.condition = "label", .vertices = {v}, .detail = "label has the wrong length"});
    } else if (p.frame() && r.passed) {
      if (to_multidegree(*p.frame(), v) != md) {
        r.fail({.condition = "label", .vertices = {v}, .detail = "label disagrees with the frame"});
      }
    }
  }
  return r;
}

namespace {

struct SquareRoutes {
  Vertex corner;
  RMatrix first;   // i then j
  RMatrix second;  // j then i
};

std::optional<SquareRoutes> square_routes(const NetPresentation& p, const Vertex& v, int i, int j) {
  Vertex a = arrow_target(v, ArrowType{i});
  Vertex b = arrow_target(v, ArrowType{j});
  Vertex c = arrow_target(a, ArrowType{j});
  const RMatrix* vi = p.arrow(v, ArrowType{i});
  const RMatrix* aj = p.arrow(a, ArrowType{j});
  const RMatrix* vj = p.arrow(v, ArrowType{j});
  const RMatrix* bi = p.arrow(b, ArrowType{i});
  if (!vi || !aj || !vj || !bi) return std::nullopt;
  return SquareRoutes{c, (*aj) * (*vi), (*bi) * (*vj)};
}

std::optional<RMatrix> ascending_circuit(const NetPresentation& p, const Vertex& v) {
  RMatrix m = RMatrix::identity(p.dim(v));
  Vertex cur = v;
  for (int t = 0; t <= p.n(); ++t) {
    const RMatrix* a = p.arrow(cur, ArrowType{t});
    if (!a) return std::nullopt;
    m = (*a) * m;
    cur = arrow_target(cur, ArrowType{t});
  }
  return m;
}

std::vector<TypeSet> nonempty_proper_sets(int n) {
  std::vector<TypeSet> out;
  std::uint32_t full = TypeSet::full(n).mask();
  for (std::uint32_t m = 1; m < full; ++m) out.emplace_back(m);
  return out;
}

}  // namespace

CheckReport check_weakly_linked(const NetPresentation& p) {
  CheckReport r{.check = "weakly_linked"};
  for (const auto& v : p.window()) {
    for (int i = 0; i <= p.n(); ++i) {
      for (int j = i + 1; j <= p.n(); ++j) {
        auto sq = square_routes(p, v, i, j);
        if (!sq) {
          r.skip({.condition = "square", .vertices = {v}, .type_sets = {TypeSet{i, j}},
                  .detail = "square leaves the window"});
          continue;
        }
        if (!proportional_nonzero(sq->first, sq->second).holds()) {
          r.fail({.condition = "square",
                  .vertices = {v, sq->corner},
                  .type_sets = {TypeSet{i, j}},
                  .matrices = {sq->first, sq->second},
                  .detail = "the two routes of the square are not proportional"});
        }
      }
    }
    auto circuit = ascending_circuit(p, v);
    if (!circuit) {
      r.skip({.condition = "circuit", .vertices = {v}, .detail = "minimal circuit leaves the window"});
    } else if (!circuit->is_zero()) {
      r.fail({.condition = "circuit",
              .vertices = {v},
              .type_sets = {TypeSet::full(p.n())},
              .matrices = {*circuit},
              .detail = "minimal circuit does not vanish"});
    }
  }
  return r;
}

CheckReport check_linked(const NetPresentation& p) {
  CheckReport r{.check = "linked"};
  PathEvaluator eval(p);
  auto sets = nonempty_proper_sets(p.n());
  for (const auto& v : p.window()) {
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = a + 1; b < sets.size(); ++b) {
        TypeSet i = sets[a], j = sets[b];
        if (!(i & j).empty()) continue;
        const auto& ki = eval.try_simple_kernel(v, i);
        const auto& kj = eval.try_simple_kernel(v, j);
        if (!ki || !kj) {
          r.skip({.condition = "linked", .vertices = {v}, .type_sets = {i, j},
                  .detail = "a simple map leaves the window"});
          continue;
        }
        Subspace common = intersect(*ki, *kj);
        if (!common.is_zero()) {
          r.fail({.condition = "linked",
                  .vertices = {v},
                  .type_sets = {i, j},
                  .vectors = {common.basis().row(0)},
                  .detail = "kernels of type-disjoint simple maps meet nontrivially"});
        }
      }
    }
  }
  return r;
}

CheckReport check_exact(const NetPresentation& p) {
  CheckReport r{.check = "exact"};
  PathEvaluator eval(p);
  for (const auto& v : p.window()) {
    for (TypeSet i : nonempty_proper_sets(p.n())) {
      Vertex w = move_by(v, i);
      if (!p.in_window(w)) continue;
      const auto& there = eval.try_path_map(v, w);
      const auto& back = eval.try_path_map(w, v);
      if (!there || !back) {
        r.skip({.condition = "exact", .vertices = {v, w}, .type_sets = {i},
                .detail = "a connecting map leaves the window"});
        continue;
      }
      if (kernel(*there) != image(*back)) {
        r.fail({.condition = "exact",
                .vertices = {v, w},
                .type_sets = {i},
                .matrices = {*there, *back},
                .detail = "kernel of the forward map differs from the image of the return map"});
      }
    }
  }
  return r;
}

CheckReport check_pure_and_generated(const NetPresentation& p) {
  CheckReport r{.check = "pure_and_generated"};
  if (p.window().empty()) {
    r.fail({.condition = "window", .detail = "window is empty"});
    return r;
  }
  const Vertex& first = p.window().front();
  for (const auto& v : p.window()) {
    if (p.dim(v) != p.dim(first)) {
      r.fail({.condition = "purity",
              .vertices = {first, v},
              .detail = "dimension " + std::to_string(p.dim(first)) + " at " + first.to_string() + " but " +
                        std::to_string(p.dim(v)) + " at " + v.to_string()});
      break;
    }
  }

  PathEvaluator eval(p);
  auto surjects = [&](const Vertex& h, const Vertex& v) -> std::optional<bool> {
    const auto& m = eval.try_path_map(h, v);
    if (!m) return std::nullopt;
    return rank(*m) == p.dim(v);
  };

  for (const auto& v : p.window()) {
    bool found = false;
    bool unknown = false;
    for (const auto& h : p.generators()) {
      if (!p.in_window(h)) continue;
      auto s = surjects(h, v);
      if (!s) unknown = true;
      else if (*s) {
        found = true;
        break;
      }
    }
    if (found) continue;
    if (unknown) {
      r.skip({.condition = "generated", .vertices = {v},
              .detail = "no generator reaches this vertex inside the window"});
    } else {
      r.fail({.condition = "generated", .vertices = {v}, .detail = "no generator maps onto this vertex"});
    }
  }

  if (p.max_dim() == 0) {
    if (!p.generators().empty()) r.minimal_generators = {p.generators().front()};
    return r;
  }
  for (const auto& h : p.generators()) {
    if (!p.in_window(h)) continue;
    bool redundant = false;
    for (const auto& other : p.generators()) {
      if (other == h || !p.in_window(other)) continue;
      if (surjects(other, h).value_or(false)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) r.minimal_generators.push_back(h);
  }
  return r;
}

bool recheck_witness(const NetPresentation& p, const Witness& w) {
  PathEvaluator eval(p);
  if (w.condition == "square") {
    if (w.vertices.empty() || w.type_sets.empty()) return false;
    auto types = w.type_sets[0].elements();
    if (types.size() != 2) return false;
    auto sq = square_routes(p, w.vertices[0], types[0], types[1]);
    return sq && !proportional_nonzero(sq->first, sq->second).holds();
  }
  if (w.condition == "circuit") {
    if (w.vertices.empty()) return false;
    auto c = ascending_circuit(p, w.vertices[0]);
    return c && !c->is_zero();
  }
  if (w.condition == "linked") {
    if (w.vertices.empty() || w.type_sets.size() != 2) return false;
    const auto& ki = eval.try_simple_kernel(w.vertices[0], w.type_sets[0]);
    const auto& kj = eval.try_simple_kernel(w.vertices[0], w.type_sets[1]);
    return ki && kj && !intersect(*ki, *kj).is_zero();
  }
  if (w.condition == "exact") {
    if (w.vertices.size() != 2) return false;
    const auto& there = eval.try_path_map(w.vertices[0], w.vertices[1]);
    const auto& back = eval.try_path_map(w.vertices[1], w.vertices[0]);
    return there && back && kernel(*there) != image(*back);
  }
  if (w.condition == "purity") {
    return w.vertices.size() == 2 && p.in_window(w.vertices[0]) && p.in_window(w.vertices[1]) &&
           p.dim(w.vertices[0]) != p.dim(w.vertices[1]);
  }
  if (w.condition == "generated") {
    if (w.vertices.empty() || !p.in_window(w.vertices[0])) return false;
    const Vertex& v = w.vertices[0];
    for (const auto& h : p.generators()) {
      const auto& m = eval.try_path_map(h, v);
      if (!m || rank(*m) == p.dim(v)) return false;
    }
    return true;
  }
  CheckReport again = validate(p);
  return std::any_of(again.witnesses.begin(), again.witnesses.end(), [&](const Witness& x) {
    return x.condition == w.condition && x.vertices == w.vertices && x.detail == w.detail;
  });
}

std::vector<Vertex> required_window(int n, const std::vector<Vertex>& generators) {
  if (generators.empty()) throw InvalidInput("required_window: no generators");
  auto h = hull(generators);
  return forward_ball(h, n + 1);
}

WindowAdequacy window_adequacy(const NetPresentation& p) {
  WindowAdequacy out;
  for (const auto& v : required_window(p.n(), p.generators())) {
    if (!p.in_window(v)) out.missing.push_back(v);
  }
  out.adequate = out.missing.empty();
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

Subnet subnet_from_spaces(const NetPresentation& p, std::vector<Subspace> spaces) {
  if (spaces.size() != p.window().size()) throw InvalidInput("subnet: one subspace per window vertex expected");
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (spaces[i].ambient_dim() != p.dims()[i]) {
      throw InvalidInput("subnet: subspace at " + p.window()[i].to_string() + " has the wrong ambient dimension");
    }
  }
  std::map<ArrowRef, RMatrix> arrows;
  for (const auto& [ref, m] : p.arrows()) {
    auto is = p.index_of(ref.source);
    auto it = p.index_of(ref.target());
    if (!is || !it) continue;
    try {
      arrows.emplace(ref, restrict_matrix(m, spaces[*is], spaces[*it]));
    } catch (const PreconditionFailed&) {
      throw PreconditionFailed("not a subnet: arrow " + ref.to_string() +
                               " does not carry the source space into the target space");
    }
  }
  std::vector<std::size_t> dims;
  for (const auto& s : spaces) dims.push_back(s.dim());
  Subnet out{std::move(spaces), NetPresentation(p.n(), p.window(), std::move(dims), std::move(arrows),
                                                p.generators())};
  out.net.set_labels(p.labels());
  out.net.set_frame(p.frame());
  out.net.set_boundary_zero_arrows(p.boundary_zero_arrows());
  return out;
}

Subnet subnet_generated(const NetPresentation& p, const std::vector<Seed>& seeds) {
  PathEvaluator eval(p);
  for (const auto& s : seeds) {
    if (!p.in_window(s.vertex)) throw InvalidInput("seed " + s.vertex.to_string() + " is outside the window");
    if (s.space.ambient_dim() != p.dim(s.vertex)) throw InvalidInput("seed subspace has the wrong ambient dimension");
  }
  std::vector<Subspace> spaces;
  std::vector<std::string> unreachable;
  for (const auto& v : p.window()) {
    Subspace acc = Subspace::zero(p.dim(v));
    for (const auto& s : seeds) {
      if (s.space.is_zero()) continue;
      const auto& m = eval.try_path_map(s.vertex, v);
      if (!m) {
        unreachable.push_back(s.vertex.to_string() + " -> " + v.to_string());
        continue;
      }
      acc = sum(acc, push_forward(*m, s.space));
    }
    spaces.push_back(std::move(acc));
  }
  try {
    return subnet_from_spaces(p, std::move(spaces));
  } catch (const PreconditionFailed& e) {
    if (!unreachable.empty()) {
      throw WindowInsufficient(std::string("subnet generation needs paths outside the window: ") + e.what(),
                               unreachable);
    }
    throw;
  }
}

NetPresentation quotient(const NetPresentation& p, const Subnet& w) {
  if (w.spaces.size() != p.window().size()) throw InvalidInput("quotient: subnet does not match the window");
  std::map<ArrowRef, RMatrix> arrows;
  for (const auto& [ref, m] : p.arrows()) {
    auto is = p.index_of(ref.source);
    auto it = p.index_of(ref.target());
    if (!is || !it) continue;
    try {
      arrows.emplace(ref, quotient_matrix(m, w.spaces[*is], w.spaces[*it]));
    } catch (const PreconditionFailed&) {
      throw PreconditionFailed("not a subnet: arrow " + ref.to_string() +
                               " does not carry the source space into the target space");
    }
  }
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < p.window().size(); ++i) {
    if (w.spaces[i].ambient_dim() != p.dims()[i]) throw InvalidInput("quotient: ambient dimension mismatch");
    dims.push_back(p.dims()[i] - w.spaces[i].dim());
  }
  NetPresentation q(p.n(), p.window(), std::move(dims), std::move(arrows), p.generators());
  q.set_labels(p.labels());
  q.set_frame(p.frame());
  q.set_boundary_zero_arrows(p.boundary_zero_arrows());
  return q;
}

NetPresentation direct_sum(const std::vector<NetPresentation>& parts) {
  if (parts.empty()) throw InvalidInput("direct_sum of nothing");
  const NetPresentation& head = parts.front();
  std::vector<std::size_t> dims(head.window().size(), 0);
  std::vector<Vertex> generators;
  for (const auto& part : parts) {
    if (part.n() != head.n() || part.window() != head.window()) {
      throw InvalidInput("direct_sum: summands live on different windows");
    }
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] += part.dims()[i];
    generators.insert(generators.end(), part.generators().begin(), part.generators().end());
  }
  std::map<ArrowRef, RMatrix> arrows;
  for (const auto& [ref, m0] : head.arrows()) {
    auto is = head.index_of(ref.source);
    auto it = head.index_of(ref.target());
    if (!is || !it) throw InvalidInput("direct_sum: arrow leaves the window");
    RMatrix block(dims[*it], dims[*is]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& part : parts) {
      const RMatrix* m = part.arrow(ref.source, ref.type);
      if (!m) throw InvalidInput("direct_sum: summands carry different arrows");
      if (m->rows() != part.dims()[*it] || m->cols() != part.dims()[*is]) {
        throw InvalidInput("direct_sum: arrow " + ref.to_string() + " has the wrong shape");
      }
      for (std::size_t r = 0; r < m->rows(); ++r)
        for (std::size_t c = 0; c < m->cols(); ++c) block(r0 + r, c0 + c) = (*m)(r, c);
      r0 += m->rows();
      c0 += m->cols();
    }
    arrows.emplace(ref, std::move(block));
  }
  for (const auto& part : parts) {
    if (part.arrows().size() != head.arrows().size()) throw InvalidInput("direct_sum: summands carry different arrows");
  }
  NetPresentation out(head.n(), head.window(), std::move(dims), std::move(arrows), std::move(generators));
  out.set_labels(head.labels());
  out.set_frame(head.frame());
  out.set_boundary_zero_arrows(head.boundary_zero_arrows());
  return out;
}

NetPresentation conjugate(const NetPresentation& p, const std::map<Vertex, RMatrix>& basis) {
  std::map<Vertex, RMatrix> inverses;
  for (const auto& [v, b] : basis) {
    if (!p.in_window(v)) throw InvalidInput("conjugate: basis given for " + v.to_string() + " outside the window");
    if (b.rows() != p.dim(v) || b.cols() != p.dim(v)) {
      throw InvalidInput("conjugate: basis at " + v.to_string() + " has the wrong size");
    }
    inverses.emplace(v, inverse(b));
  }
  std::map<ArrowRef, RMatrix> arrows;
  for (const auto& [ref, m] : p.arrows()) {
    RMatrix out = m;
    if (auto it = inverses.find(ref.source); it != inverses.end()) out = out * it->second;
    if (auto it = basis.find(ref.target()); it != basis.end()) out = it->second * out;
    arrows.emplace(ref, std::move(out));
  }
  NetPresentation q(p.n(), p.window(), p.dims(), std::move(arrows), p.generators());
  q.set_labels(p.labels());
  q.set_frame(p.frame());
  q.set_boundary_zero_arrows(p.boundary_zero_arrows());
  return q;
}

}  // namespace linkednets
