#include "linkednets/quiver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "linkednets/errors.hpp"
#include "linkednets/exactla.hpp"

namespace linkednets {

namespace {

std::string join(const IntTuple& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

void require_same_n(const Vertex& u, const Vertex& w) {
  if (u.n() != w.n()) throw InvalidInput("vertices " + u.to_string() + " and " + w.to_string() + " differ in n");
}

void require_type(const Vertex& v, int type) {
  if (type < 0 || type > v.n()) {
    throw InvalidInput("arrow type " + std::to_string(type) + " out of range for n = " + std::to_string(v.n()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// TypeSet

TypeSet::TypeSet(std::initializer_list<int> types) {
  for (int t : types) mask_ |= std::uint32_t{1} << t;
}

TypeSet TypeSet::from_elements(std::span<const int> types) {
  std::uint32_t mask = 0;
  for (int t : types) {
    if (t < 0 || t > kMaxQuiverN) throw InvalidInput("arrow type " + std::to_string(t) + " out of range");
    mask |= std::uint32_t{1} << t;
  }
  return TypeSet(mask);
}

int TypeSet::size() const { return std::popcount(mask_); }

std::vector<int> TypeSet::elements() const {
  std::vector<int> out;
  for (int i = 0; i <= kMaxQuiverN; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string TypeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int t : elements()) {
    if (!first) os << ',';
    os << t;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Vertex, PathTypeVector

Vertex Vertex::normalize(std::span<const Int> raw) {
  if (raw.size() < 2) throw InvalidInput("a vertex needs n + 1 >= 2 twist entries");
  if (raw.size() > static_cast<std::size_t>(kMaxQuiverN) + 1) throw InvalidInput("n too large");
  Int m = *std::min_element(raw.begin(), raw.end());
  IntTuple t(raw.begin(), raw.end());
  for (auto& x : t) x -= m;
  return Vertex(std::move(t));
}

Vertex Vertex::from_twists(IntTuple twists) {
  if (twists.size() < 2) throw InvalidInput("a vertex needs n + 1 >= 2 twist entries");
  if (twists.size() > static_cast<std::size_t>(kMaxQuiverN) + 1) throw InvalidInput("n too large");
  Int m = *std::min_element(twists.begin(), twists.end());
  if (m != 0) throw InvalidInput("twist tuple (" + join(twists) + ") is not normalized");
  return Vertex(std::move(twists));
}

std::string Vertex::to_string() const { return "(" + join(twists_) + ")"; }

Vertex normalize(std::span<const Int> raw) { return Vertex::normalize(raw); }

PathTypeVector::PathTypeVector(IntTuple counts) : counts_(std::move(counts)) {
  for (Int c : counts_)
    if (c < 0) throw InvalidInput("path type counts must be nonnegative");
}

bool PathTypeVector::is_admissible() const {
  return std::any_of(counts_.begin(), counts_.end(), [](Int c) { return c == 0; });
}

bool PathTypeVector::is_simple() const {
  return std::all_of(counts_.begin(), counts_.end(), [](Int c) { return c <= 1; });
}

bool PathTypeVector::is_minimal_circuit() const {
  return std::all_of(counts_.begin(), counts_.end(), [](Int c) { return c == 1; });
}

bool PathTypeVector::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](Int c) { return c == 0; });
}

Int PathTypeVector::length() const { return std::accumulate(counts_.begin(), counts_.end(), Int{0}); }

TypeSet PathTypeVector::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > 0) mask |= std::uint32_t{1} << i;
  return TypeSet(mask);
}

std::string PathTypeVector::to_string() const { return "(" + join(counts_) + ")"; }

// ---------------------------------------------------------------------------
// Arrows and paths

Vertex arrow_target(const Vertex& v, ArrowType t) {
  require_type(v, t.index);
  IntTuple raw = v.twists();
  raw[static_cast<std::size_t>(t.index)] += 1;
  return Vertex::normalize(raw);
}

Vertex arrow_source(const Vertex& v, ArrowType t) {
  require_type(v, t.index);
  IntTuple raw = v.twists();
  raw[static_cast<std::size_t>(t.index)] -= 1;
  return Vertex::normalize(raw);
}

PathTypeVector delta(const Vertex& u, const Vertex& w) {
  require_same_n(u, w);
  IntTuple diff(u.twists().size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = w[i] - u[i];
  return PathTypeVector(Vertex::normalize(diff).twists());
}

Int distance(const Vertex& u, const Vertex& w) { return delta(u, w).length(); }

bool is_neighbor(const Vertex& u, const Vertex& w) {
  PathTypeVector t = delta(u, w);
  return !t.is_zero() && t.is_simple();
}

Vertex move_by(const Vertex& v, TypeSet types) {
  IntTuple raw = v.twists();
  for (int t : types.elements()) {
    require_type(v, t);
    raw[static_cast<std::size_t>(t)] += 1;
  }
  return Vertex::normalize(raw);
}

bool cone_contains(const Vertex& v, TypeSet types, const Vertex& w) {
  if (types == TypeSet::full(v.n())) return true;
  return delta(v, w).support().is_subset_of(types);
}

std::vector<std::pair<Vertex, ArrowType>> canonical_path(const Vertex& v, const PathTypeVector& t) {
  if (t.n() != v.n()) throw InvalidInput("path type length does not match the vertex");
  std::vector<std::pair<Vertex, ArrowType>> path;
  Vertex cur = v;
  for (int i = 0; i <= v.n(); ++i) {
    for (Int k = 0; k < t[static_cast<std::size_t>(i)]; ++k) {
      path.emplace_back(cur, ArrowType{i});
      cur = arrow_target(cur, ArrowType{i});
    }
  }
  return path;
}

// ---------------------------------------------------------------------------
// Hulls and balls

bool in_hull(std::span<const Vertex> vertices, const Vertex& candidate) {
  for (int a = 0; a <= candidate.n(); ++a) {
    bool found = std::any_of(vertices.begin(), vertices.end(), [&](const Vertex& z) {
      return delta(z, candidate)[static_cast<std::size_t>(a)] == 0;
    });
    if (!found) return false;
  }
  return true;
}

std::vector<Vertex> hull(std::span<const Vertex> vertices) {
  if (vertices.empty()) throw InvalidInput("hull of an empty set");
  const int n = vertices.front().n();
  for (const auto& v : vertices) require_same_n(vertices.front(), v);

  // Box bound in the projected coordinates x_i = l_i - l_0.
  IntTuple lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Int mn = vertices.front()[static_cast<std::size_t>(i)] - vertices.front()[0];
    Int mx = mn;
    for (const auto& z : vertices) {
      Int x = z[static_cast<std::size_t>(i)] - z[0];
      mn = std::min(mn, x);
      mx = std::max(mx, x);
    }
    lo[static_cast<std::size_t>(i - 1)] = mn;
    hi[static_cast<std::size_t>(i - 1)] = mx;
  }

  std::vector<Vertex> out;
  IntTuple x = lo;
  IntTuple raw(static_cast<std::size_t>(n) + 1);
  while (true) {
    raw[0] = 0;
    for (int i = 0; i < n; ++i) raw[static_cast<std::size_t>(i) + 1] = x[static_cast<std::size_t>(i)];
    Vertex v = Vertex::normalize(raw);
    if (in_hull(vertices, v)) out.push_back(std::move(v));
    int k = 0;
    while (k < n && x[static_cast<std::size_t>(k)] == hi[static_cast<std::size_t>(k)]) {
      x[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
      ++k;
    }
    if (k == n) break;
    ++x[static_cast<std::size_t>(k)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> forward_ball(std::span<const Vertex> centers, Int radius) {
  std::set<Vertex> out;
  for (const auto& c : centers) {
    // Prefixes of an admissible path are admissible, so layer d + 1 is
    // reached from layer d by single arrows.
    std::set<Vertex> layer{c};
    out.insert(c);
    for (Int step = 0; step < radius; ++step) {
      std::set<Vertex> next;
      for (const auto& v : layer) {
        for (int t = 0; t <= v.n(); ++t) {
          Vertex w = arrow_target(v, ArrowType{t});
          if (distance(c, w) == step + 1) next.insert(w);
        }
      }
      out.insert(next.begin(), next.end());
      layer = std::move(next);
    }
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Polygons

bool is_polygon(std::span<const Vertex> vertices) {
  if (vertices.empty()) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].n() != vertices.front().n()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!is_neighbor(vertices[i], vertices[j])) return false;
  }
  return true;
}

OrientedPolygon orient_polygon(std::span<const Vertex> polygon, const Vertex& start) {
  if (!is_polygon(polygon)) throw InvalidInput("input is not a polygon");
  if (std::find(polygon.begin(), polygon.end(), start) == polygon.end()) {
    throw InvalidInput("start vertex " + start.to_string() + " is not in the polygon");
  }
  const int n = start.n();
  OrientedPolygon out;
  out.ordering.push_back(start);
  std::vector<Vertex> remaining;
  for (const auto& v : polygon)
    if (v != start) remaining.push_back(v);

  TypeSet used;
  while (!remaining.empty()) {
    const Vertex& cur = out.ordering.back();
    auto best = remaining.end();
    Int best_len = 0;
    bool tie = false;
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      Int len = distance(cur, *it);
      if (best == remaining.end() || len < best_len) {
        best = it;
        best_len = len;
        tie = false;
      } else if (len == best_len) {
        tie = true;
      }
    }
    if (tie) throw InconsistentPresentation("orient_polygon: two polygon vertices at equal distance");
    TypeSet block = delta(cur, *best).support();
    if (!(block & used).empty()) throw InconsistentPresentation("orient_polygon: overlapping partition blocks");
    used = used | block;
    out.partition.push_back(block);
    out.ordering.push_back(*best);
    remaining.erase(best);
  }
  TypeSet last = TypeSet::full(n) - used;
  if (last.empty() || move_by(out.ordering.back(), last) != start) {
    throw InconsistentPresentation("orient_polygon: ordering does not close up");
  }
  out.partition.push_back(last);
  return out;
}

std::vector<Vertex> polygon_from_partition(const Vertex& start, std::span<const TypeSet> partition) {
  std::vector<Vertex> out{start};
  for (std::size_t i = 0; i + 1 < partition.size(); ++i) out.push_back(move_by(out.back(), partition[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Multidegree frames

void MultidegreeFrame::validate() const {
  const std::size_t len = base.size();
  if (len < 2) throw InvalidInput("frame base must have length n + 1 >= 2");
  if (generators.size() != len) throw InvalidInput("frame needs n + 1 generators of length n + 1");
  IntTuple total(len, 0);
  for (const auto& g : generators) {
    if (g.size() != len) throw InvalidInput("frame generator length mismatch");
    if (std::accumulate(g.begin(), g.end(), Int{0}) != 0) throw InvalidInput("frame generator does not sum to zero");
    for (std::size_t i = 0; i < len; ++i) total[i] += g[i];
  }
  if (std::any_of(total.begin(), total.end(), [](Int x) { return x != 0; })) {
    throw InvalidInput("frame generators do not sum to zero");
  }
  // With the total zero, every proper subset is independent iff any n of
  // them are, iff the full set has rank n.
  RMatrix m(len, len);
  for (std::size_t r = 0; r < len; ++r)
    for (std::size_t c = 0; c < len; ++c) m(r, c) = generators[r][c];
  if (rank(m) != len - 1) throw InvalidInput("frame generators: a proper subset is linearly dependent");
}

Vertex to_twists(const MultidegreeFrame& frame, std::span<const Int> multidegree) {
  frame.validate();
  const std::size_t len = frame.base.size();
  if (multidegree.size() != len) throw InvalidInput("multidegree length mismatch");
  // Fix l_0 = 0 and solve against generators 1..n.
  RMatrix a(len, len - 1);
  RVector rhs(len);
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t c = 1; c < len; ++c) a(r, c - 1) = frame.generators[c][r];
    rhs[r] = multidegree[r] - frame.base[r];
  }
  auto sol = solve(a, rhs);
  if (!sol) throw InvalidInput("multidegree is not in the lattice coset of the frame");
  IntTuple twists(len, 0);
  for (std::size_t c = 1; c < len; ++c) {
    const Rational& q = (*sol)[c - 1];
    if (q.get_den() != 1) throw InvalidInput("multidegree is not in the lattice coset of the frame");
    twists[c] = q.get_num().get_si();
  }
  return Vertex::normalize(twists);
}

IntTuple to_multidegree(const MultidegreeFrame& frame, const Vertex& v) {
  frame.validate();
  if (static_cast<std::size_t>(v.n()) + 1 != frame.base.size()) throw InvalidInput("vertex does not match frame");
  IntTuple md = frame.base;
  for (std::size_t i = 0; i < frame.generators.size(); ++i)
    for (std::size_t j = 0; j < md.size(); ++j) md[j] += v[i] * frame.generators[i][j];
  return md;
}

IntTuple parse_int_tuple(const std::string& text) {
  IntTuple out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer tuple: '" + text + "'");
    }
    if (used != item.size()) throw InvalidInput("not an integer tuple: '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) throw InvalidInput("empty integer tuple");
  return out;
}

}  // namespace linkednets
