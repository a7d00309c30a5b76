#include "linkednets/gen.hpp"

#include <random>

#include "linkednets/errors.hpp"

namespace linkednets {

void GenSpec::validate() const {
  if (n < 1 || n > kMaxQuiverN) throw InvalidInput("gen: n out of range");
  if (window_radius < n + 1) throw InvalidInput("gen: window radius must be at least n + 1");
  if (seeds.empty()) throw InvalidInput("gen: at least one seed is required");
  for (const auto& s : seeds) {
    if (s.n() != n) throw InvalidInput("gen: seed " + s.to_string() + " does not match n");
  }
}

const std::vector<Rational>& scalar_pool() {
  static const std::vector<Rational> pool{1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 3, Rational(1, 3)};
  return pool;
}

NetPresentation random_simple_net(int n, const Vertex& seed, const std::vector<Vertex>& window,
                                  std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  const auto& pool = scalar_pool();
  std::set<Vertex> members(window.begin(), window.end());
  if (!members.contains(seed)) throw InvalidInput("gen: seed " + seed.to_string() + " is outside the window");

  std::map<Vertex, Rational> potential;
  for (const auto& u : members) potential.emplace(u, pool[rng() % pool.size()]);

  std::map<ArrowRef, RMatrix> arrows;
  for (const auto& u : members) {
    PathTypeVector t = delta(seed, u);
    for (int i = 0; i <= n; ++i) {
      Vertex target = arrow_target(u, ArrowType{i});
      if (!members.contains(target)) continue;
      bool live = false;
      for (int j = 0; j <= n && !live; ++j) live = j != i && t[static_cast<std::size_t>(j)] == 0;
      RMatrix m(1, 1);
      if (live) m(0, 0) = potential.at(target) / potential.at(u);
      arrows.emplace(ArrowRef{u, ArrowType{i}}, std::move(m));
    }
  }
  return NetPresentation(n, std::vector<Vertex>(members.begin(), members.end()),
                         std::vector<std::size_t>(members.size(), 1), std::move(arrows), {seed});
}

std::vector<Vertex> spec_window(const GenSpec& spec) {
  spec.validate();
  return forward_ball(hull(spec.seeds), spec.window_radius);
}

RMatrix random_invertible(std::size_t d, std::uint64_t rng_seed) {
  static const std::vector<Rational> entries{0, 1, -1, 2, -2, Rational(1, 2), 3, Rational(1, 3)};
  std::mt19937_64 rng(rng_seed);
  while (true) {
    RMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = entries[rng() % entries.size()];
    if (rank(m) == d) return m;
  }
}

std::pair<NetPresentation, std::size_t> random_semisimple_net(const GenSpec& spec) {
  auto window = spec_window(spec);
  std::mt19937_64 rng(spec.seed_rng);
  std::vector<NetPresentation> parts;
  for (const auto& s : spec.seeds) parts.push_back(random_simple_net(spec.n, s, window, rng()));
  NetPresentation net = direct_sum(parts);
  net.set_generators(hull(spec.seeds));
  if (spec.conjugate) {
    std::map<Vertex, RMatrix> basis;
    for (const auto& v : net.window()) basis.emplace(v, random_invertible(net.dim(v), rng()));
    net = conjugate(net, basis);
  }
  return {std::move(net), spec.seeds.size()};
}

NetPresentation fixture_nonsemisimple() {
  const Vertex p0 = Vertex::from_twists({0, 0, 0});
  const Vertex p1 = Vertex::from_twists({1, 0, 0});
  const Vertex p5 = Vertex::from_twists({0, 1, 0});
  const Vertex p3 = Vertex::from_twists({0, 0, 1});
  const Vertex p2 = Vertex::from_twists({1, 0, 1});
  const Vertex p4 = Vertex::from_twists({0, 1, 1});
  const Vertex p6 = Vertex::from_twists({1, 1, 0});
  const RMatrix id = RMatrix::identity(2);

  std::map<ArrowRef, RMatrix> arrows{
      {{p0, {0}}, id},
      {{p0, {1}}, id},
      {{p0, {2}}, id},
      {{p2, {1}}, RMatrix{{0, 1}, {0, 1}}},
      {{p4, {0}}, RMatrix{{1, 0}, {0, 0}}},
      {{p6, {2}}, RMatrix{{0, 0}, {0, 1}}},
      {{p1, {2}}, RMatrix{{1, -1}, {0, 0}}},
      {{p1, {1}}, RMatrix{{1, 0}, {0, 0}}},
      {{p5, {0}}, RMatrix{{1, 0}, {0, 0}}},
      {{p5, {2}}, RMatrix{{0, 0}, {0, 1}}},
      {{p3, {1}}, RMatrix{{0, 0}, {0, 1}}},
      {{p3, {0}}, RMatrix{{1, -1}, {0, 0}}},
  };
  std::vector<Vertex> window{p0, p1, p5, p3, p2, p4, p6};
  NetPresentation net(2, window, std::vector<std::size_t>(window.size(), 2), std::move(arrows), window);

  MultidegreeFrame frame{{2, 2, 2}, {{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}};
  std::map<Vertex, IntTuple> labels;
  for (const auto& v : window) labels.emplace(v, to_multidegree(frame, v));
  net.set_labels(std::move(labels));
  net.set_frame(frame);

  // Outer triangle: the maps into the hexagon vanish.
  net.set_boundary_zero_arrows({
      ArrowRef{Vertex::from_twists({0, 2, 2}), {0}},
      ArrowRef{Vertex::from_twists({2, 2, 0}), {2}},
      ArrowRef{Vertex::from_twists({2, 0, 2}), {1}},
  });
  return net;
}

}  // namespace linkednets
