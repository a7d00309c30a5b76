#pragma once

// Seeded construction of simple and semisimple linked nets, and the bundled
// non-semisimple example.

#include <cstdint>
#include <utility>
#include <vector>

#include "linkednets/net.hpp"

namespace linkednets {

struct GenSpec {
  int n = 1;
  Int window_radius = 2;  // at least n + 1
  std::vector<Vertex> seeds;
  std::uint64_t seed_rng = 0;
  bool conjugate = false;

  /// Throws InvalidInput.
  void validate() const;
  bool operator==(const GenSpec&) const = default;
};

/// Scalars used for nonzero arrow maps.
const std::vector<Rational>& scalar_pool();

/// Dimension-1 net faithfully generated by `seed`. Each vertex u draws a pool
/// scalar f(u); the arrow (u, i) carries f(target) / f(u) when delta(seed, u)
/// vanishes at some index other than i, and zero otherwise.
NetPresentation random_simple_net(int n, const Vertex& seed, const std::vector<Vertex>& window,
                                  std::uint64_t rng_seed);

/// Window used for a spec: forward ball of the given radius around hull(seeds).
std::vector<Vertex> spec_window(const GenSpec& spec);

/// Direct sum of simple nets, one per seed, optionally conjugated by random
/// invertible matrices. Returns the net and the number of summands.
std::pair<NetPresentation, std::size_t> random_semisimple_net(const GenSpec& spec);

/// Random invertible matrix with entries from a small pool.
RMatrix random_invertible(std::size_t d, std::uint64_t rng_seed);

/// Seven-vertex exact linked net with dims 2 that fails the intersection
/// property at its center.
NetPresentation fixture_nonsemisimple();

}  // namespace linkednets
