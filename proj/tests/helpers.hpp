#pragma once

// Shared builders for generated specs.

#include <random>
#include <set>

#include "linkednets/gen.hpp"

namespace testing_helpers {

using namespace linkednets;

/// k distinct seeds with twists in [0, spread].
inline std::vector<Vertex> random_seeds(std::mt19937_64& rng, int n, std::size_t k, Int spread = 2) {
  std::set<Vertex> seeds;
  while (seeds.size() < k) {
    IntTuple t(static_cast<std::size_t>(n) + 1);
    for (auto& x : t) x = static_cast<Int>(rng() % static_cast<std::uint64_t>(spread + 1));
    seeds.insert(normalize(t));
  }
  return {seeds.begin(), seeds.end()};
}

inline GenSpec make_spec(std::uint64_t seed, int n, std::size_t k, bool conjugate) {
  std::mt19937_64 rng(seed);
  GenSpec spec;
  spec.n = n;
  spec.window_radius = n + 1;
  spec.seeds = random_seeds(rng, n, k);
  spec.seed_rng = rng();
  spec.conjugate = conjugate;
  return spec;
}

/// Polygon from a random ordered partition of the types with `blocks` parts.
inline std::vector<Vertex> random_polygon(std::mt19937_64& rng, int n, std::size_t blocks) {
  std::vector<int> types(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < types.size(); ++i) types[i] = static_cast<int>(i);
  std::shuffle(types.begin(), types.end(), rng);
  std::vector<std::size_t> cuts;
  for (std::size_t i = 1; i < types.size(); ++i) cuts.push_back(i);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(blocks - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(types.size());
  std::vector<TypeSet> partition;
  std::size_t begin = 0;
  for (std::size_t end : cuts) {
    partition.push_back(TypeSet::from_elements(std::span<const int>(types.data() + begin, end - begin)));
    begin = end;
  }
  IntTuple t(static_cast<std::size_t>(n) + 1);
  for (auto& x : t) x = static_cast<Int>(rng() % 3);
  return polygon_from_partition(normalize(t), partition);
}

}  // namespace testing_helpers
