#pragma once

// Brute-force reference implementations used to freeze expected values.
// They share no code with the library beyond the Vertex type.

#include <optional>
#include <vector>

#include "linkednets/quiver.hpp"

namespace oracle {

using linkednets::Int;
using linkednets::IntTuple;
using linkednets::Vertex;

inline IntTuple norm(IntTuple t) {
  Int m = t[0];
  for (Int x : t) m = std::min(m, x);
  for (Int& x : t) x -= m;
  return t;
}

/// Walks every counter tuple in [0, bound]^len.
template <class F>
void for_each_tuple(std::size_t len, Int bound, F&& f) {
  IntTuple t(len, 0);
  while (true) {
    f(t);
    std::size_t i = 0;
    while (i < len && t[i] == bound) t[i++] = 0;
    if (i == len) return;
    ++t[i];
  }
}

/// Admissible type vector carrying u to w, found by search.
inline std::optional<IntTuple> search_delta(const Vertex& u, const Vertex& w, Int bound = 8) {
  std::optional<IntTuple> found;
  for_each_tuple(u.twists().size(), bound, [&](const IntTuple& t) {
    bool admissible = false;
    for (Int x : t) admissible |= x == 0;
    if (!admissible || found) return;
    IntTuple s = u.twists();
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += t[i];
    if (norm(s) == w.twists()) found = t;
  });
  return found;
}

/// Hull membership from the definition, with delta found by search.
inline bool in_hull(const std::vector<Vertex>& h, const Vertex& v) {
  for (std::size_t a = 0; a < v.twists().size(); ++a) {
    bool ok = false;
    for (const auto& z : h) {
      auto t = search_delta(z, v);
      if (t && (*t)[a] == 0) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

/// Hull by scanning normalized twists in an enlarged box.
inline std::vector<Vertex> hull(const std::vector<Vertex>& h, Int box) {
  std::vector<Vertex> out;
  for_each_tuple(h.front().twists().size(), box, [&](const IntTuple& t) {
    if (norm(t) != t) return;
    Vertex v = Vertex::from_twists(t);
    if (in_hull(h, v)) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
