#pragma once

// Combinatorics of the canonical Z^n-quiver.
//
// Vertices are normalized twist tuples (l_0, ..., l_n): nonnegative integers
// with minimum 0. The arrow of type i leaving u ends at normalize(u + e_i).
// Every vertex has exactly one arrow of each type leaving it and one
// arriving at it.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace linkednets {

using Int = std::int64_t;
using IntTuple = std::vector<Int>;

/// Largest supported n; type sets are stored as bit masks.
inline constexpr int kMaxQuiverN = 30;

struct ArrowType {
  int index = 0;
  auto operator<=>(const ArrowType&) const = default;
};

/// A set of arrow types, stored as a bit mask over {0, ..., n}.
class TypeSet {
 public:
  constexpr TypeSet() = default;
  constexpr explicit TypeSet(std::uint32_t mask) : mask_(mask) {}
  TypeSet(std::initializer_list<int> types);

  static TypeSet full(int n) { return TypeSet((std::uint32_t{1} << (n + 1)) - 1); }
  static TypeSet from_elements(std::span<const int> types);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  bool contains(int type) const { return (mask_ >> type) & 1u; }
  bool is_subset_of(TypeSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool is_proper(int n) const { return *this != full(n); }
  int size() const;
  std::vector<int> elements() const;
  TypeSet complement(int n) const { return TypeSet(full(n).mask_ & ~mask_); }

  friend TypeSet operator|(TypeSet a, TypeSet b) { return TypeSet(a.mask_ | b.mask_); }
  friend TypeSet operator&(TypeSet a, TypeSet b) { return TypeSet(a.mask_ & b.mask_); }
  friend TypeSet operator-(TypeSet a, TypeSet b) { return TypeSet(a.mask_ & ~b.mask_); }
  auto operator<=>(const TypeSet&) const = default;

  std::string to_string() const;

 private:
  std::uint32_t mask_ = 0;
};

/// A vertex of the canonical quiver in normalized twist coordinates.
class Vertex {
 public:
  Vertex() = default;

  /// Subtracts the minimum entry from every entry.
  static Vertex normalize(std::span<const Int> raw);
  static Vertex normalize(std::initializer_list<Int> raw) {
    return normalize(std::span<const Int>(raw.begin(), raw.size()));
  }
  /// Accepts only tuples that are already normalized.
  static Vertex from_twists(IntTuple twists);
  static Vertex origin(int n) { return Vertex(IntTuple(static_cast<std::size_t>(n) + 1, 0)); }

  int n() const { return static_cast<int>(twists_.size()) - 1; }
  const IntTuple& twists() const { return twists_; }
  Int operator[](std::size_t i) const { return twists_[i]; }

  auto operator<=>(const Vertex&) const = default;
  std::string to_string() const;

 private:
  explicit Vertex(IntTuple twists) : twists_(std::move(twists)) {}
  IntTuple twists_;
};

/// Number of arrows of each type along a path.
class PathTypeVector {
 public:
  PathTypeVector() = default;
  explicit PathTypeVector(IntTuple counts);

  const IntTuple& counts() const { return counts_; }
  Int operator[](std::size_t i) const { return counts_[i]; }
  int n() const { return static_cast<int>(counts_.size()) - 1; }

  bool is_admissible() const;
  bool is_simple() const;
  bool is_minimal_circuit() const;
  bool is_zero() const;
  Int length() const;
  /// Essential type: the set of types occurring at least once.
  TypeSet support() const;

  auto operator<=>(const PathTypeVector&) const = default;
  std::string to_string() const;

 private:
  IntTuple counts_;
};

inline std::ostream& operator<<(std::ostream& os, const TypeSet& s) { return os << s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Vertex& v) { return os << v.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const PathTypeVector& t) { return os << t.to_string(); }

Vertex normalize(std::span<const Int> raw);
Vertex arrow_target(const Vertex& v, ArrowType t);
/// Source of the arrow of type t arriving at v.
Vertex arrow_source(const Vertex& v, ArrowType t);

/// Type of the admissible paths from u to w.
PathTypeVector delta(const Vertex& u, const Vertex& w);
Int distance(const Vertex& u, const Vertex& w);
bool is_neighbor(const Vertex& u, const Vertex& w);

/// End vertex of the simple paths leaving v with essential type I.
Vertex move_by(const Vertex& v, TypeSet types);
bool cone_contains(const Vertex& v, TypeSet types, const Vertex& w);

/// Arrow sequence of the representative path of the given type: types
/// visited in ascending index order, each repeated by its multiplicity.
std::vector<std::pair<Vertex, ArrowType>> canonical_path(const Vertex& v, const PathTypeVector& t);

/// P(H). The result is sorted.
std::vector<Vertex> hull(std::span<const Vertex> vertices);
/// Membership predicate of the hull, independent of any enumeration bound.
bool in_hull(std::span<const Vertex> vertices, const Vertex& candidate);

/// Vertices reachable from some vertex of `centers` by a path of length at
/// most `radius`. Sorted.
std::vector<Vertex> forward_ball(std::span<const Vertex> centers, Int radius);

bool is_polygon(std::span<const Vertex> vertices);

struct OrientedPolygon {
  std::vector<Vertex> ordering;
  std::vector<TypeSet> partition;
};

/// Unique cyclic ordering v_1 = start, ..., v_m with v_{i+1} = I_i . v_i and
/// I_1, ..., I_m an ordered partition of the types.
OrientedPolygon orient_polygon(std::span<const Vertex> polygon, const Vertex& start);

/// Polygon traced by an ordered partition of the types from `start`.
std::vector<Vertex> polygon_from_partition(const Vertex& start, std::span<const TypeSet> partition);

/// Affine lattice coordinates: multidegree = base + sum_i l_i generators[i].
struct MultidegreeFrame {
  IntTuple base;
  std::vector<IntTuple> generators;

  /// Throws InvalidInput unless the generators sum to zero, each sums to
  /// zero, and every proper subset is linearly independent.
  void validate() const;
  int n() const { return static_cast<int>(generators.size()) - 1; }
  bool operator==(const MultidegreeFrame&) const = default;
};

Vertex to_twists(const MultidegreeFrame& frame, std::span<const Int> multidegree);
IntTuple to_multidegree(const MultidegreeFrame& frame, const Vertex& v);

/// Parses "0,1,2" into a tuple.
IntTuple parse_int_tuple(const std::string& text);

}  // namespace linkednets
