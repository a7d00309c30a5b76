#pragma once

// Finite presentations of linked nets of rational vector spaces.
//
// A presentation lives on a finite window of the canonical quiver. Every
// verdict produced here is relative to that window: conditions that need an
// arrow outside the window are not silently assumed, they are listed in the
// report's coverage section instead.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linkednets/exactla.hpp"
#include "linkednets/quiver.hpp"

namespace linkednets {

struct ArrowRef {
  Vertex source;
  ArrowType type;

  Vertex target() const { return arrow_target(source, type); }
  std::string to_string() const;
  auto operator<=>(const ArrowRef&) const = default;
};

class NetPresentation {
 public:
  NetPresentation() = default;
  /// Sorts the window (dims follow) and the generators. Throws InvalidInput
  /// only when window and dims differ in length or the window has
  /// duplicates; everything else is left for validate().
  NetPresentation(int n, std::vector<Vertex> window, std::vector<std::size_t> dims,
                  std::map<ArrowRef, RMatrix> arrows, std::vector<Vertex> generators);

  int n() const { return n_; }
  const std::vector<Vertex>& window() const { return window_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::map<ArrowRef, RMatrix>& arrows() const { return arrows_; }
  const std::vector<Vertex>& generators() const { return generators_; }

  std::optional<std::size_t> index_of(const Vertex& v) const;
  bool in_window(const Vertex& v) const { return index_of(v).has_value(); }
  /// Throws InvalidInput for vertices outside the window.
  std::size_t dim(const Vertex& v) const;
  const RMatrix* arrow(const Vertex& source, ArrowType type) const;

  // Display and commentary metadata.
  const std::map<Vertex, IntTuple>& labels() const { return labels_; }
  const std::optional<MultidegreeFrame>& frame() const { return frame_; }
  /// Arrows whose source lies outside the window but whose map is known to
  /// vanish; they count as zero maps when summing arriving images.
  const std::set<ArrowRef>& boundary_zero_arrows() const { return boundary_zero_; }

  void set_generators(std::vector<Vertex> generators);
  void set_labels(std::map<Vertex, IntTuple> labels) { labels_ = std::move(labels); }
  void set_frame(std::optional<MultidegreeFrame> frame) { frame_ = std::move(frame); }
  void set_boundary_zero_arrows(std::set<ArrowRef> arrows) { boundary_zero_ = std::move(arrows); }
  void set_arrow(const ArrowRef& ref, RMatrix m) { arrows_[ref] = std::move(m); }

  /// Largest dimension over the window (0 for an empty window).
  std::size_t max_dim() const;

  bool operator==(const NetPresentation& other) const;

 private:
  int n_ = 1;
  std::vector<Vertex> window_;
  std::vector<std::size_t> dims_;
  std::map<Vertex, std::size_t> index_;
  std::map<ArrowRef, RMatrix> arrows_;
  std::vector<Vertex> generators_;
  std::map<Vertex, IntTuple> labels_;
  std::optional<MultidegreeFrame> frame_;
  std::set<ArrowRef> boundary_zero_;
};

// ---------------------------------------------------------------------------
// Reports

struct Witness {
  std::string condition;
  std::vector<Vertex> vertices;
  std::vector<TypeSet> type_sets;
  std::vector<RMatrix> matrices;
  std::vector<RVector> vectors;
  std::string detail;
};

struct CoverageGap {
  std::string condition;
  std::vector<Vertex> vertices;
  std::vector<TypeSet> type_sets;
  std::string detail;
};

struct CheckReport {
  std::string check;
  bool passed = true;
  std::vector<Witness> witnesses;
  std::vector<CoverageGap> coverage;
  /// Filled by check_pure_and_generated.
  std::vector<Vertex> minimal_generators;

  void fail(Witness w) {
    passed = false;
    witnesses.push_back(std::move(w));
  }
  void skip(CoverageGap g) { coverage.push_back(std::move(g)); }
};

// ---------------------------------------------------------------------------
// Path maps

/// Memoizing evaluator of path maps over a fixed presentation.
///
/// A path map u -> w composes arrow matrices along some admissible path of
/// type delta(u, w) that stays inside the window. Orderings are searched by
/// peeling off the last arrow in ascending type order, so the result is
/// deterministic.
class PathEvaluator {
 public:
  explicit PathEvaluator(const NetPresentation& net) : net_(net) {}

  const NetPresentation& net() const { return net_; }

  /// nullopt when no in-window path of the right type exists.
  const std::optional<RMatrix>& try_path_map(const Vertex& u, const Vertex& w);
  /// Throws WindowInsufficient listing the missing arrows.
  const RMatrix& path_map(const Vertex& u, const Vertex& w);

  std::optional<RMatrix> try_simple_map(const Vertex& v, TypeSet types);
  RMatrix simple_map(const Vertex& v, TypeSet types);
  /// Kernel of the simple map, cached.
  const std::optional<Subspace>& try_simple_kernel(const Vertex& v, TypeSet types);

 private:
  const NetPresentation& net_;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<RMatrix>> paths_;
  std::map<std::pair<std::size_t, std::uint32_t>, std::optional<Subspace>> kernels_;
};

/// Arrows missing from the window along the ascending-order path u -> w.
std::vector<std::string> missing_arrows(const NetPresentation& p, const Vertex& u, const Vertex& w);

RMatrix path_map(const NetPresentation& p, const Vertex& u, const Vertex& w);
RMatrix simple_map(const NetPresentation& p, const Vertex& v, TypeSet types);

// ---------------------------------------------------------------------------
// Verifiers

/// Structural checks only: shapes, window, generators, metadata.
CheckReport validate(const NetPresentation& p);
CheckReport check_weakly_linked(const NetPresentation& p);
CheckReport check_linked(const NetPresentation& p);
CheckReport check_exact(const NetPresentation& p);
/// Constant dimension plus 1-generation by the declared generators; the
/// report carries the minimal generating subset.
CheckReport check_pure_and_generated(const NetPresentation& p);

/// Re-evaluates the condition named by a witness; true when the violation
/// is reproduced.
bool recheck_witness(const NetPresentation& p, const Witness& w);

struct WindowAdequacy {
  bool adequate = true;
  std::vector<Vertex> missing;
};

/// Compares the window with hull(generators) enlarged by the forward ball of
/// radius n + 1.
WindowAdequacy window_adequacy(const NetPresentation& p);
std::vector<Vertex> required_window(int n, const std::vector<Vertex>& generators);

// ---------------------------------------------------------------------------
// Constructions

/// Subspace family on the window of a presentation together with the
/// presentation it induces in the echelon bases of its spaces.
struct Subnet {
  std::vector<Subspace> spaces;  // parallel to the parent's window
  NetPresentation net;
};

struct Seed {
  Vertex vertex;
  Subspace space;
};

/// Smallest subnet containing the seeds: the space at v is the sum of the
/// pushforwards of the seed spaces along in-window path maps.
Subnet subnet_generated(const NetPresentation& p, const std::vector<Seed>& seeds);

/// Wraps a family of subspaces; throws PreconditionFailed naming the first
/// arrow that does not carry its source space into its target space.
Subnet subnet_from_spaces(const NetPresentation& p, std::vector<Subspace> spaces);

/// Quotient on the deterministic complements of the subnet spaces.
NetPresentation quotient(const NetPresentation& p, const Subnet& w);

NetPresentation direct_sum(const std::vector<NetPresentation>& parts);

/// Replaces each arrow matrix m by basis(target) * m * basis(source)^-1.
/// Vertices missing from `basis` keep the identity.
NetPresentation conjugate(const NetPresentation& p, const std::map<Vertex, RMatrix>& basis);

}  // namespace linkednets
