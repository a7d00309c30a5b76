#pragma once

// Intersection property, primitive vertices and the semisimple decomposition.

#include <map>
#include <optional>
#include <vector>

#include "linkednets/errors.hpp"
#include "linkednets/net.hpp"

namespace linkednets {

struct KernelProfile {
  Vertex vertex;
  std::map<TypeSet, Subspace> kernels;  // every proper subset of T

  const Subspace& at(TypeSet types) const;
};

/// Throws WindowInsufficient when a simple map leaves the window.
KernelProfile kernel_profile(const NetPresentation& p, const Vertex& v);
std::optional<KernelProfile> try_kernel_profile(PathEvaluator& eval, const Vertex& v);

struct ViolationCertificate {
  Vertex vertex;
  TypeSet i0;
  std::vector<TypeSet> summands;
  Subspace lhs;  // (sum of kernels(I_l)) meet kernels(I0)
  Subspace rhs;  // sum of kernels(I_l meet I0)
};

struct IntersectionOptions {
  /// The family search grows doubly exponentially; n > 3 must be requested.
  bool allow_large_n = false;
};

/// Order in which type sets are scanned: proper subsets by descending mask.
std::vector<TypeSet> scan_order(int n);

/// First violation in scan order: I0 first, then families of distinct
/// nonempty proper subsets by size, then lexicographically by scan position.
std::optional<ViolationCertificate> intersection_property_at(const KernelProfile& profile, int n,
                                                             const IntersectionOptions& options = {});
std::optional<ViolationCertificate> intersection_property_at(const NetPresentation& p, const Vertex& v,
                                                             const IntersectionOptions& options = {});

/// Recomputes both sides from the presentation; true when they match the
/// stored subspaces and differ from each other.
bool recheck_certificate(const NetPresentation& p, const ViolationCertificate& c);

enum class IntersectionMode { GeneratorsOnly, WholeWindow };

struct IntersectionReport {
  std::optional<ViolationCertificate> violation;
  std::vector<Vertex> checked;
  std::vector<Vertex> skipped;  // profile not computable in the window

  bool passed() const { return !violation; }
};

/// Generators-only mode first runs check_pure_and_generated and throws
/// PreconditionFailed if it does not pass.
IntersectionReport check_intersection_property(const NetPresentation& p, IntersectionMode mode,
                                               const IntersectionOptions& options = {});

/// Sum of the images of the arrows arriving at v. Arrows from outside the
/// window count as zero only when declared as boundary zero arrows.
Subspace arriving_images(const NetPresentation& p, const Vertex& v);

/// Vertices of H (or of the whole window) whose space is not the sum of the
/// arriving images. The window scan skips vertices with unknown arriving arrows.
std::vector<Vertex> primitive_vertices(const NetPresentation& p, bool whole_window = false);

struct SimpleSummand {
  Vertex generator_vertex;
  RVector generator_vector;
  std::vector<Subspace> spaces;  // parallel to the window, dimension 1 each
};

/// Uses the first standard unit vector outside the arriving images.
SimpleSummand extract_simple_subnet(const NetPresentation& p, const Vertex& v);

struct DecomposeOptions {
  bool whole_window_fallback = false;
  IntersectionOptions intersection;
};

struct DecompositionResult {
  std::vector<SimpleSummand> summands;
  std::optional<ViolationCertificate> violation;
  bool window_adequate = true;

  bool semisimple() const { return !violation; }
};

/// Carries the failing reports.
class DecompositionPreconditions : public PreconditionFailed {
 public:
  DecompositionPreconditions(const std::string& what, std::vector<CheckReport> reports)
      : PreconditionFailed(what), reports_(std::move(reports)) {}
  const std::vector<CheckReport>& reports() const noexcept { return reports_; }

 private:
  std::vector<CheckReport> reports_;
};

/// Runs validate and the four axiom checkers; all must pass.
std::vector<CheckReport> axiom_reports(const NetPresentation& p);

DecompositionResult decompose(const NetPresentation& p, const DecomposeOptions& options = {});

/// A window vertex that faithfully generates a net of dimension 1.
std::optional<Vertex> is_simple(const NetPresentation& p);
/// Every arrow map is zero or injective.
bool is_binary(const NetPresentation& p);
/// Binary, and for each in-window neighbor pair one connecting map is an
/// isomorphism.
bool is_binary_exact(const NetPresentation& p);

}  // namespace linkednets
