#include "linkednets/analysis.hpp"

#include <algorithm>

namespace linkednets {

const Subspace& KernelProfile::at(TypeSet types) const {
  auto it = kernels.find(types);
  if (it == kernels.end()) throw InvalidInput("kernel profile has no entry for " + types.to_string());
  return it->second;
}

std::optional<KernelProfile> try_kernel_profile(PathEvaluator& eval, const Vertex& v) {
  const NetPresentation& p = eval.net();
  if (!p.in_window(v)) return std::nullopt;
  KernelProfile out{v, {}};
  std::uint32_t full = TypeSet::full(p.n()).mask();
  for (std::uint32_t m = 0; m < full; ++m) {
    const auto& k = eval.try_simple_kernel(v, TypeSet(m));
    if (!k) return std::nullopt;
    out.kernels.emplace(TypeSet(m), *k);
  }
  return out;
}

KernelProfile kernel_profile(const NetPresentation& p, const Vertex& v) {
  if (!p.in_window(v)) throw WindowInsufficient("vertex " + v.to_string() + " is outside the window", {v.to_string()});
  PathEvaluator eval(p);
  std::uint32_t full = TypeSet::full(p.n()).mask();
  KernelProfile out{v, {}};
  for (std::uint32_t m = 0; m < full; ++m) out.kernels.emplace(TypeSet(m), kernel(eval.simple_map(v, TypeSet(m))));
  return out;
}

std::vector<TypeSet> scan_order(int n) {
  std::vector<TypeSet> out;
  std::uint32_t full = TypeSet::full(n).mask();
  for (std::uint32_t m = full; m-- > 0;) out.emplace_back(m);
  return out;
}

namespace {

struct Pair {
  const Subspace* k;       // kernels(I)
  const Subspace* k_meet;  // kernels(I meet I0)
};

bool violates(const KernelProfile& prof, TypeSet i0, const std::vector<TypeSet>& family, Subspace* lhs,
              Subspace* rhs) {
  const Subspace& k0 = prof.at(i0);
  Subspace s = Subspace::zero(k0.ambient_dim());
  Subspace r = s;
  for (TypeSet i : family) {
    s = sum(s, prof.at(i));
    r = sum(r, prof.at(i & i0));
  }
  Subspace l = intersect(s, k0);
  if (l == r) return false;
  *lhs = std::move(l);
  *rhs = std::move(r);
  return true;
}

// Whether any family of the given pairs breaks the identity, by closing the
// set of reachable (sum, sum) states.
bool any_violation(const std::vector<Pair>& pairs, const Subspace& k0) {
  std::vector<std::pair<Subspace, Subspace>> states{{Subspace::zero(k0.ambient_dim()), Subspace::zero(k0.ambient_dim())}};
  for (const auto& pr : pairs) {
    std::size_t count = states.size();
    for (std::size_t s = 0; s < count; ++s) {
      std::pair<Subspace, Subspace> next{sum(states[s].first, *pr.k), sum(states[s].second, *pr.k_meet)};
      if (std::find(states.begin(), states.end(), next) == states.end()) states.push_back(std::move(next));
    }
  }
  return std::any_of(states.begin(), states.end(),
                     [&](const auto& st) { return intersect(st.first, k0) != st.second; });
}

}  // namespace

std::optional<ViolationCertificate> intersection_property_at(const KernelProfile& profile, int n,
                                                             const IntersectionOptions& options) {
  if (n > 3 && !options.allow_large_n) {
    throw InvalidInput("intersection property for n > 3 must be requested explicitly");
  }
  const auto order = scan_order(n);
  for (TypeSet i0 : order) {
    if (i0.empty()) continue;
    std::vector<TypeSet> candidates;
    std::vector<Pair> pairs;
    for (TypeSet i : order) {
      if (i.empty()) continue;
      const Subspace& k = profile.at(i);
      const Subspace& km = profile.at(i & i0);
      if (k.is_zero() && km.is_zero()) continue;
      candidates.push_back(i);
      bool seen = std::any_of(pairs.begin(), pairs.end(), [&](const Pair& q) { return *q.k == k && *q.k_meet == km; });
      if (!seen) pairs.push_back({&k, &km});
    }
    if (!any_violation(pairs, profile.at(i0))) continue;

    // Some family fails; find the first one by size, then lexicographically.
    for (std::size_t size = 1; size <= candidates.size(); ++size) {
      std::vector<std::size_t> pick(size);
      for (std::size_t j = 0; j < size; ++j) pick[j] = j;
      while (true) {
        std::vector<TypeSet> family;
        for (std::size_t j : pick) family.push_back(candidates[j]);
        Subspace lhs, rhs;
        if (violates(profile, i0, family, &lhs, &rhs)) {
          return ViolationCertificate{profile.vertex, i0, std::move(family), std::move(lhs), std::move(rhs)};
        }
        std::size_t j = size;
        while (j > 0 && pick[j - 1] == candidates.size() - size + j - 1) --j;
        if (j == 0) break;
        ++pick[j - 1];
        for (std::size_t k = j; k < size; ++k) pick[k] = pick[k - 1] + 1;
      }
    }
    throw InconsistentPresentation("intersection property: reachable violation without a witnessing family");
  }
  return std::nullopt;
}

std::optional<ViolationCertificate> intersection_property_at(const NetPresentation& p, const Vertex& v,
                                                             const IntersectionOptions& options) {
  return intersection_property_at(kernel_profile(p, v), p.n(), options);
}

bool recheck_certificate(const NetPresentation& p, const ViolationCertificate& c) {
  KernelProfile prof = kernel_profile(p, c.vertex);
  Subspace lhs, rhs;
  if (!violates(prof, c.i0, c.summands, &lhs, &rhs)) return false;
  return lhs == c.lhs && rhs == c.rhs;
}

IntersectionReport check_intersection_property(const NetPresentation& p, IntersectionMode mode,
                                               const IntersectionOptions& options) {
  IntersectionReport out;
  std::vector<Vertex> targets;
  if (mode == IntersectionMode::GeneratorsOnly) {
    if (!check_pure_and_generated(p).passed) {
      throw PreconditionFailed("generators-only mode needs a pure net 1-generated by its generators");
    }
    targets = p.generators();
  } else {
    targets = p.window();
  }
  PathEvaluator eval(p);
  for (const auto& v : targets) {
    auto prof = try_kernel_profile(eval, v);
    if (!prof) {
      out.skipped.push_back(v);
      continue;
    }
    out.checked.push_back(v);
    out.violation = intersection_property_at(*prof, p.n(), options);
    if (out.violation) return out;
  }
  if (mode == IntersectionMode::GeneratorsOnly && !out.skipped.empty()) {
    std::vector<std::string> missing;
    for (const auto& v : out.skipped) missing.push_back("kernel profile at " + v.to_string());
    throw WindowInsufficient("simple maps at some generators leave the window", missing);
  }
  return out;
}

Subspace arriving_images(const NetPresentation& p, const Vertex& v) {
  Subspace acc = Subspace::zero(p.dim(v));
  for (int i = 0; i <= p.n(); ++i) {
    Vertex src = arrow_source(v, ArrowType{i});
    ArrowRef ref{src, ArrowType{i}};
    if (const RMatrix* m = p.arrow(src, ArrowType{i}); m && p.in_window(src)) {
      acc = sum(acc, image(*m));
    } else if (!p.boundary_zero_arrows().contains(ref)) {
      throw WindowInsufficient("arrow arriving at " + v.to_string() + " is unknown", {ref.to_string()});
    }
  }
  return acc;
}

std::vector<Vertex> primitive_vertices(const NetPresentation& p, bool whole_window) {
  std::vector<Vertex> out;
  for (const auto& v : whole_window ? p.window() : p.generators()) {
    if (!p.in_window(v) || p.dim(v) == 0) continue;
    if (whole_window) {
      // Boundary vertices whose arriving sources are unknown are skipped.
      try {
        if (!arriving_images(p, v).is_full()) out.push_back(v);
      } catch (const WindowInsufficient&) {
      }
      continue;
    }
    if (!arriving_images(p, v).is_full()) out.push_back(v);
  }
  return out;
}

SimpleSummand extract_simple_subnet(const NetPresentation& p, const Vertex& v) {
  Subspace arriving = arriving_images(p, v);
  if (arriving.is_full()) throw PreconditionFailed("vertex " + v.to_string() + " is not primitive");
  const std::size_t d = p.dim(v);
  RVector x;
  for (std::size_t j = 0; j < d; ++j) {
    RVector e(d, 0);
    e[j] = 1;
    if (!arriving.contains_vector(e)) {
      x = std::move(e);
      break;
    }
  }
  Subnet sub = subnet_generated(p, {Seed{v, Subspace::span(d, {x})}});
  for (std::size_t i = 0; i < sub.spaces.size(); ++i) {
    if (sub.spaces[i].dim() != 1) {
      throw InconsistentPresentation("generator at " + v.to_string() + " does not reach " +
                                     p.window()[i].to_string() + " faithfully");
    }
  }
  return SimpleSummand{v, std::move(x), std::move(sub.spaces)};
}

std::vector<CheckReport> axiom_reports(const NetPresentation& p) {
  std::vector<CheckReport> out{validate(p)};
  if (!out.front().passed) return out;
  out.push_back(check_weakly_linked(p));
  out.push_back(check_linked(p));
  out.push_back(check_exact(p));
  out.push_back(check_pure_and_generated(p));
  return out;
}

DecompositionResult decompose(const NetPresentation& p, const DecomposeOptions& options) {
  auto reports = axiom_reports(p);
  if (std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.passed; })) {
    throw DecompositionPreconditions("decompose needs a valid pure 1-generated exact linked net", std::move(reports));
  }
  DecompositionResult out;
  out.violation = check_intersection_property(p, IntersectionMode::GeneratorsOnly, options.intersection).violation;
  if (out.violation) return out;
  out.window_adequate = window_adequacy(p).adequate;

  const std::size_t d = p.max_dim();
  const auto& window = p.window();
  std::vector<Subspace> taken;
  for (std::size_t dv : p.dims()) taken.push_back(Subspace::zero(dv));

  for (std::size_t step = 0; step < d; ++step) {
    NetPresentation q = step == 0 ? p : quotient(p, Subnet{taken, {}});
    auto prims = primitive_vertices(q);
    if (prims.empty() && options.whole_window_fallback) prims = primitive_vertices(q, true);
    if (prims.empty()) throw InconsistentPresentation("nonzero net without a primitive vertex");
    const Vertex& v = prims.front();
    SimpleSummand local = extract_simple_subnet(q, v);

    std::size_t iv = *p.index_of(v);
    RVector x = quotient_lift(taken[iv], local.generator_vector);
    if (arriving_images(p, v).contains_vector(x)) {
      throw InconsistentPresentation("lifted generator at " + v.to_string() + " is not primitive");
    }
    Subnet sub;
    try {
      sub = subnet_generated(p, {Seed{v, Subspace::span(p.dim(v), {x})}});
    } catch (const PreconditionFailed& e) {
      throw InconsistentPresentation(std::string("lifted summand is not a subnet: ") + e.what());
    }
    for (std::size_t i = 0; i < window.size(); ++i) {
      if (sub.spaces[i].dim() != 1 || !intersect(sub.spaces[i], taken[i]).is_zero()) {
        throw InconsistentPresentation("lifted summand is not complementary at " + window[i].to_string());
      }
      taken[i] = sum(taken[i], sub.spaces[i]);
    }
    out.summands.push_back(SimpleSummand{v, std::move(x), std::move(sub.spaces)});
  }

  for (std::size_t i = 0; i < window.size(); ++i) {
    Subspace total = Subspace::zero(p.dims()[i]);
    std::size_t dims = 0;
    for (const auto& s : out.summands) {
      total = sum(total, s.spaces[i]);
      dims += s.spaces[i].dim();
    }
    if (!total.is_full() || dims != p.dims()[i]) {
      throw InconsistentPresentation("summands do not split the space at " + window[i].to_string());
    }
  }
  return out;
}

std::optional<Vertex> is_simple(const NetPresentation& p) {
  if (p.window().empty()) return std::nullopt;
  for (std::size_t d : p.dims())
    if (d != 1) return std::nullopt;
  PathEvaluator eval(p);
  for (const auto& v : p.window()) {
    bool faithful = std::all_of(p.window().begin(), p.window().end(), [&](const Vertex& u) {
      const auto& m = eval.try_path_map(v, u);
      return m && !m->is_zero();
    });
    if (faithful) return v;
  }
  return std::nullopt;
}

bool is_binary(const NetPresentation& p) {
  return std::all_of(p.arrows().begin(), p.arrows().end(),
                     [](const auto& a) { return a.second.is_zero() || rank(a.second) == a.second.cols(); });
}

bool is_binary_exact(const NetPresentation& p) {
  if (!is_binary(p)) return false;
  PathEvaluator eval(p);
  auto iso = [](const RMatrix& m) { return m.rows() == m.cols() && rank(m) == m.cols(); };
  std::uint32_t full = TypeSet::full(p.n()).mask();
  for (const auto& v : p.window()) {
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      Vertex w = move_by(v, TypeSet(mask));
      if (!p.in_window(w)) continue;
      const auto& there = eval.try_path_map(v, w);
      const auto& back = eval.try_path_map(w, v);
      if (!there || !back) continue;
      if (!iso(*there) && !iso(*back)) return false;
    }
  }
  return true;
}

}  // namespace linkednets
