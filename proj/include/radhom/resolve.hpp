#pragma once

#include <climits>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "radhom/dimvalue.hpp"
#include "radhom/rep.hpp"

namespace radhom {

/// Process-wide resource limits for resolutions.
struct EngineLimits {
  /// A step whose projective term exceeds this total dimension is not built.
  int max_projective_dim = 800;
  /// Depth used when classifying simples as of finite or infinite pd.
  int certificate_depth = 10;
};
EngineLimits& engine_limits();

/// Raised when a requested object lies beyond the size cap.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One step of a minimal projective resolution of a left module M.
///
/// P_n = sum of P_{v(g)} over the generators g. Its component at vertex j is
/// the concatenation over g (in order) of paths(v(g), j).
struct ResolutionStep {
  std::vector<int> generators;        // v(g) for each generator of P_n
  Rep syzygy;                         // Omega^n M, covered by P_n
  std::vector<Mat> kernel;            // per vertex: Omega^{n+1}_j -> (P_n)_j
  std::vector<Mat> generator_images;  // n >= 1: image of each generator in (P_{n-1})_{v(g)}

  std::vector<int> multiplicities(int vertices) const;
  int projective_dim(const Algebra& a) const;
};

class Resolution;
using ResolutionPtr = std::shared_ptr<Resolution>;

/// Cached Ext data of one resolution against one target, keyed by canonical step.
struct ExtCache {
  Rep target;
  std::uint64_t digest = 0;
  std::map<int, int> ranks;       // rank of delta^i, keyed by canonical(i + 1)
  std::map<int, bool> top_lifts;  // ext_map_surjective, keyed by canonical(d + 1)
};

/// Minimal projective resolution of a left module, extended on demand. Not
/// thread-safe; resolution_of hands out per-thread instances.
/// Once a syzygy repeats verbatim the remaining steps are served from the
/// period without further computation. A tail resolution serves the steps of
/// another resolution from an offset on (the resolution of a syzygy).
class Resolution : public std::enable_shared_from_this<Resolution> {
 public:
  explicit Resolution(Rep m);
  /// The resolution of Omega^offset of base's module, sharing base's steps.
  Resolution(ResolutionPtr base, int offset);

  const Rep& module() const { return module_; }
  const AlgebraPtr& algebra() const { return module_.algebra(); }

  /// Computes steps 0..n unless the resolution ends or hits the size cap.
  void extend(int n);
  /// Steps that can be served (INT_MAX once periodic or terminated).
  int available() const;
  const ResolutionStep& step(int n) const;

  /// Omega^n for n up to the first unknown syzygy; nullopt past the cap.
  std::optional<Rep> syzygy(int n);

  /// Omega^{k} = 0 was reached; length() = k - 1 (or -1 for M = 0).
  bool terminated() const;
  std::optional<int> length() const;
  bool capped() const;
  /// (i, j) with Omega^i identical to Omega^j, i < j.
  std::optional<std::pair<int, int>> period() const;
  /// Identifies the data of step n across a resolution and its tails: equal
  /// keys give equal generators and generator images.
  int canonical_step(int n) const;
  /// Number of steps served without further computation.
  int computed() const;

  ExtCache& ext_cache(const Rep& target);

 private:
  void compute_next();
  int resolve_index(int n) const;

  Rep module_;
  ResolutionPtr base_;
  int offset_ = 0;
  std::deque<ResolutionStep> steps_;
  ResolutionStep empty_step_;
  Rep pending_;  // Omega^{computed()}
  std::multimap<std::uint64_t, int> digests_;
  bool terminated_ = false;
  bool capped_ = false;
  std::optional<std::pair<int, int>> period_;
  std::deque<ExtCache> ext_caches_;
};

/// Shared, per-thread cached resolution of a module (right modules are
/// resolved as left modules over the opposite algebra). A module already met
/// as a syzygy of a cached resolution gets a tail of that resolution.
ResolutionPtr resolution_of(const Rep& m);
void clear_resolution_cache();

/// Left module over A (identity) or A^op (for right modules).
Rep as_left(const Rep& m);

/// The resolution of Omega^offset M, read off the resolution of M.
class ResolutionView {
 public:
  ResolutionView(ResolutionPtr r, int offset = 0) : res_(std::move(r)), offset_(offset) {}
  const AlgebraPtr& algebra() const { return res_->algebra(); }
  bool ensure(int n) const;  // step n available
  const std::vector<int>& generators(int n) const { return res_->step(n + offset_).generators; }
  const std::vector<Mat>& generator_images(int n) const;
  /// P_n = 0 is known.
  bool vanishes(int n) const;
  /// Base step that step n repeats; equal keys give equal data.
  int canonical(int n) const { return res_->canonical_step(n + offset_); }
  const ResolutionPtr& base() const { return res_; }
  int offset() const { return offset_; }

 private:
  ResolutionPtr res_;
  int offset_;
};

/// Hom(P_*, N) for a resolution of M; Ext^i(M, N) from ranks.
class ExtComplex {
 public:
  ExtComplex(ResolutionView view, Rep target);
  int cochain_dim(int i);
  /// delta^i: Hom(P_i, N) -> Hom(P_{i+1}, N); nullopt past the cap.
  std::optional<Mat> delta(int i);
  std::optional<int> rank_delta(int i);
  std::optional<int> ext_dim(int i);
  const Rep& target() const { return target_; }
  const ResolutionView& view() const { return view_; }
  ExtCache& cache() { return *cache_; }

 private:
  ResolutionView view_;
  Rep target_;
  std::vector<Mat> actions_;
  ExtCache* cache_;
};

/// Classification of the simple modules by projective dimension.
struct SimpleClassification {
  enum class Status { Finite, Infinite, Unknown };
  std::vector<Status> status;
  std::vector<int> pd;  // valid for Finite
  bool any_infinite() const;
  bool all_finite() const;
};
const SimpleClassification& classify_simples(const AlgebraPtr& a);

struct Cover {
  Rep projective;
  ModMap epi;
};
Cover projective_cover(const Rep& m);

Rep syzygy(const Rep& m, int n);
DimValue proj_dim(const Rep& m, int bound);
std::vector<int> betti(const Rep& m, int n);
std::optional<int> ext_dim(const Rep& m, const Rep& n, int i);

struct ExtVanishing {
  DimValue first_vanishing;  // inf{i >= 0 | Ext^{i+1}(M, J) = 0}
  DimValue sup_nonvanishing;  // sup{0, i | Ext^i(M, J) != 0}
};
ExtVanishing pd_via_ext_vanishing_detail(const Rep& m, int bound);
DimValue pd_via_ext_vanishing(const Rep& m, int bound);

/// Ext^d(M, pi): Ext^d(M, A) -> Ext^d(M, A_0) is surjective.
std::optional<bool> ext_map_surjective(const Rep& m, int d);

/// ext_map_surjective for one module across degrees, sharing the cochain data.
class ExtMapSurjectivity {
 public:
  explicit ExtMapSurjectivity(const Rep& m);
  std::optional<bool> at(int d);

 private:
  ExtComplex ext_;
};

/// Homological complex C_low .. C_high with d_p: C_p -> C_{p-1}.
struct BoundedComplex {
  int low = 0;
  std::vector<Rep> modules;
  std::vector<ModMap> differentials;  // differentials[k]: C_{low+k+1} -> C_{low+k}

  int high() const { return low + static_cast<int>(modules.size()) - 1; }
  bool is_complex() const;
  int homology_dim(int p) const;
  /// Degree of the top nonzero homology, nullopt when acyclic.
  std::optional<int> homology_sup() const;
  static BoundedComplex single(const Rep& m, int degree = 0);
};

/// Hyper-Ext^n(C, J) through Hom(C, I) with I a minimal injective coresolution of J.
std::optional<int> hyperext_radical_dim(const BoundedComplex& c, int n);

/// Ext^n(C, J) vanishes at the top of the window (sup H(C), sup H(C) + bound];
/// nullopt if the window lies beyond the size cap.
std::optional<bool> complex_has_finite_pd(const BoundedComplex& c, int bound);

}  // namespace radhom
