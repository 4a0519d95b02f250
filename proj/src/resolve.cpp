#include "radhom/resolve.hpp"

#include <algorithm>
#include <unordered_map>

namespace radhom {

EngineLimits& engine_limits() {
  static EngineLimits limits;
  return limits;
}

std::vector<int> ResolutionStep::multiplicities(int vertices) const {
  std::vector<int> m(vertices, 0);
  for (int v : generators) ++m[v];
  return m;
}

int ResolutionStep::projective_dim(const Algebra& a) const {
  int s = 0;
  for (int v : generators) s += a.paths_from(v);
  return s;
}

namespace {

// Projective cover data of a left module: generators, their vectors, and
// the cover matrices eps_j: (P)_j -> M_j.
struct CoverData {
  std::vector<int> generators;
  std::vector<Mat> vectors;
  std::vector<std::vector<int>> offset;  // offset[g][j]
  std::vector<int> pdim;                 // (P)_j
  std::vector<Mat> eps;
};

std::vector<int> generator_layout(const Algebra& a, const std::vector<int>& gens,
                                  std::vector<std::vector<int>>& offset) {
  const int nv = a.vertex_count();
  std::vector<int> pdim(nv, 0);
  offset.assign(gens.size(), std::vector<int>(nv, 0));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int j = 0; j < nv; ++j) {
      offset[g][j] = pdim[j];
      pdim[j] += static_cast<int>(a.paths(gens[g], j).size());
    }
  return pdim;
}

CoverData top_generators(const Rep& m) {
  CoverData c;
  auto rad = radical_spans(m);
  for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
    Mat comp = complement_basis(rad[v]);
    for (std::size_t k = 0; k < comp.cols(); ++k) {
      c.generators.push_back(v);
      c.vectors.push_back(comp.select_cols({k}));
    }
  }
  return c;
}

void fill_cover(const Rep& m, CoverData& c) {
  const Algebra& a = *m.algebra();
  c.pdim = generator_layout(a, c.generators, c.offset);
  c.eps.clear();
  for (int j = 0; j < a.vertex_count(); ++j) c.eps.emplace_back(m.field(), m.dim_at(j), c.pdim[j]);
  // Generators at one vertex are pushed along every path together.
  for (int v = 0; v < a.vertex_count(); ++v) {
    std::vector<std::size_t> at_v;
    std::vector<const Mat*> cols;
    for (std::size_t g = 0; g < c.generators.size(); ++g)
      if (c.generators[g] == v) {
        at_v.push_back(g);
        cols.push_back(&c.vectors[g]);
      }
    if (at_v.empty()) continue;
    std::vector<Mat> y(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
      const BasisPath& b = a.basis_path(i);
      if (b.source != v) continue;
      y[i] = b.arrows.empty() ? Mat::hstack(m.field(), m.dim_at(v), cols) : m.arrow(a.last_arrow(i)) * y[a.tail(i)];
      for (std::size_t t = 0; t < at_v.size(); ++t)
        c.eps[b.target].set_block(0, c.offset[at_v[t]][b.target] + a.position_in_paths(i), y[i].select_cols({t}));
    }
  }
}

Rep projective_sum(const AlgebraPtr& a, const std::vector<int>& gens) {
  std::vector<Rep> parts;
  for (int v : gens) parts.push_back(projective(a, v, Side::Left));
  return direct_sum(a, Side::Left, parts);
}

}  // namespace

namespace {

// Syzygies met while resolving, so their own resolutions can be served as tails.
struct SyzygyEntry {
  std::weak_ptr<Resolution> base;
  int offset;
};
thread_local std::unordered_multimap<std::uint64_t, SyzygyEntry> t_syzygies;

}  // namespace

Resolution::Resolution(Rep m) : module_(std::move(m)), pending_(module_) {
  if (module_.side() != Side::Left) throw ContractViolation("Resolution expects a left module; use as_left");
  digests_.emplace(module_.digest(), 0);
  for (int v = 0; v < module_.algebra()->vertex_count(); ++v) empty_step_.kernel.emplace_back(module_.field(), 0, 0);
  empty_step_.syzygy = zero_module(module_.algebra(), Side::Left);
  if (module_.is_zero()) terminated_ = true;
}

Resolution::Resolution(ResolutionPtr base, int offset) : base_(std::move(base)), offset_(offset) {
  if (!base_ || offset < 0) throw ContractViolation("tail resolution needs a base and a nonnegative offset");
  // Tails always point at a root.
  if (base_->base_) {
    offset_ += base_->offset_;
    base_ = base_->base_;
  }
  auto om = base_->syzygy(offset_);
  if (!om) throw ContractViolation("tail offset lies past the size cap");
  module_ = *om;
}

void Resolution::compute_next() {
  if (terminated_ || capped_) return;
  const Rep om = pending_;
  if (om.is_zero()) {
    terminated_ = true;
    return;
  }
  const AlgebraPtr& ap = algebra();
  const Algebra& a = *ap;
  const int nv = a.vertex_count();
  CoverData c = top_generators(om);
  int total = 0;
  for (int v : c.generators) total += a.paths_from(v);
  if (total > engine_limits().max_projective_dim) {
    capped_ = true;
    return;
  }
  fill_cover(om, c);

  ResolutionStep st;
  st.generators = c.generators;
  st.syzygy = om;
  std::vector<std::vector<std::size_t>> free(nv);
  std::vector<int> dims(nv);
  for (int j = 0; j < nv; ++j) {
    KernelBasis kb = kernel_with_coordinates(c.eps[j]);
    st.kernel.push_back(std::move(kb.basis));
    free[j] = std::move(kb.free);
    dims[j] = static_cast<int>(free[j].size());
  }
  std::vector<Mat> arrows;
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    const int i = a.quiver().arrows[ar].source, j = a.quiver().arrows[ar].target;
    const Mat& k = st.kernel[i];
    Mat pk(om.field(), c.pdim[j], k.cols());
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
      const int v = c.generators[g];
      const std::size_t rows = a.paths(v, i).size();
      if (rows == 0 || a.paths(v, j).empty()) continue;
      pk.set_block(c.offset[g][j], 0, a.left_mult(ar, v) * k.block(c.offset[g][i], 0, rows, k.cols()));
    }
    arrows.push_back(pk.select_rows(free[j]));
  }
  const int n = static_cast<int>(steps_.size());
  if (n >= 1) {
    const ResolutionStep& prev = steps_.back();
    for (std::size_t g = 0; g < c.generators.size(); ++g)
      st.generator_images.push_back(prev.kernel[c.generators[g]] * c.vectors[g]);
  }
  steps_.push_back(std::move(st));
  pending_ = Rep::trusted(ap, Side::Left, std::move(dims), std::move(arrows));

  if (pending_.is_zero()) {
    terminated_ = true;
    return;
  }
  const std::uint64_t d = pending_.digest();
  if (!period_) {
    auto [lo, hi] = digests_.equal_range(d);
    for (auto it = lo; it != hi; ++it) {
      const Rep& earlier = it->second == 0 ? module_ : steps_[it->second].syzygy;
      if (earlier == pending_) {
        period_ = std::make_pair(it->second, n + 1);
        break;
      }
    }
    digests_.emplace(d, n + 1);
  }
  if (auto self = weak_from_this(); !self.expired()) t_syzygies.emplace(d, SyzygyEntry{self, n + 1});
}

int Resolution::available() const {
  if (base_) {
    const int b = base_->available();
    return b == INT_MAX ? INT_MAX : std::max(b - offset_, 0);
  }
  if (terminated_) return INT_MAX;
  if (period_ && static_cast<int>(steps_.size()) > period_->second) return INT_MAX;
  return static_cast<int>(steps_.size());
}

int Resolution::resolve_index(int n) const {
  if (period_ && static_cast<int>(steps_.size()) > period_->second) {
    const int p = period_->second - period_->first;
    const int last = period_->second;
    if (n > last) n = last - ((last - n) % p + p) % p;
    while (n > last) n -= p;
  }
  return n;
}

int Resolution::canonical_step(int n) const { return base_ ? base_->canonical_step(n + offset_) : resolve_index(n); }

bool Resolution::terminated() const { return base_ ? base_->terminated() : terminated_; }

bool Resolution::capped() const { return base_ ? base_->capped() : capped_; }

std::optional<std::pair<int, int>> Resolution::period() const {
  if (!base_) return period_;
  auto p = base_->period();
  if (!p) return std::nullopt;
  const int from = std::max(p->first, offset_) - offset_;
  return std::make_pair(from, from + p->second - p->first);
}

int Resolution::computed() const {
  if (!base_) return static_cast<int>(steps_.size());
  int c = base_->computed() - offset_;
  // A periodic base serves every step; report at least one full period.
  if (auto p = period(); p && base_->available() == INT_MAX && !base_->terminated()) c = std::max(c, p->second + 1);
  return std::max(c, 0);
}

void Resolution::extend(int n) {
  if (base_) {
    base_->extend(n + offset_);
    return;
  }
  while (available() <= n && !capped_ && !terminated_) compute_next();
}

const ResolutionStep& Resolution::step(int n) const {
  if (n < 0) throw ContractViolation("negative resolution step");
  if (base_) return base_->step(n + offset_);
  if (n < static_cast<int>(steps_.size())) return steps_[n];
  if (terminated_) return empty_step_;
  if (available() > n) return steps_[resolve_index(n)];
  throw Inconclusive("resolution step " + std::to_string(n) + " is not available");
}

std::optional<Rep> Resolution::syzygy(int n) {
  if (n <= 0) return module_;
  if (base_) return base_->syzygy(n + offset_);
  extend(n - 1);
  const int c = static_cast<int>(steps_.size());
  if (n < c) return steps_[n].syzygy;
  if (n == c) return pending_;
  if (terminated_) return empty_step_.syzygy;
  if (available() > n) return steps_[resolve_index(n)].syzygy;
  return std::nullopt;
}

std::optional<int> Resolution::length() const {
  if (base_) {
    auto l = base_->length();
    if (!l) return std::nullopt;
    return std::max(*l - offset_, -1);
  }
  if (!terminated_) return std::nullopt;
  return static_cast<int>(steps_.size()) - 1;
}

ExtCache& Resolution::ext_cache(const Rep& target) {
  if (base_) return base_->ext_cache(target);
  const std::uint64_t d = target.digest();
  for (auto& c : ext_caches_)
    if (c.digest == d && c.target == target) return c;
  ext_caches_.push_back(ExtCache{target, d, {}, {}});
  return ext_caches_.back();
}

Rep as_left(const Rep& m) { return m.side() == Side::Left ? m : to_left_op(m); }

namespace {

struct CacheKey {
  const Algebra* algebra;
  std::uint64_t digest;
  bool operator==(const CacheKey&) const = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const {
    return std::hash<const void*>()(k.algebra) ^ (k.digest * 0x9e3779b97f4a7c15ull);
  }
};

constexpr std::size_t kCacheLimit = 512;

thread_local std::unordered_map<CacheKey, std::vector<ResolutionPtr>, CacheKeyHash> t_resolutions;

ResolutionPtr make_resolution(const Rep& lm, std::uint64_t digest) {
  auto [lo, hi] = t_syzygies.equal_range(digest);
  for (auto it = lo; it != hi;) {
    auto base = it->second.base.lock();
    if (!base) {
      it = t_syzygies.erase(it);
      continue;
    }
    if (base->algebra().get() == lm.algebra().get()) {
      auto om = base->syzygy(it->second.offset);
      if (om && *om == lm) return std::make_shared<Resolution>(base, it->second.offset);
    }
    ++it;
  }
  return std::make_shared<Resolution>(lm);
}

}  // namespace

ResolutionPtr resolution_of(const Rep& m) {
  Rep lm = as_left(m);
  const std::uint64_t digest = lm.digest();
  CacheKey key{lm.algebra().get(), digest};
  if (auto it = t_resolutions.find(key); it != t_resolutions.end())
    for (const auto& r : it->second)
      if (r->module() == lm) return r;
  if (t_resolutions.size() > kCacheLimit) clear_resolution_cache();
  auto r = make_resolution(lm, digest);
  t_resolutions[key].push_back(r);
  return r;
}

void clear_resolution_cache() {
  t_resolutions.clear();
  t_syzygies.clear();
}

bool ResolutionView::ensure(int n) const {
  res_->extend(n + offset_);
  return res_->available() > n + offset_;
}

const std::vector<Mat>& ResolutionView::generator_images(int n) const {
  if (n < 1) throw ContractViolation("generator images start at step 1");
  return res_->step(n + offset_).generator_images;
}

bool ResolutionView::vanishes(int n) const { return res_->terminated() && n + offset_ >= res_->computed(); }

ExtComplex::ExtComplex(ResolutionView view, Rep target) : view_(std::move(view)), target_(std::move(target)) {
  if (target_.side() != Side::Left || !same_algebra(*target_.algebra(), *view_.algebra()))
    throw ContractViolation("Ext target must be a left module over the resolved algebra");
  actions_ = target_.all_path_actions();
  cache_ = &view_.base()->ext_cache(target_);
}

int ExtComplex::cochain_dim(int i) {
  if (i < 0) return 0;
  if (!view_.ensure(i)) throw Inconclusive("Hom(P_" + std::to_string(i) + ", N) lies past the size cap");
  int s = 0;
  for (int v : view_.generators(i)) s += target_.dim_at(v);
  return s;
}

std::optional<Mat> ExtComplex::delta(int i) {
  if (!view_.ensure(i + 1)) return std::nullopt;
  const Algebra& a = *view_.algebra();
  const auto& cols_g = view_.generators(i);
  const auto& rows_h = view_.generators(i + 1);
  const Field f = target_.field();
  std::vector<int> col_off(cols_g.size() + 1, 0), row_off(rows_h.size() + 1, 0);
  for (std::size_t g = 0; g < cols_g.size(); ++g) col_off[g + 1] = col_off[g] + target_.dim_at(cols_g[g]);
  for (std::size_t h = 0; h < rows_h.size(); ++h) row_off[h + 1] = row_off[h] + target_.dim_at(rows_h[h]);
  Mat d(f, row_off.back(), col_off.back());
  if (d.empty()) return d;
  const auto& images = view_.generator_images(i + 1);
  for (std::size_t h = 0; h < rows_h.size(); ++h) {
    const int vh = rows_h[h];
    if (target_.dim_at(vh) == 0) continue;
    const Mat& img = images[h];
    int off = 0;
    for (std::size_t g = 0; g < cols_g.size(); ++g) {
      const int vg = cols_g[g];
      const auto& ps = a.paths(vg, vh);
      if (target_.dim_at(vg) != 0)
        for (std::size_t k = 0; k < ps.size(); ++k)
          if (!img.entry_is_zero(off + k, 0)) d.add_scaled_block(row_off[h], col_off[g], img.at(off + k, 0), actions_[ps[k]]);
      off += static_cast<int>(ps.size());
    }
  }
  return d;
}

std::optional<int> ExtComplex::rank_delta(int i) {
  if (i < 0) return 0;
  if (!view_.ensure(i + 1)) return std::nullopt;
  const int key = view_.canonical(i + 1);
  if (auto it = cache_->ranks.find(key); it != cache_->ranks.end()) return it->second;
  auto d = delta(i);
  if (!d) return std::nullopt;
  int r = static_cast<int>(rank(*d));
  cache_->ranks[key] = r;
  return r;
}

std::optional<int> ExtComplex::ext_dim(int i) {
  if (i < 0) return 0;
  auto r1 = rank_delta(i);
  if (!r1) return std::nullopt;
  auto r0 = rank_delta(i - 1);
  if (!r0) return std::nullopt;
  return cochain_dim(i) - *r1 - *r0;
}

bool SimpleClassification::any_infinite() const {
  return std::find(status.begin(), status.end(), Status::Infinite) != status.end();
}

bool SimpleClassification::all_finite() const {
  return std::all_of(status.begin(), status.end(), [](Status s) { return s == Status::Finite; });
}

namespace {

SimpleClassification classify(const AlgebraPtr& a) {
  using S = SimpleClassification::Status;
  const int nv = a->vertex_count();
  SimpleClassification out;
  out.status.assign(nv, S::Unknown);
  out.pd.assign(nv, -1);
  std::vector<ResolutionPtr> res(nv);
  for (int v = 0; v < nv; ++v) res[v] = resolution_of(simple(a, v, Side::Left));
  std::vector<std::vector<char>> reach(nv, std::vector<char>(nv, 0));
  std::vector<char> stuck(nv, 0);
  for (int t = 1; t <= engine_limits().certificate_depth; ++t) {
    bool progress = false;
    for (int v = 0; v < nv; ++v) {
      if (out.status[v] != S::Unknown || stuck[v]) continue;
      auto om = res[v]->syzygy(t);
      if (!om) {
        stuck[v] = 1;
        continue;
      }
      if (res[v]->capped()) stuck[v] = 1;
      progress = true;
      if (om->is_zero()) {
        out.status[v] = S::Finite;
        out.pd[v] = *res[v]->length();
        continue;
      }
      if (res[v]->period()) out.status[v] = S::Infinite;
      for (int w = 0; w < nv; ++w)
        if (has_simple_summand(*om, w)) reach[v][w] = 1;
    }
    // Transitive closure; a vertex on a cycle or reaching an infinite one is infinite.
    auto closure = reach;
    for (int k = 0; k < nv; ++k)
      for (int i = 0; i < nv; ++i)
        if (closure[i][k])
          for (int j = 0; j < nv; ++j)
            if (closure[k][j]) closure[i][j] = 1;
    for (int v = 0; v < nv; ++v) {
      if (out.status[v] == S::Finite) continue;
      if (closure[v][v]) out.status[v] = S::Infinite;
    }
    for (int v = 0; v < nv; ++v) {
      if (out.status[v] != S::Unknown) continue;
      for (int w = 0; w < nv; ++w)
        if (closure[v][w] && out.status[w] == S::Infinite) out.status[v] = S::Infinite;
    }
    if (!progress) break;
    if (std::none_of(out.status.begin(), out.status.end(), [](S s) { return s == S::Unknown; })) break;
  }
  return out;
}

struct ClassEntry {
  std::weak_ptr<const Algebra> owner;
  std::unique_ptr<SimpleClassification> data;
};
thread_local std::unordered_map<const Algebra*, ClassEntry> t_classes;

}  // namespace

const SimpleClassification& classify_simples(const AlgebraPtr& a) {
  auto it = t_classes.find(a.get());
  if (it != t_classes.end()) {
    if (auto o = it->second.owner.lock(); o && o.get() == a.get()) return *it->second.data;
    t_classes.erase(it);
  }
  if (t_classes.size() > 64) {
    for (auto i = t_classes.begin(); i != t_classes.end();)
      i = i->second.owner.expired() ? t_classes.erase(i) : std::next(i);
  }
  auto& e = t_classes[a.get()];
  e.owner = a;
  e.data = std::make_unique<SimpleClassification>(classify(a));
  return *e.data;
}

Cover projective_cover(const Rep& m) {
  Rep lm = as_left(m);
  CoverData c = top_generators(lm);
  fill_cover(lm, c);
  Rep p = projective_sum(lm.algebra(), c.generators);
  ModMap epi{p, lm, c.eps};
  if (m.side() == Side::Right) {
    p = from_left_op(p, m.algebra());
    epi = ModMap{p, m, c.eps};
  }
  return {p, epi};
}

Rep syzygy(const Rep& m, int n) {
  if (n < 0) throw ContractViolation("syzygy degree must be nonnegative");
  auto r = resolution_of(m);
  auto s = r->syzygy(n);
  if (!s) throw Inconclusive("syzygy " + std::to_string(n) + " lies past the size cap");
  return m.side() == Side::Left ? *s : from_left_op(*s, m.algebra());
}

namespace {

std::optional<DimValue> infinite_summand(const Rep& om, const SimpleClassification& cls) {
  for (std::size_t w = 0; w < cls.status.size(); ++w)
    if (cls.status[w] == SimpleClassification::Status::Infinite && has_simple_summand(om, static_cast<int>(w)))
      return DimValue::at_least(0, BoundReason::InfiniteSummand);
  return std::nullopt;
}

}  // namespace

DimValue proj_dim(const Rep& m, int bound) {
  if (bound < 1) throw ContractViolation("bound must be at least 1");
  if (m.is_zero()) return DimValue::zero_module();
  auto r = resolution_of(m);
  const auto& cls = classify_simples(r->algebra());
  for (int n = 0; n <= bound; ++n) {
    auto om = r->syzygy(n);
    if (!om) return DimValue::at_least(n - 2, BoundReason::SizeCap);
    if (om->is_zero()) return DimValue::exact(n - 1);
    if (infinite_summand(*om, cls)) return DimValue::at_least(bound, BoundReason::InfiniteSummand);
    if (r->period() && r->period()->second <= n) return DimValue::at_least(bound, BoundReason::Periodic);
  }
  auto om = r->syzygy(bound + 1);
  if (!om) return DimValue::at_least(bound, BoundReason::Truncated);
  if (om->is_zero()) return DimValue::exact(bound);
  if (r->period()) return DimValue::at_least(bound, BoundReason::Periodic);
  return DimValue::at_least(bound, BoundReason::Truncated);
}

std::vector<int> betti(const Rep& m, int n) {
  auto r = resolution_of(m);
  r->extend(n);
  if (r->available() <= n) throw Inconclusive("step " + std::to_string(n) + " lies past the size cap");
  return r->step(n).multiplicities(m.algebra()->vertex_count());
}

std::optional<int> ext_dim(const Rep& m, const Rep& n, int i) {
  if (m.side() != n.side() || !same_algebra(*m.algebra(), *n.algebra()))
    throw ContractViolation("Ext between modules over different algebras or sides");
  if (i < 0) throw ContractViolation("negative Ext degree");
  ExtComplex e(ResolutionView(resolution_of(m)), as_left(n));
  try {
    return e.ext_dim(i);
  } catch (const Inconclusive&) {
    return std::nullopt;
  }
}

ExtVanishing pd_via_ext_vanishing_detail(const Rep& m, int bound) {
  if (bound < 1) throw ContractViolation("bound must be at least 1");
  if (m.is_zero()) return {DimValue::zero_module(), DimValue::zero_module()};
  Rep lm = as_left(m);
  Rep j = radical_module(lm.algebra(), Side::Left);
  auto r = resolution_of(lm);
  ExtComplex e(ResolutionView(r), j);
  std::optional<int> first;
  int last_nonzero = 0;
  int checked = 0;
  bool capped = false;
  for (int i = 1; i <= bound + 1; ++i) {
    std::optional<int> x;
    try {
      x = e.ext_dim(i);
    } catch (const Inconclusive&) {
    }
    if (!x) {
      capped = true;
      break;
    }
    checked = i;
    if (*x == 0 && !first) first = i - 1;
    if (*x != 0) last_nonzero = i;
    if (r->terminated() && i > *r->length()) break;
  }
  const bool known_all = r->terminated() && checked > *r->length();
  const BoundReason why = capped ? BoundReason::SizeCap : r->period() ? BoundReason::Periodic : BoundReason::Truncated;
  ExtVanishing out{DimValue::exact(0), DimValue::exact(0)};
  if (first)
    out.first_vanishing = DimValue::exact(*first);
  else
    out.first_vanishing = DimValue::at_least(capped ? checked - 1 : bound, why);
  if (known_all)
    out.sup_nonvanishing = DimValue::exact(last_nonzero);
  else if (!capped && last_nonzero == bound + 1)
    out.sup_nonvanishing = DimValue::at_least(bound, why);
  else
    out.sup_nonvanishing = DimValue::at_least(std::max(last_nonzero - 1, -1), why);
  return out;
}

DimValue pd_via_ext_vanishing(const Rep& m, int bound) { return pd_via_ext_vanishing_detail(m, bound).first_vanishing; }

// The resolution is minimal, so Hom(P_*, A_0) has zero differential and
// Ext^d(M, A_0) = Hom(P_d, A_0) has one coordinate per generator. Surjectivity
// then reads rank [delta^d ; pi] - rank delta^d = #generators, where pi picks
// the e_v coefficient of each generator's image.
ExtMapSurjectivity::ExtMapSurjectivity(const Rep& m)
    : ext_(ResolutionView(resolution_of(as_left(m))), regular_module(as_left(m).algebra(), Side::Left)) {}

std::optional<bool> ExtMapSurjectivity::at(int d) {
  if (d < 0) throw ContractViolation("negative degree");
  const ResolutionView& view = ext_.view();
  const Algebra& a = *view.algebra();
  try {
    if (!view.ensure(d + 1)) return std::nullopt;
    const int key = view.canonical(d + 1);
    auto& lifts = ext_.cache().top_lifts;
    if (auto it = lifts.find(key); it != lifts.end()) return it->second;
    auto delta = ext_.delta(d);
    auto r = ext_.rank_delta(d);
    if (!delta || !r) return std::nullopt;
    const auto& gens = view.generators(d);
    Mat pi(a.field(), gens.size(), ext_.cochain_dim(d));
    int col = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int v = gens[g];
      int idx = 0;
      for (int s = 0; s < v; ++s) idx += static_cast<int>(a.paths(s, v).size());
      pi.set(g, col + idx + a.position_in_paths(a.vertex_element(v)), 1);
      col += ext_.target().dim_at(v);
    }
    const bool surjective =
        static_cast<int>(rank(Mat::vstack(a.field(), pi.cols(), {&*delta, &pi}))) - *r == static_cast<int>(gens.size());
    lifts[key] = surjective;
    return surjective;
  } catch (const Inconclusive&) {
    return std::nullopt;
  }
}

std::optional<bool> ext_map_surjective(const Rep& m, int d) {
  if (d < 0) throw ContractViolation("negative degree");
  return ExtMapSurjectivity(m).at(d);
}

bool BoundedComplex::is_complex() const {
  if (modules.empty()) return differentials.empty();
  if (differentials.size() + 1 != modules.size()) return false;
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const ModMap& f = differentials[k];
    if (!(f.source == modules[k + 1]) || !(f.target == modules[k]) || !f.is_homomorphism()) return false;
    if (k + 1 < differentials.size() && !compose(f, differentials[k + 1]).is_zero()) return false;
  }
  return true;
}

int BoundedComplex::homology_dim(int p) const {
  if (p < low || p > high()) return 0;
  const Rep& c = modules[p - low];
  int h = 0;
  for (int v = 0; v < c.algebra()->vertex_count(); ++v) {
    int out = p > low ? static_cast<int>(rank(differentials[p - low - 1].at[v])) : 0;
    int in = p < high() ? static_cast<int>(rank(differentials[p - low].at[v])) : 0;
    h += c.dim_at(v) - out - in;
  }
  return h;
}

std::optional<int> BoundedComplex::homology_sup() const {
  for (int p = high(); p >= low; --p)
    if (homology_dim(p) != 0) return p;
  return std::nullopt;
}

BoundedComplex BoundedComplex::single(const Rep& m, int degree) { return BoundedComplex{degree, {m}, {}}; }

std::optional<int> hyperext_radical_dim(const BoundedComplex& c, int n) {
  if (c.modules.empty()) return 0;
  const Rep& first = c.modules.front();
  const AlgebraPtr& ap = first.algebra();
  const Side side = first.side();
  // Work with left modules over B (A, or A^op for right complexes).
  const AlgebraPtr bp = side == Side::Left ? ap : ap->opposite();
  const Rep j = radical_module(bp, Side::Left);
  if (j.is_zero()) return 0;
  const int lo = c.low, hi = c.high();
  std::vector<Rep> x;  // D(C_p) as left modules over B^op
  for (const auto& m : c.modules) x.push_back(as_left(duality_D(as_left(m))));
  ResolutionView q(resolution_of(as_left(duality_D(j))));
  std::vector<ExtComplex> e;
  for (const auto& xp : x) e.emplace_back(q, xp);
  const Field f = first.field();
  try {
    auto tot_layout = [&](int deg, std::map<int, int>& off) {
      int total = 0;
      for (int p = lo; p <= hi; ++p) {
        int qq = deg - p;
        if (qq < 0) continue;
        off[p] = total;
        total += e[p - lo].cochain_dim(qq);
      }
      return total;
    };
    auto differential = [&](int deg) -> std::optional<Mat> {
      std::map<int, int> src, dst;
      int ns = tot_layout(deg, src), nd = tot_layout(deg + 1, dst);
      Mat d(f, nd, ns);
      for (int p = lo; p <= hi; ++p) {
        int qq = deg - p;
        if (qq < 0) continue;
        auto v = e[p - lo].delta(qq);
        if (!v) return std::nullopt;
        if (!v->empty()) d.set_block(dst.at(p), src.at(p), *v);
        if (p + 1 <= hi) {
          const ModMap& cp = c.differentials[p - lo];  // C_{p+1} -> C_p
          const auto& gens = q.generators(qq);
          int r = dst.at(p + 1), s = src.at(p);
          Scalar sign(f, qq % 2 == 0 ? 1 : -1);
          for (int g : gens) {
            Mat blk = cp.at[g].transpose().scaled(sign);
            if (!blk.empty()) d.set_block(r, s, blk);
            r += x[p + 1 - lo].dim_at(g);
            s += x[p - lo].dim_at(g);
          }
        }
      }
      return d;
    };
    std::map<int, int> layout;
    int dim_n = tot_layout(n, layout);
    auto dn = differential(n);
    if (!dn) return std::nullopt;
    int rank_prev = 0;
    if (n - 1 >= lo) {
      auto dp = differential(n - 1);
      if (!dp) return std::nullopt;
      rank_prev = static_cast<int>(rank(*dp));
    }
    return dim_n - static_cast<int>(rank(*dn)) - rank_prev;
  } catch (const Inconclusive&) {
    return std::nullopt;
  }
}

std::optional<bool> complex_has_finite_pd(const BoundedComplex& c, int bound) {
  if (bound < 1) throw ContractViolation("bound must be at least 1");
  if (!c.is_complex()) throw ContractViolation("differentials do not form a complex");
  auto s = c.homology_sup();
  if (!s) return true;
  auto h = hyperext_radical_dim(c, *s + bound);
  if (!h) return std::nullopt;
  return *h == 0;
}

}  // namespace radhom
