#include "radhom/dims.hpp"

#include <algorithm>
#include <set>

#include "radhom/coresolve.hpp"

namespace radhom {

DimValue gl_dim(const AlgebraPtr& a, int bound) {
  if (bound < 1) throw ContractViolation("bound must be at least 1");
  if (classify_simples(a).any_infinite()) return DimValue::at_least(bound, BoundReason::InfiniteSummand);
  return proj_dim(top_of_algebra(a, Side::Left), bound);
}

DimValue inj_dim_radical(const AlgebraPtr& a, Side side, int bound) {
  Rep j = radical_module(a, side);
  if (j.is_zero()) return DimValue::zero_module();
  return inj_dim(j, bound);
}

std::string GorensteinResult::str() const {
  switch (kind) {
    case Kind::Yes: return "yes(" + std::to_string(d) + ")";
    case Kind::NoWithinBound: return "no_within_bound";
    case Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

nlohmann::json GorensteinResult::to_json() const {
  nlohmann::json j{{"verdict", kind == Kind::Yes ? "yes" : kind == Kind::NoWithinBound ? "no_within_bound" : "inconclusive"},
                   {"left", left.to_json()},
                   {"right", right.to_json()}};
  if (yes()) j["d"] = d;
  return j;
}

GorensteinResult detect_gorenstein(const AlgebraPtr& a, int bound) {
  GorensteinResult g;
  g.left = inj_dim(regular_module(a, Side::Left), bound);
  g.right = inj_dim(regular_module(a, Side::Right), bound);
  if (g.left.is_exact() && g.right.is_exact() && g.left.value() == g.right.value()) {
    g.kind = GorensteinResult::Kind::Yes;
    g.d = g.left.value();
  } else if (g.left.certified_infinite() || g.right.certified_infinite()) {
    g.kind = GorensteinResult::Kind::NoWithinBound;
  } else {
    g.kind = GorensteinResult::Kind::Inconclusive;
  }
  return g;
}

DimValue gproj_dim_gorenstein(const Rep& m, const GorensteinResult& g) {
  if (!g.yes()) throw ContractViolation("gproj_dim_gorenstein needs a Gorenstein witness");
  if (m.is_zero()) return DimValue::zero_module();
  Rep reg = regular_module(m.algebra(), m.side());
  int top = 0;
  for (int i = 0; i <= g.d; ++i) {
    auto e = ext_dim(m, reg, i);
    if (!e) throw Inconclusive("Ext^" + std::to_string(i) + "(M, A) lies past the size cap");
    if (*e != 0) top = i;
  }
  return DimValue::exact(top);
}

GinjBounds ginj_dim_bounds(const Rep& m, int bound, const std::optional<GorensteinResult>& g) {
  GinjBounds out;
  if (m.is_zero()) {
    out.exact = DimValue::zero_module();
    return out;
  }
  Rep da = dual_regular_module(m.algebra(), m.side());
  const int last = g && g->yes() ? std::min(bound, g->d) : bound;
  out.examined = -1;
  for (int i = 0; i <= last; ++i) {
    auto e = ext_dim(da, m, i);
    if (!e) break;
    out.examined = i;
    if (*e != 0) out.lower = i;
  }
  if (g && g->yes() && out.examined == last) out.exact = DimValue::exact(out.lower);
  return out;
}

std::optional<bool> detect_minimal_AG(const AlgebraPtr& a, int bound) {
  GorensteinResult g = detect_gorenstein(a, bound);
  if (g.kind == GorensteinResult::Kind::NoWithinBound) return false;
  if (!g.yes()) return std::nullopt;
  DimValue dom = dominant_dimension(regular_module(a, Side::Left), bound);
  return decided_le(DimValue::exact(g.d), dom);
}

std::vector<Rep> sample_modules(const AlgebraPtr& a, const SampleSpec& spec) {
  std::vector<Rep> out;
  std::set<std::uint64_t> seen;
  auto add = [&](const Rep& m) {
    if (m.is_zero()) return;
    if (!seen.insert(m.digest()).second) return;
    out.push_back(m);
  };
  std::vector<Rep> seeds;
  for (int v = 0; v < a->vertex_count(); ++v) seeds.push_back(simple(a, v, spec.side));
  seeds.push_back(radical_module(a, spec.side));
  for (const Rep& s : seeds) add(s);
  for (const Rep& s : seeds) {
    if (s.is_zero()) continue;
    for (int n = 1; n <= spec.depth; ++n) {
      try {
        Rep om = syzygy(s, n);
        if (om.is_zero()) break;
        add(om);
      } catch (const Inconclusive&) {
        break;
      }
    }
    for (int n = 1; n <= spec.depth; ++n) {
      try {
        Rep om = cosyzygy(s, n);
        if (om.is_zero()) break;
        add(om);
      } catch (const Inconclusive&) {
        break;
      }
    }
  }
  Rep reg = regular_module(a, spec.side);
  for (int i = 1; i < a->nilbound(); ++i) add(radical_power(reg, i));
  return out;
}

FindimLower findim_lower_bounds(const AlgebraPtr& a, const SampleSpec& spec, int bound) {
  FindimLower f;
  for (const Rep& m : sample_modules(a, spec)) {
    DimValue p = proj_dim(m, bound);
    if (p.is_exact()) f.fp_lower = std::max(f.fp_lower, p.value());
    DimValue i = inj_dim(m, bound);
    if (i.is_exact()) f.fi_lower = std::max(f.fi_lower, i.value());
  }
  return f;
}

KoszulResult koszul_complex_test(const AlgebraPtr& a, int bound) {
  if (a->vertex_count() != 1) throw ContractViolation("Koszul test needs a local algebra (one vertex)");
  if (!a->is_commutative()) throw ContractViolation("Koszul test needs a commutative algebra");
  const int n = a->arrow_count();
  const Field f = a->field();
  Rep e = dual_regular_module(a, Side::Left);
  const int ed = e.total_dim();
  std::vector<std::vector<unsigned>> by_size(n + 1);
  for (unsigned s = 0; s < (1u << n); ++s) by_size[__builtin_popcount(s)].push_back(s);
  KoszulResult out;
  out.complex.low = 0;
  for (int p = 0; p <= n; ++p) out.complex.modules.push_back(direct_sum(a, Side::Left, std::vector<Rep>(by_size[p].size(), e)));
  for (int p = 1; p <= n; ++p) {
    const auto& src = by_size[p];
    const auto& dst = by_size[p - 1];
    Mat d(f, dst.size() * ed, src.size() * ed);
    for (std::size_t c = 0; c < src.size(); ++c) {
      const unsigned s = src[c];
      int before = 0;
      for (int k = 0; k < n; ++k) {
        if (!(s & (1u << k))) continue;
        const unsigned t = s & ~(1u << k);
        const std::size_t r = std::find(dst.begin(), dst.end(), t) - dst.begin();
        d.set_block(r * ed, c * ed, e.arrow(k).scaled(Scalar(f, before % 2 == 0 ? 1 : -1)));
        ++before;
      }
    }
    out.complex.differentials.push_back(ModMap{out.complex.modules[p], out.complex.modules[p - 1], {d}});
  }
  out.top_homology = out.complex.homology_dim(n);
  out.finite_pd = complex_has_finite_pd(out.complex, bound);
  return out;
}

std::optional<bool> koszul_gorenstein_test(const AlgebraPtr& a, int bound) {
  return koszul_complex_test(a, bound).finite_pd;
}

nlohmann::json AlgebraProfile::to_json() const {
  nlohmann::json j;
  j["bound"] = bound;
  j["field"] = field;
  j["dim"] = dim;
  j["vertices"] = vertices;
  j["arrows"] = arrows;
  j["gl_dim"] = gl_dim.to_json();
  j["inj_dim_A_left"] = inj_dim_A_left.to_json();
  j["inj_dim_A_right"] = inj_dim_A_right.to_json();
  j["inj_dim_J_left"] = inj_dim_J_left.to_json();
  j["inj_dim_J_right"] = inj_dim_J_right.to_json();
  j["dom_dim"] = dom_dim.to_json();
  j["gorenstein"] = gorenstein.to_json();
  j["minimal_AG"] = minimal_AG ? nlohmann::json(*minimal_AG) : nlohmann::json("inconclusive");
  j["fp_dim_lower"] = fp_dim_lower;
  j["fi_dim_lower"] = fi_dim_lower;
  return j;
}

AlgebraProfile compute_profile(const AlgebraPtr& a, int bound) {
  AlgebraProfile p;
  p.bound = bound;
  p.field = a->field().name();
  p.dim = a->dim();
  p.vertices = a->vertex_count();
  p.arrows = a->arrow_count();
  p.gl_dim = gl_dim(a, bound);
  p.gorenstein = detect_gorenstein(a, bound);
  p.inj_dim_A_left = p.gorenstein.left;
  p.inj_dim_A_right = p.gorenstein.right;
  p.inj_dim_J_left = inj_dim_radical(a, Side::Left, bound);
  p.inj_dim_J_right = inj_dim_radical(a, Side::Right, bound);
  p.dom_dim = dominant_dimension(regular_module(a, Side::Left), bound);
  if (p.gorenstein.kind == GorensteinResult::Kind::NoWithinBound)
    p.minimal_AG = false;
  else if (p.gorenstein.yes())
    p.minimal_AG = decided_le(DimValue::exact(p.gorenstein.d), p.dom_dim);
  FindimLower f = findim_lower_bounds(a, SampleSpec{std::min(bound, 10), Side::Left}, bound);
  p.fp_dim_lower = f.fp_lower;
  p.fi_dim_lower = f.fi_lower;
  return p;
}

}  // namespace radhom
