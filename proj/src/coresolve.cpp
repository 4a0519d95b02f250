#include "radhom/coresolve.hpp"

#include "radhom/resolve.hpp"

namespace radhom {

DimValue inj_dim(const Rep& m, int bound) { return proj_dim(duality_D(m), bound); }

Rep cosyzygy(const Rep& m, int n) { return duality_D(syzygy(duality_D(m), n)); }

bool is_projective(const Rep& m) {
  if (m.is_zero()) return true;
  const Algebra& a = *m.algebra();
  auto top = top_dims(m);
  int expected = 0;
  for (int v = 0; v < a.vertex_count(); ++v)
    expected += top[v] * (m.side() == Side::Left ? a.paths_from(v) : a.paths_to(v));
  return expected == m.total_dim();
}

bool is_injective(const Rep& m) { return is_projective(duality_D(m)); }

bool is_projective_injective(const Rep& m) { return is_projective(m) && is_injective(m); }

std::vector<bool> projective_injective_vertices(const AlgebraPtr& a, Side side) {
  std::vector<bool> out(a->vertex_count(), false);
  for (int v = 0; v < a->vertex_count(); ++v) {
    Rep inj = injective(a, v, side);
    auto top = top_dims(inj);
    int w = -1, count = 0;
    for (int u = 0; u < a->vertex_count(); ++u) {
      count += top[u];
      if (top[u]) w = u;
    }
    out[v] = count == 1 && projective(a, w, side).dims() == inj.dims();
  }
  return out;
}

std::vector<CoresolutionTerm> coresolution_terms(const Rep& m, int n) {
  std::vector<CoresolutionTerm> out;
  if (m.is_zero()) return out;
  auto r = resolution_of(duality_D(m));
  auto pi = projective_injective_vertices(m.algebra(), m.side());
  for (int k = 0; k <= n; ++k) {
    r->extend(k);
    if (r->available() <= k) throw Inconclusive("coresolution term " + std::to_string(k) + " lies past the size cap");
    if (r->terminated() && k >= r->computed()) break;
    CoresolutionTerm t;
    t.multiplicities = r->step(k).multiplicities(m.algebra()->vertex_count());
    t.projective = true;
    for (std::size_t v = 0; v < pi.size(); ++v)
      if (t.multiplicities[v] && !pi[v]) t.projective = false;
    out.push_back(std::move(t));
  }
  return out;
}

DimValue dominant_dimension(const Rep& m, int bound) {
  if (bound < 1) throw ContractViolation("bound must be at least 1");
  if (m.is_zero()) return DimValue::zero_module();
  auto r = resolution_of(duality_D(m));
  auto pi = projective_injective_vertices(m.algebra(), m.side());
  for (int n = 0; n <= bound; ++n) {
    r->extend(n);
    if (r->available() <= n) return DimValue::at_least(n - 1, BoundReason::SizeCap);
    if (r->terminated() && n >= r->computed()) return DimValue::at_least(bound, BoundReason::ProjInjTerminated);
    for (int v : r->step(n).generators)
      if (!pi[v]) return DimValue::exact(n);
    if (r->period() && r->computed() > r->period()->second && n >= r->period()->second)
      return DimValue::at_least(bound, BoundReason::Periodic);
  }
  return DimValue::at_least(bound, BoundReason::Truncated);
}

DimValue codominant_dimension(const Rep& m, int bound) { return dominant_dimension(duality_D(m), bound); }

}  // namespace radhom
