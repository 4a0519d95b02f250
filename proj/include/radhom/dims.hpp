#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "radhom/dimvalue.hpp"
#include "radhom/resolve.hpp"

namespace radhom {

DimValue gl_dim(const AlgebraPtr& a, int bound);

/// inj dim of J on the given side; ZeroModule when A is semisimple.
DimValue inj_dim_radical(const AlgebraPtr& a, Side side, int bound);

struct GorensteinResult {
  enum class Kind { Yes, NoWithinBound, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int d = -1;  // valid for Yes
  DimValue left = DimValue::zero_module();   // inj dim of A as a left module
  DimValue right = DimValue::zero_module();  // inj dim of A as a right module

  bool yes() const { return kind == Kind::Yes; }
  std::string str() const;
  nlohmann::json to_json() const;
};
GorensteinResult detect_gorenstein(const AlgebraPtr& a, int bound);

/// max{i <= d | Ext^i(M, A) != 0}; requires a Gorenstein witness.
DimValue gproj_dim_gorenstein(const Rep& m, const GorensteinResult& g);

struct GinjBounds {
  int lower = 0;              // sup{0, i | Ext^i(DA, M) != 0} over the degrees examined
  int examined = 0;           // degrees 0..examined were computed
  std::optional<DimValue> exact;  // set under a Gorenstein witness
};
GinjBounds ginj_dim_bounds(const Rep& m, int bound, const std::optional<GorensteinResult>& g = std::nullopt);

/// Gorenstein with inj dim A <= dom dim A; nullopt when undecided.
std::optional<bool> detect_minimal_AG(const AlgebraPtr& a, int bound);

/// The sampled module family: simples, J, syzygies and cosyzygies of each of
/// them to the given depth, and the radical powers of A.
struct SampleSpec {
  int depth = 10;
  Side side = Side::Left;
};
std::vector<Rep> sample_modules(const AlgebraPtr& a, const SampleSpec& spec);

struct FindimLower {
  int fp_lower = 0;
  int fi_lower = 0;
};
/// Largest Exact proj / inj dimension seen on the sample. Lower bounds only.
FindimLower findim_lower_bounds(const AlgebraPtr& a, const SampleSpec& spec, int bound);

struct KoszulResult {
  int top_homology = 0;               // dim H_n(K (x) E), n = number of generators
  std::optional<bool> finite_pd;      // complex_has_finite_pd(K (x) E)
  BoundedComplex complex;
};
/// Koszul complex on the arrows of a commutative local algebra, tensored with E = D(A).
KoszulResult koszul_complex_test(const AlgebraPtr& a, int bound);
std::optional<bool> koszul_gorenstein_test(const AlgebraPtr& a, int bound);

struct AlgebraProfile {
  int bound = 0;
  std::string field;
  int dim = 0;
  int vertices = 0;
  int arrows = 0;
  DimValue gl_dim = DimValue::zero_module();
  DimValue inj_dim_A_left = DimValue::zero_module();
  DimValue inj_dim_A_right = DimValue::zero_module();
  DimValue inj_dim_J_left = DimValue::zero_module();
  DimValue inj_dim_J_right = DimValue::zero_module();
  DimValue dom_dim = DimValue::zero_module();
  GorensteinResult gorenstein;
  std::optional<bool> minimal_AG;
  int fp_dim_lower = 0;
  int fi_dim_lower = 0;

  nlohmann::json to_json() const;
};
AlgebraProfile compute_profile(const AlgebraPtr& a, int bound);

}  // namespace radhom
