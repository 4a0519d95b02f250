#pragma once

#include <vector>

#include "radhom/dimvalue.hpp"
#include "radhom/rep.hpp"

namespace radhom {

/// Injective dimension, computed as proj dim of D(m) over the opposite side.
DimValue inj_dim(const Rep& m, int bound);

/// Omega^{-n} m = D(Omega^n D m).
Rep cosyzygy(const Rep& m, int n);

bool is_projective(const Rep& m);
bool is_injective(const Rep& m);
bool is_projective_injective(const Rep& m);

/// For each vertex v, whether the indecomposable injective I_v on this side
/// is also projective.
std::vector<bool> projective_injective_vertices(const AlgebraPtr& a, Side side);

/// Term I^n of the minimal injective coresolution, by multiplicities of I_v.
struct CoresolutionTerm {
  std::vector<int> multiplicities;
  bool projective = false;
};
/// Terms I^0 .. I^n (fewer if the coresolution ends); throws Inconclusive past the cap.
std::vector<CoresolutionTerm> coresolution_terms(const Rep& m, int n);

DimValue dominant_dimension(const Rep& m, int bound);
/// codom dim m = dom dim D(m) over the opposite side.
DimValue codominant_dimension(const Rep& m, int bound);

}  // namespace radhom
