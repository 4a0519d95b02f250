#pragma once

#include <string>

#include "radhom/io.hpp"

namespace radhom::testing {

inline AlgebraPtr field_k(const std::string& f = "1009") {
  return parse_algebra("FIELD " + f + "\nNILBOUND 2\nVERTICES 1\n");
}

inline AlgebraPtr kA2(const std::string& f = "1009") {
  return parse_algebra("FIELD " + f + "\nNILBOUND 2\nVERTICES 2\nARROW a 0 1\n");
}

inline AlgebraPtr kA3_rad2() {
  return parse_algebra("FIELD 1009\nNILBOUND 3\nVERTICES 3\nARROW a 0 1\nARROW b 1 2\nREL b*a\n");
}

inline AlgebraPtr dual_numbers(const std::string& f = "1009") {
  return parse_algebra("FIELD " + f + "\nNILBOUND 2\nVERTICES 1\nARROW x 0 0\n");
}

inline AlgebraPtr two_loops_rad2() {
  return parse_algebra("FIELD 1009\nNILBOUND 2\nVERTICES 1\nARROW x 0 0\nARROW y 0 0\n");
}

inline AlgebraPtr commutative_xy() {
  return parse_algebra("FIELD 1009\nNILBOUND 3\nVERTICES 1\nARROW x 0 0\nARROW y 0 0\nREL x*x\nREL y*y\nREL x*y - y*x\n");
}

// End(k + k[x]/(x^2)): vertex 0 for the simple, vertex 1 for the regular module.
inline AlgebraPtr auslander_dual_numbers() {
  return parse_algebra("FIELD 1009\nNILBOUND 3\nVERTICES 2\nARROW a 0 1\nARROW b 1 0\nREL b*a\n");
}

inline AlgebraPtr cyclic_nakayama(int n, int length) {
  std::string s = "FIELD 1009\nNILBOUND " + std::to_string(length + 1) + "\nVERTICES " + std::to_string(n) + "\n";
  for (int i = 0; i < n; ++i) s += "ARROW c" + std::to_string(i) + " " + std::to_string(i) + " " + std::to_string((i + 1) % n) + "\n";
  for (int i = 0; i < n; ++i) {
    s += "REL ";
    for (int k = length - 1; k >= 0; --k) s += "c" + std::to_string((i + k) % n) + (k ? "*" : "");
    s += "\n";
  }
  return parse_algebra(s);
}

}  // namespace radhom::testing

#include <random>

#include "radhom/rep.hpp"

namespace radhom::testing {

// Isomorphism oracle: a generic combination of a Hom basis is bijective iff
// the modules are isomorphic (false negatives only over tiny fields).
inline bool isomorphic(const Rep& m, const Rep& n) {
  if (m.dims() != n.dims()) return false;
  auto basis = hom_space(m, n);
  std::mt19937_64 rng(99);
  for (int attempt = 0; attempt < 4; ++attempt) {
    ModMap f = zero_map(m, n);
    for (const auto& g : basis) {
      Scalar c(m.field(), static_cast<long>(rng() % 1000) + 1);
      for (std::size_t v = 0; v < f.at.size(); ++v) f.at[v].add_scaled(c, g.at[v]);
    }
    if (f.is_injective() && f.is_surjective()) return true;
  }
  return false;
}

}  // namespace radhom::testing
