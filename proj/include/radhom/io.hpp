#pragma once

#include <cstdint>
#include <string>

#include "radhom/algebra.hpp"

namespace radhom {

/// Algebra definition text:
///
///   FIELD 1009            (or FIELD Q)
///   NILBOUND 3
///   VERTICES 2
///   ARROW a 0 1           (name, source, target; vertices are 0-based)
///   REL 1*b*a + 1008*d*c  (paths read right to left: a is applied first)
///
/// Blank lines and lines starting with '#' are ignored. A term without a
/// coefficient has coefficient 1; "-" may separate terms.
AlgebraPtr parse_algebra(const std::string& text);
AlgebraPtr load_algebra_file(const std::string& path);

/// Canonical text; parse_algebra(print_algebra(a)) rebuilds the same algebra.
std::string print_algebra(const Algebra& a);

/// FNV-1a 64 over the canonical text.
std::uint64_t fingerprint(const Algebra& a);
std::string fingerprint_hex(const Algebra& a);

}  // namespace radhom
