#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebras.hpp"
#include "radhom/coresolve.hpp"
#include "radhom/dims.hpp"

using namespace radhom;
using namespace radhom::testing;

TEST_CASE("DimValue comparison") {
  auto e2 = DimValue::exact(2), e5 = DimValue::exact(5);
  auto t3 = DimValue::at_least(3, BoundReason::Truncated);
  auto inf = DimValue::at_least(3, BoundReason::Periodic);
  CHECK(compare(e2, e5) == Ordering::Less);
  CHECK(compare(e2, t3) == Ordering::Less);
  CHECK(compare(e5, t3) == Ordering::Incomparable);
  CHECK(compare(e5, inf) == Ordering::Less);
  CHECK(compare(inf, inf) == Ordering::Incomparable);
  CHECK(compare(DimValue::zero_module(), e2) == Ordering::Less);
  CHECK(decided_le(e2, t3) == true);
  CHECK_FALSE(decided_le(t3, t3).has_value());
  for (auto v : {e2, t3, inf, DimValue::zero_module()}) CHECK(DimValue::from_json(v.to_json()) == v);
  CHECK(inf.str() == ">3 (periodic)");
}

TEST_CASE("global dimension") {
  CHECK(gl_dim(field_k(), 5) == DimValue::exact(0));
  CHECK(gl_dim(kA2(), 5) == DimValue::exact(1));
  CHECK(gl_dim(kA3_rad2(), 5) == DimValue::exact(2));
  CHECK(gl_dim(auslander_dual_numbers(), 5) == DimValue::exact(2));
  DimValue g = gl_dim(dual_numbers(), 20);
  CHECK(g.certified_infinite());
  CHECK(g.value() == 20);
}

TEST_CASE("injective dimension of the radical") {
  CHECK(inj_dim_radical(field_k(), Side::Left, 5).is_zero_module());
  CHECK(inj_dim_radical(kA2(), Side::Left, 5) == DimValue::exact(1));
  CHECK(inj_dim_radical(kA2(), Side::Right, 5) == DimValue::exact(1));
  CHECK(inj_dim_radical(dual_numbers(), Side::Left, 20).is_at_least());
}

TEST_CASE("Gorenstein detection") {
  auto d = detect_gorenstein(dual_numbers(), 10);
  CHECK(d.yes());
  CHECK(d.d == 0);
  auto a = detect_gorenstein(kA2(), 10);
  CHECK(a.yes());
  CHECK(a.d == 1);
  CHECK_FALSE(detect_gorenstein(two_loops_rad2(), 10).yes());
  CHECK(detect_gorenstein(commutative_xy(), 10).yes());
  CHECK(detect_gorenstein(auslander_dual_numbers(), 10).d == 2);
  CHECK(a.str() == "yes(1)");
}

TEST_CASE("Gorenstein projective dimension") {
  auto a = kA2();
  auto g = detect_gorenstein(a, 10);
  CHECK(gproj_dim_gorenstein(projective(a, 0), g) == DimValue::exact(0));
  CHECK(gproj_dim_gorenstein(radical_module(a), g) == DimValue::exact(0));
  CHECK(gproj_dim_gorenstein(top_of_algebra(a), g) == DimValue::exact(1));
  CHECK(gproj_dim_gorenstein(top_of_algebra(a, Side::Right), g) == DimValue::exact(1));
  auto aus = auslander_dual_numbers();
  auto ga = detect_gorenstein(aus, 10);
  CHECK(gproj_dim_gorenstein(radical_module(aus), ga) == DimValue::exact(1));
  CHECK(gproj_dim_gorenstein(radical_module(aus, Side::Right), ga) == DimValue::exact(1));
  CHECK_THROWS_AS(gproj_dim_gorenstein(top_of_algebra(two_loops_rad2()), detect_gorenstein(two_loops_rad2(), 6)),
                  ContractViolation);
}

TEST_CASE("Gorenstein injective dimension bounds") {
  auto a = kA2();
  auto g = detect_gorenstein(a, 10);
  auto inj = ginj_dim_bounds(injective(a, 0), 10, g);
  CHECK(inj.lower == 0);
  REQUIRE(inj.exact);
  CHECK(*inj.exact == DimValue::exact(0));
  auto j = ginj_dim_bounds(radical_module(a), 10, g);
  REQUIRE(j.exact);
  CHECK(*j.exact == DimValue::exact(1));
  auto aus = auslander_dual_numbers();
  auto ga = detect_gorenstein(aus, 10);
  for (Side s : {Side::Left, Side::Right}) {
    auto b = ginj_dim_bounds(radical_module(aus, s), 10, ga);
    REQUIRE(b.exact);
    CHECK(*b.exact == DimValue::exact(2));
  }
  CHECK_FALSE(ginj_dim_bounds(radical_module(a), 10).exact);
}

TEST_CASE("minimal Auslander-Gorenstein detection") {
  CHECK(detect_minimal_AG(dual_numbers(), 10) == true);
  CHECK(detect_minimal_AG(auslander_dual_numbers(), 10) == true);
  CHECK(detect_minimal_AG(kA2(), 10) == true);
  auto r = detect_minimal_AG(kA3_rad2(), 10);
  CHECK(r.has_value());
  CHECK(*r == decided_le(DimValue::exact(detect_gorenstein(kA3_rad2(), 10).d),
                         dominant_dimension(regular_module(kA3_rad2()), 10)));
}

TEST_CASE("finitistic dimension lower bounds") {
  auto s = findim_lower_bounds(field_k(), {}, 10);
  CHECK(s.fp_lower == 0);
  CHECK(s.fi_lower == 0);
  auto a = findim_lower_bounds(kA2(), {}, 10);
  CHECK(a.fp_lower == 1);
  CHECK(a.fi_lower == 1);
  auto d = findim_lower_bounds(dual_numbers(), {}, 10);
  CHECK(d.fp_lower == 0);
  CHECK(d.fi_lower == 0);
  CHECK(sample_modules(kA2(), {}).size() == 2);
}

TEST_CASE("Koszul complex test") {
  CHECK(koszul_gorenstein_test(dual_numbers(), 8) == true);
  CHECK(koszul_gorenstein_test(two_loops_rad2(), 4) == false);
  CHECK_FALSE(koszul_gorenstein_test(two_loops_rad2(), 12).has_value());
  CHECK(koszul_gorenstein_test(field_k(), 8) == true);
  CHECK(koszul_gorenstein_test(commutative_xy(), 8) == true);
  for (auto a : {dual_numbers(), two_loops_rad2(), commutative_xy()}) {
    auto r = koszul_complex_test(a, 8);
    CHECK(r.complex.is_complex());
    CHECK(r.top_homology != 0);
  }
  CHECK_THROWS_AS(koszul_complex_test(kA2(), 8), ContractViolation);
  auto nc = parse_algebra("FIELD 1009\nNILBOUND 3\nVERTICES 1\nARROW x 0 0\nARROW y 0 0\nREL x*x\nREL y*y\nREL y*x\n");
  CHECK_THROWS_AS(koszul_complex_test(nc, 8), ContractViolation);
}

TEST_CASE("profile") {
  auto p = compute_profile(kA2(), 10);
  CHECK(p.gl_dim == DimValue::exact(1));
  CHECK(p.inj_dim_J_left == DimValue::exact(1));
  auto j = p.to_json();
  CHECK(j["gorenstein"]["verdict"] == "yes");
  CHECK(j["bound"] == 10);
  auto s = compute_profile(field_k(), 10);
  CHECK(s.gorenstein.yes());
  CHECK(s.gorenstein.d == 0);
  CHECK(s.gl_dim == DimValue::exact(0));
  CHECK(s.inj_dim_J_left.is_zero_module());
}

TEST_CASE("property: Zaks symmetry on the fixtures") {
  for (auto a : {kA2(), kA3_rad2(), auslander_dual_numbers(), dual_numbers(), commutative_xy(), cyclic_nakayama(3, 2),
                 cyclic_nakayama(2, 3)}) {
    auto g = detect_gorenstein(a, 10);
    if (!g.yes()) continue;
    CHECK(g.left == DimValue::exact(g.d));
    CHECK(g.right == DimValue::exact(g.d));
    if (g.d >= 1) {
      CHECK(gproj_dim_gorenstein(radical_module(a, Side::Left), g) == DimValue::exact(g.d - 1));
      CHECK(gproj_dim_gorenstein(radical_module(a, Side::Right), g) == DimValue::exact(g.d - 1));
    }
  }
}
