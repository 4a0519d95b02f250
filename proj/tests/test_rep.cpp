#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebras.hpp"
#include "radhom/resolve.hpp"

using namespace radhom;
using namespace radhom::testing;

TEST_CASE("simples") {
  auto a = kA2();
  CHECK(simple(a, 0).dims() == std::vector<int>{1, 0});
  CHECK(simple(a, 1).dims() == std::vector<int>{0, 1});
  Rep s = simple(dual_numbers(), 0);
  CHECK(s.dims() == std::vector<int>{1});
  CHECK(s.arrow(0).is_zero());
}

TEST_CASE("projectives") {
  CHECK(isomorphic(projective(field_k(), 0), simple(field_k(), 0)));
  auto a = kA2();
  CHECK(projective(a, 0).dims() == std::vector<int>{1, 1});
  CHECK(projective(a, 1).dims() == std::vector<int>{0, 1});
  CHECK(projective(a, 0, Side::Right).dims() == std::vector<int>{1, 0});
  CHECK(projective(a, 1, Side::Right).dims() == std::vector<int>{1, 1});
  CHECK(projective(dual_numbers(), 0).dims() == std::vector<int>{2});
  for (auto alg : {kA2(), commutative_xy(), auslander_dual_numbers(), cyclic_nakayama(3, 2)})
    for (Side s : {Side::Left, Side::Right})
      for (int v = 0; v < alg->vertex_count(); ++v) CHECK(projective(alg, v, s).satisfies_relations());
}

TEST_CASE("duality") {
  auto a = kA2();
  Rep ds = duality_D(simple(a, 1));
  CHECK(ds.side() == Side::Right);
  CHECK(isomorphic(ds, simple(a, 1, Side::Right)));
  Rep dp = duality_D(projective(a, 0));
  CHECK(dp.dims() == std::vector<int>{1, 1});
  CHECK(isomorphic(dp, injective(a, 0, Side::Right)));
  CHECK(duality_D(zero_module(a)).is_zero());
  CHECK(duality_D(duality_D(projective(a, 0))) == projective(a, 0));
}

TEST_CASE("radical, top and socle") {
  auto a = kA2();
  Rep ss = top_of_algebra(a);
  auto rts = radical_top_socle(ss);
  CHECK(rts.rad.module.is_zero());
  CHECK(rts.top.module.dims() == ss.dims());
  CHECK(rts.soc.module.dims() == ss.dims());
  auto reg = radical_top_socle(regular_module(dual_numbers()));
  CHECK(reg.rad.module.total_dim() == 1);
  CHECK(reg.top.module.total_dim() == 1);
  CHECK(reg.soc.module.total_dim() == 1);
  auto p1 = radical_top_socle(projective(a, 0));
  CHECK(isomorphic(p1.top.module, simple(a, 0)));
  CHECK(isomorphic(p1.rad.module, simple(a, 1)));
}

TEST_CASE("radical module") {
  CHECK(radical_module(field_k()).is_zero());
  CHECK(isomorphic(radical_module(dual_numbers()), simple(dual_numbers(), 0)));
  CHECK(radical_module(kA2()).dims() == std::vector<int>{0, 1});
  CHECK(radical_module(kA2(), Side::Right).dims() == std::vector<int>{1, 0});
}

TEST_CASE("hom spaces") {
  auto a = kA2();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(hom_dim(simple(a, i), simple(a, j)) == (i == j ? 1 : 0));
  CHECK(hom_dim(projective(a, 0), projective(a, 0)) == 1);
  CHECK(hom_space(projective(a, 0), zero_module(a)).empty());
  for (const auto& f : hom_space(projective(a, 0), regular_module(a))) CHECK(f.is_homomorphism());
}

TEST_CASE("direct sums") {
  auto a = kA2();
  CHECK(direct_sum(a, Side::Left, {}).is_zero());
  Rep s = direct_sum({simple(a, 0), simple(a, 1)});
  CHECK(s.dims() == std::vector<int>{1, 1});
  CHECK(s.arrow(0).is_zero());
  CHECK(isomorphic(s, top_of_algebra(a)));
  Rep p = direct_sum({projective(a, 0), projective(a, 1)});
  CHECK(p.dims() == std::vector<int>{1, 2});
  CHECK(isomorphic(p, regular_module(a)));
}

TEST_CASE("right modules match left modules over the opposite algebra") {
  auto a = auslander_dual_numbers();
  for (int v = 0; v < 2; ++v) {
    Rep r = projective(a, v, Side::Right);
    Rep l = to_left_op(r);
    CHECK(l.side() == Side::Left);
    CHECK(isomorphic(l, projective(a->opposite(), v)));
    CHECK(from_left_op(l, a) == r);
  }
}

TEST_CASE("module literals round trip and reject relation violations") {
  auto a = auslander_dual_numbers();
  for (Rep m : {projective(a, 1), injective(a, 0), radical_module(a)}) {
    Rep back = parse_module_literal(a, module_literal(m));
    CHECK(back == m);
  }
  CHECK_THROWS(parse_module_literal(a, "MODULE left 1 1 ; ARROWMAT a = [[1]] ; ARROWMAT b = [[1]]"));
}

TEST_CASE("property: Yoneda, dim Hom(P_v, M) = dim M_v") {
  for (auto a : {kA3_rad2(), auslander_dual_numbers(), commutative_xy(), cyclic_nakayama(3, 3)}) {
    std::vector<Rep> ms{regular_module(a), dual_regular_module(a), radical_module(a), top_of_algebra(a)};
    for (int v = 0; v < a->vertex_count(); ++v) ms.push_back(syzygy(simple(a, v), 1));
    for (const Rep& m : ms)
      for (int v = 0; v < a->vertex_count(); ++v) CHECK(hom_dim(projective(a, v), m) == m.dim_at(v));
  }
}

TEST_CASE("property: radical powers descend to zero by the nilpotency bound") {
  for (auto a : {kA3_rad2(), auslander_dual_numbers(), commutative_xy(), cyclic_nakayama(2, 4)}) {
    Rep reg = regular_module(a);
    int prev = reg.total_dim();
    for (int i = 1; i <= a->nilbound(); ++i) {
      Rep p = radical_power(reg, i);
      CHECK(p.total_dim() <= prev);
      prev = p.total_dim();
    }
    CHECK(prev == 0);
    CHECK(radical_power(reg, 1).dims() == radical_module(a).dims());
  }
}
