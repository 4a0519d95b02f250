#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebras.hpp"

using namespace radhom;
using namespace radhom::testing;

TEST_CASE("basis examples") {
  auto k = field_k();
  CHECK(k->dim() == 1);
  CHECK(k->is_semisimple());
  auto d = dual_numbers();
  CHECK(d->dim() == 2);
  CHECK(d->basis_path(1).arrows == Path{0});
  CHECK(d->is_commutative());
  auto a2 = kA2();
  CHECK(a2->dim() == 3);
  CHECK(a2->paths(0, 1).size() == 1);
  CHECK(a2->paths(1, 0).empty());
}

TEST_CASE("relations reduce the basis") {
  CHECK(kA3_rad2()->dim() == 5);
  CHECK(commutative_xy()->dim() == 4);
  CHECK(commutative_xy()->is_commutative());
  CHECK_FALSE(two_loops_rad2()->dim() != 3);
  CHECK(auslander_dual_numbers()->dim() == 5);
  CHECK(cyclic_nakayama(3, 2)->dim() == 6);
}

TEST_CASE("normal form of products with a commutation relation") {
  auto a = commutative_xy();
  auto xy = a->normal_form(parse_path(a->quiver(), "x*y"));
  auto yx = a->normal_form(parse_path(a->quiver(), "y*x"));
  REQUIRE(xy.size() == 1);
  REQUIRE(yx.size() == 1);
  CHECK(xy[0].first == yx[0].first);
  CHECK(xy[0].second == yx[0].second);
  CHECK(a->normal_form(parse_path(a->quiver(), "x*x")).empty());
  CHECK(a->check_associativity());
}

TEST_CASE("opposite algebra") {
  auto k = field_k();
  CHECK(same_algebra(*k->opposite(), *k));
  auto op = kA2()->opposite();
  CHECK(op->dim() == 3);
  CHECK(op->quiver().arrows[0].source == 1);
  CHECK(op->quiver().arrows[0].target == 0);
  CHECK(same_algebra(*op->opposite(), *kA2()));
  auto d = dual_numbers()->opposite();
  CHECK(d->dim() == 2);
  CHECK(d->is_commutative());
}

TEST_CASE("presentation errors carry line and column") {
  try {
    parse_algebra("FIELD 7\nNILBOUND 2\nVERTICES 1\nARROW x 0 3\n");
    FAIL("expected a presentation error");
  } catch (const PresentationError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 11);
  }
  CHECK_THROWS_AS(parse_algebra("FIELD 7\nNILBOUND 3\nVERTICES 1\nARROW x 0 0\nREL x\n"), PresentationError);
  CHECK_THROWS_AS(parse_algebra("FIELD 7\nNILBOUND 1\nVERTICES 1\n"), PresentationError);
  CHECK_THROWS_AS(parse_algebra("FIELD 7\nNILBOUND 2\nVERTICES 1\nBOGUS\n"), PresentationError);
  CHECK_THROWS_AS(parse_algebra("FIELD 8\nNILBOUND 2\nVERTICES 1\n"), PresentationError);
}

TEST_CASE("print and reparse round trip with a stable fingerprint") {
  for (auto a : {kA2(), commutative_xy(), auslander_dual_numbers(), cyclic_nakayama(3, 3)}) {
    auto b = parse_algebra(print_algebra(*a));
    CHECK(print_algebra(*b) == print_algebra(*a));
    CHECK(fingerprint(*a) == fingerprint(*b));
    CHECK(fingerprint_hex(*a).size() == 16);
  }
  CHECK(fingerprint(*kA2()) != fingerprint(*kA2("Q")));
}

TEST_CASE("property: structure constants are associative and unital") {
  for (auto a : {kA3_rad2(), commutative_xy(), auslander_dual_numbers(), cyclic_nakayama(2, 3), two_loops_rad2()}) {
    CHECK(a->check_associativity());
    for (int i = 0; i < a->dim(); ++i) {
      int src = a->basis_path(i).source, dst = a->basis_path(i).target;
      auto l = a->product(a->vertex_element(dst), i);
      auto r = a->product(i, a->vertex_element(src));
      REQUIRE(l.size() == 1);
      REQUIRE(r.size() == 1);
      CHECK(l[0].first == i);
      CHECK(r[0].first == i);
    }
  }
}
