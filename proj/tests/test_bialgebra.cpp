#include "bialg/bialgebra.hpp"
#include "bialg/error.hpp"
#include "doctest.h"

using namespace bialg;

TEST_CASE("trivial bialgebra") {
  for (Backend b : {Backend::kFinSet, Backend::kFinVect})
    CHECK(check_bialgebra(trivial_bialgebra(b)).passed());
  CHECK(check_bialgebra(group_algebra(cyclic_group(1), Field())).passed());
  CHECK(group_algebra(cyclic_group(1), Field()).size() == 1);
  CHECK(monoid_bialgebra(trivial_monoid()).carrier == Obj::unit(Backend::kFinSet));
}

TEST_CASE("k[C2] by hand") {
  Field q;
  auto k = group_algebra(cyclic_group(2), q);
  // Columns e(x)e, e(x)g, g(x)e, g(x)g go to e, g, g, e.
  CHECK(k.mult.to_matrix() == Matrix::from_rows(q, {{1, 0, 0, 1}, {0, 1, 1, 0}}));
  CHECK(k.comult.to_matrix() == Matrix::from_rows(q, {{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
  CHECK(k.counit.to_matrix() == Matrix::from_rows(q, {{1, 1}}));
  CHECK(k.unit.to_matrix() == Matrix::from_rows(q, {{1}, {0}}));
  auto r = check_bialgebra(k);
  CHECK(r.passed());
  CHECK(r.clauses.size() == 11);

  // Delta'(g) = g (x) 1 breaks the counit law at column g.
  Bialgebra bad = k;
  bad.comult = Morph::from_table(k.carrier, tensor(k.carrier, k.carrier), {0, 2});
  auto rb = check_bialgebra(bad);
  CHECK_FALSE(rb.passed());
  const Clause* c = rb.find("counit-left");
  REQUIRE(c);
  CHECK_FALSE(c->passed);
  CHECK(*c->witness == std::vector<std::size_t>{0, 1});
}

TEST_CASE("group algebras over Q and F_p pass, including p dividing |G|") {
  for (const auto& g : small_groups(8)) {
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
      auto k = group_algebra(g.table, f, g.name);
      auto r = check_bialgebra(k);
      CHECK_MESSAGE(r.passed(), g.name, " ", f.name(), ": ", r.summary());
    }
  }
  CHECK_THROWS_AS(group_algebra(MonoidTable::from_rows({{0, 1}, {1, 1}}), Field()), ShapeError);
}

TEST_CASE("monoid bialgebras") {
  auto idem = MonoidTable::from_rows({{0, 1}, {1, 1}});
  auto b = monoid_bialgebra(idem);
  CHECK(check_bialgebra(b).passed());
  CHECK(monoid_of(b) == idem);
  CHECK(check_bialgebra(monoid_algebra(idem, Field())).passed());
  // 2(11) != (21)1.
  auto bad = MonoidTable::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 1, 1}});
  CHECK_THROWS_AS(monoid_bialgebra(bad), ShapeError);
  CHECK_THROWS_AS(monoid_bialgebra(MonoidTable::from_rows({{1, 0}, {0, 1}})), ShapeError);

  // Corrupting associativity of a FinSet structure is caught with a triple.
  Bialgebra c = monoid_bialgebra(cyclic_group(3));
  auto t = c.mult.table();
  t[1 * 3 + 1] = 0;
  c.mult = Morph::from_table(c.mult.source(), c.carrier, t);
  auto r = check_bialgebra(c);
  CHECK_FALSE(r.find("assoc")->passed);
  CHECK(r.find("assoc")->witness->size() == 3);
}

TEST_CASE("bialgebra morphisms") {
  Field q;
  auto k = group_algebra(cyclic_group(2), q);
  CHECK(check_bialg_morphism(identity_morphism(k)).passed());
  auto i = trivial_bialgebra(Backend::kFinVect, q);
  CHECK(check_bialg_morphism(BialgMorphism{k, i, k.counit}).passed());
  CHECK(check_bialg_morphism(zero_morphism(k, k)).passed());

  auto neg = Morph::from_matrix(k.carrier, k.carrier, Matrix::from_rows(q, {{1, 0}, {0, -1}}));
  auto r = check_bialg_morphism(BialgMorphism{k, k, neg});
  CHECK(r.find("mult")->passed);
  CHECK(r.find("unit")->passed);
  CHECK_FALSE(r.find("comult")->passed);
  CHECK(r.find("counit")->passed == false);

  // Group homomorphisms linearize to bialgebra morphisms; here C4 -> C2.
  auto c4 = group_algebra(cyclic_group(4), q);
  auto f = Morph::from_table(c4.carrier, k.carrier, {0, 1, 0, 1});
  CHECK(check_bialg_morphism(BialgMorphism{c4, k, f}).passed());
  auto nf = Morph::from_table(c4.carrier, k.carrier, {0, 1, 1, 1});
  CHECK_FALSE(check_bialg_morphism(BialgMorphism{c4, k, nf}).passed());
}

TEST_CASE("transport along a change of basis") {
  Field q;
  auto k = group_algebra(symmetric_group(3), q);
  // Upper unitriangular basis change.
  Matrix t = Matrix::identity(q, 6), ti = Matrix::identity(q, 6);
  for (std::size_t i = 0; i + 1 < 6; ++i) {
    t.set(i, i + 1, Rational(1));
  }
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) ti.set(i, j, Rational((j - i) % 2 ? -1 : 1));
  REQUIRE(mat_mul(t, ti) == Matrix::identity(q, 6));
  Morph tm = Morph::from_matrix(k.carrier, k.carrier, t);
  Morph tim = Morph::from_matrix(k.carrier, k.carrier, ti);
  auto k2 = transport(k, tm, tim);
  CHECK(check_bialgebra(k2).passed());
  CHECK(check_bialg_morphism(BialgMorphism{k, k2, tm}).passed());
}
