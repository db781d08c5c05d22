#include <algorithm>

#include "bialg/corpus.hpp"
#include "bialg/error.hpp"
#include "doctest.h"

using namespace bialg;

TEST_CASE("extension morphisms") {
  auto exts = schreier_monoid_extensions(2);
  REQUIRE(!exts.empty());
  for (const auto& s : exts) {
    auto ms = extension_morphisms(s, s);
    CHECK(std::any_of(ms.begin(), ms.end(), [&](const SplitExtMorphism& m) {
      return equal(m.p, Morph::identity(s.A.carrier));
    }));
  }
  // S3 as C3 |x C2: with g = 1, p fixes the transposition and the sign, so p
  // is conjugation by 1 or t, or e alpha; with g = 0 only p = 0 remains.
  auto gs = group_split_extensions(6);
  auto s3 = std::find_if(gs.begin(), gs.end(), [](auto& s) { return s.name == "C3|xC2#1"; });
  REQUIRE(s3 != gs.end());
  CHECK(extension_morphisms(*s3, *s3).size() == 4);
  CHECK_THROWS_AS(extension_morphisms(linearize(*s3, Field()), *s3), BackendMismatch);
}

TEST_CASE("seeded instances are reproducible") {
  auto a = ssfl_instances(12, 3), b = ssfl_instances(12, 3), c = ssfl_instances(12, 4);
  REQUIRE(a.size() == 12);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(equal(a[i].p, b[i].p));
    CHECK(check_splitext_morphism(a[i]).passed());
    differs = differs || !(a[i].p.source().field() == c[i].p.source().field()) ||
              !equal(a[i].p, c[i].p);
  }
  CHECK(differs);
}

TEST_CASE("relation corpus") {
  auto rc = relation_corpus();
  CHECK(rc.size() >= 20);
  std::size_t finvect = 0;
  for (const auto& p : rc) {
    CHECK(check_relation(p.r).passed());
    CHECK(p.r.A().carrier == p.s.A().carrier);
    finvect += p.r.R().backend() == Backend::kFinVect;
  }
  CHECK(finvect >= 5);
}
