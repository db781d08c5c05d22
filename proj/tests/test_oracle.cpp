#include <algorithm>

#include "bialg/error.hpp"
#include "bialg/oracle.hpp"
#include "doctest.h"

using namespace bialg;

TEST_CASE("monoid counts up to isomorphism") {
  CHECK(enumerate_monoids(1).size() == 1);
  auto two = enumerate_monoids(2);
  REQUIRE(two.size() == 2);
  CHECK(std::count_if(two.begin(), two.end(), [](auto& m) { return is_group(m); }) == 1);
  CHECK(enumerate_monoids(3).size() == 7);
  CHECK(enumerate_monoids(4).size() == 35);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto a = enumerate_monoids(n);
    auto b = enumerate_monoids_backtracking(n);
    CHECK(a.size() == b.size());
    // Same classes: every brute-force representative is isomorphic to
    // exactly one backtracking representative.
    for (const auto& m : a) {
      int hits = 0;
      for (const auto& k : b) hits += find_isomorphism(m, k).has_value();
      CHECK(hits == 1);
    }
  }
  CHECK_THROWS_AS(enumerate_monoids(5), CapExceeded);
}

TEST_CASE("homomorphisms and points") {
  auto c2 = cyclic_group(2);
  auto v4 = direct_product(c2, c2);
  // Retractions of C2 x C2 onto C2: 3 surjections, 2 sections each.
  CHECK(enumerate_points(v4, c2).size() == 6);
  CHECK(monoid_homs(v4, c2).size() == 4);
  CHECK(monoid_homs(cyclic_group(4), cyclic_group(6)).size() == 2);

  for (const auto& a : monoids_up_to(3)) {
    auto pts = enumerate_points(a, trivial_monoid());
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].e == Map{0});
    Map id(a.order);
    for (std::size_t i = 0; i < a.order; ++i) id[i] = i;
    auto self = enumerate_points(a, a);
    CHECK(std::any_of(self.begin(), self.end(),
                      [&](auto& p) { return p.alpha == id && p.e == id; }));
    // Exhaustive check of the hom enumeration on small targets.
    for (const auto& b : monoids_up_to(3)) {
      std::size_t brute = 0;
      Map f(a.order, 0);
      std::size_t total = 1;
      for (std::size_t i = 0; i < a.order; ++i) total *= b.order;
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (auto& v : f) {
          v = c % b.order;
          c /= b.order;
        }
        brute += is_monoid_hom(a, b, f);
      }
      CHECK(monoid_homs(a, b).size() == brute);
    }
  }
}

TEST_CASE("Schreier condition") {
  auto c2 = cyclic_group(2);
  auto v4 = direct_product(c2, c2);
  // Product point: pi2 with section i2, lambda = pi1.
  MonoidPoint prod{v4, c2, {0, 1, 0, 1}, {0, 1}};
  auto r = is_schreier(prod);
  CHECK(r.schreier);
  CHECK(r.lambda == Map{0, 0, 2, 2});
  Map id{0, 1, 2};
  auto m3 = enumerate_monoids(3)[0];
  auto idp = is_schreier(MonoidPoint{m3, m3, id, id});
  CHECK(idp.schreier);
  CHECK(idp.lambda == Map{0, 0, 0});

  std::size_t non_schreier = 0;
  for (const auto& a : monoids_up_to(4))
    for (const auto& b : monoids_up_to(3))
      for (const auto& p : enumerate_points(a, b)) {
        auto s = is_schreier(p);
        if (!s.schreier) {
          ++non_schreier;
          CHECK(s.witness.has_value());
        }
      }
  CHECK(non_schreier > 0);
  CHECK_THROWS_AS(is_schreier(MonoidPoint{c2, c2, {0, 0}, {0, 1}}), PreconditionError);
}

TEST_CASE("submonoids and subgroups") {
  CHECK(enumerate_submonoids(trivial_monoid()).size() == 1);
  CHECK(enumerate_submonoids(cyclic_group(2)).size() == 2);
  CHECK(enumerate_subgroups(symmetric_group(3)).size() == 6);
  CHECK(enumerate_subgroups(quaternion_group()).size() == 6);
  CHECK(enumerate_subgroups(dihedral_group(4)).size() == 10);
  CHECK(enumerate_subgroups(direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)))).size() == 16);
  // For groups, closed subsets from the submonoid scan are the subgroups.
  for (const auto& g : small_groups(6)) {
    auto t = enumerate_submonoids(g.table);
    auto u = enumerate_subgroups(g.table);
    std::sort(t.begin(), t.end());
    std::sort(u.begin(), u.end());
    CHECK(t == u);
  }
  CHECK_THROWS_AS(enumerate_submonoids(cyclic_group(7)), CapExceeded);
  auto subs = enumerate_subgroup_algebras(symmetric_group(3), Field());
  CHECK(subs.size() == 6);
  for (const auto& s : subs) {
    CHECK(check_bialg_morphism(s.as_morphism()).passed());
    CHECK(is_mono(s.inclusion));
  }
}

TEST_CASE("monoid actions") {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  // C2 acts on C3 trivially or by inversion.
  auto acts = enumerate_monoid_actions(c2, c3);
  CHECK(acts.size() == 2);
  // On C2 only the trivial action exists: Aut(C2) is trivial.
  CHECK(enumerate_monoid_actions(c2, c2).size() == 1);
  CHECK(endomorphisms(c3).size() == 3);
  CHECK(endomorphisms(c3)[0] == Map{0, 1, 2});
}

TEST_CASE("isomorphism search") {
  auto s3 = symmetric_group(3);
  auto d3 = dihedral_group(3);
  CHECK(find_isomorphism(s3, d3).has_value());
  CHECK_FALSE(find_isomorphism(s3, cyclic_group(6)).has_value());
}
