#include "bialg/actions.hpp"
#include "bialg/error.hpp"
#include "bialg/oracle.hpp"
#include "doctest.h"

using namespace bialg;

namespace {

SplitExtension point_extension(const MonoidPoint& p) {
  Bialgebra a = monoid_bialgebra(p.A), b = monoid_bialgebra(p.B);
  return *extension_from_point(a, b, Morph::from_table(a.carrier, b.carrier, p.alpha),
                               Morph::from_table(b.carrier, a.carrier, p.e));
}

}  // namespace

TEST_CASE("basic extensions pass") {
  auto c3 = monoid_bialgebra(cyclic_group(3));
  auto c2 = monoid_bialgebra(cyclic_group(2));
  CHECK(check_split_extension(trivial_extension(c3)).passed());
  auto pp = product_point(c3, c2);
  auto r = check_split_extension(pp);
  CHECK_MESSAGE(r.passed(), r.summary());
  auto k3 = group_algebra(cyclic_group(3), Field());
  auto k2 = group_algebra(cyclic_group(2), Field());
  CHECK(check_split_extension(product_point(k3, k2)).passed());
  CHECK(check_split_extension(trivial_extension(k3)).passed());
}

TEST_CASE("a non-Schreier point fails (3) or (4)") {
  bool seen = false;
  for (const auto& a : monoids_up_to(4))
    for (const auto& b : monoids_up_to(2))
      for (const auto& p : enumerate_points(a, b)) {
        if (is_schreier(p).schreier) continue;
        auto r = check_split_extension(point_extension(p));
        CHECK_FALSE(r.passed());
        CHECK((!r.find("(3)")->passed || !r.find("(4)")->passed));
        seen = true;
      }
  CHECK(seen);
}

TEST_CASE("lambda from the oracle and induced lambda agree on Schreier points") {
  for (const auto& a : monoids_up_to(3))
    for (const auto& b : monoids_up_to(3))
      for (const auto& p : enumerate_points(a, b)) {
        auto s = is_schreier(p);
        if (!s.schreier) continue;
        auto ext = point_extension(p);
        // The kernel inclusion lists kernel elements in increasing order.
        CHECK(ext.kappa.table() == s.kernel);
        for (std::size_t x = 0; x < a.order; ++x)
          CHECK(s.kernel[ext.lambda(x)] == s.lambda[x]);
      }
}

TEST_CASE("lambda is unique among all maps A -> X") {
  for (const auto& a : monoids_up_to(3))
    for (const auto& b : monoids_up_to(3))
      for (const auto& p : enumerate_points(a, b)) {
        if (!is_schreier(p).schreier) continue;
        auto ext = point_extension(p);
        std::size_t nx = ext.X.size(), na = a.order, count = 0, total = 1;
        for (std::size_t i = 0; i < na; ++i) total *= nx;
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<std::size_t> t(na);
          std::size_t c = code;
          for (auto& v : t) {
            v = c % nx;
            c /= nx;
          }
          SplitExtension other = ext;
          other.lambda = Morph::from_table(ext.A.carrier, ext.X.carrier, t);
          auto r = check_split_extension(other);
          if (r.passed()) {
            ++count;
            CHECK(equal(other.lambda, ext.lambda));
          }
        }
        CHECK(count == 1);
      }
}

TEST_CASE("morphisms and SSFL") {
  auto c3 = monoid_bialgebra(cyclic_group(3));
  auto c2 = monoid_bialgebra(cyclic_group(2));
  auto pp = product_point(c3, c2);
  CHECK(check_splitext_morphism(identity_morphism(pp)).passed());
  CHECK(ssfl_verify(identity_morphism(pp)).passed());

  auto bad = identity_morphism(pp);
  // p swaps the B coordinate, breaking the e square.
  std::vector<std::size_t> t(6);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t b = 0; b < 2; ++b) t[x * 2 + b] = x * 2 + (1 - b);
  bad.p = Morph::from_table(pp.A.carrier, pp.A.carrier, t);
  auto r = check_splitext_morphism(bad);
  CHECK_FALSE(r.passed());
  CHECK_THROWS_AS(ssfl_verify(bad), PreconditionError);
}

TEST_CASE("pullbacks, products, equalizers, composites") {
  auto c2t = cyclic_group(2);
  auto c2 = monoid_bialgebra(c2t);
  auto c3 = monoid_bialgebra(cyclic_group(3));
  auto pp = product_point(c3, c2);
  // Along id_B and along the unit.
  auto along_id = pullback_splitext_morphism(pp, identity_morphism(c2));
  CHECK(check_split_extension(along_id.source).passed());
  CHECK(check_splitext_morphism(along_id).passed());
  CHECK(is_iso(along_id.p));
  auto i = trivial_bialgebra(Backend::kFinSet);
  auto along_unit = pullback_splitext(pp, BialgMorphism{i, c2, c2.unit});
  CHECK(check_split_extension(along_unit).passed());
  CHECK(along_unit.A.size() == 3);

  auto prod = product_splitext(pp, trivial_extension(c2));
  CHECK(check_split_extension(prod).passed());

  auto same = equalizer_splitext(identity_morphism(pp), identity_morphism(pp));
  CHECK(check_split_extension(same).passed());
  CHECK(same.A.size() == pp.A.size());

  auto comp = compose_splitext(pp, trivial_extension(c2));
  CHECK(check_split_extension(comp).passed());
  // The second extension lands in I, so the composite kernel is all of A.
  CHECK(comp.X.size() == 6);

  // X (x) (Y (x) C) over C composed from two product points.
  auto c2b = monoid_bialgebra(c2t);
  auto inner = product_point(c2b, c2);  // Y -> B -> C with B = C2 x C2
  auto outer = product_point(c3, inner.A);
  auto both = compose_splitext(outer, inner);
  auto rb = check_split_extension(both);
  CHECK_MESSAGE(rb.passed(), rb.summary());
  CHECK(both.X.size() == 6);
}

TEST_CASE("actions and the equivalence") {
  auto c2t = cyclic_group(2), c3t = cyclic_group(3);
  auto c2 = monoid_bialgebra(c2t), c3 = monoid_bialgebra(c3t);
  CHECK(check_action(trivial_action(c2, c3)).passed());
  Action inv{c2, c3, Morph::from_table(tensor(c2.carrier, c3.carrier), c3.carrier,
                                       {0, 1, 2, 0, 2, 1})};
  CHECK(check_action(inv).passed());
  auto sd = semidirect_extension(inv);
  CHECK(check_split_extension(sd).passed());
  CHECK(find_isomorphism(monoid_of(sd.A), symmetric_group(3)).has_value());
  CHECK(equal(action_from_extension(sd).act, inv.act));
  CHECK(roundtrip_verify(sd).passed());

  auto pp = product_point(c3, c2);
  CHECK(equal(action_from_extension(pp).act, trivial_action(c2, c3).act));
  CHECK(equal(comparison(pp), Morph::identity(pp.A.carrier)));

  // Linear version: k[C3] |x k[C2] is k[S3].
  Field q;
  auto k2 = group_algebra(c2t, q), k3 = group_algebra(c3t, q);
  Action kinv{k2, k3, linearize(inv.act, q)};
  CHECK(check_action(kinv).passed());
  auto ksd = semidirect_extension(kinv);
  CHECK(check_split_extension(ksd).passed());
  auto iso = *find_isomorphism(monoid_of(sd.A), symmetric_group(3));
  auto ks3 = group_algebra(symmetric_group(3), q);
  Morph phi = Morph::from_table(ksd.A.carrier, ks3.carrier, iso);
  CHECK(check_bialg_morphism({ksd.A, ks3, phi}).passed());
  CHECK(is_iso(phi));
  CHECK(roundtrip_verify(ksd).passed());

  // A bad action: every b acts by the constant map to 1 breaks "unit".
  Action bad{c2, c3, Morph::from_table(tensor(c2.carrier, c3.carrier), c3.carrier,
                                       {0, 0, 0, 0, 0, 0})};
  auto rb = check_action(bad);
  CHECK_FALSE(rb.find("unit")->passed);
}

TEST_CASE("functor laws on morphisms") {
  auto c2t = cyclic_group(2), c3t = cyclic_group(3);
  auto c2 = monoid_bialgebra(c2t), c3 = monoid_bialgebra(c3t);
  Action inv{c2, c3, Morph::from_table(tensor(c2.carrier, c3.carrier), c3.carrier,
                                       {0, 1, 2, 0, 2, 1})};
  // Inversion on C3 commutes with the action.
  ActionMorphism f{inv, inv, Morph::identity(c2.carrier),
                   Morph::from_table(c3.carrier, c3.carrier, {0, 2, 1})};
  CHECK(check_action_morphism(f).passed());
  auto ef = extension_morphism_of(f);
  CHECK(check_splitext_morphism(ef).passed());
  auto back = action_morphism_of(ef);
  CHECK(equal(back.v, f.v));
  CHECK(equal(back.g, f.g));
  // G preserves composites: G(f f) = G(f) G(f).
  ActionMorphism ff{inv, inv, compose(f.g, f.g), compose(f.v, f.v)};
  auto eff = extension_morphism_of(ff);
  CHECK(equal(eff.p, compose(ef.p, ef.p)));
  CHECK(equal(eff.p, Morph::identity(eff.source.A.carrier)));
}

TEST_CASE("strong points") {
  auto c2 = monoid_bialgebra(cyclic_group(2));
  auto c3 = monoid_bialgebra(cyclic_group(3));
  auto pp = product_point(c3, c2);
  auto whole = SubBialgebra{pp.A, pp.A, Morph::identity(pp.A.carrier)};
  CHECK(is_strong_point(pp, {whole}).passed());
  // i1 is exempt: e does not factor through it.
  auto i1 = SubBialgebra{c3, pp.A, pp.kappa};
  auto r = is_strong_point(pp, {i1});
  CHECK(r.passed());
  CHECK(r.clauses[0].note.find("e ") != std::string::npos);
  auto notmono = SubBialgebra{pp.A, pp.A, compose(pp.e, pp.alpha)};
  CHECK_THROWS_AS(is_strong_point(pp, {notmono}), PreconditionError);
}
