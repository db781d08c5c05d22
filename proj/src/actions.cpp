#include "bialg/actions.hpp"

#include "bialg/error.hpp"

namespace bialg {

namespace {

void check_shape(const Action& a) {
  check_bialgebra_shape(a.B);
  check_bialgebra_shape(a.X);
  if (!a.act.valid() || !(a.act.source() == tensor(a.B.carrier, a.X.carrier)) ||
      !(a.act.target() == a.X.carrier))
    throw ShapeError("action map must be B (x) X -> X");
}

}  // namespace

Report check_action(const Action& a) {
  check_shape(a);
  const Bialgebra& B = a.B;
  const Bialgebra& X = a.X;
  const Morph& t = a.act;
  Morph ib = Morph::identity(B.carrier), ix = Morph::identity(X.carrier);
  Morph mid = tensor({ib, braiding(B.carrier, X.carrier), ix});
  Report r;
  r.check = "action";
  r.expect_equal("unit", "t (u_B (x) 1) = 1", compose(t, tensor(B.unit, ix)), ix);
  r.expect_equal("assoc", "t (1 (x) t) = t (m (x) 1)", compose(t, tensor(ib, t)),
                 compose(t, tensor(B.mult, ix)));
  r.expect_equal("on-unit", "t (1 (x) u_X) = u_X eps_B", compose(t, tensor(ib, X.unit)),
                 compose(X.unit, B.counit));
  r.expect_equal("on-mult", "t (1 (x) m) = m (t (x) t)(1 (x) s (x) 1)(D (x) 1 (x) 1)",
                 compose(t, tensor(ib, X.mult)),
                 compose_chain({tensor({B.comult, ix, ix}), mid, tensor(t, t), X.mult}));
  r.expect_equal("counit", "eps_X t = eps_B (x) eps_X", compose(X.counit, t),
                 tensor(B.counit, X.counit));
  r.expect_equal("comult", "D t = (t (x) t)(1 (x) s (x) 1)(D (x) D)", compose(X.comult, t),
                 compose_chain({tensor(B.comult, X.comult), mid, tensor(t, t)}));
  return r;
}

Report check_action_morphism(const ActionMorphism& f) {
  check_shape(f.source);
  check_shape(f.target);
  Report r;
  r.check = "action-morphism";
  r.absorb(check_bialg_morphism({f.source.B, f.target.B, f.g}), "g.");
  r.absorb(check_bialg_morphism({f.source.X, f.target.X, f.v}), "v.");
  r.expect_equal("square", "v t = t' (g (x) v)", compose(f.v, f.source.act),
                 compose(f.target.act, tensor(f.g, f.v)));
  return r;
}

Action trivial_action(const Bialgebra& B, const Bialgebra& X) {
  return Action{B, X, tensor(B.counit, Morph::identity(X.carrier))};
}

Action action_from_extension(const SplitExtension& s) {
  return Action{s.B, s.X, compose_chain({tensor(s.e, s.kappa), s.A.mult, s.lambda})};
}

Bialgebra semidirect_product(const Action& a) {
  check_shape(a);
  const Bialgebra& B = a.B;
  const Bialgebra& X = a.X;
  Morph ib = Morph::identity(B.carrier), ix = Morph::identity(X.carrier);
  Morph mult = compose_chain({tensor({ix, B.comult, ix, ib}),
                              tensor({ix, ib, braiding(B.carrier, X.carrier), ib}),
                              tensor({ix, a.act, ib, ib}), tensor(X.mult, B.mult)});
  Morph comult = compose(tensor({ix, braiding(X.carrier, B.carrier), ib}),
                         tensor(X.comult, B.comult));
  std::string name;
  if (!X.name.empty() || !B.name.empty()) name = X.name + "|x" + B.name;
  return Bialgebra{tensor(X.carrier, B.carrier), mult, tensor(X.unit, B.unit), comult,
                   tensor(X.counit, B.counit), std::move(name)};
}

SplitExtension semidirect_extension(const Action& a) {
  const Bialgebra& B = a.B;
  const Bialgebra& X = a.X;
  Morph ib = Morph::identity(B.carrier), ix = Morph::identity(X.carrier);
  return SplitExtension{X,
                        semidirect_product(a),
                        B,
                        tensor(ix, B.unit),
                        tensor(X.counit, ib),
                        tensor(X.unit, ib),
                        tensor(ix, B.counit),
                        "semidirect"};
}

Morph comparison(const SplitExtension& s) {
  return compose(tensor(s.lambda, s.alpha), s.A.comult);
}

Report roundtrip_verify(const SplitExtension& s) {
  Report r;
  r.check = "roundtrip";
  Action a = action_from_extension(s);
  r.absorb(check_action(a), "action.");
  SplitExtension g = semidirect_extension(a);
  r.absorb(check_split_extension(g), "semidirect.");
  SplitExtMorphism p{s, g, Morph::identity(s.X.carrier), comparison(s),
                     Morph::identity(s.B.carrier)};
  Report pm = check_splitext_morphism(p);
  r.absorb(pm, "comparison.");
  r.expect("comparison-iso", "p = (l (x) a) D is an isomorphism", is_iso(p.p));
  Action back = action_from_extension(g);
  r.expect_equal("action-recovered", "F G F s = F s", back.act, a.act);
  return r;
}

ActionMorphism action_morphism_of(const SplitExtMorphism& m) {
  return ActionMorphism{action_from_extension(m.source), action_from_extension(m.target),
                        m.g, m.v};
}

SplitExtMorphism extension_morphism_of(const ActionMorphism& f) {
  return SplitExtMorphism{semidirect_extension(f.source), semidirect_extension(f.target),
                          f.v, tensor(f.v, f.g), f.g};
}

}  // namespace bialg
