#pragma once

// Actions B (x) X -> X of cocommutative bialgebras, semidirect products, and
// the passage between actions and split extensions in both directions.

#include "bialg/splitext.hpp"

namespace bialg {

struct Action {
  Bialgebra B, X;
  Morph act;  // B (x) X -> X
};

struct ActionMorphism {
  Action source, target;
  Morph g;  // B -> B'
  Morph v;  // X -> X'
};

/// Clause ids: "unit", "assoc", "on-unit", "on-mult", "counit", "comult".
Report check_action(const Action& a);

/// g and v are bialgebra maps and v act = act' (g (x) v).
Report check_action_morphism(const ActionMorphism& f);

/// eps_B (x) 1_X.
Action trivial_action(const Bialgebra& B, const Bialgebra& X);

/// F: act = lambda m (e (x) kappa).
Action action_from_extension(const SplitExtension& s);

/// X (x) B with m = (m (x) m)(1 (x) act (x) 1 (x) 1)(1 (x) 1 (x) s (x) 1)
/// (1 (x) D (x) 1 (x) 1), u = u (x) u, D = (1 (x) s (x) 1)(D (x) D),
/// eps = eps (x) eps.
Bialgebra semidirect_product(const Action& a);

/// G: X -i1-> X |x B -pi2-> B with section i2 and lambda = pi1.
SplitExtension semidirect_extension(const Action& a);

/// p = (lambda (x) alpha) D: A -> X |x B, for the semidirect extension of
/// the action of s.
Morph comparison(const SplitExtension& s);

/// G F s is again valid, (1_X, p, 1_B) is a morphism of split extensions
/// s -> G F s, p is an isomorphism, and F G F s = F s.
Report roundtrip_verify(const SplitExtension& s);

/// F on morphisms: (v, p, g) gives (g, v).
ActionMorphism action_morphism_of(const SplitExtMorphism& m);
/// G on morphisms: (g, v) gives (v, v (x) g, g).
SplitExtMorphism extension_morphism_of(const ActionMorphism& f);

}  // namespace bialg
