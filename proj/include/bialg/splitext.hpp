#pragma once

// Split extensions X -k-> A <-e-/-a-> B with the coalgebra retraction
// lambda: A -> X, their morphisms, and the constructions under which the
// class is closed.

#include <optional>
#include <string>
#include <vector>

#include "bialg/limits.hpp"

namespace bialg {

struct SplitExtension {
  Bialgebra X, A, B;
  Morph kappa;   // X -> A
  Morph alpha;   // A -> B
  Morph e;       // B -> A
  Morph lambda;  // A -> X, coalgebra map only
  std::string name;

  BialgMorphism kappa_morphism() const { return {X, A, kappa}; }
  BialgMorphism alpha_morphism() const { return {A, B, alpha}; }
  BialgMorphism e_morphism() const { return {B, A, e}; }
};

struct SplitExtMorphism {
  SplitExtension source, target;
  Morph v;  // X -> X'
  Morph p;  // A -> A'
  Morph g;  // B -> B'
};

/// Conditions (1) to (5), the kernel property of kappa and the derived
/// lambda-multiplication identity. Clause ids: "kappa.*", "alpha.*", "e.*"
/// for the bialgebra morphism squares, then "(1)a", "(1)b", "(2)a", "(2)b",
/// "(3)", "(4)", "(5)a", "(5)b", "(5)c", "kernel", "lemma".
Report check_split_extension(const SplitExtension& s);

/// The clauses that follow from (3), (4) and lambda being a coalgebra map:
/// lambda kappa = 1, lambda e = u eps, lambda u = u and the lambda
/// multiplication identity.
Report check_derived_conditions(const SplitExtension& s);

/// The bialgebra morphism squares for v, p, g and the four squares with
/// kappa, alpha, e and lambda.
Report check_splitext_morphism(const SplitExtMorphism& m);

/// If v and g are isomorphisms then so is p. Throws PreconditionError when
/// m is not a morphism of split extensions.
Report ssfl_verify(const SplitExtMorphism& m);

/// The lambda forced by (4), lambda m (kappa (x) e) = 1 (x) eps. FinSet:
/// lambda(kappa(x) e(b)) = x, first solution wins, unit elsewhere; always
/// returns a map. FinVect: a linear solve, nullopt when (4) has no
/// solution.
std::optional<Morph> induced_lambda(const Bialgebra& X, const Bialgebra& A,
                                    const Bialgebra& B, const Morph& kappa,
                                    const Morph& e);

/// Completes a point (alpha, e) with its bialgebra kernel and the induced
/// lambda; nullopt only when no lambda satisfies (4) (FinVect).
std::optional<SplitExtension> extension_from_point(const Bialgebra& A, const Bialgebra& B,
                                                   const Morph& alpha, const Morph& e,
                                                   std::string name = {});

/// X -> X -> I with lambda = 1.
SplitExtension trivial_extension(const Bialgebra& X);
/// X -i1-> X (x) B -pi2-> B with section i2 and lambda = pi1.
SplitExtension product_point(const Bialgebra& X, const Bialgebra& B);

/// The identity triple (1_X, 1_A, 1_B).
SplitExtMorphism identity_morphism(const SplitExtension& s);

/// Upper row of the pullback of s along g: C -> B.
SplitExtension pullback_splitext(const SplitExtension& s, const BialgMorphism& g);
/// The morphism (1_X, p_A, g) from the pullback of s along g to s; its
/// source is pullback_splitext(s, g).
SplitExtMorphism pullback_splitext_morphism(const SplitExtension& s,
                                            const BialgMorphism& g);

SplitExtension product_splitext(const SplitExtension& s, const SplitExtension& t);

/// Componentwise equalizer of two morphisms with the same endpoints.
SplitExtension equalizer_splitext(const SplitExtMorphism& m, const SplitExtMorphism& n);
/// The componentwise inclusion of equalizer_splitext(m, n) into the common
/// source.
SplitExtMorphism equalizer_splitext_morphism(const SplitExtMorphism& m,
                                             const SplitExtMorphism& n);

/// s: X -> A -> B followed by t: Y -> B -> C gives Z -> A -> C with
/// section e e' and Z the kernel of alpha' alpha.
SplitExtension compose_splitext(const SplitExtension& s, const SplitExtension& t);

/// For every mono mu into A through which kappa and e both factor, checks
/// that mu is an isomorphism. Throws PreconditionError on a non-mono.
Report is_strong_point(const SplitExtension& s, const std::vector<SubBialgebra>& subs);

}  // namespace bialg
