#pragma once

// Finite limits of cocommutative bialgebras. Products are tensor products;
// equalizers and pullbacks are backend equalizers of the comultiplication
// twisted pairs, with the structure restricted along the inclusion.

#include "bialg/bialgebra.hpp"

namespace bialg {

/// A bialgebra together with a monomorphic bialgebra map into an ambient
/// bialgebra.
struct SubBialgebra {
  Bialgebra object;
  Bialgebra ambient;
  Morph inclusion;

  BialgMorphism as_morphism() const { return {object, ambient, inclusion}; }
};

/// A (x) B with m = (m (x) m)(1 (x) s (x) 1), D = (1 (x) s (x) 1)(D (x) D).
Bialgebra tensor_bialgebra(const Bialgebra& a, const Bialgebra& b);

struct ProductCone {
  Bialgebra apex;
  BialgMorphism proj_left;   // 1 (x) eps_B
  BialgMorphism proj_right;  // eps_A (x) 1
};

ProductCone product(const Bialgebra& a, const Bialgebra& b);

/// (f (x) g) D_C into the product of the two targets.
BialgMorphism pairing(const BialgMorphism& f, const BialgMorphism& g);

/// The structure of `ambient` restricted to the image of the mono
/// `inclusion`. Throws InvariantViolation if the image is not closed under
/// the structure maps or the restriction fails check_bialgebra.
Bialgebra restrict_bialgebra(const Bialgebra& ambient, const Morph& inclusion,
                             std::string name = {});

/// True when the image of the mono `inclusion` is closed under m, u and D.
bool is_sub_bialgebra(const Bialgebra& ambient, const Morph& inclusion);

/// The equalizer of (f (x) 1) D and (g (x) 1) D with the restricted
/// structure.
SubBialgebra equalizer_bialg(const BialgMorphism& f, const BialgMorphism& g);

struct PullbackCone {
  Bialgebra apex;        // A (x)_B C
  Morph inclusion;       // into A (x) C
  BialgMorphism proj_left;   // (1 (x) eps_C) inclusion
  BialgMorphism proj_right;  // (eps_A (x) 1) inclusion
};

/// Pullback of f: A -> B and g: C -> B.
PullbackCone pullback_bialg(const BialgMorphism& f, const BialgMorphism& g);

/// The unique map into the pullback with the given legs, or nullopt when
/// the legs do not form a commutative square.
std::optional<BialgMorphism> pullback_pairing(const PullbackCone& p,
                                              const BialgMorphism& left,
                                              const BialgMorphism& right);

/// Equalizer of f and u_B eps_A.
SubBialgebra kernel_bialg(const BialgMorphism& f);

}  // namespace bialg
