#pragma once

// Bialgebras (B, m, u, Delta, eps) in FinSet or FinVect, their morphisms,
// the axiom checkers, and the canonical instance factories.

#include <string>

#include "bialg/backend.hpp"
#include "bialg/monoid.hpp"
#include "bialg/report.hpp"

namespace bialg {

struct Bialgebra {
  Obj carrier;
  Morph mult;    // B (x) B -> B
  Morph unit;    // I -> B
  Morph comult;  // B -> B (x) B
  Morph counit;  // B -> I
  std::string name;

  Backend backend() const { return carrier.backend(); }
  Field field() const { return carrier.field(); }
  std::size_t size() const { return carrier.size(); }
  Obj unit_object() const { return Obj::unit(backend(), field()); }
};

struct BialgMorphism {
  Bialgebra source;
  Bialgebra target;
  Morph arrow;
};

/// Throws ShapeError if the structure maps do not have the arities of a
/// bialgebra on b.carrier.
void check_bialgebra_shape(const Bialgebra& b);

/// Unit, associativity, coassociativity, counit, the four compatibility
/// identities (Delta and eps are algebra maps) and cocommutativity.
Report check_bialgebra(const Bialgebra& b);

/// The algebra squares (f m = m' (f (x) f), f u = u') and the coalgebra
/// squares (Delta' f = (f (x) f) Delta, eps' f = eps).
Report check_bialg_morphism(const BialgMorphism& f);

/// Delta' f = (f (x) f) Delta and eps' f = eps only.
Report check_coalgebra_morphism(const Morph& f, const Bialgebra& source,
                                const Bialgebra& target);

/// The unit object I with its trivial bialgebra structure.
Bialgebra trivial_bialgebra(Backend b, Field f = Field::rationals());

/// A monoid as a bialgebra in FinSet: m is the table, Delta the diagonal,
/// eps the unique map to the point. Throws ShapeError on a non-monoid.
Bialgebra monoid_bialgebra(const MonoidTable& table, std::string name = {});

/// The monoid algebra k[M]: basis indexed by M, m linearizes the table,
/// Delta(x) = x (x) x, eps(x) = 1, u = e_0. Throws ShapeError on a
/// non-monoid.
Bialgebra monoid_algebra(const MonoidTable& table, Field f, std::string name = {});

/// k[G]; throws ShapeError unless the table is a group.
Bialgebra group_algebra(const GroupTable& table, Field f, std::string name = {});

/// Reads the multiplication table back off a FinSet bialgebra.
MonoidTable monoid_of(const Bialgebra& b);

/// Free linearization of a FinSet bialgebra (or morphism) into FinVect.
Bialgebra linearize(const Bialgebra& b, Field f);
Morph linearize(const Morph& m, Field f);

/// 1_B as a bialgebra morphism.
BialgMorphism identity_morphism(const Bialgebra& b);
/// u_B . eps_A, the zero morphism A -> B.
BialgMorphism zero_morphism(const Bialgebra& a, const Bialgebra& b);
BialgMorphism compose(const BialgMorphism& g, const BialgMorphism& f);

/// Transports the structure of b along an isomorphism t: b.carrier -> Y,
/// giving a bialgebra on Y for which t is a bialgebra isomorphism.
/// `t_inverse` must be the inverse of t.
Bialgebra transport(const Bialgebra& b, const Morph& t, const Morph& t_inverse);

}  // namespace bialg
