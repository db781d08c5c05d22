#pragma once

// Instance generators shared by the test suites, the acceptance runner and
// the CLI suite command. Everything is deterministic for a fixed seed.

#include <cstdint>
#include <string>
#include <vector>

#include "bialg/actions.hpp"
#include "bialg/commutators.hpp"
#include "bialg/oracle.hpp"

namespace bialg {

/// The FinSet extension of a Schreier point. Throws PreconditionError when
/// the point is not Schreier.
SplitExtension extension_of_point(const MonoidPoint& p, std::string name = {});

/// Extensions of all Schreier points between monoids of order <= max_order.
std::vector<SplitExtension> schreier_monoid_extensions(std::size_t max_order);

/// Every monoid of order <= max_order with every point onto a monoid of
/// order <= max_order, Schreier or not.
std::vector<MonoidPoint> monoid_points(std::size_t max_order);

/// All morphisms (v, p, g) between two FinSet extensions of monoids: p and
/// g range over monoid homomorphisms, v is induced on kernels, and the
/// result must pass check_splitext_morphism.
std::vector<SplitExtMorphism> extension_morphisms(const SplitExtension& s,
                                                  const SplitExtension& t);

/// X |x B for groups X, B with |X| |B| <= max_order, every action of B on
/// X, in FinSet. Both factors are nontrivial.
std::vector<SplitExtension> group_split_extensions(std::size_t max_order);

SplitExtension linearize(const SplitExtension& s, Field f);
SplitExtMorphism linearize(const SplitExtMorphism& m, Field f);
SCocEquivRelation linearize(const SCocEquivRelation& r, Field f);

/// Transport of the middle object along an invertible t: A -> A'.
SplitExtension transport(const SplitExtension& s, const Morph& t, const Morph& t_inverse);

/// An invertible n x n matrix with small random entries, with its inverse.
std::pair<Morph, Morph> random_change_of_basis(const Obj& x, std::uint64_t seed);

/// Seeded FinVect morphisms between group-algebra extensions (groups of
/// order <= 8) whose v and g are isomorphisms: a linearized automorphism of
/// a group extension followed by a random change of basis of the target.
std::vector<SplitExtMorphism> ssfl_instances(std::size_t count, std::uint64_t seed);

/// The extensions used by the closure, redundancy and round-trip suites:
/// Schreier monoid extensions, group extensions in FinSet and FinVect,
/// transported copies, and k[C3] |x k[C2].
std::vector<SplitExtension> extension_corpus(std::uint64_t seed = 0);

struct RelationPair {
  SCocEquivRelation r, s;
  std::string name;
};

/// Pairs of valid relations on a common object: kernel pairs of Schreier
/// points of monoids of order <= 4 (kept when the relation is valid),
/// discrete and indiscrete relations, and group-algebra instances.
std::vector<RelationPair> relation_corpus();

}  // namespace bialg
