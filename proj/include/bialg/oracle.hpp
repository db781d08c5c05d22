#pragma once

// Brute-force ground truth on multiplication tables: monoid enumeration up
// to isomorphism, homomorphisms, points, the Schreier condition, submonoids
// and monoid actions. Nothing here goes through the categorical machinery.

#include <cstddef>
#include <optional>
#include <vector>

#include "bialg/limits.hpp"
#include "bialg/monoid.hpp"

namespace bialg {

inline constexpr std::size_t kMaxEnumeratedMonoidOrder = 4;
inline constexpr std::size_t kMaxSubmonoidOrder = 6;
inline constexpr std::size_t kMaxSubgroupOrder = 12;
inline constexpr std::size_t kMaxPointOrder = 8;

using Map = std::vector<std::size_t>;

/// Lexicographically smallest (or largest) relabeling of the table under
/// permutations fixing 0.
MonoidTable canonical_form(const MonoidTable& m, bool largest = false);

/// All monoids of order n up to isomorphism, in canonical form and sorted.
/// Throws CapExceeded for n > 4.
std::vector<MonoidTable> enumerate_monoids(std::size_t n);
/// Same classification by row-wise backtracking with the largest canonical
/// form; used to cross-check enumerate_monoids.
std::vector<MonoidTable> enumerate_monoids_backtracking(std::size_t n);
/// enumerate_monoids(1) ... enumerate_monoids(max_order).
std::vector<MonoidTable> monoids_up_to(std::size_t max_order);

/// A small generating set, chosen greedily in element order.
std::vector<std::size_t> generators(const MonoidTable& m);
/// The submonoid generated by the given elements, sorted.
std::vector<std::size_t> generated_submonoid(const MonoidTable& m,
                                             const std::vector<std::size_t>& gens);

/// Every monoid homomorphism a -> b.
std::vector<Map> monoid_homs(const MonoidTable& a, const MonoidTable& b);

struct MonoidPoint {
  MonoidTable A, B;
  Map alpha;  // A -> B
  Map e;      // B -> A
};

/// All pairs of homomorphisms alpha: A -> B, e: B -> A with alpha e = 1.
std::vector<MonoidPoint> enumerate_points(const MonoidTable& a, const MonoidTable& b);

struct SchreierResult {
  bool schreier = false;
  /// a -> k with a = k e(alpha(a)), when schreier.
  Map lambda;
  /// Kernel elements of alpha in increasing order.
  std::vector<std::size_t> kernel;
  /// First element without a unique decomposition.
  std::optional<std::size_t> witness;
};

/// Every a in A decomposes uniquely as a = k e(alpha(a)) with alpha(k) = 1.
SchreierResult is_schreier(const MonoidPoint& p);

/// Submonoids as sorted subsets containing 0. Caps at order 6.
std::vector<std::vector<std::size_t>> enumerate_submonoids(const MonoidTable& m);
/// Subgroups of a group, caps at order 12.
std::vector<std::vector<std::size_t>> enumerate_subgroups(const GroupTable& g);

/// k[H] -> k[G] for every subgroup H of G.
std::vector<SubBialgebra> enumerate_subgroup_algebras(const GroupTable& g, Field f);
/// The FinSet sub-bialgebra on a closed subset containing 0.
SubBialgebra submonoid_bialgebra(const MonoidTable& m, const std::vector<std::size_t>& subset);
/// The linearized sub-bialgebra k[subset] of k[M].
SubBialgebra submonoid_algebra(const MonoidTable& m, const std::vector<std::size_t>& subset,
                               Field f);

/// Some isomorphism a -> b, if any.
std::optional<Map> find_isomorphism(const MonoidTable& a, const MonoidTable& b);

/// The endomorphism monoid of x under composition, identity first.
std::vector<Map> endomorphisms(const MonoidTable& x);

/// Every action of b on x by monoid endomorphisms, as tables
/// act[bi * |x| + xi].
std::vector<Map> enumerate_monoid_actions(const MonoidTable& b, const MonoidTable& x);

/// The kernel pair {(a, a') : f(a) = f(a')} as a submonoid of a x a.
std::vector<std::size_t> kernel_pair_subset(const MonoidTable& a, const Map& f);

}  // namespace bialg
