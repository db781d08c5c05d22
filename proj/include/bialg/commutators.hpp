#pragma once

// Commuting subobjects in the sense of Huq, equivalence relations whose
// first projection is a split extension, reflexive-multiplicative graphs,
// and connectors between two relations.

#include <optional>
#include <string>
#include <vector>

#include "bialg/splitext.hpp"

namespace bialg {

struct HuqResult {
  Report report;
  /// m s (x (x) y) = m (x (x) y).
  bool criterion_i = false;
  /// p = m (x (x) y) is a bialgebra map X (x) Y -> A restricting to x and y.
  bool criterion_ii = false;
  Morph cooperator;
  /// Basis indices (i, j) of the first non-commuting pair x(i), y(j).
  std::optional<std::vector<std::size_t>> witness;
};

/// Evaluates both criteria of the Huq characterization. The report passes
/// exactly when [X, Y] = 0, i.e. both criteria hold. Throws
/// PreconditionError when the ambients differ.
HuqResult huq_commute(const SubBialgebra& x, const SubBialgebra& y);

/// R with r0, r1: R -> A and the common section s. The point (r0, s) is
/// stored completed with its kernel and lambda.
struct SCocEquivRelation {
  SplitExtension point;  // ker r0 -> R -r0-> A, section s
  Morph second;          // r1
  std::string name;

  const Bialgebra& R() const { return point.A; }
  const Bialgebra& A() const { return point.B; }
  const Morph& r0() const { return point.alpha; }
  const Morph& r1() const { return second; }
  const Morph& s() const { return point.e; }
};

/// Completes (R, r0, r1, s) with the kernel of r0 and the induced lambda.
/// Throws InvariantViolation when no lambda exists (FinVect).
SCocEquivRelation make_relation(const Bialgebra& R, const Bialgebra& A, const Morph& r0,
                                const Morph& r1, const Morph& s, std::string name = {});
/// The kernel pair of f: A -> B as a relation on A.
SCocEquivRelation kernel_pair_relation(const BialgMorphism& f, std::string name = {});
/// R = A, r0 = r1 = s = 1.
SCocEquivRelation discrete_relation(const Bialgebra& a);
/// R = A (x) A, the kernel pair of A -> I.
SCocEquivRelation indiscrete_relation(const Bialgebra& a);

/// Clause ids: "r0.*", "r1.*", "s.*", "reflexive", "jointly-monic",
/// "symmetric", "transitive" and "point.*" for the split extension (r0, s).
Report check_relation(const SCocEquivRelation& r);

/// r1 composed with the kernel of r0. Throws InvariantViolation when the
/// composite is not a mono.
SubBialgebra normalization(const SCocEquivRelation& r);

/// delta, gamma: A1 -> A0 with common section iota and a multiplication on
/// composable pairs {(a, b) : delta a = gamma b}.
struct ReflexiveMultGraph {
  Bialgebra A1, A0;
  Morph delta, gamma, iota;
  PullbackCone pairs;  // of delta and gamma
  Morph c;
};

/// Builds the graph delta = alpha, gamma = beta, iota = e from two split
/// extensions with common A, B and e, with c = m (kappa lambda (x) 1) on
/// A (x)_B A. Throws PreconditionError when the shapes do not match or the
/// kernels do not commute.
ReflexiveMultGraph connector_from_graph(const SplitExtension& s, const SplitExtension& t);

/// Clause ids: "reflexive-delta", "reflexive-gamma", "RGM-left",
/// "RGM-right", "delta-c", "gamma-c" and "c.*" (bialgebra morphism).
Report check_rmg(const ReflexiveMultGraph& g);

/// The pullback R x_A S of s0 along r1: triples x R y S z.
PullbackCone connector_domain(const SCocEquivRelation& r, const SCocEquivRelation& s);

/// The candidate connector (x, y, z) -> (z / y) x, written
/// m ((s1 kappa_S lambda_S p_S) (x) (r0 p_R)) D on connector_domain(r, s).
Morph smith_connector(const SCocEquivRelation& r, const SCocEquivRelation& s,
                      const PullbackCone& domain);

/// The connector axioms element by element: "member-S", "member-R",
/// "unit-left", "unit-right", "assoc-left", "assoc-right". FinSet only.
Report connector_axioms(const SCocEquivRelation& r, const SCocEquivRelation& s,
                        const PullbackCone& domain, const Morph& p);

/// The same axioms as equations between arrows, valid in both backends.
/// Membership becomes factorization through (r0 (x) r1) D, the unit laws
/// are p (s_R s0, 1) = s1 and p (1, s_S r1) = r0, and the associativity
/// laws are equations on the two iterated pullbacks of composable triples.
/// Also checks that p is a bialgebra morphism ("morphism.*").
Report connector_equations(const SCocEquivRelation& r, const SCocEquivRelation& s,
                           const PullbackCone& domain, const Morph& p);

/// Bounded search for a connector among the monoid homomorphisms
/// R x_A S -> A in FinSet.
struct ConnectorSearch {
  bool searched = false;   // false when the candidate count exceeds the bound
  std::size_t candidates = 0;
  std::optional<Morph> found;
};
inline constexpr std::size_t kConnectorSearchBound = 1000000;
ConnectorSearch search_connector(const SCocEquivRelation& r, const SCocEquivRelation& s,
                                 std::size_t bound = kConnectorSearchBound);

/// The FinSet relation underlying a FinVect relation whose structure maps
/// are all basis maps, e.g. one built from group algebras.
std::optional<SCocEquivRelation> underlying_set_relation(const SCocEquivRelation& r);

struct SmithHuqResult {
  Report report;
  bool huq = false;
  /// True when a connector was verified or found, false when the search
  /// ruled one out, nullopt when the search was skipped.
  std::optional<bool> connector;
};

/// Runs both sides of the Smith-Huq correspondence on one pair of
/// relations; the report passes when they agree (or the search was
/// skipped). Throws PreconditionError for invalid relations or different
/// ambients.
SmithHuqResult smith_is_huq_verify(const SCocEquivRelation& r, const SCocEquivRelation& s);

}  // namespace bialg
