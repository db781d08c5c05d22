#pragma once

// Finite monoids and groups given by multiplication tables. Elements are
// 0..order-1 and element 0 is always the identity.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bialg {

struct MonoidTable {
  std::size_t order = 1;
  std::vector<std::size_t> table{0};  // row-major, table[a * order + b] = ab

  std::size_t mul(std::size_t a, std::size_t b) const {
    return table[a * order + b];
  }
  static MonoidTable from_rows(const std::vector<std::vector<std::size_t>>& rows);
  std::vector<std::vector<std::size_t>> rows() const;

  friend bool operator==(const MonoidTable&, const MonoidTable&) = default;
};

/// A group is a monoid table in which every element is invertible.
using GroupTable = MonoidTable;

/// First triple (a, b, c) with a(bc) != (ab)c.
std::optional<std::array<std::size_t, 3>> associativity_failure(
    const MonoidTable& m);

/// Throws ShapeError naming the first defect: wrong table size, values out
/// of range, 0 not a two-sided identity, or non-associativity.
void validate_monoid(const MonoidTable& m);
/// validate_monoid plus invertibility of every element.
void validate_group(const GroupTable& g);

bool is_group(const MonoidTable& m);
bool is_commutative(const MonoidTable& m);
/// Two-sided inverses; throws ShapeError if some element has none.
std::vector<std::size_t> inverses(const GroupTable& g);

bool is_monoid_hom(const MonoidTable& a, const MonoidTable& b,
                   const std::vector<std::size_t>& map);

/// The submonoid on `subset` (which must contain 0 and be closed), relabeled
/// so that subset[i] becomes element i.
MonoidTable submonoid_table(const MonoidTable& m,
                            const std::vector<std::size_t>& subset);

MonoidTable trivial_monoid();
GroupTable cyclic_group(std::size_t n);
/// All permutations of {0..n-1} in lexicographic order (identity first),
/// composed as (p q)(i) = p(q(i)).
GroupTable symmetric_group(std::size_t n);
/// D_n of order 2n: element e*n + k stands for r^k s^e.
GroupTable dihedral_group(std::size_t n);
GroupTable quaternion_group();
/// Pairs (i, j) indexed i * |b| + j.
MonoidTable direct_product(const MonoidTable& a, const MonoidTable& b);

/// A named group of order <= 8, for corpora.
struct NamedGroup {
  std::string name;
  GroupTable table;
};
/// One representative of each isomorphism class of groups of order <= n
/// (n <= 8).
std::vector<NamedGroup> small_groups(std::size_t max_order);

}  // namespace bialg
