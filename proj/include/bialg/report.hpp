#pragma once

#include <optional>
#include <string_view>
#include <string>
#include <vector>

#include "bialg/backend.hpp"

namespace bialg {

/// One checked equation or property.
struct Clause {
  std::string id;           // e.g. "assoc", "(3)", "kernel"
  std::string description;  // the identity in words
  bool passed = true;
  /// First failure: element tuple (FinSet) or (row, col) (FinVect).
  std::optional<std::vector<std::size_t>> witness;
  std::string note;
};

/// Outcome of a verification routine: the individual clauses plus an
/// overall verdict.
struct Report {
  std::string check;
  std::vector<Clause> clauses;
  std::vector<std::string> notes;

  bool passed() const;
  /// The first failing clause, if any.
  const Clause* first_failure() const;
  const Clause* find(std::string_view id) const;

  /// Records whether f == g under the given clause id.
  Clause& expect_equal(std::string id, std::string description, const Morph& f,
                       const Morph& g);
  Clause& expect(std::string id, std::string description, bool ok,
                 std::string note = {});
  /// Appends all clauses of `other`, prefixing their ids.
  void absorb(const Report& other, const std::string& prefix);

  std::string summary() const;
};

}  // namespace bialg
