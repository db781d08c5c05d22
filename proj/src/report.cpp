#include "bialg/report.hpp"

#include <algorithm>
#include <sstream>

namespace bialg {

bool Report::passed() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const Clause& c) { return c.passed; });
}

const Clause* Report::first_failure() const {
  for (const auto& c : clauses) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

const Clause* Report::find(std::string_view id) const {
  for (const auto& c : clauses) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

Clause& Report::expect_equal(std::string id, std::string description,
                             const Morph& f, const Morph& g) {
  Clause c{std::move(id), std::move(description), true, std::nullopt, {}};
  c.witness = first_difference(f, g);
  c.passed = !c.witness.has_value();
  clauses.push_back(std::move(c));
  return clauses.back();
}

Clause& Report::expect(std::string id, std::string description, bool ok,
                       std::string note) {
  clauses.push_back(
      Clause{std::move(id), std::move(description), ok, std::nullopt, std::move(note)});
  return clauses.back();
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (auto c : other.clauses) {
    c.id = prefix + c.id;
    clauses.push_back(std::move(c));
  }
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string Report::summary() const {
  std::ostringstream os;
  os << check << ": " << (passed() ? "PASS" : "FAIL");
  for (const auto& c : clauses) {
    if (c.passed) continue;
    os << "\n  " << c.id << " failed (" << c.description << ")";
    if (c.witness) {
      os << " at (";
      for (std::size_t i = 0; i < c.witness->size(); ++i)
        os << (i ? ", " : "") << (*c.witness)[i];
      os << ")";
    }
    if (!c.note.empty()) os << ": " << c.note;
  }
  return os.str();
}

}  // namespace bialg
