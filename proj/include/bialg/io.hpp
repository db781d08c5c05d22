#pragma once

// JSON documents for the objects of the toolkit and newline-delimited JSON
// reports. Parse errors carry the path of the offending field, e.g.
// "A.comult[3]".

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "bialg/actions.hpp"
#include "bialg/commutators.hpp"

namespace bialg {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

/// A morphism document: an arrow with its source and target bialgebras.
/// For a plain arrow between objects, source and target are still given as
/// bialgebras so that the carriers are known.
using Document = std::variant<MonoidTable, Bialgebra, BialgMorphism, Action, SplitExtension,
                              SCocEquivRelation, json>;

/// Parses one document. Components given as strings are file paths,
/// resolved against `base`. "suite" documents come back as raw json.
Document parse_document(const json& j, const std::filesystem::path& base = {});
Document parse_file(const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);

MonoidTable parse_monoid(const json& j, const std::string& where = "");
Bialgebra parse_bialgebra(const json& j, const std::filesystem::path& base = {},
                          const std::string& where = "");
BialgMorphism parse_morphism(const json& j, const std::filesystem::path& base = {},
                             const std::string& where = "");
Action parse_action(const json& j, const std::filesystem::path& base = {},
                    const std::string& where = "");
SplitExtension parse_split_extension(const json& j, const std::filesystem::path& base = {},
                                     const std::string& where = "");
SCocEquivRelation parse_relation(const json& j, const std::filesystem::path& base = {},
                                 const std::string& where = "");

/// Arrow encodings: FinSet arrows are integer tables, FinVect arrows are
/// row-major matrices of rationals written "a/b" (integers allowed), or
/// {"table": [...]} for basis maps.
json arrow_to_json(const Morph& f);
Morph arrow_from_json(const json& j, const Obj& source, const Obj& target,
                      const std::string& where);

json to_json(const MonoidTable& m, const std::string& kind = "monoid");
json to_json(const Bialgebra& b);
json to_json(const BialgMorphism& f);
json to_json(const Action& a);
json to_json(const SplitExtension& s);
json to_json(const SCocEquivRelation& r);

void write_json(const std::filesystem::path& path, const json& j);

/// {"check", "passed", "witnesses", "clauses", "notes", "timing_ms",
/// "version"}; witnesses list the failing clause ids with coordinates.
json report_to_json(const Report& r, double timing_ms);

}  // namespace bialg
