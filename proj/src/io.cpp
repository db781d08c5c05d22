#include "bialg/io.hpp"

#include <fstream>
#include <sstream>

#include "bialg/error.hpp"

namespace bialg {

namespace fs = std::filesystem;

namespace {

std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

std::string at_index(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError("expected an object at \"" + (where.empty() ? "<root>" : where) + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field \"" + join(where, key) + "\"");
  return *it;
}

std::size_t count(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ParseError("\"" + where + "\" must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError("\"" + where + "\" must be a string");
  return j.get<std::string>();
}

Rational scalar(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("\"" + where + "\": " + e.what());
    }
  }
  throw ParseError("\"" + where + "\" must be a rational string \"a/b\" or an integer");
}

std::vector<std::size_t> table_of(const json& j, std::size_t length, std::size_t bound, const std::string& where) {
  if (!j.is_array()) throw ParseError("\"" + where + "\" must be an array");
  if (j.size() != length)
    throw ParseError("\"" + where + "\" has " + std::to_string(j.size()) + " entries, expected " +
                     std::to_string(length));
  std::vector<std::size_t> t(length);
  for (std::size_t i = 0; i < length; ++i) {
    t[i] = count(j[i], at_index(where, i));
    if (t[i] >= bound)
      throw ParseError("\"" + at_index(where, i) + "\" = " + std::to_string(t[i]) +
                       " is out of range (< " + std::to_string(bound) + ")");
  }
  return t;
}

Matrix matrix_of(const json& j, Field f, std::size_t rows, std::size_t cols,
                 const std::string& where) {
  if (!j.is_array()) throw ParseError("\"" + where + "\" must be an array of rows");
  // A flat list is accepted for a single row or a single column.
  bool flat = !j.empty() && !j[0].is_array();
  if (flat) {
    if (j.size() != rows * cols || (rows != 1 && cols != 1))
      throw ParseError("\"" + where + "\" must be a " + std::to_string(rows) + "x" +
                       std::to_string(cols) + " matrix");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < j.size(); ++i)
      m.set(rows == 1 ? 0 : i, rows == 1 ? i : 0, scalar(j[i], at_index(where, i)));
    return m;
  }
  if (j.size() != rows)
    throw ParseError("\"" + where + "\" has " + std::to_string(j.size()) + " rows, expected " +
                     std::to_string(rows));
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    std::string rw = at_index(where, r);
    if (!row.is_array() || row.size() != cols)
      throw ParseError("\"" + rw + "\" must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar(row[c], at_index(rw, c)));
  }
  return m;
}

json load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": malformed JSON: " + e.what());
  }
}

// A component given inline or as a path; returns the document and the
// directory its own references resolve against.
std::pair<json, fs::path> component(const json& j, const fs::path& base, const std::string& where) {
  if (j.is_string()) {
    fs::path p = fs::path(j.get<std::string>());
    if (p.is_relative()) p = base / p;
    try {
      return {load(p), p.parent_path()};
    } catch (const ParseError& e) {
      throw ParseError("\"" + where + "\": " + e.what());
    }
  }
  if (!j.is_object()) throw ParseError("\"" + where + "\" must be an object or a file path");
  return {j, base};
}

std::string kind_of(const json& j, const std::string& where) {
  return text(field(j, "kind", where), join(where, "kind"));
}

Field field_of(const json& j, const std::string& where) {
  std::string name = text(field(j, "field", where), join(where, "field"));
  std::uint64_t p = 0;
  if (j.contains("p")) p = count(j["p"], join(where, "p"));
  try {
    return Field::parse(name, p);
  } catch (const Error& e) {
    throw ParseError("\"" + join(where, "field") + "\": " + e.what());
  }
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.entry(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json read_json(const fs::path& path) { return load(path); }

MonoidTable parse_monoid(const json& j, const std::string& where) {
  std::size_t n = count(field(j, "order", where), join(where, "order"));
  if (n == 0) throw ParseError("\"" + join(where, "order") + "\" must be positive");
  const json& t = field(j, "table", where);
  std::string tw = join(where, "table");
  if (!t.is_array() || t.size() != n)
    throw ParseError("\"" + tw + "\" must have " + std::to_string(n) + " rows");
  MonoidTable m;
  m.order = n;
  m.table.clear();
  for (std::size_t r = 0; r < n; ++r) {
    auto row = table_of(t[r], n, n, at_index(tw, r));
    m.table.insert(m.table.end(), row.begin(), row.end());
  }
  try {
    if (kind_of(j, where) == "group")
      validate_group(m);
    else
      validate_monoid(m);
  } catch (const ShapeError& e) {
    throw ParseError("\"" + tw + "\": " + e.what());
  }
  return m;
}

Bialgebra parse_bialgebra(const json& jin, const fs::path& base, const std::string& where) {
  auto [j, dir] = component(jin, base, where);
  std::string kind = kind_of(j, where);
  if (kind == "monoid" || kind == "group") {
    MonoidTable m = parse_monoid(j, where);
    std::string name = j.value("name", std::string());
    if (j.contains("field")) return monoid_algebra(m, field_of(j, where), name);
    return monoid_bialgebra(m, name);
  }
  if (kind != "bialgebra")
    throw ParseError("\"" + join(where, "kind") + "\" must be \"bialgebra\", got \"" + kind + "\"");
  std::string backend = j.value("backend", std::string("finvect"));
  std::string name = j.value("name", std::string());
  if (backend == "finset") return monoid_bialgebra(parse_monoid(j, where), name);
  if (backend != "finvect")
    throw ParseError("\"" + join(where, "backend") + "\" must be \"finset\" or \"finvect\"");
  Field f = field_of(j, where);
  std::size_t d = count(field(j, "dim", where), join(where, "dim"));
  Obj v = Obj::vect(f, d), vv = tensor(v, v), i = Obj::unit(Backend::kFinVect, f);
  Bialgebra b{v,
              Morph::from_matrix(vv, v, matrix_of(field(j, "mult", where), f, d, d * d, join(where, "mult"))),
              Morph::from_matrix(i, v, matrix_of(field(j, "unit", where), f, d, 1, join(where, "unit"))),
              Morph::from_matrix(v, vv, matrix_of(field(j, "comult", where), f, d * d, d, join(where, "comult"))),
              Morph::from_matrix(v, i, matrix_of(field(j, "counit", where), f, 1, d, join(where, "counit"))),
              name};
  return b;
}

Morph arrow_from_json(const json& j, const Obj& source, const Obj& target, const std::string& where) {
  if (source.backend() != target.backend())
    throw ParseError("\"" + where + "\": source and target live in different backends");
  if (source.backend() == Backend::kFinSet) {
    const json& t = j.is_object() ? field(j, "table", where) : j;
    return Morph::from_table(source, target, table_of(t, source.size(), target.size(), where));
  }
  if (!(source.field() == target.field()))
    throw ParseError("\"" + where + "\": source and target have different fields");
  if (j.is_object())
    return Morph::from_table(source, target,
                             table_of(field(j, "table", where), source.size(), target.size(),
                                      join(where, "table")));
  return Morph::from_matrix(source, target,
                            matrix_of(j, source.field(), target.size(), source.size(), where));
}

BialgMorphism parse_morphism(const json& jin, const fs::path& base, const std::string& where) {
  auto [j, dir] = component(jin, base, where);
  if (kind_of(j, where) != "morphism") throw ParseError("\"" + join(where, "kind") + "\" must be \"morphism\"");
  Bialgebra s = parse_bialgebra(field(j, "source", where), dir, join(where, "source"));
  Bialgebra t = parse_bialgebra(field(j, "target", where), dir, join(where, "target"));
  Morph f = arrow_from_json(field(j, "map", where), s.carrier, t.carrier, join(where, "map"));
  return {s, t, f};
}

Action parse_action(const json& jin, const fs::path& base, const std::string& where) {
  auto [j, dir] = component(jin, base, where);
  if (kind_of(j, where) != "action") throw ParseError("\"" + join(where, "kind") + "\" must be \"action\"");
  Bialgebra b = parse_bialgebra(field(j, "B", where), dir, join(where, "B"));
  Bialgebra x = parse_bialgebra(field(j, "X", where), dir, join(where, "X"));
  Morph act = arrow_from_json(field(j, "act", where), tensor(b.carrier, x.carrier), x.carrier,
                              join(where, "act"));
  return {b, x, act};
}

SplitExtension parse_split_extension(const json& jin, const fs::path& base, const std::string& where) {
  auto [j, dir] = component(jin, base, where);
  if (kind_of(j, where) != "split_extension")
    throw ParseError("\"" + join(where, "kind") + "\" must be \"split_extension\"");
  SplitExtension s;
  s.X = parse_bialgebra(field(j, "X", where), dir, join(where, "X"));
  s.A = parse_bialgebra(field(j, "A", where), dir, join(where, "A"));
  s.B = parse_bialgebra(field(j, "B", where), dir, join(where, "B"));
  s.kappa = arrow_from_json(field(j, "kappa", where), s.X.carrier, s.A.carrier, join(where, "kappa"));
  s.alpha = arrow_from_json(field(j, "alpha", where), s.A.carrier, s.B.carrier, join(where, "alpha"));
  s.e = arrow_from_json(field(j, "e", where), s.B.carrier, s.A.carrier, join(where, "e"));
  s.lambda = arrow_from_json(field(j, "lambda", where), s.A.carrier, s.X.carrier, join(where, "lambda"));
  s.name = j.value("name", std::string());
  return s;
}

SCocEquivRelation parse_relation(const json& jin, const fs::path& base, const std::string& where) {
  auto [j, dir] = component(jin, base, where);
  if (kind_of(j, where) != "relation") throw ParseError("\"" + join(where, "kind") + "\" must be \"relation\"");
  Bialgebra r = parse_bialgebra(field(j, "R", where), dir, join(where, "R"));
  Bialgebra a = parse_bialgebra(field(j, "A", where), dir, join(where, "A"));
  Morph r0 = arrow_from_json(field(j, "r0", where), r.carrier, a.carrier, join(where, "r0"));
  Morph r1 = arrow_from_json(field(j, "r1", where), r.carrier, a.carrier, join(where, "r1"));
  Morph s = arrow_from_json(field(j, "s", where), a.carrier, r.carrier, join(where, "s"));
  try {
    return make_relation(r, a, r0, r1, s, j.value("name", std::string()));
  } catch (const InvariantViolation& e) {
    throw ParseError("\"" + where + "\": " + e.what());
  }
}

Document parse_document(const json& j, const fs::path& base) {
  std::string kind = kind_of(j, "");
  if (kind == "monoid" || kind == "group") return parse_monoid(j);
  if (kind == "bialgebra") return parse_bialgebra(j, base);
  if (kind == "morphism") return parse_morphism(j, base);
  if (kind == "action") return parse_action(j, base);
  if (kind == "split_extension") return parse_split_extension(j, base);
  if (kind == "relation") return parse_relation(j, base);
  if (kind == "suite") return j;
  throw ParseError("unknown kind \"" + kind + "\"");
}

Document parse_file(const fs::path& path) { return parse_document(load(path), path.parent_path()); }

json arrow_to_json(const Morph& f) {
  if (f.backend() == Backend::kFinSet) {
    json t = json::array();
    for (std::size_t x = 0; x < f.source().size(); ++x) t.push_back(f(x));
    return t;
  }
  if (f.is_basis_map()) {
    json t = json::array();
    for (std::size_t x = 0; x < f.source().size(); ++x) t.push_back(f.basis_image(x));
    return json{{"table", t}};
  }
  return matrix_json(f.to_matrix());
}

json to_json(const MonoidTable& m, const std::string& kind) {
  return json{{"kind", kind}, {"order", m.order}, {"table", m.rows()}};
}

json to_json(const Bialgebra& b) {
  json j;
  if (b.backend() == Backend::kFinSet) {
    j = to_json(monoid_of(b));
    j["kind"] = "bialgebra";
    j["backend"] = "finset";
  } else {
    j = json{{"kind", "bialgebra"},
             {"backend", "finvect"},
             {"field", b.field().name()},
             {"dim", b.size()},
             {"mult", matrix_json(b.mult.to_matrix())},
             {"unit", matrix_json(b.unit.to_matrix())},
             {"comult", matrix_json(b.comult.to_matrix())},
             {"counit", matrix_json(b.counit.to_matrix())}};
  }
  if (!b.name.empty()) j["name"] = b.name;
  return j;
}

json to_json(const BialgMorphism& f) {
  return json{{"kind", "morphism"},
              {"source", to_json(f.source)},
              {"target", to_json(f.target)},
              {"map", arrow_to_json(f.arrow)}};
}

json to_json(const Action& a) {
  return json{{"kind", "action"}, {"B", to_json(a.B)}, {"X", to_json(a.X)}, {"act", arrow_to_json(a.act)}};
}

json to_json(const SplitExtension& s) {
  json j{{"kind", "split_extension"},
         {"X", to_json(s.X)},
         {"A", to_json(s.A)},
         {"B", to_json(s.B)},
         {"kappa", arrow_to_json(s.kappa)},
         {"alpha", arrow_to_json(s.alpha)},
         {"e", arrow_to_json(s.e)},
         {"lambda", arrow_to_json(s.lambda)}};
  if (!s.name.empty()) j["name"] = s.name;
  return j;
}

json to_json(const SCocEquivRelation& r) {
  json j{{"kind", "relation"},      {"R", to_json(r.R())},
         {"A", to_json(r.A())},      {"r0", arrow_to_json(r.r0())},
         {"r1", arrow_to_json(r.r1())}, {"s", arrow_to_json(r.s())}};
  if (!r.name.empty()) j["name"] = r.name;
  return j;
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(1) << "\n";
}

json report_to_json(const Report& r, double timing_ms) {
  json witnesses = json::array(), clauses = json::array();
  for (const auto& c : r.clauses) {
    json cj{{"id", c.id}, {"description", c.description}, {"passed", c.passed}};
    if (c.witness) cj["witness"] = *c.witness;
    if (!c.note.empty()) cj["note"] = c.note;
    clauses.push_back(cj);
    if (!c.passed)
      witnesses.push_back(json{{"axiom", c.id},
                               {"coordinates", c.witness ? json(*c.witness) : json::array()}});
  }
  return json{{"check", r.check},     {"passed", r.passed()},        {"witnesses", witnesses},
              {"clauses", clauses},   {"notes", r.notes},            {"timing_ms", timing_ms},
              {"version", kVersion}};
}

}  // namespace bialg
