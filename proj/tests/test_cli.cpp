#include <filesystem>
#include <sstream>

#include "bialg/cli.hpp"
#include "bialg/error.hpp"
#include "bialg/io.hpp"
#include "bialg/oracle.hpp"
#include "doctest.h"

using namespace bialg;
namespace fs = std::filesystem;

namespace {

const fs::path kData = BIALG_TEST_DATA;

struct Run {
  int code;
  std::string out, err;
  std::vector<json> reports() const {
    std::vector<json> r;
    std::istringstream is(out);
    for (std::string line; std::getline(is, line);)
      if (!line.empty()) r.push_back(json::parse(line));
    return r;
  }
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

fs::path scratch() {
  auto p = fs::temp_directory_path() / "bialg_cli_test";
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("parsing") {
  auto t = std::get<MonoidTable>(parse_file(data("trivial_monoid.json")));
  CHECK(t.order == 1);

  auto f7 = std::get<Bialgebra>(parse_file(data("c2_f7.json")));
  CHECK(f7.field() == Field::prime(7));
  CHECK(f7.unit.to_matrix().entry(0, 0).is_one());
  CHECK(f7.counit.to_matrix().entry(0, 1).is_one());

  try {
    parse_file(data("missing_comult.json"));
    FAIL("no parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("\"comult\"") != std::string::npos);
  }
  // Nested paths name the component.
  json ext = read_json(data("product_point.json"));
  ext["A"]["table"][2][1] = 17;
  try {
    parse_document(ext);
    FAIL("no parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("A.table[2][1]") != std::string::npos);
  }
  ext = read_json(data("c2_group_algebra.json"));
  ext["mult"][0][0] = 0.5;
  CHECK_THROWS_AS(parse_document(ext), ParseError);
  ext["mult"][0][0] = "2/4";
  CHECK(std::get<Bialgebra>(parse_document(ext)).mult.to_matrix().entry(0, 0) == Rational(1, 2));
  CHECK_THROWS_AS(parse_file(data("bad_monoid.json")), ParseError);
}

TEST_CASE("documents round-trip through json") {
  auto s = std::get<SplitExtension>(parse_file(data("product_point.json")));
  auto back = std::get<SplitExtension>(parse_document(to_json(s)));
  CHECK(equal(back.lambda, s.lambda));
  CHECK(check_split_extension(back).passed());

  auto k = group_algebra(symmetric_group(3), Field::prime(5));
  auto kb = std::get<Bialgebra>(parse_document(to_json(k)));
  CHECK(equal(kb.mult, k.mult));
  CHECK(equal(kb.comult, k.comult));
  CHECK(check_bialgebra(kb).passed());
}

TEST_CASE("commands and exit codes") {
  CHECK(cli({"check-bialgebra", data("c2_group_algebra.json")}).code == kExitPass);
  CHECK(cli({"check-bialgebra", data("bad_bialgebra.json")}).code == kExitFail);
  auto miss = cli({"check-bialgebra", data("missing_comult.json")});
  CHECK(miss.code == kExitParse);
  CHECK(miss.err.find("comult") != std::string::npos);
  CHECK(cli({"check-bialgebra", data("nonexistent.json")}).code == kExitParse);
  CHECK(cli({"frobnicate"}).code == kExitParse);
  CHECK(cli({"suite", "--max-order", "5"}).code == kExitCap);

  auto bad = cli({"check-extension", data("corrupted.json")});
  CHECK(bad.code == kExitFail);
  auto reps = bad.reports();
  REQUIRE(reps.size() == 1);
  CHECK(reps[0]["passed"] == false);
  CHECK(reps[0]["witnesses"][0]["axiom"] == "(3)");
  CHECK(reps[0]["version"] == kVersion);
  CHECK(reps[0].contains("timing_ms"));

  auto huq = cli({"--format", "text", "huq", data("s3_transposition.json"),
                  data("s3_rotations.json"), data("s3.json")});
  CHECK(huq.code == kExitFail);
  CHECK(huq.out.find("(i) failed") != std::string::npos);
  CHECK(cli({"huq", data("s3_rotations.json"), data("s3_rotations.json"), data("s3.json")}).code ==
        kExitPass);
  CHECK(cli({"smith-huq", data("disc_c3.json"), data("ind_c3.json")}).code == kExitPass);
  CHECK(cli({"smith-huq", data("ind_s3.json"), data("ind_s3.json")}).code == kExitPass);
}

TEST_CASE("constructor outputs re-parse and re-verify") {
  auto dir = scratch();
  auto sd = (dir / "sd.json").string(), act = (dir / "act.json").string();
  CHECK(cli({"semidirect", data("k_c3_by_c2_action.json"), "-o", sd}).code == kExitPass);
  CHECK(cli({"check-extension", sd}).code == kExitPass);
  CHECK(cli({"action-of", sd, "-o", act}).code == kExitPass);
  CHECK(cli({"check-action", act}).code == kExitPass);
  // F(G(a)) = a on the file level.
  auto a0 = std::get<Action>(parse_file(data("k_c3_by_c2_action.json")));
  auto a1 = std::get<Action>(parse_file(act));
  CHECK(equal(a0.act, a1.act));

  auto pb = (dir / "pb.json").string(), comp = (dir / "comp.json").string();
  CHECK(cli({"pullback-extension", data("product_point.json"), data("unit_into_c2.json"), "-o",
             pb}).code == kExitPass);
  CHECK(cli({"check-extension", pb}).code == kExitPass);
  CHECK(std::get<SplitExtension>(parse_file(pb)).A.size() == 3);
  CHECK(cli({"compose-extensions", data("outer.json"), data("inner.json"), "-o", comp}).code ==
        kExitPass);
  CHECK(cli({"check-extension", comp}).code == kExitPass);
  CHECK(std::get<SplitExtension>(parse_file(comp)).X.size() == 6);

  // A failing action is reported and nothing is written.
  auto none = (dir / "none.json").string();
  fs::remove(none);
  CHECK(cli({"semidirect", data("bad_action.json"), "-o", none}).code == kExitFail);
  CHECK_FALSE(fs::exists(none));
}

TEST_CASE("suite") {
  auto r = cli({"suite", "--max-order", "3", "--backend", "finset"});
  CHECK(r.code == kExitPass);
  std::size_t points = 0;
  for (const auto& a : monoids_up_to(3))
    for (const auto& b : monoids_up_to(3))
      if (b.order <= a.order) points += enumerate_points(a, b).size();
  CHECK(r.reports().size() == points);

  // Deterministic for a fixed seed once timings are removed.
  auto strip = [](std::vector<json> v) {
    for (auto& j : v) j.erase("timing_ms");
    return v;
  };
  auto v1 = cli({"suite", "--max-order", "2", "--backend", "finvect", "--seed", "7"});
  auto v2 = cli({"suite", "--max-order", "2", "--backend", "finvect", "--seed", "7"});
  CHECK(v1.code == kExitPass);
  CHECK(strip(v1.reports()) == strip(v2.reports()));
}
