#include "bialg/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ostream>
#include <random>

#include "bialg/corpus.hpp"
#include "bialg/error.hpp"
#include "bialg/io.hpp"

namespace bialg {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
};

class Emitter {
 public:
  Emitter(std::ostream& out, const Options& opt) : out_(out), opt_(opt) {}

  template <typename F>
  const Report& run(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = f();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(r, ms);
    last_ = std::move(r);
    return last_;
  }

  void emit(const Report& r, double ms) {
    all_passed_ = all_passed_ && r.passed();
    ++count_;
    if (opt_.format == "text")
      out_ << r.summary() << "\n";
    else
      out_ << report_to_json(r, ms).dump() << "\n";
  }

  int status() const { return all_passed_ ? kExitPass : kExitFail; }

 private:
  std::ostream& out_;
  const Options& opt_;
  bool all_passed_ = true;
  std::size_t count_ = 0;
  Report last_;
};

template <typename T>
T expect_kind(const fs::path& path, const char* kind) {
  Document d = parse_file(path);
  if (auto* v = std::get_if<T>(&d)) return *v;
  throw ParseError(path.string() + ": expected a " + kind + " document");
}

Bialgebra bialgebra_file(const fs::path& path) {
  Document d = parse_file(path);
  if (auto* b = std::get_if<Bialgebra>(&d)) return *b;
  if (auto* m = std::get_if<MonoidTable>(&d)) return monoid_bialgebra(*m);
  throw ParseError(path.string() + ": expected a bialgebra, monoid or group document");
}

Report suite_finset(std::size_t index, const MonoidPoint& p) {
  Report r;
  r.check = "suite.finset";
  r.notes.push_back("instance " + std::to_string(index) + ": point " + std::to_string(p.A.order) +
                    " -> " + std::to_string(p.B.order));
  bool schreier = is_schreier(p).schreier;
  Bialgebra a = monoid_bialgebra(p.A), b = monoid_bialgebra(p.B);
  auto ext = extension_from_point(a, b, Morph::from_table(a.carrier, b.carrier, p.alpha),
                                  Morph::from_table(b.carrier, a.carrier, p.e));
  bool valid = false;
  if (ext) {
    Report c = check_split_extension(*ext);
    valid = c.passed();
    if (valid) {
      r.absorb(check_derived_conditions(*ext), "derived.");
      r.absorb(roundtrip_verify(*ext), "roundtrip.");
    }
  }
  r.expect("coincidence", "Schreier exactly when the induced septuple is a split extension",
           schreier == valid, schreier ? "Schreier" : "not Schreier");
  return r;
}

Report suite_finvect(std::size_t index, const SplitExtension& s, std::uint64_t seed) {
  Report r;
  r.check = "suite.finvect";
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  const Field fields[] = {Field::rationals(), Field::prime(3), Field::prime(5), Field::prime(7)};
  Field f = fields[rng() % std::size(fields)];
  SplitExtension lin = linearize(s, f);
  auto [t, tinv] = random_change_of_basis(lin.A.carrier, rng());
  SplitExtension moved = transport(lin, t, tinv);
  r.notes.push_back("instance " + std::to_string(index) + ": " + s.name + " over " + f.name());
  r.absorb(check_split_extension(moved), "ext.");
  r.absorb(check_derived_conditions(moved), "derived.");
  r.absorb(roundtrip_verify(moved), "roundtrip.");
  SplitExtMorphism m{lin, moved, Morph::identity(lin.X.carrier), t, Morph::identity(lin.B.carrier)};
  r.absorb(check_splitext_morphism(m), "morphism.");
  r.absorb(ssfl_verify(m), "ssfl.");
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification of cocommutative bialgebras, split extensions and commutators", "bialg"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized components")->capture_default_str();

  std::string f1, f2, f3, outpath;
  std::size_t max_order = 3;
  std::string backend = "finset";

  auto one = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", f1, "Input document")->required()->check(CLI::ExistingFile);
    c->fallthrough();
    return c;
  };
  auto* cb = one("check-bialgebra", "Check the bialgebra axioms");
  auto* ce = one("check-extension", "Check a split extension");
  auto* ca = one("check-action", "Check the action axioms");
  auto* sd = one("semidirect", "Build the semidirect product extension of an action");
  sd->add_option("-o,--output", outpath, "Output document")->required();
  auto* ao = one("action-of", "Build the action of a split extension");
  ao->add_option("-o,--output", outpath, "Output document")->required();
  auto* pe = one("pullback-extension", "Pull a split extension back along a morphism C -> B");
  pe->add_option("morphism", f2, "Morphism document")->required()->check(CLI::ExistingFile);
  pe->add_option("-o,--output", outpath, "Output document")->required();
  auto* co = one("compose-extensions", "Compose X -> A -> B with Y -> B -> C");
  co->add_option("second", f2, "Second extension")->required()->check(CLI::ExistingFile);
  co->add_option("-o,--output", outpath, "Output document")->required();
  auto* hq = one("huq", "Huq commutator of two subobjects of A");
  hq->add_option("Y", f2, "Second inclusion")->required()->check(CLI::ExistingFile);
  hq->add_option("A", f3, "Ambient bialgebra")->required()->check(CLI::ExistingFile);
  auto* sh = one("smith-huq", "Smith centrality against Huq commutation");
  sh->add_option("S", f2, "Second relation")->required()->check(CLI::ExistingFile);
  auto* su = app.add_subcommand("suite", "Exhaustive verification over enumerated instances");
  su->add_option("--max-order", max_order, "Largest monoid order")->capture_default_str();
  su->add_option("--backend", backend, "Backend")
      ->check(CLI::IsMember({"finset", "finvect"}))
      ->capture_default_str();
  su->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "bialg: " << e.what() << "\n";
    return kExitParse;
  }

  Emitter em(out, opt);
  try {
    if (cb->parsed()) {
      Bialgebra b = bialgebra_file(f1);
      em.run([&] { return check_bialgebra(b); });
    } else if (ce->parsed()) {
      auto s = expect_kind<SplitExtension>(f1, "split_extension");
      em.run([&] { return check_split_extension(s); });
    } else if (ca->parsed()) {
      auto a = expect_kind<Action>(f1, "action");
      em.run([&] { return check_action(a); });
    } else if (sd->parsed()) {
      auto a = expect_kind<Action>(f1, "action");
      if (!em.run([&] { return check_action(a); }).passed()) return em.status();
      SplitExtension s = semidirect_extension(a);
      write_json(outpath, to_json(s));
      em.run([&] { return check_split_extension(s); });
    } else if (ao->parsed()) {
      auto s = expect_kind<SplitExtension>(f1, "split_extension");
      if (!em.run([&] { return check_split_extension(s); }).passed()) return em.status();
      Action a = action_from_extension(s);
      write_json(outpath, to_json(a));
      em.run([&] { return check_action(a); });
    } else if (pe->parsed()) {
      auto s = expect_kind<SplitExtension>(f1, "split_extension");
      auto g = expect_kind<BialgMorphism>(f2, "morphism");
      if (!em.run([&] { return check_split_extension(s); }).passed()) return em.status();
      if (!em.run([&] { return check_bialg_morphism(g); }).passed()) return em.status();
      SplitExtension p = pullback_splitext(s, g);
      write_json(outpath, to_json(p));
      em.run([&] { return check_split_extension(p); });
    } else if (co->parsed()) {
      auto s = expect_kind<SplitExtension>(f1, "split_extension");
      auto t = expect_kind<SplitExtension>(f2, "split_extension");
      if (!em.run([&] { return check_split_extension(s); }).passed()) return em.status();
      if (!em.run([&] { return check_split_extension(t); }).passed()) return em.status();
      SplitExtension c = compose_splitext(s, t);
      write_json(outpath, to_json(c));
      em.run([&] { return check_split_extension(c); });
    } else if (hq->parsed()) {
      auto x = expect_kind<BialgMorphism>(f1, "morphism");
      auto y = expect_kind<BialgMorphism>(f2, "morphism");
      Bialgebra a = bialgebra_file(f3);
      if (!(x.target.carrier == a.carrier) || !(y.target.carrier == a.carrier))
        throw ParseError("the inclusions must land in the ambient bialgebra");
      em.run([&] {
        return huq_commute({x.source, a, x.arrow}, {y.source, a, y.arrow}).report;
      });
    } else if (sh->parsed()) {
      auto r = expect_kind<SCocEquivRelation>(f1, "relation");
      auto s = expect_kind<SCocEquivRelation>(f2, "relation");
      em.run([&] { return smith_is_huq_verify(r, s).report; });
    } else if (su->parsed()) {
      if (max_order > kMaxEnumeratedMonoidOrder)
        throw CapExceeded("suite --max-order is capped at " +
                          std::to_string(kMaxEnumeratedMonoidOrder));
      if (backend == "finset") {
        auto pts = monoid_points(max_order);
        for (std::size_t i = 0; i < pts.size(); ++i) em.run([&] { return suite_finset(i, pts[i]); });
      } else {
        auto exts = schreier_monoid_extensions(max_order);
        for (std::size_t i = 0; i < exts.size(); ++i)
          em.run([&] { return suite_finvect(i, exts[i], opt.seed); });
      }
    }
  } catch (const ParseError& e) {
    err << "bialg: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "bialg: cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "bialg: invalid input: " << e.what() << "\n";
    return kExitParse;
  }
  return em.status();
}

}  // namespace bialg
