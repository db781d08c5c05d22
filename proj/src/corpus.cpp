#include "bialg/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "bialg/error.hpp"

namespace bialg {

namespace {

Morph table_morph(const Bialgebra& a, const Bialgebra& b, const Map& t) {
  return Morph::from_table(a.carrier, b.carrier, t);
}

bool bijective(const Morph& f) {
  if (f.source().size() != f.target().size()) return false;
  std::vector<bool> hit(f.target().size(), false);
  for (std::size_t x = 0; x < f.source().size(); ++x) hit[f(x)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

const Field kFields[] = {Field::rationals(), Field::prime(2), Field::prime(3),
                         Field::prime(5), Field::prime(7)};

}  // namespace

SplitExtension extension_of_point(const MonoidPoint& p, std::string name) {
  if (!is_schreier(p).schreier) throw PreconditionError("point is not Schreier");
  Bialgebra a = monoid_bialgebra(p.A), b = monoid_bialgebra(p.B);
  auto s = extension_from_point(a, b, table_morph(a, b, p.alpha), table_morph(b, a, p.e));
  if (!s) throw InvariantViolation("Schreier point without an induced lambda");
  s->name = std::move(name);
  return *s;
}

std::vector<MonoidPoint> monoid_points(std::size_t max_order) {
  std::vector<MonoidPoint> out;
  auto ms = monoids_up_to(max_order);
  for (const auto& a : ms)
    for (const auto& b : ms) {
      if (b.order > a.order) continue;
      for (auto& p : enumerate_points(a, b)) out.push_back(std::move(p));
    }
  return out;
}

std::vector<SplitExtension> schreier_monoid_extensions(std::size_t max_order) {
  std::vector<SplitExtension> out;
  std::size_t i = 0;
  for (const auto& p : monoid_points(max_order)) {
    ++i;
    if (!is_schreier(p).schreier) continue;
    out.push_back(extension_of_point(
        p, "point" + std::to_string(i - 1) + "[" + std::to_string(p.A.order) + "->" +
               std::to_string(p.B.order) + "]"));
  }
  return out;
}

std::vector<SplitExtMorphism> extension_morphisms(const SplitExtension& s,
                                                  const SplitExtension& t) {
  if (s.A.backend() != Backend::kFinSet || t.A.backend() != Backend::kFinSet)
    throw BackendMismatch("extension_morphisms enumerates FinSet extensions");
  MonoidTable a = monoid_of(s.A), a2 = monoid_of(t.A);
  MonoidTable b = monoid_of(s.B), b2 = monoid_of(t.B);
  auto gs = monoid_homs(b, b2);
  std::vector<SplitExtMorphism> out;
  for (const auto& p : monoid_homs(a, a2)) {
    for (const auto& g : gs) {
      bool ok = true;
      for (std::size_t x = 0; x < a.order && ok; ++x) ok = t.alpha(p[x]) == g[s.alpha(x)];
      for (std::size_t y = 0; y < b.order && ok; ++y) ok = p[s.e(y)] == t.e(g[y]);
      if (!ok) continue;
      Morph pm = table_morph(s.A, t.A, p);
      auto v = factor_through_mono(t.kappa, compose(pm, s.kappa));
      if (!v) continue;
      SplitExtMorphism m{s, t, *v, pm, table_morph(s.B, t.B, g)};
      if (check_splitext_morphism(m).passed()) out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<SplitExtension> group_split_extensions(std::size_t max_order) {
  std::vector<SplitExtension> out;
  auto gs = small_groups(max_order);
  for (const auto& x : gs)
    for (const auto& b : gs) {
      if (x.table.order < 2 || b.table.order < 2) continue;
      if (x.table.order * b.table.order > max_order) continue;
      Bialgebra xb = monoid_bialgebra(x.table, x.name), bb = monoid_bialgebra(b.table, b.name);
      auto acts = enumerate_monoid_actions(b.table, x.table);
      for (std::size_t i = 0; i < acts.size(); ++i) {
        Action act{bb, xb, Morph::from_table(tensor(bb.carrier, xb.carrier), xb.carrier, acts[i])};
        auto s = semidirect_extension(act);
        s.name = x.name + "|x" + b.name + "#" + std::to_string(i);
        out.push_back(std::move(s));
      }
    }
  return out;
}

SplitExtension linearize(const SplitExtension& s, Field f) {
  return SplitExtension{linearize(s.X, f),     linearize(s.A, f),     linearize(s.B, f),
                        linearize(s.kappa, f), linearize(s.alpha, f), linearize(s.e, f),
                        linearize(s.lambda, f), "k" + f.name() + "[" + s.name + "]"};
}

SplitExtMorphism linearize(const SplitExtMorphism& m, Field f) {
  return SplitExtMorphism{linearize(m.source, f), linearize(m.target, f), linearize(m.v, f),
                          linearize(m.p, f), linearize(m.g, f)};
}

SCocEquivRelation linearize(const SCocEquivRelation& r, Field f) {
  return make_relation(linearize(r.R(), f), linearize(r.A(), f), linearize(r.r0(), f),
                       linearize(r.r1(), f), linearize(r.s(), f),
                       "k" + f.name() + "[" + r.name + "]");
}

SplitExtension transport(const SplitExtension& s, const Morph& t, const Morph& t_inverse) {
  return SplitExtension{s.X,
                        transport(s.A, t, t_inverse),
                        s.B,
                        compose(t, s.kappa),
                        compose(s.alpha, t_inverse),
                        compose(t, s.e),
                        compose(s.lambda, t_inverse),
                        s.name + "^T"};
}

std::pair<Morph, Morph> random_change_of_basis(const Obj& x, std::uint64_t seed) {
  if (x.backend() != Backend::kFinVect)
    throw BackendMismatch("a change of basis needs a FinVect object");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::size_t n = x.size();
  Field f = x.field();
  while (true) {
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, Rational(entry(rng)));
    if (rank(m) != n) continue;
    auto inv = solve_right(m, Matrix::identity(f, n));
    return {Morph::from_matrix(x, x, m), Morph::from_matrix(x, x, *inv)};
  }
}

std::vector<SplitExtMorphism> ssfl_instances(std::size_t count, std::uint64_t seed) {
  struct Base {
    SplitExtension s;
    std::vector<SplitExtMorphism> autos;
  };
  std::vector<Base> bases;
  for (auto& s : group_split_extensions(8)) {
    std::vector<SplitExtMorphism> autos;
    for (auto& m : extension_morphisms(s, s))
      if (bijective(m.v) && bijective(m.g)) autos.push_back(std::move(m));
    bases.push_back({std::move(s), std::move(autos)});
  }
  std::mt19937_64 rng(seed);
  std::vector<SplitExtMorphism> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Base& base = bases[i % bases.size()];
    const auto& m0 = base.autos[rng() % base.autos.size()];
    Field f = kFields[rng() % std::size(kFields)];
    SplitExtMorphism lin = linearize(m0, f);
    auto [t, tinv] = random_change_of_basis(lin.target.A.carrier, rng());
    lin.target = transport(lin.target, t, tinv);
    lin.p = compose(t, lin.p);
    out.push_back(std::move(lin));
  }
  return out;
}

std::vector<SplitExtension> extension_corpus(std::uint64_t seed) {
  std::vector<SplitExtension> out = schreier_monoid_extensions(3);
  auto groups = group_split_extensions(8);
  std::mt19937_64 rng(seed);
  for (const auto& s : groups) {
    out.push_back(s);
    if (s.A.size() > 6) continue;
    out.push_back(linearize(s, Field::rationals()));
    auto lin = linearize(s, Field::prime(3));
    auto [t, tinv] = random_change_of_basis(lin.A.carrier, rng());
    out.push_back(transport(lin, t, tinv));
  }
  auto c3 = monoid_bialgebra(cyclic_group(3), "C3");
  out.push_back(product_point(c3, trivial_bialgebra(Backend::kFinSet)));
  out.push_back(trivial_extension(group_algebra(symmetric_group(3), Field::prime(5), "S3")));
  return out;
}

namespace {

// Kernel pair relations of all surjections onto groups of order 2 and 4,
// one per kernel.
std::vector<SCocEquivRelation> quotient_relations(const NamedGroup& g) {
  std::vector<SCocEquivRelation> out;
  std::set<std::vector<std::size_t>> kernels;
  Bialgebra gb = monoid_bialgebra(g.table, g.name);
  for (const auto& q : small_groups(4)) {
    if (q.table.order < 2 || q.table.order >= g.table.order) continue;
    Bialgebra qb = monoid_bialgebra(q.table, q.name);
    for (const auto& h : monoid_homs(g.table, q.table)) {
      std::set<std::size_t> image(h.begin(), h.end());
      if (image.size() != q.table.order) continue;
      std::vector<std::size_t> ker;
      for (std::size_t x = 0; x < h.size(); ++x)
        if (h[x] == 0) ker.push_back(x);
      if (!kernels.insert(ker).second) continue;
      out.push_back(kernel_pair_relation({gb, qb, table_morph(gb, qb, h)},
                                         "ker(" + g.name + "->" + q.name + ")#" +
                                             std::to_string(kernels.size() - 1)));
    }
  }
  return out;
}

}  // namespace

std::vector<RelationPair> relation_corpus() {
  std::vector<RelationPair> out;
  auto add_pairs = [&](const std::vector<SCocEquivRelation>& rels) {
    for (std::size_t i = 0; i < rels.size(); ++i)
      for (std::size_t j = i; j < rels.size(); ++j)
        out.push_back({rels[i], rels[j], rels[i].name + " , " + rels[j].name});
  };

  // Monoids of order <= 4: kernel pairs of Schreier points onto order 2,
  // one per kernel pair, with the discrete and (when valid) the indiscrete
  // relation.
  auto monoids = monoids_up_to(4);
  for (std::size_t mi = 0; mi < monoids.size(); ++mi) {
    const auto& a = monoids[mi];
    if (a.order < 2) continue;
    std::string tag = "M" + std::to_string(mi);
    Bialgebra ab = monoid_bialgebra(a, tag);
    std::vector<SCocEquivRelation> rels{discrete_relation(ab)};
    rels.back().name = "disc(" + tag + ")";
    std::set<std::vector<std::size_t>> seen;
    for (const auto& b : monoids_up_to(2)) {
      if (b.order < 2) continue;
      Bialgebra bb = monoid_bialgebra(b);
      for (const auto& p : enumerate_points(a, b)) {
        if (!is_schreier(p).schreier) continue;
        if (!seen.insert(kernel_pair_subset(a, p.alpha)).second) continue;
        auto rel = kernel_pair_relation({ab, bb, table_morph(ab, bb, p.alpha)},
                                        "kp" + std::to_string(seen.size() - 1) + "(" + tag + ")");
        if (check_relation(rel).passed()) rels.push_back(std::move(rel));
      }
    }
    if (a.order <= 3) {
      auto ind = indiscrete_relation(ab);
      ind.name = "ind(" + tag + ")";
      if (check_relation(ind).passed()) rels.push_back(std::move(ind));
    }
    if (rels.size() > 1) add_pairs(rels);
  }

  // Groups in FinSet and over a field.
  for (const auto& g : small_groups(6)) {
    if (g.table.order < 2) continue;
    auto rels = quotient_relations(g);
    Bialgebra gb = monoid_bialgebra(g.table, g.name);
    rels.push_back(discrete_relation(gb));
    rels.back().name = "disc(" + g.name + ")";
    if (g.table.order <= 3) {
      rels.push_back(indiscrete_relation(gb));
      rels.back().name = "ind(" + g.name + ")";
    }
    add_pairs(rels);
    std::vector<SCocEquivRelation> lin;
    for (const auto& r : rels)
      if (r.R().size() <= 18) lin.push_back(linearize(r, Field::prime(5)));
    add_pairs(lin);
  }
  // S3 against its indiscrete relation, where Huq fails.
  {
    auto s3 = small_groups(6);
    auto it = std::find_if(s3.begin(), s3.end(), [](auto& g) { return g.name == "S3"; });
    Bialgebra gb = monoid_bialgebra(it->table, it->name);
    auto ind = indiscrete_relation(gb);
    ind.name = "ind(S3)";
    auto sign = quotient_relations(*it).at(0);
    out.push_back({ind, ind, "ind(S3) , ind(S3)"});
    out.push_back({sign, ind, sign.name + " , ind(S3)"});
    auto lsign = linearize(sign, Field::prime(5)), lind = linearize(ind, Field::prime(5));
    out.push_back({lsign, lind, lsign.name + " , " + lind.name});
  }
  // Order 8: index-2 kernel pairs in FinSet, pairwise (nonabelian groups
  // give non-commuting pairs), and smaller kernel pairs against the
  // discrete relation over Q.
  for (const auto& g : small_groups(8)) {
    if (g.table.order != 8) continue;
    auto rels = quotient_relations(g);
    Bialgebra gb = monoid_bialgebra(g.table, g.name);
    auto disc = discrete_relation(gb);
    disc.name = "disc(" + g.name + ")";
    std::vector<SCocEquivRelation> index2;
    for (const auto& r : rels) {
      if (r.R().size() == 32) index2.push_back(r);
      if (r.R().size() > 16) continue;
      out.push_back({linearize(r, Field::rationals()), linearize(disc, Field::rationals()),
                     "kQ[" + r.name + "] , kQ[" + disc.name + "]"});
    }
    if (!is_commutative(g.table)) add_pairs(index2);
  }
  return out;
}

}  // namespace bialg
