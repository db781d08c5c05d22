#include "bialg/commutators.hpp"

#include <sstream>

#include "bialg/error.hpp"
#include "bialg/oracle.hpp"

namespace bialg {

namespace {

Morph pair(const Morph& f, const Morph& g, const Morph& comult) {
  return compose(tensor(f, g), comult);
}

bool column_equal(const Morph& f, const Morph& g, std::size_t j) {
  if (f.backend() == Backend::kFinSet) return f(j) == g(j);
  return f.column(j) == g.column(j);
}

std::string element_list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

// A coalgebra pullback {(a, c) : f a = g c} inside C1 (x) C2, with the
// comultiplication restricted from the ambient and the two legs.
struct CoPullback {
  Obj object;
  Morph inclusion, comult, left, right;
};

CoPullback copullback(const Bialgebra& c1, const Morph& f, const Bialgebra& c2,
                      const Morph& g) {
  Morph i1 = Morph::identity(c1.carrier), i2 = Morph::identity(c2.carrier);
  Equalizer eq = equalizer(compose(tensor({i1, f, i2}), tensor(c1.comult, i2)),
                           compose(tensor({i1, g, i2}), tensor(i1, c2.comult)));
  Morph amb = compose(tensor({i1, braiding(c1.carrier, c2.carrier), i2}),
                      tensor(c1.comult, c2.comult));
  auto d = factor_through_tensor_mono(eq.inclusion, eq.inclusion,
                                      compose(amb, eq.inclusion));
  if (!d) throw InvariantViolation("pullback is not a subcoalgebra");
  return CoPullback{eq.object, eq.inclusion, *d,
                    compose(tensor(i1, c2.counit), eq.inclusion),
                    compose(tensor(c1.counit, i2), eq.inclusion)};
}

Morph jointly(const SCocEquivRelation& r) { return pair(r.r0(), r.r1(), r.R().comult); }

}  // namespace

HuqResult huq_commute(const SubBialgebra& x, const SubBialgebra& y) {
  if (!(x.ambient.carrier == y.ambient.carrier))
    throw PreconditionError("huq: the subobjects have different ambients");
  const Bialgebra& A = x.ambient;
  const Bialgebra& X = x.object;
  const Bialgebra& Y = y.object;
  HuqResult out;
  Report& rep = out.report;
  rep.check = "huq";

  Morph xy = tensor(x.inclusion, y.inclusion);
  Morph straight = compose(A.mult, xy);
  Morph twisted = compose_chain({xy, braiding(A.carrier, A.carrier), A.mult});
  std::optional<std::size_t> bad;
  for (std::size_t j = 0; j < straight.source().size() && !bad; ++j)
    if (!column_equal(straight, twisted, j)) bad = j;
  out.criterion_i = !bad;
  std::string note;
  if (bad) {
    const std::size_t i = *bad / Y.size(), k = *bad % Y.size();
    out.witness = std::vector<std::size_t>{i, k};
    note = "x[" + std::to_string(i) + "] y[" + std::to_string(k) + "] != y[" +
           std::to_string(k) + "] x[" + std::to_string(i) + "]";
    if (x.inclusion.has_table() && y.inclusion.has_table())
      note += "; ambient basis elements " + std::to_string(x.inclusion.table()[i]) + ", " +
              std::to_string(y.inclusion.table()[k]);
  }
  Clause& ci = rep.expect("(i)", "m s (x (x) y) = m (x (x) y)", out.criterion_i, note);
  ci.witness = out.witness;

  out.cooperator = straight;
  Bialgebra xy_bialg = tensor_bialgebra(X, Y);
  Report mor = check_bialg_morphism({xy_bialg, A, straight});
  rep.absorb(mor, "cooperator.");
  Morph ix = Morph::identity(X.carrier), iy = Morph::identity(Y.carrier);
  auto& l = rep.expect_equal("cooperator-left", "p (1 (x) u) = x",
                             compose(straight, tensor(ix, Y.unit)), x.inclusion);
  auto& r = rep.expect_equal("cooperator-right", "p (u (x) 1) = y",
                             compose(straight, tensor(X.unit, iy)), y.inclusion);
  out.criterion_ii = mor.passed() && l.passed && r.passed;
  rep.notes.push_back(out.criterion_i && out.criterion_ii ? "[X,Y] = 0" : "[X,Y] != 0");
  return out;
}

SCocEquivRelation make_relation(const Bialgebra& R, const Bialgebra& A, const Morph& r0,
                                const Morph& r1, const Morph& s, std::string name) {
  auto pt = extension_from_point(R, A, r0, s, name);
  if (!pt) throw InvariantViolation("relation: the point (r0, s) admits no lambda");
  return SCocEquivRelation{std::move(*pt), r1, std::move(name)};
}

SCocEquivRelation kernel_pair_relation(const BialgMorphism& f, std::string name) {
  PullbackCone pb = pullback_bialg(f, f);
  auto s = factor_through_mono(pb.inclusion, f.source.comult);
  if (!s) throw InvariantViolation("kernel pair: the diagonal does not factor");
  return make_relation(pb.apex, f.source, pb.proj_left.arrow, pb.proj_right.arrow, *s,
                       std::move(name));
}

SCocEquivRelation discrete_relation(const Bialgebra& a) {
  Morph id = Morph::identity(a.carrier);
  return make_relation(a, a, id, id, id, "discrete");
}

SCocEquivRelation indiscrete_relation(const Bialgebra& a) {
  Bialgebra i = trivial_bialgebra(a.backend(), a.field());
  return kernel_pair_relation({a, i, a.counit}, "indiscrete");
}

Report check_relation(const SCocEquivRelation& r) {
  const Bialgebra& R = r.R();
  const Bialgebra& A = r.A();
  Report rep;
  rep.check = "relation";
  rep.absorb(check_bialg_morphism({R, A, r.r0()}), "r0.");
  rep.absorb(check_bialg_morphism({R, A, r.r1()}), "r1.");
  rep.absorb(check_bialg_morphism({A, R, r.s()}), "s.");
  Morph id = Morph::identity(A.carrier);
  rep.expect("reflexive", "r0 s = 1 = r1 s",
             equal(compose(r.r0(), r.s()), id) && equal(compose(r.r1(), r.s()), id));
  Morph j = jointly(r);
  rep.expect("jointly-monic", "(r0 (x) r1) D is a mono", is_mono(j));
  rep.expect("symmetric", "(r1 (x) r0) D factors through (r0 (x) r1) D",
             factor_through_mono(j, pair(r.r1(), r.r0(), R.comult)).has_value());
  CoPullback pb = copullback(R, r.r1(), R, r.r0());
  Morph chain = pair(compose(r.r0(), pb.left), compose(r.r1(), pb.right), pb.comult);
  rep.expect("transitive", "x R y R z gives x R z",
             factor_through_mono(j, chain).has_value());
  rep.absorb(check_split_extension(r.point), "point.");
  return rep;
}

SubBialgebra normalization(const SCocEquivRelation& r) {
  Morph n = compose(r.r1(), r.point.kappa);
  if (!is_mono(n)) throw InvariantViolation("normalization is not a mono");
  return SubBialgebra{r.point.X, r.A(), n};
}

ReflexiveMultGraph connector_from_graph(const SplitExtension& s, const SplitExtension& t) {
  if (!(s.A.carrier == t.A.carrier) || !(s.B.carrier == t.B.carrier) || !equal(s.e, t.e))
    throw PreconditionError("graph: the points must share A, B and the section");
  for (const SplitExtension* p : {&s, &t}) {
    Report r = check_split_extension(*p);
    if (!r.passed())
      throw PreconditionError("graph: not a split extension, " + r.first_failure()->id);
  }
  HuqResult h = huq_commute({s.X, s.A, s.kappa}, {t.X, t.A, t.kappa});
  if (!h.report.passed()) throw PreconditionError("graph: the kernels do not commute");
  PullbackCone pb = pullback_bialg(s.alpha_morphism(), t.alpha_morphism());
  Morph c = compose_chain({pb.inclusion,
                           tensor(compose(s.kappa, s.lambda), Morph::identity(s.A.carrier)),
                           s.A.mult});
  return ReflexiveMultGraph{s.A, s.B, s.alpha, t.alpha, s.e, pb, c};
}

Report check_rmg(const ReflexiveMultGraph& g) {
  Report rep;
  rep.check = "rmg";
  Morph id1 = Morph::identity(g.A1.carrier), id0 = Morph::identity(g.A0.carrier);
  rep.expect_equal("reflexive-delta", "delta iota = 1", compose(g.delta, g.iota), id0);
  rep.expect_equal("reflexive-gamma", "gamma iota = 1", compose(g.gamma, g.iota), id0);
  auto left = factor_through_mono(
      g.pairs.inclusion, pair(id1, compose(g.iota, g.delta), g.A1.comult));
  if (left)
    rep.expect_equal("RGM-left", "c (1, iota delta) = 1", compose(g.c, *left), id1);
  else
    rep.expect("RGM-left", "c (1, iota delta) = 1", false,
               "(1, iota delta) is not a composable pair");
  auto right = factor_through_mono(
      g.pairs.inclusion, pair(compose(g.iota, g.gamma), id1, g.A1.comult));
  if (right)
    rep.expect_equal("RGM-right", "c (iota gamma, 1) = 1", compose(g.c, *right), id1);
  else
    rep.expect("RGM-right", "c (iota gamma, 1) = 1", false,
               "(iota gamma, 1) is not a composable pair");
  rep.expect_equal("delta-c", "delta c = delta p2", compose(g.delta, g.c),
                   compose(g.delta, g.pairs.proj_right.arrow));
  rep.expect_equal("gamma-c", "gamma c = gamma p1", compose(g.gamma, g.c),
                   compose(g.gamma, g.pairs.proj_left.arrow));
  rep.absorb(check_bialg_morphism({g.pairs.apex, g.A1, g.c}), "c.");
  return rep;
}

PullbackCone connector_domain(const SCocEquivRelation& r, const SCocEquivRelation& s) {
  if (!(r.A().carrier == s.A().carrier))
    throw PreconditionError("relations on different objects");
  return pullback_bialg({r.R(), r.A(), r.r1()}, {s.R(), s.A(), s.r0()});
}

Morph smith_connector(const SCocEquivRelation& r, const SCocEquivRelation& s,
                      const PullbackCone& domain) {
  Morph left = compose_chain({domain.proj_right.arrow, s.point.lambda, s.point.kappa, s.r1()});
  Morph right = compose(r.r0(), domain.proj_left.arrow);
  return compose_chain({domain.apex.comult, tensor(left, right), r.A().mult});
}

Report connector_axioms(const SCocEquivRelation& r, const SCocEquivRelation& s,
                        const PullbackCone& domain, const Morph& p) {
  if (r.A().backend() != Backend::kFinSet)
    throw BackendMismatch("element-wise connector axioms need FinSet");
  const std::size_t na = r.A().size(), ns = s.R().size();
  const auto& r0 = r.r0().table();
  const auto& r1 = r.r1().table();
  const auto& s0 = s.r0().table();
  const auto& s1 = s.r1().table();
  std::vector<long> in_r(na * na, -1), in_s(na * na, -1);
  for (std::size_t i = 0; i < r0.size(); ++i) in_r[r0[i] * na + r1[i]] = static_cast<long>(i);
  for (std::size_t i = 0; i < s0.size(); ++i) in_s[s0[i] * na + s1[i]] = static_cast<long>(i);
  const auto& inc = domain.inclusion.table();
  std::vector<long> in_p(r0.size() * ns, -1);
  for (std::size_t i = 0; i < inc.size(); ++i) in_p[inc[i]] = static_cast<long>(i);
  // p(x, y, z), or -1 when x R y S z fails.
  auto ph = [&](std::size_t x, std::size_t y, std::size_t z) -> long {
    long a = in_r[x * na + y], b = in_s[y * na + z];
    if (a < 0 || b < 0) return -1;
    return static_cast<long>(p(static_cast<std::size_t>(in_p[a * ns + b])));
  };

  Report rep;
  rep.check = "connector-axioms";
  std::optional<std::vector<std::size_t>> ms, mr, ul, ur, al, ar;
  for (std::size_t i = 0; i < inc.size(); ++i) {
    std::size_t rho = inc[i] / ns, sig = inc[i] % ns;
    std::size_t x = r0[rho], y = r1[rho], z = s1[sig], w = p(i);
    if (!ms && in_s[x * na + w] < 0) ms = {x, y, z};
    if (!mr && in_r[z * na + w] < 0) mr = {x, y, z};
  }
  for (std::size_t sig = 0; sig < s0.size() && !ul; ++sig)
    if (ph(s0[sig], s0[sig], s1[sig]) != static_cast<long>(s1[sig]))
      ul = {s0[sig], s0[sig], s1[sig]};
  for (std::size_t rho = 0; rho < r0.size() && !ur; ++rho)
    if (ph(r0[rho], r1[rho], r1[rho]) != static_cast<long>(r0[rho]))
      ur = {r0[rho], r1[rho], r1[rho]};
  // p(x, y, p(y, u, v)) = p(x, u, v)
  for (std::size_t rho = 0; rho < r0.size() && !al; ++rho) {
    std::size_t x = r0[rho], y = r1[rho];
    for (std::size_t i = 0; i < inc.size() && !al; ++i) {
      std::size_t rho2 = inc[i] / ns, sig = inc[i] % ns;
      if (r0[rho2] != y) continue;
      std::size_t u = r1[rho2], v = s1[sig];
      long lhs = ph(x, y, p(i)), rhs = ph(x, u, v);
      if (lhs < 0 || rhs < 0) continue;
      if (lhs != rhs) al = {x, y, u, v};
    }
  }
  // p(p(x, y, u), u, v) = p(x, y, v)
  for (std::size_t i = 0; i < inc.size() && !ar; ++i) {
    std::size_t rho = inc[i] / ns, sig = inc[i] % ns;
    std::size_t x = r0[rho], y = r1[rho], u = s1[sig];
    for (std::size_t sig2 = 0; sig2 < s0.size() && !ar; ++sig2) {
      if (s0[sig2] != u) continue;
      std::size_t v = s1[sig2];
      long lhs = ph(p(i), u, v), rhs = ph(x, y, v);
      if (lhs < 0 || rhs < 0) continue;
      if (lhs != rhs) ar = {x, y, u, v};
    }
  }
  auto add = [&](const char* id, const char* desc, const auto& w) {
    Clause& c = rep.expect(id, desc, !w, w ? "at " + element_list(*w) : std::string{});
    c.witness = w;
  };
  add("member-S", "x S p(x, y, z)", ms);
  add("member-R", "z R p(x, y, z)", mr);
  add("unit-left", "p(x, x, y) = y", ul);
  add("unit-right", "p(x, y, y) = x", ur);
  add("assoc-left", "p(x, y, p(y, u, v)) = p(x, u, v)", al);
  add("assoc-right", "p(p(x, y, u), u, v) = p(x, y, v)", ar);
  return rep;
}

Report connector_equations(const SCocEquivRelation& r, const SCocEquivRelation& s,
                           const PullbackCone& domain, const Morph& p) {
  const Bialgebra& A = r.A();
  const Bialgebra& P = domain.apex;
  const Morph& pr = domain.proj_left.arrow;
  const Morph& ps = domain.proj_right.arrow;
  Morph jr = jointly(r), js = jointly(s);
  Report rep;
  rep.check = "connector";

  auto into_p = [&](const Morph& rho, const Morph& sig, const Morph& comult) {
    return factor_through_mono(domain.inclusion, pair(rho, sig, comult));
  };
  auto related = [&](const Morph& j, const Morph& a, const Morph& b, const Morph& comult) {
    return factor_through_mono(j, pair(a, b, comult));
  };
  auto compare = [&](const char* id, const char* desc, const std::optional<Morph>& lhs,
                     const std::optional<Morph>& rhs) {
    if (lhs && rhs)
      rep.expect_equal(id, desc, *lhs, *rhs);
    else
      rep.expect(id, desc, false, "a side is undefined");
  };

  rep.expect("member-S", "(r0 p_R, p) factors through S",
             related(js, compose(r.r0(), pr), p, P.comult).has_value());
  rep.expect("member-R", "(s1 p_S, p) factors through R",
             related(jr, compose(s.r1(), ps), p, P.comult).has_value());

  auto ul = into_p(compose(r.s(), s.r0()), Morph::identity(s.R().carrier), s.R().comult);
  compare("unit-left", "p (s_R s0, 1) = s1",
          ul ? std::optional<Morph>(compose(p, *ul)) : std::nullopt, s.r1());
  auto ur = into_p(Morph::identity(r.R().carrier), compose(s.s(), r.r1()), r.R().comult);
  compare("unit-right", "p (1, s_S r1) = r0",
          ur ? std::optional<Morph>(compose(p, *ur)) : std::nullopt, r.r0());

  auto lift = [&](const std::optional<Morph>& m, const Morph& then)
      -> std::optional<Morph> {
    if (!m) return std::nullopt;
    return compose(then, *m);
  };

  {
    // (x R y, y R u S v)
    CoPullback q = copullback(r.R(), r.r1(), P, compose(r.r0(), pr));
    Morph w = compose(p, q.right);
    std::optional<Morph> lhs, rhs;
    if (auto sig = related(js, compose(r.r1(), q.left), w, q.comult))
      lhs = lift(into_p(q.left, *sig, q.comult), p);
    if (auto rho = related(jr, compose(r.r0(), q.left), compose_chain({q.right, pr, r.r1()}),
                           q.comult))
      rhs = lift(into_p(*rho, compose(ps, q.right), q.comult), p);
    compare("assoc-left", "p (x, y, p (y, u, v)) = p (x, u, v)", lhs, rhs);
  }
  {
    // (x R y S u, u S v)
    CoPullback q = copullback(P, compose(s.r1(), ps), s.R(), s.r0());
    Morph w = compose(p, q.left);
    std::optional<Morph> lhs, rhs;
    if (auto rho = related(jr, w, compose(s.r0(), q.right), q.comult))
      lhs = lift(into_p(*rho, q.right, q.comult), p);
    if (auto sig = related(js, compose_chain({q.left, ps, s.r0()}), compose(s.r1(), q.right),
                           q.comult))
      rhs = lift(into_p(compose(pr, q.left), *sig, q.comult), p);
    compare("assoc-right", "p (p (x, y, u), u, v) = p (x, y, v)", lhs, rhs);
  }
  rep.absorb(check_bialg_morphism({P, A, p}), "morphism.");
  return rep;
}

ConnectorSearch search_connector(const SCocEquivRelation& r, const SCocEquivRelation& s,
                                 std::size_t bound) {
  if (r.A().backend() != Backend::kFinSet)
    throw BackendMismatch("connector search runs in FinSet");
  PullbackCone dom = connector_domain(r, s);
  MonoidTable pm = monoid_of(dom.apex), am = monoid_of(r.A());
  ConnectorSearch out;
  std::size_t gens = generators(pm).size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < gens; ++i) {
    if (count > bound / am.order + 1) {
      count = bound + 1;
      break;
    }
    count *= am.order;
  }
  out.candidates = count;
  if (count > bound) return out;
  out.searched = true;
  for (auto& h : monoid_homs(pm, am)) {
    Morph cand = Morph::from_table(dom.apex.carrier, r.A().carrier, std::move(h));
    if (connector_axioms(r, s, dom, cand).passed()) {
      out.found = cand;
      break;
    }
  }
  return out;
}

std::optional<SCocEquivRelation> underlying_set_relation(const SCocEquivRelation& r) {
  if (r.A().backend() == Backend::kFinSet) return r;
  auto as_set = [](const Bialgebra& b) -> std::optional<Bialgebra> {
    if (!b.mult.has_table() || !b.comult.has_table() || !b.unit.has_table()) return std::nullopt;
    if (b.unit.table()[0] != 0) return std::nullopt;
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i)
      if (b.comult.table()[i] != i * n + i) return std::nullopt;
    MonoidTable m{n, b.mult.table()};
    try {
      validate_monoid(m);
    } catch (const Error&) {
      return std::nullopt;
    }
    return monoid_bialgebra(m, b.name);
  };
  auto R = as_set(r.R()), A = as_set(r.A());
  if (!R || !A) return std::nullopt;
  for (const Morph* m : {&r.r0(), &r.r1(), &r.s()})
    if (!m->has_table()) return std::nullopt;
  return make_relation(*R, *A, Morph::from_table(R->carrier, A->carrier, r.r0().table()),
                       Morph::from_table(R->carrier, A->carrier, r.r1().table()),
                       Morph::from_table(A->carrier, R->carrier, r.s().table()), r.name);
}

SmithHuqResult smith_is_huq_verify(const SCocEquivRelation& r, const SCocEquivRelation& s) {
  if (!(r.A().carrier == s.A().carrier))
    throw PreconditionError("relations on different objects");
  for (const SCocEquivRelation* rel : {&r, &s}) {
    Report v = check_relation(*rel);
    if (!v.passed())
      throw PreconditionError("invalid relation " + rel->name + ": " + v.first_failure()->id);
  }
  SmithHuqResult out;
  Report& rep = out.report;
  rep.check = "smith-huq";
  HuqResult h = huq_commute(normalization(r), normalization(s));
  out.huq = h.criterion_i && h.criterion_ii;
  rep.expect("huq-criteria", "(i) holds iff the cooperator is a bialgebra morphism",
             h.criterion_i == h.criterion_ii);
  if (h.witness) rep.notes.push_back("normalizations fail to commute at " + element_list(*h.witness));

  if (out.huq) {
    rep.notes.push_back("normalizations commute");
    PullbackCone dom = connector_domain(r, s);
    Morph p = smith_connector(r, s, dom);
    Report eqs = connector_equations(r, s, dom, p);
    rep.absorb(eqs, "connector.");
    bool ok = eqs.passed();
    if (r.A().backend() == Backend::kFinSet) {
      Report el = connector_axioms(r, s, dom, p);
      rep.absorb(el, "elementwise.");
      ok = ok && el.passed();
    }
    for (const SCocEquivRelation* rel : {&r, &s}) {
      const std::string tag = rel == &r ? "graph-R" : "graph-S";
      auto second = extension_from_point(rel->R(), rel->A(), rel->r1(), rel->s());
      if (!second) {
        rep.expect(tag, "the point (r1, s) is a split extension", false, "no lambda");
        continue;
      }
      try {
        rep.absorb(check_rmg(connector_from_graph(rel->point, *second)), tag + ".");
      } catch (const PreconditionError& e) {
        rep.expect(tag, "the relation is a multiplicative graph", false, e.what());
      }
    }
    out.connector = ok;
  } else {
    rep.notes.push_back("normalizations do not commute");
    auto rs = underlying_set_relation(r), ss = underlying_set_relation(s);
    if (!rs || !ss) {
      rep.notes.push_back("connector search skipped: no basis-map FinSet model");
    } else {
      ConnectorSearch cs = search_connector(*rs, *ss);
      if (!cs.searched) {
        rep.notes.push_back("connector search skipped: " + std::to_string(cs.candidates) +
                            " candidates exceed the bound");
      } else {
        out.connector = cs.found.has_value();
        rep.expect("no-connector", "no homomorphism R x_A S -> A is a connector",
                   !cs.found,
                   cs.found ? "connector found"
                            : "not found within bound (" + std::to_string(cs.candidates) +
                                  " candidates)");
      }
    }
  }
  rep.expect("biconditional", "a connector exists iff the normalizations commute",
             !out.connector || *out.connector == out.huq,
             out.connector ? "" : "connector existence undecided");
  return out;
}

}  // namespace bialg
