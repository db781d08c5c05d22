#include "bialg/bialgebra.hpp"

#include "bialg/error.hpp"

namespace bialg {

namespace {

void expect_arrow(const Morph& f, const Obj& s, const Obj& t, const char* what) {
  if (!f.valid()) throw ShapeError(std::string(what) + " is missing");
  if (!(f.source() == s) || !(f.target() == t)) {
    throw ShapeError(std::string(what) + " has shape " + f.source().describe() +
                     " -> " + f.target().describe() + ", expected " +
                     s.describe() + " -> " + t.describe());
  }
}

}  // namespace

void check_bialgebra_shape(const Bialgebra& b) {
  const Obj& x = b.carrier;
  Obj i = b.unit_object();
  Obj xx = tensor(x, x);
  expect_arrow(b.mult, xx, x, "mult");
  expect_arrow(b.unit, i, x, "unit");
  expect_arrow(b.comult, x, xx, "comult");
  expect_arrow(b.counit, x, i, "counit");
}

Report check_bialgebra(const Bialgebra& b) {
  check_bialgebra_shape(b);
  Report r;
  r.check = "bialgebra";
  const Obj& x = b.carrier;
  Morph id = Morph::identity(x);
  Morph id_i = Morph::identity(b.unit_object());
  const Morph& m = b.mult;
  const Morph& u = b.unit;
  const Morph& d = b.comult;
  const Morph& e = b.counit;
  Morph sigma = braiding(x, x);

  r.expect_equal("unit-left", "m (u (x) 1) = 1", compose(m, tensor(u, id)), id);
  r.expect_equal("unit-right", "m (1 (x) u) = 1", compose(m, tensor(id, u)), id);
  r.expect_equal("assoc", "m (m (x) 1) = m (1 (x) m)", compose(m, tensor(m, id)),
                 compose(m, tensor(id, m)));
  r.expect_equal("coassoc", "(D (x) 1) D = (1 (x) D) D", compose(tensor(d, id), d),
                 compose(tensor(id, d), d));
  r.expect_equal("counit-left", "(e (x) 1) D = 1", compose(tensor(e, id), d), id);
  r.expect_equal("counit-right", "(1 (x) e) D = 1", compose(tensor(id, e), d), id);
  r.expect_equal("delta-mult", "D m = (m (x) m)(1 (x) s (x) 1)(D (x) D)",
                 compose(d, m),
                 compose_chain({tensor(d, d), tensor({id, sigma, id}), tensor(m, m)}));
  r.expect_equal("delta-unit", "D u = u (x) u", compose(d, u), tensor(u, u));
  r.expect_equal("counit-mult", "e m = e (x) e", compose(e, m), tensor(e, e));
  r.expect_equal("counit-unit", "e u = 1_I", compose(e, u), id_i);
  r.expect_equal("cocomm", "s D = D", compose(sigma, d), d);
  return r;
}

Report check_coalgebra_morphism(const Morph& f, const Bialgebra& source,
                                const Bialgebra& target) {
  expect_arrow(f, source.carrier, target.carrier, "arrow");
  Report r;
  r.check = "coalgebra-morphism";
  r.expect_equal("comult", "D' f = (f (x) f) D", compose(target.comult, f),
                 compose(tensor(f, f), source.comult));
  r.expect_equal("counit", "e' f = e", compose(target.counit, f), source.counit);
  return r;
}

Report check_bialg_morphism(const BialgMorphism& f) {
  check_bialgebra_shape(f.source);
  check_bialgebra_shape(f.target);
  expect_arrow(f.arrow, f.source.carrier, f.target.carrier, "arrow");
  const Morph& a = f.arrow;
  Report r;
  r.check = "bialgebra-morphism";
  r.expect_equal("mult", "f m = m' (f (x) f)", compose(a, f.source.mult),
                 compose(f.target.mult, tensor(a, a)));
  r.expect_equal("unit", "f u = u'", compose(a, f.source.unit), f.target.unit);
  r.absorb(check_coalgebra_morphism(a, f.source, f.target), "");
  return r;
}

Bialgebra trivial_bialgebra(Backend b, Field f) {
  Obj i = Obj::unit(b, f);
  Morph id = Morph::identity(i);
  return Bialgebra{i, id, id, id, id, "I"};
}

Bialgebra monoid_bialgebra(const MonoidTable& table, std::string name) {
  validate_monoid(table);
  std::size_t n = table.order;
  Obj x = Obj::set(n);
  Obj i = Obj::unit(Backend::kFinSet);
  std::vector<std::size_t> diag(n);
  for (std::size_t a = 0; a < n; ++a) diag[a] = a * n + a;
  return Bialgebra{x,
                   Morph::from_table(tensor(x, x), x, table.table),
                   Morph::from_table(i, x, {0}),
                   Morph::from_table(x, tensor(x, x), std::move(diag)),
                   Morph::from_table(x, i, std::vector<std::size_t>(n, 0)),
                   std::move(name)};
}

Bialgebra monoid_algebra(const MonoidTable& table, Field f, std::string name) {
  return linearize(monoid_bialgebra(table, std::move(name)), f);
}

Bialgebra group_algebra(const GroupTable& table, Field f, std::string name) {
  validate_group(table);
  return monoid_algebra(table, f, std::move(name));
}

MonoidTable monoid_of(const Bialgebra& b) {
  if (b.backend() != Backend::kFinSet)
    throw BackendMismatch("monoid_of needs a FinSet bialgebra");
  MonoidTable t;
  t.order = b.size();
  t.table = b.mult.table();
  return t;
}

namespace {
Obj linearize(const Obj& o, Field f) {
  if (o.backend() != Backend::kFinSet) throw BackendMismatch("linearize expects FinSet");
  return Obj::vect(f, o.size());
}
}  // namespace

Morph linearize(const Morph& m, Field f) {
  return Morph::from_table(linearize(m.source(), f), linearize(m.target(), f),
                           m.table());
}

Bialgebra linearize(const Bialgebra& b, Field f) {
  Obj x = linearize(b.carrier, f);
  Obj i = Obj::unit(Backend::kFinVect, f);
  Obj xx = tensor(x, x);
  return Bialgebra{x,
                   Morph::from_table(xx, x, b.mult.table()),
                   Morph::from_table(i, x, b.unit.table()),
                   Morph::from_table(x, xx, b.comult.table()),
                   Morph::from_table(x, i, b.counit.table()),
                   b.name.empty() ? std::string() : "k[" + b.name + "]"};
}

BialgMorphism identity_morphism(const Bialgebra& b) {
  return BialgMorphism{b, b, Morph::identity(b.carrier)};
}

BialgMorphism zero_morphism(const Bialgebra& a, const Bialgebra& b) {
  return BialgMorphism{a, b, compose(b.unit, a.counit)};
}

BialgMorphism compose(const BialgMorphism& g, const BialgMorphism& f) {
  return BialgMorphism{f.source, g.target, compose(g.arrow, f.arrow)};
}

Bialgebra transport(const Bialgebra& b, const Morph& t, const Morph& t_inverse) {
  Obj y = t.target();
  return Bialgebra{y,
                   compose_chain({tensor(t_inverse, t_inverse), b.mult, t}),
                   compose(t, b.unit),
                   compose_chain({t_inverse, b.comult, tensor(t, t)}),
                   compose(b.counit, t_inverse),
                   b.name};
}

}  // namespace bialg
