#include "bialg/limits.hpp"

#include "bialg/error.hpp"

namespace bialg {

namespace {

// Above this many basis triples the restricted structure is not re-checked
// axiom by axiom; the factorizations through the mono already force the
// axioms, since inclusion^(x)3 is again a mono.
constexpr std::size_t kRecheckLimit = std::size_t{1} << 21;

void require_same_backend(const Bialgebra& a, const Bialgebra& b) {
  if (a.backend() != b.backend()) throw BackendMismatch("bialgebras live in different backends");
  if (!(a.field() == b.field())) throw FieldMismatch("bialgebras over different fields");
}

}  // namespace

Bialgebra tensor_bialgebra(const Bialgebra& a, const Bialgebra& b) {
  require_same_backend(a, b);
  Morph ia = Morph::identity(a.carrier), ib = Morph::identity(b.carrier);
  Morph mid = tensor({ia, braiding(b.carrier, a.carrier), ib});
  Morph mid_d = tensor({ia, braiding(a.carrier, b.carrier), ib});
  std::string name;
  if (!a.name.empty() || !b.name.empty()) name = a.name + "(x)" + b.name;
  return Bialgebra{tensor(a.carrier, b.carrier),
                   compose(tensor(a.mult, b.mult), mid),
                   tensor(a.unit, b.unit),
                   compose(mid_d, tensor(a.comult, b.comult)),
                   tensor(a.counit, b.counit),
                   std::move(name)};
}

ProductCone product(const Bialgebra& a, const Bialgebra& b) {
  Bialgebra p = tensor_bialgebra(a, b);
  BialgMorphism l{p, a, tensor(Morph::identity(a.carrier), b.counit)};
  BialgMorphism r{p, b, tensor(a.counit, Morph::identity(b.carrier))};
  return ProductCone{p, l, r};
}

BialgMorphism pairing(const BialgMorphism& f, const BialgMorphism& g) {
  if (!(f.source.carrier == g.source.carrier))
    throw DimensionMismatch("pairing needs a common source");
  return BialgMorphism{f.source, tensor_bialgebra(f.target, g.target),
                       compose(tensor(f.arrow, g.arrow), f.source.comult)};
}

namespace {

std::optional<Bialgebra> try_restrict(const Bialgebra& a, const Morph& i,
                                      std::string name) {
  auto m = factor_through_mono(i, compose(a.mult, tensor(i, i)));
  if (!m) return std::nullopt;
  auto u = factor_through_mono(i, a.unit);
  if (!u) return std::nullopt;
  auto d = factor_through_tensor_mono(i, i, compose(a.comult, i));
  if (!d) return std::nullopt;
  return Bialgebra{i.source(), *m, *u, *d, compose(a.counit, i), std::move(name)};
}

}  // namespace

bool is_sub_bialgebra(const Bialgebra& ambient, const Morph& inclusion) {
  if (!is_mono(inclusion)) return false;
  return try_restrict(ambient, inclusion, {}).has_value();
}

Bialgebra restrict_bialgebra(const Bialgebra& ambient, const Morph& inclusion,
                             std::string name) {
  if (!(inclusion.target() == ambient.carrier))
    throw DimensionMismatch("inclusion does not land in the ambient bialgebra");
  if (!is_mono(inclusion)) throw InvariantViolation("restriction along a non-mono");
  auto e = try_restrict(ambient, inclusion, std::move(name));
  if (!e) throw InvariantViolation("subobject is not closed under the bialgebra structure");
  std::size_t n = e->size();
  if (n * n * n <= kRecheckLimit) {
    Report r = check_bialgebra(*e);
    if (!r.passed()) throw InvariantViolation("restricted structure: " + r.summary());
  }
  return *e;
}

SubBialgebra equalizer_bialg(const BialgMorphism& f, const BialgMorphism& g) {
  if (!(f.arrow.source() == g.arrow.source()) || !(f.arrow.target() == g.arrow.target()))
    throw DimensionMismatch("equalizer of non-parallel morphisms");
  const Bialgebra& a = f.source;
  Morph ia = Morph::identity(a.carrier);
  Equalizer eq = equalizer(compose(tensor(f.arrow, ia), a.comult),
                           compose(tensor(g.arrow, ia), a.comult));
  Bialgebra e = restrict_bialgebra(a, eq.inclusion);
  return SubBialgebra{e, a, eq.inclusion};
}

PullbackCone pullback_bialg(const BialgMorphism& f, const BialgMorphism& g) {
  if (!(f.arrow.target() == g.arrow.target()))
    throw DimensionMismatch("pullback needs a common target");
  const Bialgebra& a = f.source;
  const Bialgebra& c = g.source;
  Morph ia = Morph::identity(a.carrier), ic = Morph::identity(c.carrier);
  Equalizer eq = equalizer(compose(tensor({ia, f.arrow, ic}), tensor(a.comult, ic)),
                           compose(tensor({ia, g.arrow, ic}), tensor(ia, c.comult)));
  Bialgebra ac = tensor_bialgebra(a, c);
  Bialgebra apex = restrict_bialgebra(ac, eq.inclusion);
  BialgMorphism pl{apex, a, compose(tensor(ia, c.counit), eq.inclusion)};
  BialgMorphism pr{apex, c, compose(tensor(a.counit, ic), eq.inclusion)};
  return PullbackCone{apex, eq.inclusion, pl, pr};
}

std::optional<BialgMorphism> pullback_pairing(const PullbackCone& p,
                                              const BialgMorphism& left,
                                              const BialgMorphism& right) {
  const Bialgebra& d = left.source;
  auto k = factor_through_mono(
      p.inclusion, compose(tensor(left.arrow, right.arrow), d.comult));
  if (!k) return std::nullopt;
  return BialgMorphism{d, p.apex, *k};
}

SubBialgebra kernel_bialg(const BialgMorphism& f) {
  return equalizer_bialg(f, zero_morphism(f.source, f.target));
}

}  // namespace bialg
