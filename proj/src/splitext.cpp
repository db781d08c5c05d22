#include "bialg/splitext.hpp"

#include "bialg/error.hpp"

namespace bialg {

namespace {

void expect_arrow(const Morph& f, const Obj& s, const Obj& t, const char* what) {
  if (!f.valid()) throw ShapeError(std::string(what) + " is missing");
  if (!(f.source() == s) || !(f.target() == t))
    throw ShapeError(std::string(what) + " has the wrong source or target");
}

void check_shape(const SplitExtension& s) {
  check_bialgebra_shape(s.X);
  check_bialgebra_shape(s.A);
  check_bialgebra_shape(s.B);
  expect_arrow(s.kappa, s.X.carrier, s.A.carrier, "kappa");
  expect_arrow(s.alpha, s.A.carrier, s.B.carrier, "alpha");
  expect_arrow(s.e, s.B.carrier, s.A.carrier, "e");
  expect_arrow(s.lambda, s.A.carrier, s.X.carrier, "lambda");
}

Morph factor_or_throw(const Morph& mu, const Morph& f, const char* what) {
  auto g = factor_through_mono(mu, f);
  if (!g) throw InvariantViolation(std::string(what) + " does not factor");
  return *g;
}

// lambda m = m (lambda (x) lambda)(1 (x) m)(1 (x) e alpha (x) kappa lambda)(D (x) 1)
void lemma_clause(Report& r, const SplitExtension& s) {
  Morph ia = Morph::identity(s.A.carrier);
  Morph ea = compose(s.e, s.alpha);
  Morph kl = compose(s.kappa, s.lambda);
  Morph rhs = compose_chain({tensor(s.A.comult, ia), tensor({ia, ea, kl}),
                             tensor(ia, s.A.mult), tensor(s.lambda, s.lambda), s.X.mult});
  r.expect_equal("lemma", "l m = m (l (x) l)(1 (x) m)(1 (x) ea (x) kl)(D (x) 1)",
                 compose(s.lambda, s.A.mult), rhs);
}

}  // namespace

Report check_split_extension(const SplitExtension& s) {
  check_shape(s);
  Report r;
  r.check = "split-extension";
  r.absorb(check_bialg_morphism(s.kappa_morphism()), "kappa.");
  r.absorb(check_bialg_morphism(s.alpha_morphism()), "alpha.");
  r.absorb(check_bialg_morphism(s.e_morphism()), "e.");

  Morph ix = Morph::identity(s.X.carrier);
  Morph ia = Morph::identity(s.A.carrier);
  Morph ib = Morph::identity(s.B.carrier);
  r.expect_equal("(1)a", "l k = 1_X", compose(s.lambda, s.kappa), ix);
  r.expect_equal("(1)b", "a e = 1_B", compose(s.alpha, s.e), ib);
  r.expect_equal("(2)a", "l e = u_X eps_B", compose(s.lambda, s.e),
                 compose(s.X.unit, s.B.counit));
  r.expect_equal("(2)b", "a k = u_B eps_X", compose(s.alpha, s.kappa),
                 compose(s.B.unit, s.X.counit));
  r.expect_equal("(3)", "m (k l (x) e a) D = 1_A",
                 compose_chain({s.A.comult,
                                tensor(compose(s.kappa, s.lambda), compose(s.e, s.alpha)),
                                s.A.mult}),
                 ia);
  r.expect_equal("(4)", "l m (k (x) e) = 1_X (x) eps_B",
                 compose_chain({tensor(s.kappa, s.e), s.A.mult, s.lambda}),
                 tensor(ix, s.B.counit));
  r.expect_equal("(5)a", "D_X l = (l (x) l) D_A", compose(s.X.comult, s.lambda),
                 compose(tensor(s.lambda, s.lambda), s.A.comult));
  r.expect_equal("(5)b", "eps_X l = eps_A", compose(s.X.counit, s.lambda), s.A.counit);
  r.expect_equal("(5)c", "l u_A = u_X", compose(s.lambda, s.A.unit), s.X.unit);

  bool kernel_ok = false;
  std::string note;
  if (!is_mono(s.kappa)) {
    note = "kappa is not a monomorphism";
  } else {
    SubBialgebra k = kernel_bialg(s.alpha_morphism());
    bool in = factor_through_mono(k.inclusion, s.kappa).has_value();
    bool out = factor_through_mono(s.kappa, k.inclusion).has_value();
    kernel_ok = in && out;
    if (!in) note = "image of kappa is not inside the kernel of alpha";
    else if (!out) note = "kernel of alpha is larger than the image of kappa";
  }
  r.expect("kernel", "kappa is the kernel of alpha", kernel_ok, note);
  lemma_clause(r, s);
  return r;
}

Report check_derived_conditions(const SplitExtension& s) {
  check_shape(s);
  Report r;
  r.check = "derived-conditions";
  r.expect_equal("(1)a", "l k = 1_X", compose(s.lambda, s.kappa),
                 Morph::identity(s.X.carrier));
  r.expect_equal("(2)a", "l e = u_X eps_B", compose(s.lambda, s.e),
                 compose(s.X.unit, s.B.counit));
  r.expect_equal("(5)c", "l u_A = u_X", compose(s.lambda, s.A.unit), s.X.unit);
  lemma_clause(r, s);
  return r;
}

Report check_splitext_morphism(const SplitExtMorphism& m) {
  const SplitExtension& s = m.source;
  const SplitExtension& t = m.target;
  check_shape(s);
  check_shape(t);
  expect_arrow(m.v, s.X.carrier, t.X.carrier, "v");
  expect_arrow(m.p, s.A.carrier, t.A.carrier, "p");
  expect_arrow(m.g, s.B.carrier, t.B.carrier, "g");
  Report r;
  r.check = "split-extension-morphism";
  r.absorb(check_bialg_morphism({s.X, t.X, m.v}), "v.");
  r.absorb(check_bialg_morphism({s.A, t.A, m.p}), "p.");
  r.absorb(check_bialg_morphism({s.B, t.B, m.g}), "g.");
  r.expect_equal("kappa-square", "p k = k' v", compose(m.p, s.kappa), compose(t.kappa, m.v));
  r.expect_equal("alpha-square", "a' p = g a", compose(t.alpha, m.p), compose(m.g, s.alpha));
  r.expect_equal("e-square", "p e = e' g", compose(m.p, s.e), compose(t.e, m.g));
  r.expect_equal("lambda-square", "l' p = v l", compose(t.lambda, m.p),
                 compose(m.v, s.lambda));
  return r;
}

Report ssfl_verify(const SplitExtMorphism& m) {
  Report pre = check_splitext_morphism(m);
  if (!pre.passed()) throw PreconditionError("not a morphism of split extensions: " + pre.summary());
  bool v = is_iso(m.v), g = is_iso(m.g), p = is_iso(m.p);
  Report r;
  r.check = "ssfl";
  std::string note = std::string("v ") + (v ? "iso" : "not iso") + ", g " +
                     (g ? "iso" : "not iso") + ", p " + (p ? "iso" : "not iso");
  r.expect("ssfl", "v, g iso implies p iso", !(v && g) || p, note);
  return r;
}

std::optional<Morph> induced_lambda(const Bialgebra& X, const Bialgebra& A,
                                    const Bialgebra& B, const Morph& kappa,
                                    const Morph& e) {
  if (A.backend() == Backend::kFinSet) {
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> table(A.size(), kUnset);
    for (std::size_t x = 0; x < X.size(); ++x)
      for (std::size_t b = 0; b < B.size(); ++b) {
        std::size_t a = A.mult(kappa(x) * A.size() + e(b));
        if (table[a] == kUnset) table[a] = x;
      }
    std::size_t one = X.unit(0);
    for (auto& v : table)
      if (v == kUnset) v = one;
    return Morph::from_table(A.carrier, X.carrier, std::move(table));
  }
  Morph me = compose(A.mult, tensor(kappa, e));
  Morph rhs = tensor(Morph::identity(X.carrier), B.counit);
  auto sol = solve_right(me.to_matrix().transpose(), rhs.to_matrix().transpose());
  if (!sol) return std::nullopt;
  return Morph::from_matrix(A.carrier, X.carrier, sol->transpose());
}

std::optional<SplitExtension> extension_from_point(const Bialgebra& A, const Bialgebra& B,
                                                   const Morph& alpha, const Morph& e,
                                                   std::string name) {
  SubBialgebra k = kernel_bialg({A, B, alpha});
  auto lambda = induced_lambda(k.object, A, B, k.inclusion, e);
  if (!lambda) return std::nullopt;
  return SplitExtension{k.object, A, B, k.inclusion, alpha, e, *lambda, std::move(name)};
}

SplitExtension trivial_extension(const Bialgebra& X) {
  Bialgebra i = trivial_bialgebra(X.backend(), X.field());
  Morph id = Morph::identity(X.carrier);
  return SplitExtension{X, X, i, id, X.counit, X.unit, id, "trivial"};
}

SplitExtension product_point(const Bialgebra& X, const Bialgebra& B) {
  Morph ix = Morph::identity(X.carrier), ib = Morph::identity(B.carrier);
  return SplitExtension{X,
                        tensor_bialgebra(X, B),
                        B,
                        tensor(ix, B.unit),
                        tensor(X.counit, ib),
                        tensor(X.unit, ib),
                        tensor(ix, B.counit),
                        "product"};
}

SplitExtMorphism identity_morphism(const SplitExtension& s) {
  return SplitExtMorphism{s, s, Morph::identity(s.X.carrier), Morph::identity(s.A.carrier),
                          Morph::identity(s.B.carrier)};
}

SplitExtMorphism pullback_splitext_morphism(const SplitExtension& s,
                                            const BialgMorphism& g) {
  if (!(g.arrow.target() == s.B.carrier))
    throw DimensionMismatch("pullback along a map that does not land in B");
  const Bialgebra& c = g.source;
  PullbackCone p = pullback_bialg(s.alpha_morphism(), g);
  Morph ic = Morph::identity(c.carrier);
  Morph k = factor_or_throw(
      p.inclusion,
      compose(tensor(s.kappa, compose(c.unit, s.X.counit)), s.X.comult), "pulled kernel");
  Morph e = factor_or_throw(
      p.inclusion, compose(tensor(compose(s.e, g.arrow), ic), c.comult), "pulled section");
  SplitExtension pulled{s.X,
                        p.apex,
                        c,
                        k,
                        p.proj_right.arrow,
                        e,
                        compose(s.lambda, p.proj_left.arrow),
                        s.name.empty() ? std::string() : s.name + "*"};
  return SplitExtMorphism{pulled, s, Morph::identity(s.X.carrier), p.proj_left.arrow,
                          g.arrow};
}

SplitExtension pullback_splitext(const SplitExtension& s, const BialgMorphism& g) {
  return pullback_splitext_morphism(s, g).source;
}

SplitExtension product_splitext(const SplitExtension& s, const SplitExtension& t) {
  return SplitExtension{tensor_bialgebra(s.X, t.X),
                        tensor_bialgebra(s.A, t.A),
                        tensor_bialgebra(s.B, t.B),
                        tensor(s.kappa, t.kappa),
                        tensor(s.alpha, t.alpha),
                        tensor(s.e, t.e),
                        tensor(s.lambda, t.lambda),
                        s.name + "(x)" + t.name};
}

SplitExtMorphism equalizer_splitext_morphism(const SplitExtMorphism& m,
                                             const SplitExtMorphism& n) {
  const SplitExtension& s = m.source;
  const SplitExtension& t = m.target;
  if (!(n.source.A.carrier == s.A.carrier) || !(n.target.A.carrier == t.A.carrier) ||
      !(n.source.X.carrier == s.X.carrier) || !(n.source.B.carrier == s.B.carrier))
    throw DimensionMismatch("equalizer of morphisms with different endpoints");
  SubBialgebra ex = equalizer_bialg({s.X, t.X, m.v}, {s.X, t.X, n.v});
  SubBialgebra ea = equalizer_bialg({s.A, t.A, m.p}, {s.A, t.A, n.p});
  SubBialgebra eb = equalizer_bialg({s.B, t.B, m.g}, {s.B, t.B, n.g});
  SplitExtension eq{
      ex.object,
      ea.object,
      eb.object,
      factor_or_throw(ea.inclusion, compose(s.kappa, ex.inclusion), "restricted kappa"),
      factor_or_throw(eb.inclusion, compose(s.alpha, ea.inclusion), "restricted alpha"),
      factor_or_throw(ea.inclusion, compose(s.e, eb.inclusion), "restricted e"),
      factor_or_throw(ex.inclusion, compose(s.lambda, ea.inclusion), "restricted lambda"),
      "equalizer"};
  return SplitExtMorphism{eq, s, ex.inclusion, ea.inclusion, eb.inclusion};
}

SplitExtension equalizer_splitext(const SplitExtMorphism& m, const SplitExtMorphism& n) {
  return equalizer_splitext_morphism(m, n).source;
}

SplitExtension compose_splitext(const SplitExtension& s, const SplitExtension& t) {
  if (!(s.B.carrier == t.A.carrier))
    throw DimensionMismatch("extensions are not composable");
  Morph aa = compose(t.alpha, s.alpha);
  SubBialgebra z = kernel_bialg({s.A, t.B, aa});
  Morph second = compose_chain({s.alpha, t.lambda, t.kappa, s.e});
  Morph target = compose_chain(
      {s.A.comult, tensor(compose(s.kappa, s.lambda), second), s.A.mult});
  Morph lambda = factor_or_throw(z.inclusion, target, "composite lambda");
  return SplitExtension{z.object, s.A,  t.B,    z.inclusion, aa, compose(s.e, t.e),
                        lambda,   s.name.empty() ? std::string() : s.name + ";" + t.name};
}

Report is_strong_point(const SplitExtension& s, const std::vector<SubBialgebra>& subs) {
  Report r;
  r.check = "strong-point";
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Morph& mu = subs[i].inclusion;
    if (!(mu.target() == s.A.carrier) || !is_mono(mu))
      throw PreconditionError("subobject " + std::to_string(i) + " is not a mono into A");
    bool k = factor_through_mono(mu, s.kappa).has_value();
    bool e = factor_through_mono(mu, s.e).has_value();
    std::string id = "sub" + std::to_string(i);
    if (k && e) {
      r.expect(id, "kappa and e factor, so mu is an isomorphism", is_iso(mu));
    } else {
      r.expect(id, "exempt: kappa or e does not factor", true,
               std::string(k ? "" : "kappa ") + (e ? "" : "e ") + "does not factor");
    }
  }
  return r;
}

}  // namespace bialg
