#include "bialg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bialg/error.hpp"

namespace bialg {

namespace {

MonoidTable relabel(const MonoidTable& m, const std::vector<std::size_t>& perm) {
  MonoidTable r;
  r.order = m.order;
  r.table.assign(m.order * m.order, 0);
  for (std::size_t a = 0; a < m.order; ++a)
    for (std::size_t b = 0; b < m.order; ++b)
      r.table[perm[a] * m.order + perm[b]] = perm[m.mul(a, b)];
  return r;
}

bool associative(const MonoidTable& m) { return !associativity_failure(m).has_value(); }

void require_order(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + " is capped at order " + std::to_string(cap) +
                      ", got " + std::to_string(n));
}

}  // namespace

MonoidTable canonical_form(const MonoidTable& m, bool largest) {
  std::vector<std::size_t> perm(m.order);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  MonoidTable best = m;
  do {
    MonoidTable r = relabel(m, perm);
    if (largest ? r.table > best.table : r.table < best.table) best = std::move(r);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::vector<MonoidTable> enumerate_monoids(std::size_t n) {
  require_order(n, kMaxEnumeratedMonoidOrder, "monoid enumeration");
  if (n == 0) return {};
  // Brute force over the (n-1)^2 free cells.
  std::size_t free = (n - 1) * (n - 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < free; ++i) total *= n;
  std::set<std::vector<std::size_t>> seen;
  std::vector<MonoidTable> out;
  MonoidTable m;
  m.order = n;
  m.table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    m.table[a] = a;
    m.table[a * n] = a;
  }
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 1; b < n; ++b) {
        m.table[a * n + b] = c % n;
        c /= n;
      }
    if (!associative(m)) continue;
    MonoidTable k = canonical_form(m);
    if (seen.insert(k.table).second) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end(),
            [](const MonoidTable& x, const MonoidTable& y) { return x.table < y.table; });
  return out;
}

namespace {

// Checks every triple whose products are already filled in.
bool partial_associative(const MonoidTable& m, std::size_t filled_rows) {
  std::size_t n = m.order;
  for (std::size_t a = 0; a < filled_rows; ++a)
    for (std::size_t b = 0; b < filled_rows; ++b) {
      std::size_t ab = m.mul(a, b);
      if (ab >= filled_rows) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (m.mul(ab, c) != m.mul(a, m.mul(b, c))) return false;
    }
  return true;
}

void fill_rows(MonoidTable& m, std::size_t row, std::set<std::vector<std::size_t>>& seen,
               std::vector<MonoidTable>& out) {
  std::size_t n = m.order;
  if (row == n) {
    if (!associative(m)) return;
    MonoidTable k = canonical_form(m, true);
    if (seen.insert(k.table).second) out.push_back(std::move(k));
    return;
  }
  std::size_t count = 1;
  for (std::size_t i = 1; i < n; ++i) count *= n;
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t c = code;
    m.table[row * n] = row;
    for (std::size_t b = 1; b < n; ++b) {
      m.table[row * n + b] = c % n;
      c /= n;
    }
    if (partial_associative(m, row + 1)) fill_rows(m, row + 1, seen, out);
  }
}

}  // namespace

std::vector<MonoidTable> enumerate_monoids_backtracking(std::size_t n) {
  require_order(n, kMaxEnumeratedMonoidOrder, "monoid enumeration");
  if (n == 0) return {};
  MonoidTable m;
  m.order = n;
  m.table.assign(n * n, 0);
  std::iota(m.table.begin(), m.table.begin() + static_cast<long>(n), std::size_t{0});
  std::set<std::vector<std::size_t>> seen;
  std::vector<MonoidTable> out;
  fill_rows(m, 1, seen, out);
  return out;
}

std::vector<MonoidTable> monoids_up_to(std::size_t max_order) {
  std::vector<MonoidTable> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto ms = enumerate_monoids(n);
    out.insert(out.end(), ms.begin(), ms.end());
  }
  return out;
}

std::vector<std::size_t> generated_submonoid(const MonoidTable& m,
                                             const std::vector<std::size_t>& gens) {
  std::vector<bool> in(m.order, false);
  in[0] = true;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (auto g : gens) {
      for (std::size_t y : {m.mul(x, g), m.mul(g, x)}) {
        if (!in[y]) {
          in[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < m.order; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<std::size_t> generators(const MonoidTable& m) {
  // Greedy: each new generator is the element (smallest index on ties)
  // that enlarges the generated submonoid most.
  std::vector<std::size_t> gens;
  std::vector<bool> in(m.order, false);
  in[0] = true;
  std::size_t covered = 1;
  while (covered < m.order) {
    std::size_t best = 0, best_size = 0;
    std::vector<std::size_t> best_closure;
    for (std::size_t x = 1; x < m.order; ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      auto c = generated_submonoid(m, gens);
      gens.pop_back();
      if (c.size() > best_size) {
        best = x;
        best_size = c.size();
        best_closure = std::move(c);
      }
    }
    gens.push_back(best);
    for (auto y : best_closure) in[y] = true;
    covered = best_size;
  }
  return gens;
}

std::vector<Map> monoid_homs(const MonoidTable& a, const MonoidTable& b) {
  const auto gens = generators(a);
  const std::size_t k = gens.size();
  // Level l adds the elements first reached with generators 0..l, each as
  // parent * gens[gi] for an earlier element.
  struct Step {
    std::size_t x, parent, gi;
  };
  std::vector<std::vector<Step>> levels(k);
  std::vector<std::vector<std::size_t>> members(k);
  std::vector<bool> seen(a.order, false);
  seen[0] = true;
  std::vector<std::size_t> reached{0};
  for (std::size_t l = 0; l < k; ++l) {
    std::vector<std::size_t> frontier = reached;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (auto x : frontier)
        for (std::size_t gi = 0; gi <= l; ++gi) {
          std::size_t y = a.mul(x, gens[gi]);
          if (seen[y]) continue;
          seen[y] = true;
          levels[l].push_back({y, x, gi});
          next.push_back(y);
        }
      reached.insert(reached.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    members[l] = reached;
  }

  std::vector<Map> out;
  Map f(a.order, 0);
  std::vector<std::size_t> img(k, 0);
  auto consistent = [&](std::size_t l) {
    for (auto x : members[l])
      for (std::size_t gi = 0; gi <= l; ++gi)
        if (f[a.mul(x, gens[gi])] != b.mul(f[x], img[gi])) return false;
    return true;
  };
  auto extend = [&](auto&& self, std::size_t l) -> void {
    if (l == k) {
      out.push_back(f);
      return;
    }
    for (std::size_t v = 0; v < b.order; ++v) {
      img[l] = v;
      for (const auto& st : levels[l]) f[st.x] = b.mul(f[st.parent], img[st.gi]);
      if (consistent(l)) self(self, l + 1);
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<MonoidPoint> enumerate_points(const MonoidTable& a, const MonoidTable& b) {
  require_order(std::max(a.order, b.order), kMaxPointOrder, "point enumeration");
  std::vector<MonoidPoint> out;
  auto alphas = monoid_homs(a, b);
  auto sections = monoid_homs(b, a);
  for (const auto& al : alphas)
    for (const auto& e : sections) {
      bool split = true;
      for (std::size_t y = 0; y < b.order && split; ++y) split = al[e[y]] == y;
      if (split) out.push_back(MonoidPoint{a, b, al, e});
    }
  return out;
}

SchreierResult is_schreier(const MonoidPoint& p) {
  const MonoidTable& a = p.A;
  if (!is_monoid_hom(a, p.B, p.alpha) || !is_monoid_hom(p.B, a, p.e))
    throw PreconditionError("point maps are not monoid homomorphisms");
  for (std::size_t y = 0; y < p.B.order; ++y)
    if (p.alpha[p.e[y]] != y) throw PreconditionError("alpha e is not the identity");
  SchreierResult r;
  for (std::size_t k = 0; k < a.order; ++k)
    if (p.alpha[k] == 0) r.kernel.push_back(k);
  r.lambda.assign(a.order, 0);
  r.schreier = true;
  for (std::size_t x = 0; x < a.order; ++x) {
    std::size_t s = p.e[p.alpha[x]];
    std::size_t found = 0;
    for (auto k : r.kernel) {
      if (a.mul(k, s) == x) {
        if (found++ == 0) r.lambda[x] = k;
      }
    }
    if (found != 1) {
      r.schreier = false;
      if (!r.witness) r.witness = x;
    }
  }
  if (!r.schreier) r.lambda.clear();
  return r;
}

std::vector<std::vector<std::size_t>> enumerate_submonoids(const MonoidTable& m) {
  require_order(m.order, kMaxSubmonoidOrder, "submonoid enumeration");
  std::vector<std::vector<std::size_t>> out;
  std::size_t rest = m.order - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << rest); ++mask) {
    std::vector<std::size_t> s{0};
    for (std::size_t i = 0; i < rest; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    bool closed = true;
    std::vector<bool> in(m.order, false);
    for (auto x : s) in[x] = true;
    for (auto x : s)
      for (auto y : s)
        if (!in[m.mul(x, y)]) closed = false;
    if (closed) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_subgroups(const GroupTable& g) {
  require_order(g.order, kMaxSubgroupOrder, "subgroup enumeration");
  validate_group(g);
  // Closed subsets of a finite group are subgroups; walk subsets by their
  // generated subgroup instead of all 2^(n-1) masks.
  std::set<std::vector<std::size_t>> found{{0}};
  std::vector<std::vector<std::size_t>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& h : frontier) {
      for (std::size_t x = 1; x < g.order; ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        auto gens = h;
        gens.push_back(x);
        auto s = generated_submonoid(g, gens);
        if (found.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

SubBialgebra submonoid_bialgebra(const MonoidTable& m, const std::vector<std::size_t>& subset) {
  Bialgebra amb = monoid_bialgebra(m);
  Bialgebra sub = monoid_bialgebra(submonoid_table(m, subset));
  return SubBialgebra{sub, amb, Morph::from_table(sub.carrier, amb.carrier, subset)};
}

SubBialgebra submonoid_algebra(const MonoidTable& m, const std::vector<std::size_t>& subset,
                               Field f) {
  Bialgebra amb = monoid_algebra(m, f);
  Bialgebra sub = monoid_algebra(submonoid_table(m, subset), f);
  return SubBialgebra{sub, amb, Morph::from_table(sub.carrier, amb.carrier, subset)};
}

std::vector<SubBialgebra> enumerate_subgroup_algebras(const GroupTable& g, Field f) {
  std::vector<SubBialgebra> out;
  for (const auto& h : enumerate_subgroups(g)) out.push_back(submonoid_algebra(g, h, f));
  return out;
}

std::optional<Map> find_isomorphism(const MonoidTable& a, const MonoidTable& b) {
  if (a.order != b.order) return std::nullopt;
  std::vector<std::size_t> perm(a.order);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (is_monoid_hom(a, b, perm)) return perm;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return std::nullopt;
}

std::vector<Map> endomorphisms(const MonoidTable& x) {
  auto homs = monoid_homs(x, x);
  Map id(x.order);
  std::iota(id.begin(), id.end(), std::size_t{0});
  auto it = std::find(homs.begin(), homs.end(), id);
  std::rotate(homs.begin(), it, it + 1);
  return homs;
}

std::vector<Map> enumerate_monoid_actions(const MonoidTable& b, const MonoidTable& x) {
  auto ends = endomorphisms(x);
  // End(x) as a monoid table under (f g)(t) = f(g(t)).
  MonoidTable end;
  end.order = ends.size();
  end.table.resize(end.order * end.order);
  for (std::size_t f = 0; f < end.order; ++f)
    for (std::size_t g = 0; g < end.order; ++g) {
      Map c(x.order);
      for (std::size_t t = 0; t < x.order; ++t) c[t] = ends[f][ends[g][t]];
      end.table[f * end.order + g] =
          static_cast<std::size_t>(std::find(ends.begin(), ends.end(), c) - ends.begin());
    }
  std::vector<Map> out;
  for (const auto& rho : monoid_homs(b, end)) {
    Map act(b.order * x.order);
    for (std::size_t bi = 0; bi < b.order; ++bi)
      for (std::size_t xi = 0; xi < x.order; ++xi) act[bi * x.order + xi] = ends[rho[bi]][xi];
    out.push_back(std::move(act));
  }
  return out;
}

std::vector<std::size_t> kernel_pair_subset(const MonoidTable& a, const Map& f) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < a.order; ++x)
    for (std::size_t y = 0; y < a.order; ++y)
      if (f[x] == f[y]) out.push_back(x * a.order + y);
  return out;
}

}  // namespace bialg
