#include "bialg/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "bialg/error.hpp"

namespace bialg {

MonoidTable MonoidTable::from_rows(
    const std::vector<std::vector<std::size_t>>& rows) {
  MonoidTable m;
  m.order = rows.size();
  m.table.clear();
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw ShapeError("monoid table is not square");
    m.table.insert(m.table.end(), r.begin(), r.end());
  }
  return m;
}

std::vector<std::vector<std::size_t>> MonoidTable::rows() const {
  std::vector<std::vector<std::size_t>> out(order);
  for (std::size_t a = 0; a < order; ++a)
    out[a].assign(table.begin() + static_cast<long>(a * order),
                  table.begin() + static_cast<long>((a + 1) * order));
  return out;
}

std::optional<std::array<std::size_t, 3>> associativity_failure(
    const MonoidTable& m) {
  for (std::size_t a = 0; a < m.order; ++a)
    for (std::size_t b = 0; b < m.order; ++b)
      for (std::size_t c = 0; c < m.order; ++c)
        if (m.mul(a, m.mul(b, c)) != m.mul(m.mul(a, b), c))
          return std::array<std::size_t, 3>{a, b, c};
  return std::nullopt;
}

void validate_monoid(const MonoidTable& m) {
  if (m.order == 0) throw ShapeError("monoid of order 0");
  if (m.table.size() != m.order * m.order) {
    throw ShapeError("table has " + std::to_string(m.table.size()) +
                     " entries, expected " + std::to_string(m.order * m.order));
  }
  for (auto v : m.table) {
    if (v >= m.order) throw ShapeError("table value " + std::to_string(v) + " out of range");
  }
  for (std::size_t a = 0; a < m.order; ++a) {
    if (m.mul(0, a) != a || m.mul(a, 0) != a) {
      throw ShapeError("element 0 is not a two-sided identity (fails at " +
                       std::to_string(a) + ")");
    }
  }
  if (auto f = associativity_failure(m)) {
    throw ShapeError("table is not associative at (" + std::to_string((*f)[0]) +
                     ", " + std::to_string((*f)[1]) + ", " +
                     std::to_string((*f)[2]) + ")");
  }
}

namespace {
std::optional<std::vector<std::size_t>> try_inverses(const MonoidTable& m) {
  std::vector<std::size_t> inv(m.order);
  for (std::size_t a = 0; a < m.order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < m.order && !found; ++b) {
      if (m.mul(a, b) == 0 && m.mul(b, a) == 0) {
        inv[a] = b;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return inv;
}
}  // namespace

void validate_group(const GroupTable& g) {
  validate_monoid(g);
  if (!try_inverses(g)) throw ShapeError("table is a monoid but not a group");
}

bool is_group(const MonoidTable& m) { return try_inverses(m).has_value(); }

bool is_commutative(const MonoidTable& m) {
  for (std::size_t a = 0; a < m.order; ++a)
    for (std::size_t b = a + 1; b < m.order; ++b)
      if (m.mul(a, b) != m.mul(b, a)) return false;
  return true;
}

std::vector<std::size_t> inverses(const GroupTable& g) {
  auto inv = try_inverses(g);
  if (!inv) throw ShapeError("table is not a group");
  return *inv;
}

bool is_monoid_hom(const MonoidTable& a, const MonoidTable& b,
                   const std::vector<std::size_t>& map) {
  if (map.size() != a.order || map[0] != 0) return false;
  for (auto v : map)
    if (v >= b.order) return false;
  for (std::size_t x = 0; x < a.order; ++x)
    for (std::size_t y = 0; y < a.order; ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

MonoidTable submonoid_table(const MonoidTable& m,
                            const std::vector<std::size_t>& subset) {
  if (subset.empty() || subset.front() != 0)
    throw ShapeError("submonoid must list the identity first");
  std::vector<long> pos(m.order, -1);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<long>(i);
  MonoidTable s;
  s.order = subset.size();
  s.table.resize(s.order * s.order);
  for (std::size_t i = 0; i < s.order; ++i)
    for (std::size_t j = 0; j < s.order; ++j) {
      long p = pos[m.mul(subset[i], subset[j])];
      if (p < 0) throw ShapeError("subset is not closed under multiplication");
      s.table[i * s.order + j] = static_cast<std::size_t>(p);
    }
  return s;
}

MonoidTable trivial_monoid() { return MonoidTable{}; }

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw ShapeError("cyclic group of order 0");
  MonoidTable g;
  g.order = n;
  g.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
  return g;
}

GroupTable symmetric_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  MonoidTable g;
  g.order = perms.size();
  g.table.resize(g.order * g.order);
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      auto it = std::find(perms.begin(), perms.end(), c);
      g.table[a * g.order + b] = static_cast<std::size_t>(it - perms.begin());
    }
  return g;
}

GroupTable dihedral_group(std::size_t n) {
  if (n == 0) throw ShapeError("dihedral group needs n >= 1");
  MonoidTable g;
  g.order = 2 * n;
  g.table.resize(g.order * g.order);
  for (std::size_t x = 0; x < g.order; ++x)
    for (std::size_t y = 0; y < g.order; ++y) {
      std::size_t e = x / n, a = x % n, f = y / n, b = y % n;
      // r^a s^e r^b s^f = r^(a + (-1)^e b) s^(e + f)
      std::size_t k = e == 0 ? (a + b) % n : (a + n - b) % n;
      g.table[x * g.order + y] = ((e + f) % 2) * n + k;
    }
  return g;
}

GroupTable quaternion_group() {
  // Elements: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k; unit u in {1,i,j,k}
  // with a sign bit.
  static constexpr int unit_mul[4][4][2] = {
      // {result unit, sign flip}
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  MonoidTable g;
  g.order = 8;
  g.table.resize(64);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t ux = x / 2, sx = x % 2, uy = y / 2, sy = y % 2;
      const auto& r = unit_mul[ux][uy];
      std::size_t sign = (sx + sy + static_cast<std::size_t>(r[1])) % 2;
      g.table[x * 8 + y] = static_cast<std::size_t>(r[0]) * 2 + sign;
    }
  return g;
}

MonoidTable direct_product(const MonoidTable& a, const MonoidTable& b) {
  MonoidTable p;
  p.order = a.order * b.order;
  p.table.resize(p.order * p.order);
  for (std::size_t x = 0; x < p.order; ++x)
    for (std::size_t y = 0; y < p.order; ++y) {
      std::size_t l = a.mul(x / b.order, y / b.order);
      std::size_t r = b.mul(x % b.order, y % b.order);
      p.table[x * p.order + y] = l * b.order + r;
    }
  return p;
}

std::vector<NamedGroup> small_groups(std::size_t max_order) {
  if (max_order > 8) throw CapExceeded("small_groups is tabulated up to order 8");
  std::vector<NamedGroup> all = {
      {"C1", cyclic_group(1)},
      {"C2", cyclic_group(2)},
      {"C3", cyclic_group(3)},
      {"C4", cyclic_group(4)},
      {"C2xC2", direct_product(cyclic_group(2), cyclic_group(2))},
      {"C5", cyclic_group(5)},
      {"C6", cyclic_group(6)},
      {"S3", symmetric_group(3)},
      {"C7", cyclic_group(7)},
      {"C8", cyclic_group(8)},
      {"C4xC2", direct_product(cyclic_group(4), cyclic_group(2))},
      {"C2xC2xC2", direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                  cyclic_group(2))},
      {"D4", dihedral_group(4)},
      {"Q8", quaternion_group()},
  };
  std::vector<NamedGroup> out;
  for (auto& g : all) {
    if (g.table.order <= max_order) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace bialg
