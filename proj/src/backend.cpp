#include "bialg/backend.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <variant>

#include "bialg/error.hpp"

namespace bialg {

std::string to_string(Backend b) {
  return b == Backend::kFinSet ? "finset" : "finvect";
}

// ------------------------------------------------------------------ Obj

Obj Obj::set(std::size_t n, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw ShapeError("label count " + std::to_string(labels.size()) +
                     " != set size " + std::to_string(n));
  }
  Obj o;
  o.backend_ = Backend::kFinSet;
  o.size_ = n;
  o.factors_ = {n};
  o.labels_ = std::move(labels);
  return o;
}

Obj Obj::vect(Field f, std::size_t dim) {
  Obj o;
  o.backend_ = Backend::kFinVect;
  o.size_ = dim;
  o.field_ = f;
  o.factors_ = {dim};
  return o;
}

Obj Obj::unit(Backend b, Field f) {
  Obj o;
  o.backend_ = b;
  o.size_ = 1;
  o.field_ = b == Backend::kFinSet ? Field::rationals() : f;
  return o;
}

std::vector<std::size_t> Obj::decode(std::size_t index) const {
  std::size_t prod = 1;
  for (auto f : factors_) prod *= f;
  if (prod != size_ || factors_.empty()) return {index};
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    out[k] = index % factors_[k];
    index /= factors_[k];
  }
  return out;
}

std::string Obj::describe() const {
  std::ostringstream os;
  os << (backend_ == Backend::kFinSet ? "set" : "vect") << "(" << size_;
  if (backend_ == Backend::kFinVect) os << ", " << field_.name();
  os << ")";
  return os.str();
}

Obj tensor(const Obj& a, const Obj& b) {
  if (a.backend_ != b.backend_)
    throw BackendMismatch("tensor of objects from different backends");
  if (a.field_ != b.field_)
    throw FieldMismatch("tensor of spaces over " + a.field_.name() + " and " +
                        b.field_.name());
  Obj o;
  o.backend_ = a.backend_;
  o.size_ = a.size_ * b.size_;
  o.field_ = a.field_;
  o.factors_ = a.factors_;
  o.factors_.insert(o.factors_.end(), b.factors_.begin(), b.factors_.end());
  return o;
}

Obj tensor(std::initializer_list<Obj> objs) {
  if (objs.size() == 0) throw ShapeError("empty tensor product");
  auto it = objs.begin();
  Obj acc = *it;
  for (++it; it != objs.end(); ++it) acc = tensor(acc, *it);
  return acc;
}

// ------------------------------------------------------------------ nodes

namespace detail {

struct TableBody {
  std::vector<std::size_t> table;
};
struct ColumnsBody {
  std::vector<SparseVec> cols;
};
struct ComposeBody {
  std::vector<Morph> chain;  // applied front to back
};
struct TensorBody {
  std::vector<Morph> factors;
};

struct MorphNode {
  Obj source;
  Obj target;
  std::variant<TableBody, ColumnsBody, ComposeBody, TensorBody> body;
};

}  // namespace detail

namespace {

using detail::ColumnsBody;
using detail::ComposeBody;
using detail::MorphNode;
using detail::TableBody;
using detail::TensorBody;

// Above this many source elements a composite is kept unevaluated.
constexpr std::size_t kEagerComposeLimit = std::size_t{1} << 20;
// Above this many source elements a tensor of tables is kept unevaluated.
constexpr std::size_t kEagerTensorLimit = std::size_t{1} << 22;

SparseVec accumulate(Field f, std::unordered_map<std::size_t, Rational>& acc) {
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [i, v] : acc) {
    if (!v.is_zero()) out.emplace_back(i, std::move(v));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  (void)f;
  return out;
}

bool is_basis_map(const std::vector<SparseVec>& cols) {
  return std::all_of(cols.begin(), cols.end(), [](const SparseVec& c) {
    return c.size() == 1 && c.front().second.is_one();
  });
}

void check_table(const Obj& source, const Obj& target,
                 const std::vector<std::size_t>& table) {
  if (table.size() != source.size()) {
    throw DimensionMismatch("table length " + std::to_string(table.size()) +
                            " != source size " + std::to_string(source.size()));
  }
  for (auto v : table) {
    if (v >= target.size()) {
      throw DimensionMismatch("table value " + std::to_string(v) +
                              " outside target of size " +
                              std::to_string(target.size()));
    }
  }
}

void require_same_backend(const Obj& a, const Obj& b, const char* what) {
  if (a.backend() != b.backend()) {
    throw BackendMismatch(std::string(what) + ": backends differ");
  }
}

}  // namespace

// ------------------------------------------------------------------ Morph

Morph Morph::identity(const Obj& x) {
  std::vector<std::size_t> t(x.size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return from_table(x, x, std::move(t));
}

Morph Morph::from_table(const Obj& source, const Obj& target,
                        std::vector<std::size_t> table) {
  require_same_backend(source, target, "from_table");
  check_table(source, target, table);
  return Morph(std::make_shared<const MorphNode>(
      MorphNode{source, target, TableBody{std::move(table)}}));
}

Morph Morph::from_columns(const Obj& source, const Obj& target,
                          std::vector<SparseVec> columns) {
  if (source.backend() != Backend::kFinVect ||
      target.backend() != Backend::kFinVect) {
    throw BackendMismatch("matrix bodies exist only in FinVect");
  }
  if (source.field() != target.field())
    throw FieldMismatch("source and target fields differ");
  if (columns.size() != source.size()) {
    throw DimensionMismatch("column count " + std::to_string(columns.size()) +
                            " != source dimension " +
                            std::to_string(source.size()));
  }
  for (auto& col : columns) {
    for (auto& [r, v] : col) {
      if (r >= target.size())
        throw DimensionMismatch("matrix row outside target dimension");
      v = target.field().reduce(v);
    }
    col.erase(std::remove_if(col.begin(), col.end(),
                             [](const auto& e) { return e.second.is_zero(); }),
              col.end());
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  if (::bialg::is_basis_map(columns)) {
    std::vector<std::size_t> t;
    t.reserve(columns.size());
    for (const auto& c : columns) t.push_back(c.front().first);
    return from_table(source, target, std::move(t));
  }
  return Morph(std::make_shared<const MorphNode>(
      MorphNode{source, target, ColumnsBody{std::move(columns)}}));
}

Morph Morph::from_matrix(const Obj& source, const Obj& target,
                         const Matrix& m) {
  if (m.rows() != target.size() || m.cols() != source.size()) {
    throw DimensionMismatch("matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " but arrow is " +
                            source.describe() + " -> " + target.describe());
  }
  if (m.field() != source.field())
    throw FieldMismatch("matrix field differs from object field");
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return from_columns(source, target, std::move(cols));
}

const Obj& Morph::source() const {
  if (!node_) throw PreconditionError("use of an empty morphism");
  return node_->source;
}

const Obj& Morph::target() const {
  if (!node_) throw PreconditionError("use of an empty morphism");
  return node_->target;
}

bool Morph::has_table() const {
  return node_ && std::holds_alternative<TableBody>(node_->body);
}

const std::vector<std::size_t>& Morph::table() const {
  if (!has_table()) throw PreconditionError("morphism has no table form");
  return std::get<TableBody>(node_->body).table;
}

std::size_t Morph::operator()(std::size_t x) const {
  if (backend() != Backend::kFinSet)
    throw BackendMismatch("pointwise evaluation needs a FinSet arrow");
  if (has_table()) return table().at(x);
  return basis_image(x);
}

bool Morph::is_basis_map() const {
  const auto& body = node_->body;
  if (std::holds_alternative<TableBody>(body)) return true;
  if (const auto* c = std::get_if<ComposeBody>(&body)) {
    for (const auto& m : c->chain)
      if (!m.is_basis_map()) return false;
    return true;
  }
  if (const auto* t = std::get_if<TensorBody>(&body)) {
    for (const auto& m : t->factors)
      if (!m.is_basis_map()) return false;
    return true;
  }
  return false;
}

std::size_t Morph::basis_image(std::size_t x) const {
  const auto& body = node_->body;
  if (const auto* t = std::get_if<TableBody>(&body)) return t->table.at(x);
  if (const auto* c = std::get_if<ComposeBody>(&body)) {
    for (const auto& m : c->chain) x = m.basis_image(x);
    return x;
  }
  if (const auto* t = std::get_if<TensorBody>(&body)) {
    std::size_t out = 0, weight = 1, rest = x;
    for (std::size_t k = t->factors.size(); k-- > 0;) {
      const Morph& m = t->factors[k];
      out += m.basis_image(rest % m.source().size()) * weight;
      rest /= m.source().size();
      weight *= m.target().size();
    }
    return out;
  }
  const SparseVec c = column(x);
  if (c.size() != 1 || !c.front().second.is_one())
    throw PreconditionError("not a basis map");
  return c.front().first;
}

SparseVec Morph::column(std::size_t j) const {
  const auto& n = *node_;
  if (j >= n.source.size()) throw DimensionMismatch("column index out of range");
  if (const auto* t = std::get_if<TableBody>(&n.body)) {
    return SparseVec{{t->table[j], Rational(1)}};
  }
  if (const auto* c = std::get_if<ColumnsBody>(&n.body)) return c->cols[j];
  return apply(SparseVec{{j, Rational(1)}});
}

SparseVec Morph::apply(const SparseVec& v) const {
  const auto& n = *node_;
  const Field f = n.target.field();
  if (const auto* t = std::get_if<TableBody>(&n.body)) {
    std::unordered_map<std::size_t, Rational> acc;
    for (const auto& [i, c] : v) {
      auto& slot = acc[t->table[i]];
      slot = f.add(slot, c);
    }
    return accumulate(f, acc);
  }
  if (const auto* cb = std::get_if<ColumnsBody>(&n.body)) {
    std::unordered_map<std::size_t, Rational> acc;
    for (const auto& [i, c] : v) {
      for (const auto& [r, w] : cb->cols[i]) {
        auto& slot = acc[r];
        slot = f.add(slot, f.mul(c, w));
      }
    }
    return accumulate(f, acc);
  }
  if (const auto* cmp = std::get_if<ComposeBody>(&n.body)) {
    SparseVec cur = v;
    for (const auto& m : cmp->chain) cur = m.apply(cur);
    return cur;
  }
  const auto& tb = std::get<TensorBody>(n.body);
  const std::size_t k = tb.factors.size();
  std::vector<std::size_t> src(k), tgt(k);
  for (std::size_t t = 0; t < k; ++t) {
    src[t] = tb.factors[t].source().size();
    tgt[t] = tb.factors[t].target().size();
  }
  std::vector<std::unordered_map<std::size_t, SparseVec>> cache(k);
  std::unordered_map<std::size_t, Rational> acc;
  std::vector<std::size_t> idx(k);
  std::vector<std::pair<std::size_t, Rational>> partial, next;
  for (const auto& [i, c] : v) {
    std::size_t rest = i;
    for (std::size_t t = k; t-- > 0;) {
      idx[t] = rest % src[t];
      rest /= src[t];
    }
    partial.assign(1, {0, c});
    for (std::size_t t = 0; t < k && !partial.empty(); ++t) {
      auto it = cache[t].find(idx[t]);
      if (it == cache[t].end()) {
        it = cache[t].emplace(idx[t], tb.factors[t].column(idx[t])).first;
      }
      next.clear();
      for (const auto& [pi, pv] : partial) {
        for (const auto& [r, w] : it->second) {
          next.emplace_back(pi * tgt[t] + r, f.mul(pv, w));
        }
      }
      partial.swap(next);
    }
    for (auto& [r, w] : partial) {
      auto& slot = acc[r];
      slot = f.add(slot, w);
    }
  }
  return accumulate(f, acc);
}

SparseColumns Morph::to_columns() const {
  SparseColumns out{target().field(), target().size(), {}};
  if (const auto* c = std::get_if<ColumnsBody>(&node_->body)) {
    out.cols = c->cols;
    return out;
  }
  out.cols.reserve(source().size());
  for (std::size_t j = 0; j < source().size(); ++j) out.cols.push_back(column(j));
  return out;
}

Matrix Morph::to_matrix() const {
  auto cols = to_columns();
  return Matrix::from_columns(cols.field, cols.rows, cols.cols);
}

std::string Morph::describe() const {
  if (!node_) return "<empty>";
  return source().describe() + " -> " + target().describe();
}

// ------------------------------------------------------------ operations

Morph compose(const Morph& g, const Morph& f) {
  if (!(f.target() == g.source())) {
    throw DimensionMismatch("compose: target " + f.target().describe() +
                            " != source " + g.source().describe());
  }
  const Obj& src = f.source();
  const Obj& tgt = g.target();
  if (f.has_table() && g.has_table()) {
    const auto& ft = f.table();
    const auto& gt = g.table();
    std::vector<std::size_t> t(ft.size());
    for (std::size_t i = 0; i < ft.size(); ++i) t[i] = gt[ft[i]];
    return Morph::from_table(src, tgt, std::move(t));
  }
  if (src.size() <= kEagerComposeLimit && f.has_table() && g.is_basis_map()) {
    const auto& ft = f.table();
    std::vector<std::size_t> t(ft.size());
    for (std::size_t j = 0; j < ft.size(); ++j) t[j] = g.basis_image(ft[j]);
    return Morph::from_table(src, tgt, std::move(t));
  }
  if (src.size() <= kEagerComposeLimit && src.backend() == Backend::kFinSet) {
    std::vector<std::size_t> t(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) t[j] = g.apply(f.column(j)).front().first;
    return Morph::from_table(src, tgt, std::move(t));
  }
  if (src.size() <= kEagerComposeLimit) {
    std::vector<SparseVec> cols;
    cols.reserve(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) cols.push_back(g.apply(f.column(j)));
    return Morph::from_columns(src, tgt, std::move(cols));
  }
  ComposeBody body;
  for (const Morph* m : {&f, &g}) {
    if (const auto* c = std::get_if<ComposeBody>(&m->node_->body)) {
      body.chain.insert(body.chain.end(), c->chain.begin(), c->chain.end());
    } else {
      body.chain.push_back(*m);
    }
  }
  return Morph(std::make_shared<const MorphNode>(MorphNode{src, tgt, std::move(body)}));
}

Morph compose_chain(std::initializer_list<Morph> chain) {
  if (chain.size() == 0) throw ShapeError("empty composite");
  auto it = chain.begin();
  Morph acc = *it;
  for (++it; it != chain.end(); ++it) acc = compose(*it, acc);
  return acc;
}

Morph tensor(const Morph& f, const Morph& g) {
  Obj src = tensor(f.source(), g.source());
  Obj tgt = tensor(f.target(), g.target());
  if (f.has_table() && g.has_table() && src.size() <= kEagerTensorLimit) {
    const auto& ft = f.table();
    const auto& gt = g.table();
    const std::size_t gs = gt.size();
    const std::size_t gtgt = g.target().size();
    std::vector<std::size_t> t(src.size());
    for (std::size_t i = 0; i < ft.size(); ++i)
      for (std::size_t j = 0; j < gs; ++j) t[i * gs + j] = ft[i] * gtgt + gt[j];
    return Morph::from_table(src, tgt, std::move(t));
  }
  TensorBody body;
  for (const Morph* m : {&f, &g}) {
    if (const auto* tb = std::get_if<TensorBody>(&m->node_->body)) {
      body.factors.insert(body.factors.end(), tb->factors.begin(), tb->factors.end());
    } else {
      body.factors.push_back(*m);
    }
  }
  return Morph(std::make_shared<const MorphNode>(MorphNode{src, tgt, std::move(body)}));
}

Morph tensor(std::initializer_list<Morph> fs) {
  if (fs.size() == 0) throw ShapeError("empty tensor product");
  auto it = fs.begin();
  Morph acc = *it;
  for (++it; it != fs.end(); ++it) acc = tensor(acc, *it);
  return acc;
}

Morph braiding(const Obj& x, const Obj& y) {
  Obj src = tensor(x, y);
  Obj tgt = tensor(y, x);
  std::vector<std::size_t> t(src.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) t[i * y.size() + j] = j * x.size() + i;
  return Morph::from_table(src, tgt, std::move(t));
}

namespace {

void require_parallel(const Morph& f, const Morph& g, const char* what) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw DimensionMismatch(std::string(what) + ": arrows are not parallel (" +
                            f.describe() + " vs " + g.describe() + ")");
  }
}

SparseVec difference(Field f, const SparseVec& a, const SparseVec& b) {
  SparseVec d = a;
  axpy(f, Rational(f.is_rational() ? -1 : static_cast<std::int64_t>(f.characteristic()) - 1),
       b, d);
  return d;
}

}  // namespace

Equalizer equalizer(const Morph& f, const Morph& g) {
  require_parallel(f, g, "equalizer");
  const Obj& src = f.source();
  if (src.backend() == Backend::kFinSet) {
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < src.size(); ++x) {
      if (f(x) == g(x)) keep.push_back(x);
    }
    std::vector<std::string> labels;
    if (!src.labels().empty()) {
      for (auto x : keep) labels.push_back(src.labels()[x]);
    }
    Obj e = Obj::set(keep.size(), std::move(labels));
    return {e, Morph::from_table(e, src, std::move(keep))};
  }
  if (f.has_table() && g.has_table()) {
    // Columns e_f(x) - e_g(x) are independent when the edges f(x) -- g(x)
    // form a forest; the kernel is then spanned by the x with f(x) = g(x).
    const auto& ft = f.table();
    const auto& gt = g.table();
    std::unordered_map<std::size_t, std::size_t> parent;
    auto find = [&](std::size_t v) {
      auto it = parent.find(v);
      if (it == parent.end()) return v;
      std::size_t root = v;
      while (true) {
        auto jt = parent.find(root);
        if (jt == parent.end()) break;
        root = jt->second;
      }
      while (v != root) {
        std::size_t next = parent[v];
        parent[v] = root;
        v = next;
      }
      return root;
    };
    bool forest = true;
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < src.size() && forest; ++x) {
      if (ft[x] == gt[x]) {
        keep.push_back(x);
        continue;
      }
      std::size_t a = find(ft[x]), b = find(gt[x]);
      if (a == b) forest = false;
      else parent[a] = b;
    }
    if (forest) {
      Obj e = Obj::vect(src.field(), keep.size());
      return {e, Morph::from_table(e, src, std::move(keep))};
    }
  }
  const Field fld = src.field();
  SparseColumns diff{fld, f.target().size(), {}};
  diff.cols.reserve(src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    diff.cols.push_back(difference(fld, f.column(j), g.column(j)));
  }
  auto basis = kernel_basis(diff);
  Obj e = Obj::vect(fld, basis.size());
  return {e, Morph::from_columns(e, src, std::move(basis))};
}

std::size_t rank(const Morph& f) {
  if (f.has_table()) {
    auto t = f.table();
    std::sort(t.begin(), t.end());
    return static_cast<std::size_t>(std::unique(t.begin(), t.end()) - t.begin());
  }
  return rank(f.to_columns());
}

bool is_mono(const Morph& f) { return rank(f) == f.source().size(); }
bool is_epi(const Morph& f) { return rank(f) == f.target().size(); }
bool is_iso(const Morph& f) {
  return f.source().size() == f.target().size() && is_mono(f);
}

namespace {

// Inverse of an injective table: a dense array for small targets, a sorted
// list otherwise.
class Preimage {
 public:
  Preimage(const std::vector<std::size_t>& t, std::size_t target_size) {
    if (target_size <= std::max<std::size_t>(std::size_t{1} << 22, 4 * t.size())) {
      dense_.assign(target_size, -1);
      for (std::size_t i = 0; i < t.size(); ++i) dense_[t[i]] = static_cast<long>(i);
      return;
    }
    sorted_.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) sorted_.emplace_back(t[i], i);
    std::sort(sorted_.begin(), sorted_.end());
  }
  long operator()(std::size_t y) const {
    if (!dense_.empty()) return dense_[y];
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(),
                               std::make_pair(y, std::size_t{0}));
    if (it == sorted_.end() || it->first != y) return -1;
    return static_cast<long>(it->second);
  }

 private:
  std::vector<long> dense_;
  std::vector<std::pair<std::size_t, std::size_t>> sorted_;
};

}  // namespace

std::optional<Morph> factor_through_mono(const Morph& mu, const Morph& f) {
  if (!(mu.target() == f.target())) {
    throw DimensionMismatch("factor_through_mono: targets differ (" +
                            mu.target().describe() + " vs " +
                            f.target().describe() + ")");
  }
  const Obj& src = f.source();
  const Obj& mid = mu.source();
  std::vector<std::size_t> evaluated;
  if (!mu.has_table() && mid.backend() == Backend::kFinSet) {
    evaluated.resize(mid.size());
    for (std::size_t x = 0; x < mid.size(); ++x) evaluated[x] = mu(x);
  }
  if (mu.has_table() || !evaluated.empty()) {
    Preimage back(mu.has_table() ? mu.table() : evaluated, mu.target().size());
    if (src.backend() == Backend::kFinSet) {
      std::vector<std::size_t> t(src.size());
      for (std::size_t x = 0; x < src.size(); ++x) {
        long b = back(f(x));
        if (b < 0) return std::nullopt;
        t[x] = static_cast<std::size_t>(b);
      }
      return Morph::from_table(src, mid, std::move(t));
    }
    std::vector<SparseVec> cols(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (const auto& [r, v] : f.column(j)) {
        long b = back(r);
        if (b < 0) return std::nullopt;
        cols[j].emplace_back(static_cast<std::size_t>(b), v);
      }
    }
    return Morph::from_columns(src, mid, std::move(cols));
  }
  auto sol = solve_right(mu.to_columns(), f.to_columns());
  if (!sol) return std::nullopt;
  return Morph::from_columns(src, mid, std::move(*sol));
}

std::optional<Morph> factor_through_tensor_mono(const Morph& mu1, const Morph& mu2,
                                               const Morph& f) {
  if (!(tensor(mu1.target(), mu2.target()) == f.target()))
    throw DimensionMismatch("factor_through_tensor_mono: targets differ");
  if (!(mu1.has_table() && mu2.has_table() && f.has_table()))
    return factor_through_mono(tensor(mu1, mu2), f);
  Preimage b1(mu1.table(), mu1.target().size());
  Preimage b2(mu2.table(), mu2.target().size());
  const std::size_t n2 = mu2.target().size(), k2 = mu2.source().size();
  std::vector<std::size_t> t(f.source().size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    const std::size_t y = f.table()[x];
    long i = b1(y / n2), j = b2(y % n2);
    if (i < 0 || j < 0) return std::nullopt;
    t[x] = static_cast<std::size_t>(i) * k2 + static_cast<std::size_t>(j);
  }
  return Morph::from_table(f.source(), tensor(mu1.source(), mu2.source()), std::move(t));
}

std::optional<std::vector<std::size_t>> first_difference(const Morph& f,
                                                         const Morph& g) {
  require_parallel(f, g, "comparison");
  const Obj& src = f.source();
  if (src.backend() == Backend::kFinSet) {
    for (std::size_t x = 0; x < src.size(); ++x) {
      if (f(x) != g(x)) return src.decode(x);
    }
    return std::nullopt;
  }
  if (f.is_basis_map() && g.is_basis_map()) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t j = 0; j < src.size(); ++j) {
      const std::size_t a = f.basis_image(j), b = g.basis_image(j);
      if (a == b) continue;
      const std::size_t row = std::min(a, b);
      if (!best || row < best->first) best = std::make_pair(row, j);
    }
    if (!best) return std::nullopt;
    return std::vector<std::size_t>{best->first, best->second};
  }
  const Field fld = src.field();
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t j = 0; j < src.size(); ++j) {
    SparseVec d = difference(fld, f.column(j), g.column(j));
    if (d.empty()) continue;
    const std::size_t row = d.front().first;
    if (!best || row < best->first) best = std::make_pair(row, j);
  }
  if (!best) return std::nullopt;
  return std::vector<std::size_t>{best->first, best->second};
}

bool equal(const Morph& f, const Morph& g) {
  require_parallel(f, g, "comparison");
  if (f.has_table() && g.has_table()) return f.table() == g.table();
  if (f.is_basis_map() && g.is_basis_map()) {
    for (std::size_t j = 0; j < f.source().size(); ++j)
      if (f.basis_image(j) != g.basis_image(j)) return false;
    return true;
  }
  for (std::size_t j = 0; j < f.source().size(); ++j) {
    if (f.column(j) != g.column(j)) return false;
  }
  return true;
}

}  // namespace bialg
