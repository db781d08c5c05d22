#include "bialg/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "bialg/error.hpp"

namespace bialg {

namespace {

void require_same_field(Field a, Field b) {
  if (a != b) {
    throw FieldMismatch("matrix fields differ: " + a.name() + " vs " +
                        b.name());
  }
}

const Rational* find_entry(const SparseVec& v, std::size_t idx) {
  auto it = std::lower_bound(
      v.begin(), v.end(), idx,
      [](const auto& e, std::size_t i) { return e.first < i; });
  if (it == v.end() || it->first != idx) return nullptr;
  return &it->second;
}

/// Reduced row echelon form built one row at a time.
class Echelon {
 public:
  enum class Outcome { kZero, kPivot, kInconsistent };

  Echelon(Field f, std::size_t pivot_limit) : f_(f), limit_(pivot_limit) {}

  Outcome insert(SparseVec row) {
    // Pivot rows are fully reduced against each other, so subtracting them
    // for the pivot columns present in the incoming row leaves no pivot
    // columns behind.
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [c, v] : row) {
      if (c < limit_ && pivot_of_col_[c] >= 0) hits.emplace_back(c, v);
    }
    for (const auto& [c, v] : hits) {
      axpy(f_, f_.neg(v), rows_[static_cast<std::size_t>(pivot_of_col_[c])], row);
    }
    auto lead = std::find_if(row.begin(), row.end(),
                             [&](const auto& e) { return e.first < limit_; });
    if (lead == row.end()) {
      return row.empty() ? Outcome::kZero : Outcome::kInconsistent;
    }
    const std::size_t pc = lead->first;
    const Rational scale = f_.inv(lead->second);
    for (auto& e : row) e.second = f_.mul(e.second, scale);
    for (auto& other : rows_) {
      if (const Rational* v = find_entry(other, pc)) {
        Rational coeff = f_.neg(*v);
        axpy(f_, coeff, row, other);
      }
    }
    pivot_of_col_[pc] = static_cast<long>(rows_.size());
    pivots_.push_back(pc);
    rows_.push_back(std::move(row));
    return Outcome::kPivot;
  }

  void reserve_cols(std::size_t n) { pivot_of_col_.assign(n, -1); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t c) const { return pivot_of_col_[c] >= 0; }

 private:
  Field f_;
  std::size_t limit_;
  std::vector<long> pivot_of_col_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<SparseVec> to_rows(const SparseColumns& a, std::size_t col_offset,
                               std::vector<SparseVec> rows = {}) {
  if (rows.empty()) rows.resize(a.rows);
  for (std::size_t c = 0; c < a.cols.size(); ++c) {
    for (const auto& [r, v] : a.cols[c]) {
      if (r >= a.rows) throw DimensionMismatch("sparse column entry out of range");
      rows[r].emplace_back(c + col_offset, v);
    }
  }
  return rows;
}

}  // namespace

void axpy(Field f, const Rational& coeff, const SparseVec& v, SparseVec& acc) {
  if (coeff.is_zero() || v.empty()) return;
  SparseVec out;
  out.reserve(acc.size() + v.size());
  auto a = acc.begin();
  auto b = v.begin();
  while (a != acc.end() || b != v.end()) {
    if (b == v.end() || (a != acc.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == acc.end() || b->first < a->first) {
      out.emplace_back(b->first, f.mul(coeff, b->second));
      ++b;
    } else {
      Rational s = f.add(a->second, f.mul(coeff, b->second));
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols,
               std::vector<Rational> entries)
    : field_(f), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("matrix entry count " + std::to_string(data_.size()) +
                            " != " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
  if (!f.is_rational()) {
    for (auto& e : data_) e = f.reduce(e);
  }
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Rational(1);
  return m;
}

Matrix Matrix::from_rows(Field f,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged matrix rows");
    for (auto v : row) entries.emplace_back(v);
  }
  return Matrix(f, r, c, std::move(entries));
}

Matrix Matrix::from_columns(Field f, std::size_t rows,
                            std::span<const SparseVec> cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [r, v] : cols[c]) {
      if (r >= rows) throw DimensionMismatch("sparse column entry out of range");
      m.data_[r * m.cols_ + c] = f.reduce(v);
    }
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  data_[r * cols_ + c] = field_.reduce(v);
}

SparseVec Matrix::column(std::size_t c) const {
  SparseVec out;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Rational& v = data_[r * cols_ + c];
    if (!v.is_zero()) out.emplace_back(r, v);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = entry(r, c);
  return t;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << entry(r, c);
    os << "]";
  }
  os << "] over " << field_.name();
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  const Field f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.entry(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.entry(k, j);
        if (bkj.is_zero()) continue;
        out.set(i, j, f.add(out.entry(i, j), f.mul(aik, bkj)));
      }
    }
  }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("mat_add: shape mismatch");
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out.set(r, c, a.field().add(a.entry(r, c), b.entry(r, c)));
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("mat_sub: shape mismatch");
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out.set(r, c, a.field().sub(a.entry(r, c), b.entry(r, c)));
  return out;
}

Matrix scale(const Matrix& a, const Scalar& s) {
  require_same_field(a.field(), s.field());
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out.set(r, c, a.field().mul(a.entry(r, c), s.value()));
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  const Field f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a.entry(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Rational& bkl = b.entry(k, l);
          if (bkl.is_zero()) continue;
          out.set(i * b.rows() + k, j * b.cols() + l, f.mul(aij, bkl));
        }
    }
  return out;
}

// ---------------------------------------------------------------- sparse

SparseColumns SparseColumns::of(const Matrix& m) {
  SparseColumns s{m.field(), m.rows(), {}};
  s.cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) s.cols.push_back(m.column(c));
  return s;
}

std::size_t rank(const SparseColumns& a) {
  Echelon ech(a.field, a.cols.size());
  ech.reserve_cols(a.cols.size());
  for (auto& row : to_rows(a, 0)) {
    if (!row.empty()) ech.insert(std::move(row));
  }
  return ech.rank();
}

std::vector<SparseVec> kernel_basis(const SparseColumns& a) {
  const std::size_t n = a.cols.size();
  Echelon ech(a.field, n);
  ech.reserve_cols(n);
  for (auto& row : to_rows(a, 0)) {
    if (!row.empty()) ech.insert(std::move(row));
  }
  std::vector<long> slot(n, -1);
  std::vector<SparseVec> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (!ech.is_pivot(c)) {
      slot[c] = static_cast<long>(basis.size());
      basis.push_back(SparseVec{{c, Rational(1)}});
    }
  }
  const auto& rows = ech.rows();
  const auto& pivots = ech.pivots();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [c, v] : rows[i]) {
      if (slot[c] >= 0) {
        basis[static_cast<std::size_t>(slot[c])].emplace_back(pivots[i],
                                                              a.field.neg(v));
      }
    }
  }
  for (auto& v : basis) {
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return basis;
}

std::optional<std::vector<SparseVec>> solve_right(const SparseColumns& a,
                                                  const SparseColumns& b) {
  require_same_field(a.field, b.field);
  if (a.rows != b.rows) {
    throw DimensionMismatch("solve_right: row counts differ (" +
                            std::to_string(a.rows) + " vs " +
                            std::to_string(b.rows) + ")");
  }
  const std::size_t n = a.cols.size();
  const std::size_t total = n + b.cols.size();
  auto rows = to_rows(b, n, to_rows(a, 0));
  Echelon ech(a.field, n);
  ech.reserve_cols(total);
  for (auto& row : rows) {
    if (row.empty()) continue;
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (ech.insert(std::move(row)) == Echelon::Outcome::kInconsistent) {
      return std::nullopt;
    }
  }
  std::vector<SparseVec> sol(b.cols.size());
  const auto& erows = ech.rows();
  const auto& pivots = ech.pivots();
  for (std::size_t i = 0; i < erows.size(); ++i) {
    for (const auto& [c, v] : erows[i]) {
      if (c >= n) sol[c - n].emplace_back(pivots[i], v);
    }
  }
  for (auto& v : sol) {
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return sol;
}

std::size_t rank(const Matrix& a) { return rank(SparseColumns::of(a)); }

Matrix kernel_basis(const Matrix& a) {
  auto basis = kernel_basis(SparseColumns::of(a));
  return Matrix::from_columns(a.field(), a.cols(), basis);
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  auto sol = solve_right(SparseColumns::of(a), SparseColumns::of(b));
  if (!sol) return std::nullopt;
  return Matrix::from_columns(a.field(), a.cols(), *sol);
}

}  // namespace bialg
