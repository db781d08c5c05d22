#pragma once

// The two symmetric monoidal categories everything is interpreted in:
//
//   FinSet  - finite sets {0..n-1}, cartesian product, unit {0};
//   FinVect - spaces K^n over an exact field, tensor product, unit K.
//
// Both are strict: (X (x) Y) (x) Z and X (x) (Y (x) Z) are the same object and
// I (x) X = X. Tensor indices pair lexicographically with the left factor
// major, (i, j) -> i * |Y| + j, for elements and basis vectors alike. Every
// formula in the library relies on this convention.
//
// FinSet arrows are function tables. FinVect arrows are matrices; they are
// stored as basis maps when every column is a single 1 (the linearization of
// a function table), as sparse columns otherwise, and as unevaluated
// composites/tensors when materializing them would be wasteful.

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bialg/linalg.hpp"
#include "bialg/rational.hpp"

namespace bialg {

enum class Backend { kFinSet, kFinVect };

std::string to_string(Backend b);

class Obj {
 public:
  Obj() = default;
  static Obj set(std::size_t n, std::vector<std::string> labels = {});
  static Obj vect(Field f, std::size_t dim);
  /// The monoidal unit: the one-point set or the field itself.
  static Obj unit(Backend b, Field f = Field::rationals());

  Backend backend() const { return backend_; }
  std::size_t size() const { return size_; }
  Field field() const { return field_; }
  /// Sizes of the tensor factors this object was built from (flattened,
  /// unit factors dropped). Used only to decode witnesses into tuples.
  const std::vector<std::size_t>& factors() const { return factors_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Splits an element/basis index into one coordinate per factor.
  std::vector<std::size_t> decode(std::size_t index) const;

  /// Objects are equal when backend, size and field agree.
  friend bool operator==(const Obj& a, const Obj& b) {
    return a.backend_ == b.backend_ && a.size_ == b.size_ &&
           a.field_ == b.field_;
  }
  std::string describe() const;

  friend Obj tensor(const Obj& a, const Obj& b);

 private:
  Backend backend_ = Backend::kFinSet;
  std::size_t size_ = 1;
  Field field_;
  std::vector<std::size_t> factors_;
  std::vector<std::string> labels_;
};

Obj tensor(const Obj& a, const Obj& b);
Obj tensor(std::initializer_list<Obj> objs);

namespace detail {
struct MorphNode;
}

class Morph {
 public:
  Morph() = default;

  static Morph identity(const Obj& x);
  /// FinSet: the function x -> table[x]. FinVect: the basis map
  /// e_x -> e_{table[x]}.
  static Morph from_table(const Obj& source, const Obj& target,
                          std::vector<std::size_t> table);
  /// FinVect only; m is target.size() x source.size().
  static Morph from_matrix(const Obj& source, const Obj& target,
                           const Matrix& m);
  /// FinVect only; one sparse column per source basis vector.
  static Morph from_columns(const Obj& source, const Obj& target,
                            std::vector<SparseVec> columns);

  const Obj& source() const;
  const Obj& target() const;
  Backend backend() const { return source().backend(); }
  bool valid() const { return node_ != nullptr; }

  /// True when the arrow is held as a table. FinSet arrows are tables
  /// except for very large unevaluated tensors and composites.
  bool has_table() const;
  const std::vector<std::size_t>& table() const;
  /// True when every stored piece is a table, so that basis elements go to
  /// basis elements.
  bool is_basis_map() const;
  /// Image of the basis element x under a basis map.
  std::size_t basis_image(std::size_t x) const;
  /// FinSet evaluation.
  std::size_t operator()(std::size_t x) const;

  /// Image of the j-th basis vector (FinSet: the singleton {f(j)} with
  /// coefficient 1).
  SparseVec column(std::size_t j) const;
  SparseVec apply(const SparseVec& v) const;
  SparseColumns to_columns() const;
  Matrix to_matrix() const;

  std::string describe() const;

 private:
  explicit Morph(std::shared_ptr<const detail::MorphNode> node)
      : node_(std::move(node)) {}
  friend Morph compose(const Morph& g, const Morph& f);
  friend Morph tensor(const Morph& f, const Morph& g);

  std::shared_ptr<const detail::MorphNode> node_;
};

/// g . f
Morph compose(const Morph& g, const Morph& f);
/// Composite of a chain given in diagrammatic reading order: the result of
/// compose_chain({f1, f2, f3}) is f3 . f2 . f1.
Morph compose_chain(std::initializer_list<Morph> chain);
Morph tensor(const Morph& f, const Morph& g);
Morph tensor(std::initializer_list<Morph> fs);

/// sigma_{X,Y}: X (x) Y -> Y (x) X, (i, j) -> (j, i).
Morph braiding(const Obj& x, const Obj& y);

struct Equalizer {
  Obj object;
  Morph inclusion;
};

/// FinSet: {x : f(x) = g(x)} with its inclusion. FinVect: the kernel of
/// f - g with the canonical Gauss-Jordan basis as inclusion.
Equalizer equalizer(const Morph& f, const Morph& g);

bool is_mono(const Morph& f);
bool is_epi(const Morph& f);
bool is_iso(const Morph& f);
std::size_t rank(const Morph& f);

/// The unique g with mu . g = f, or nullopt when f does not land in the
/// image of mu. Precondition: mu is a monomorphism with mu.target = f.target.
std::optional<Morph> factor_through_mono(const Morph& mu, const Morph& f);
/// The same for the mono mu1 (x) mu2, without building it when all three
/// arrows are tables.
std::optional<Morph> factor_through_tensor_mono(const Morph& mu1, const Morph& mu2,
                                               const Morph& f);

bool equal(const Morph& f, const Morph& g);

/// First point where two parallel arrows differ. FinSet: the source element
/// decoded into one coordinate per tensor factor. FinVect: (row, col) of the
/// first differing matrix entry in row-major order. Throws
/// DimensionMismatch when f and g are not parallel.
std::optional<std::vector<std::size_t>> first_difference(const Morph& f,
                                                         const Morph& g);

}  // namespace bialg
