#pragma once

// Exact scalars: arbitrary-precision rationals and prime fields.
//
// Rational keeps an int64 numerator/denominator pair on the fast path and
// promotes to a GMP rational only when an intermediate result leaves int64
// range. Values are always stored reduced with a positive denominator, so
// equality is structural.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bialg {

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  /// Parses "a", "-a", "a/b" (decimal, arbitrary length). Not required to be
  /// reduced. Throws ParseError on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  /// True when the value is held in the int64 fast path.
  bool is_small() const { return !big_; }
  /// Only meaningful when is_small().
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  mpq_class to_mpq() const;
  std::string to_string() const;
  int sign() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  static Rational from_i128(__int128 n, __int128 d);
  void demote_if_possible();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// The field of a scalar: Q (characteristic 0) or F_p for a prime p.
class Field {
 public:
  constexpr Field() = default;
  static constexpr Field rationals() { return Field{}; }
  /// Throws PreconditionError unless p is prime and below 2^31.
  static Field prime(std::uint64_t p);
  /// "Q", "F7", ...; also accepts "Fp" together with an explicit p.
  static Field parse(std::string_view name, std::uint64_t p = 0);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  /// Canonical representative: identity on Q, residue in [0, p) on F_p.
  /// Throws PreconditionError if the denominator vanishes mod p.
  Rational reduce(const Rational& q) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Throws PreconditionError on zero.
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const {
    return mul(a, inv(b));
  }

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// A field element carrying its field tag. Mixing fields throws
/// FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, const Rational& v) : field_(f), value_(f.reduce(v)) {}
  Scalar(Field f, std::int64_t v) : Scalar(f, Rational(v)) {}

  Field field() const { return field_; }
  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  Scalar inverse() const { return {field_, field_.inv(value_)}; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const { return {field_, field_.neg(value_)}; }
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

 private:
  Field field_;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bialg
