#include "bialg/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

#include "bialg/error.hpp"

namespace bialg {

namespace {

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = -kMax;  // keep -num representable

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) { return v >= kMin && v <= kMax; }

mpz_class to_mpz(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                            : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod(__int128 v, std::int64_t p) {
  __int128 r = v % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t p) {
  __int128 result = 1;
  __int128 b = mod(base, p);
  while (e > 0) {
    if (e & 1) result = result * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {
  if (n == std::numeric_limits<std::int64_t>::min()) {
    *this = Rational(mpq_class(mpz_class(std::to_string(n))));
  }
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw PreconditionError("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
  auto big = std::make_shared<mpq_class>(q);
  big->canonicalize();
  big_ = std::move(big);
  demote_if_possible();
}

Rational Rational::from_i128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  r.big_ = std::make_shared<mpq_class>(to_mpz(n), to_mpz(d));
  return r;
}

void Rational::demote_if_possible() {
  if (!big_) return;
  const mpz_class& n = big_->get_num();
  const mpz_class& d = big_->get_den();
  // mpz_fits_slong_p is exact for 64-bit longs on this platform.
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
    long nn = n.get_si();
    long dd = d.get_si();
    if (nn != std::numeric_limits<long>::min()) {
      num_ = nn;
      den_ = dd;
      big_.reset();
    }
  }
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(zn, zd));
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)),
                   mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    if (a.den_ == 1 && b.den_ == 1) {
      __int128 s = static_cast<__int128>(a.num_) + b.num_;
      if (fits(s)) return Rational(static_cast<std::int64_t>(s));
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                 static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(mpq_class(-*big_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    if (d == 1 && fits(n)) return Rational(static_cast<std::int64_t>(n));
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw PreconditionError("division by zero");
  if (a.is_small() && b.is_small()) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.is_small() != b.is_small()) return false;  // both canonical
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw PreconditionError("F_p requires a prime p < 2^31, got " +
                            std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view name, std::uint64_t p) {
  if (name == "Q") return rationals();
  if (name == "Fp") {
    if (p == 0) throw ParseError("field \"Fp\" requires \"p\"");
    return prime(p);
  }
  if (name.size() > 1 && name[0] == 'F') {
    std::uint64_t v = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("unknown field '" + std::string(name) + "'");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v >= (std::uint64_t{1} << 31)) break;
    }
    return prime(v);
  }
  throw ParseError("unknown field '" + std::string(name) + "'");
}

std::string Field::name() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Rational Field::reduce(const Rational& q) const {
  if (p_ == 0) return q;
  const auto p = static_cast<std::int64_t>(p_);
  if (q.is_small()) {
    std::int64_t n = mod(q.small_num(), p);
    if (q.small_den() == 1) return Rational(n);
    std::int64_t d = mod(q.small_den(), p);
    if (d == 0) {
      throw PreconditionError("denominator of " + q.to_string() +
                              " vanishes in " + name());
    }
    return Rational(mod(static_cast<__int128>(n) * mod_pow(d, p - 2, p), p));
  }
  mpq_class v = q.to_mpq();
  mpz_class n = v.get_num() % static_cast<unsigned long>(p);
  if (n < 0) n += static_cast<unsigned long>(p);
  mpz_class d = v.get_den() % static_cast<unsigned long>(p);
  if (d == 0) {
    throw PreconditionError("denominator of " + q.to_string() +
                            " vanishes in " + name());
  }
  std::int64_t nn = n.get_si();
  std::int64_t dd = d.get_si();
  return Rational(mod(static_cast<__int128>(nn) * mod_pow(dd, p - 2, p), p));
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t s = a.small_num() + b.small_num();
  return Rational(s >= p ? s - p : s);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t s = a.small_num() - b.small_num();
  return Rational(s < 0 ? s + p : s);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  const auto p = static_cast<std::int64_t>(p_);
  return Rational(mod(static_cast<__int128>(a.small_num()) * b.small_num(), p));
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  const auto p = static_cast<std::int64_t>(p_);
  return Rational(a.small_num() == 0 ? 0 : p - a.small_num());
}

Rational Field::inv(const Rational& a) const {
  if (a.is_zero()) throw PreconditionError("inverse of zero in " + name());
  if (p_ == 0) return Rational(1) / a;
  const auto p = static_cast<std::int64_t>(p_);
  return Rational(mod_pow(a.small_num(), p - 2, p));
}

// ---------------------------------------------------------------- Scalar

namespace {
Field common_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("cannot combine " + a.field().name() + " and " +
                        b.field().name() + " scalars");
  }
  return a.field();
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  Field f = common_field(a, b);
  return {f, f.add(a.value(), b.value())};
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Field f = common_field(a, b);
  return {f, f.sub(a.value(), b.value())};
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Field f = common_field(a, b);
  return {f, f.mul(a.value(), b.value())};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Field f = common_field(a, b);
  return {f, f.div(a.value(), b.value())};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.value() << " (" << s.field().name() << ")";
}

}  // namespace bialg
