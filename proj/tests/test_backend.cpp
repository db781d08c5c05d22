#include <random>

#include "bialg/backend.hpp"
#include "bialg/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bialg;

namespace {

Morph random_vect(Field f, std::size_t m, std::size_t n, std::mt19937_64& rng) {
  return Morph::from_matrix(Obj::vect(f, n), Obj::vect(f, m), oracle::random_matrix(f, m, n, rng));
}

Morph random_set(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, m - 1);
  std::vector<std::size_t> t(n);
  for (auto& v : t) v = d(rng);
  return Morph::from_table(Obj::set(n), Obj::set(m), t);
}

}  // namespace

TEST_CASE("compose") {
  Obj two = Obj::set(2);
  Morph flip = Morph::from_table(two, two, {1, 0});
  CHECK(equal(compose(flip, flip), Morph::identity(two)));
  CHECK(equal(compose(Morph::identity(two), flip), flip));
  CHECK_THROWS(compose(flip, Morph::identity(Obj::set(3))));

  std::mt19937_64 rng(5);
  Field q;
  for (int t = 0; t < 10; ++t) {
    auto f = random_vect(q, 3, 4, rng);
    auto g = random_vect(q, 2, 3, rng);
    CHECK(compose(g, f).to_matrix() == mat_mul(g.to_matrix(), f.to_matrix()));
  }
}

TEST_CASE("tensor and functoriality") {
  Obj x = Obj::set(2), y = Obj::set(3);
  CHECK(tensor(x, y).size() == 6);
  CHECK(equal(tensor(Morph::identity(x), Morph::identity(y)), Morph::identity(tensor(x, y))));
  Morph f = Morph::from_table(x, x, {1, 1});
  Morph g = Morph::from_table(y, y, {2, 0, 1});
  auto fg = tensor(f, g);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(fg(i * 3 + j) == f(i) * 3 + g(j));

  std::mt19937_64 rng(6);
  Field f5 = Field::prime(5);
  for (int t = 0; t < 10; ++t) {
    auto f1 = random_vect(f5, 3, 2, rng), f2 = random_vect(f5, 2, 3, rng);
    auto g1 = random_vect(f5, 2, 2, rng), g2 = random_vect(f5, 3, 2, rng);
    CHECK(equal(tensor(compose(f2, f1), compose(g2, g1)),
                compose(tensor(f2, g2), tensor(f1, g1))));
    CHECK(tensor(f1, g1).to_matrix() == kron(f1.to_matrix(), g1.to_matrix()));
  }
  CHECK_THROWS_AS(tensor(Morph::identity(x), Morph::identity(Obj::vect(f5, 2))),
                  BackendMismatch);
}

TEST_CASE("braiding") {
  Obj two = Obj::set(2);
  CHECK(braiding(two, two).table() == std::vector<std::size_t>{0, 2, 1, 3});
  Obj i = Obj::unit(Backend::kFinSet);
  CHECK(equal(braiding(i, two), Morph::identity(two)));

  std::mt19937_64 rng(7);
  for (Backend b : {Backend::kFinSet, Backend::kFinVect}) {
    auto obj = [&](std::size_t n) { return b == Backend::kFinSet ? Obj::set(n) : Obj::vect(Field(), n); };
    Obj x = obj(2), y = obj(3), z = obj(2);
    // Symmetry and both hexagon laws.
    CHECK(equal(compose(braiding(y, x), braiding(x, y)), Morph::identity(tensor(x, y))));
    CHECK(equal(braiding(tensor(x, y), z),
                compose(tensor(braiding(x, z), Morph::identity(y)),
                        tensor(Morph::identity(x), braiding(y, z)))));
    CHECK(equal(braiding(x, tensor(y, z)),
                compose(tensor(Morph::identity(y), braiding(x, z)),
                        tensor(braiding(x, y), Morph::identity(z)))));
    for (int t = 0; t < 5; ++t) {
      Morph f = b == Backend::kFinSet ? random_set(3, 2, rng) : random_vect(Field(), 3, 2, rng);
      Morph g = b == Backend::kFinSet ? random_set(2, 3, rng) : random_vect(Field(), 2, 3, rng);
      CHECK(equal(compose(braiding(f.target(), g.target()), tensor(f, g)),
                  compose(tensor(g, f), braiding(f.source(), g.source()))));
    }
  }
}

TEST_CASE("equalizer") {
  Obj two = Obj::set(2);
  Morph f = Morph::from_table(two, two, {0, 0});
  auto e = equalizer(f, Morph::identity(two));
  CHECK(e.object.size() == 1);
  CHECK(e.inclusion.table() == std::vector<std::size_t>{0});
  auto same = equalizer(f, f);
  CHECK(equal(same.inclusion, Morph::identity(two)));

  std::mt19937_64 rng(8);
  Field q;
  for (int t = 0; t < 10; ++t) {
    auto a = random_vect(q, 3, 5, rng);
    auto b = random_vect(q, 3, 5, rng);
    auto eq = equalizer(a, b);
    auto diff = mat_sub(a.to_matrix(), b.to_matrix());
    CHECK(eq.object.size() == 5 - oracle::rank(oracle::dense_of(diff), 0));
    CHECK(is_mono(eq.inclusion));
    CHECK(equal(compose(a, eq.inclusion), compose(b, eq.inclusion)));
    // Universal property: anything equalizing factors uniquely.
    auto h = compose(eq.inclusion, random_vect(q, eq.object.size(), 2, rng));
    auto k = factor_through_mono(eq.inclusion, h);
    REQUIRE(k);
    CHECK(equal(compose(eq.inclusion, *k), h));
  }
}

TEST_CASE("mono, epi, iso and factorization") {
  Obj two = Obj::set(2), one = Obj::set(1);
  Morph id = Morph::identity(two);
  CHECK((is_mono(id) && is_epi(id) && is_iso(id)));
  Morph c = Morph::from_table(two, two, {1, 1});
  CHECK_FALSE(is_mono(c));
  CHECK_FALSE(is_epi(c));

  Morph incl = Morph::from_table(one, two, {0});
  CHECK_FALSE(factor_through_mono(incl, Morph::from_table(one, two, {1})));
  CHECK(factor_through_mono(incl, Morph::from_table(one, two, {0})));
  CHECK(equal(*factor_through_mono(id, c), c));

  std::mt19937_64 rng(9);
  Field f7 = Field::prime(7);
  for (int t = 0; t < 10; ++t) {
    auto mu = random_vect(f7, 5, 2, rng);
    auto g = random_vect(f7, 2, 3, rng);
    std::size_t r = oracle::rank(oracle::dense_of(mu.to_matrix()), 7);
    CHECK(rank(mu) == r);
    CHECK(is_mono(mu) == (r == 2));
    CHECK(is_mono(mu) == (kernel_basis(mu.to_matrix()).cols() == 0));
    if (!is_mono(mu)) continue;
    auto back = factor_through_mono(mu, compose(mu, g));
    REQUIRE(back);
    CHECK(equal(*back, g));
  }
}

TEST_CASE("witnesses") {
  Obj two = Obj::set(2);
  Obj xx = tensor(two, two);
  Morph f = Morph::from_table(xx, two, {0, 1, 1, 0});
  Morph g = Morph::from_table(xx, two, {0, 1, 1, 1});
  CHECK(*first_difference(f, g) == std::vector<std::size_t>{1, 1});
  CHECK_FALSE(first_difference(f, f));

  Field q;
  Morph a = Morph::from_matrix(Obj::vect(q, 2), Obj::vect(q, 2), Matrix::from_rows(q, {{1, 0}, {0, 1}}));
  Morph b = Morph::from_matrix(Obj::vect(q, 2), Obj::vect(q, 2), Matrix::from_rows(q, {{1, 0}, {2, 0}}));
  CHECK(*first_difference(a, b) == std::vector<std::size_t>{1, 0});
}
