#include <random>

#include "doctest.h"
#include "mirahoric/arith.hpp"
#include "mirahoric/error.hpp"

using namespace mirahoric;

namespace {

bool error_is(ErrorKind kind, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("valuations") {
  CHECK(val_p(Rational(18), 3) == 2);
  CHECK(val_p(Rational(7, 5), 5) == -1);
  CHECK(val_p(Rational(0), 2) == kValuationInfinity);
  CHECK(val_p(Integer(-24), 2) == 3);
  CHECK(val_p(Rational(5, 12), 3) == -1);
}

TEST_CASE("base field rejects composites") {
  CHECK(error_is(ErrorKind::NotPrime, [] { BaseField F(4); }));
  CHECK(error_is(ErrorKind::NotPrime, [] { BaseField F(1); }));
  const BaseField F(5);
  CHECK(F.q() == 5);
  CHECK(F.modulus(3) == 125);
  CHECK(F.residue_representatives() == std::vector<long>{0, 1, 2, 3, 4});
}

TEST_CASE("iwasawa of the identity") {
  const BaseField F(3);
  const auto d = iwasawa(local_identity(3), F);
  CHECK(d.beta == local_identity(3));
  CHECK(d.k == local_identity(3));
}

TEST_CASE("iwasawa of the antidiagonal") {
  for (long p : {2L, 3L, 5L}) {
    const BaseField F(p);
    const auto d = iwasawa(local_matrix({{0, 1}, {p, 0}}), F);
    CHECK(d.beta == local_matrix({{1, 0}, {0, p}}));
    CHECK(d.k == local_matrix({{0, 1}, {1, 0}}));
  }
}

TEST_CASE("upper triangular input is its own Borel part") {
  const BaseField F(3);
  for (long z = 0; z < 3; ++z) {
    const LocalMatrix g = local_matrix({{3, z}, {0, 1}});
    const auto d = iwasawa(g, F);
    CHECK(d.beta == g);
    CHECK(d.k == local_identity(2));
  }
}

TEST_CASE("iwasawa invariants on random matrices") {
  std::mt19937_64 rng(7);
  for (long p : {2L, 3L, 5L}) {
    const BaseField F(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + trial % 3;
      LocalMatrix g = local_zero(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          g(i, k) = make_rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
      if (determinant(g) == 0) continue;
      const auto d = iwasawa(g, F);
      CHECK(d.beta * d.k == g);
      CHECK(is_upper_triangular(d.beta));
      CHECK(in_maximal_compact(d.k, F));
      CHECK(d.k * d.k_inverse == local_identity(n));
      for (std::size_t i = 0; i < n; ++i) {
        const long v = val_p(d.beta(i, i), F);
        Rational power = 1;
        for (long e = 0; e < std::abs(v); ++e) power *= p;
        CHECK(d.beta(i, i) == (v >= 0 ? power : Rational(1) / power));
      }
    }
  }
}

TEST_CASE("reduction modulo p^r") {
  const BaseField F(2);
  const ResidueMatrix m = reduce_mod(local_matrix({{5, 3}, {2, 1}}), F, 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 3);
  CHECK(m(1, 0) == 2);
  CHECK(m(1, 1) == 1);
  CHECK(reduce_mod(Rational(1, 5), F, 2) == 1);
  CHECK(reduce_mod(Rational(-1), F, 3) == 7);
  CHECK(error_is(ErrorKind::NegativeValuation, [&] { reduce_mod(Rational(1, 2), F, 2); }));
}

TEST_CASE("reduction is a ring homomorphism on p-integral rationals") {
  std::mt19937_64 rng(11);
  const BaseField F(3);
  for (int trial = 0; trial < 200; ++trial) {
    static const long dens[] = {1, 2, 4, 5, 7, 9};
    const Rational a = make_rational(static_cast<long>(rng() % 41) - 20, dens[rng() % 6]);
    const Rational b = make_rational(static_cast<long>(rng() % 41) - 20, dens[rng() % 6]);
    if (val_p(a, F) < 0 || val_p(b, F) < 0) continue;
    const long m = F.modulus(2);
    CHECK(reduce_mod(a + b, F, 2) == mod_floor(reduce_mod(a, F, 2) + reduce_mod(b, F, 2), m));
    CHECK(reduce_mod(a * b, F, 2) == mod_floor(reduce_mod(a, F, 2) * reduce_mod(b, F, 2), m));
  }
}

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(make_rational(4, -6) == Rational(-2, 3));
  CHECK(make_rational(4, -6).get_den() == 3);
  CHECK(error_is(ErrorKind::DivisionByZero, [] { make_rational(1, 0); }));
}

TEST_CASE("modular helpers") {
  CHECK(mod_floor(-3, 7) == 4);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(5, 9) == 2);
  CHECK(error_is(ErrorKind::NotInvertible, [] { mod_inverse(6, 9); }));
  CHECK(error_is(ErrorKind::NotInvertible, [] { inverse(local_matrix({{1, 2}, {2, 4}})); }));
}
