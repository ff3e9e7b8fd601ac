#include <random>

#include "doctest.h"
#include "mirahoric/error.hpp"
#include "mirahoric/linalg.hpp"
#include "mirahoric/principal_series.hpp"
#include "mirahoric/spectra.hpp"

using namespace mirahoric;

namespace {

const CoeffField Q;

CoeffMatrix mat(const std::vector<std::vector<long>>& rows, const CoeffField& f = Q) {
  CoeffMatrix m = coeff_zero(rows.size(), rows.front().size(), f);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, k) = Coeff(f, rows[i][k]);
  return m;
}

Polynomial poly(std::vector<long> low_to_high, const CoeffField& f = Q) {
  std::vector<Coeff> c;
  for (long x : low_to_high) c.emplace_back(f, x);
  return Polynomial(f, c);
}

UnramifiedChar chi_of(std::initializer_list<long> values, const CoeffField& f = Q) {
  std::vector<Coeff> v;
  for (long x : values) v.emplace_back(f, x);
  return UnramifiedChar(v);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial a = poly({-1, 0, 1});
  const Polynomial b = poly({1, 1});
  CHECK(a.to_string() == "x^2 - 1");
  const auto [quot, rem] = divmod(a, b);
  CHECK(quot == poly({-1, 1}));
  CHECK(rem.is_zero());
  CHECK(gcd(a, poly({2, -3, 1})) == poly({-1, 1}));
  CHECK(a.derivative() == poly({0, 2}));
  CHECK(poly({4, 2}).monic() == poly({2, 1}));
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(mat({{2, 0}, {0, 5}})) == poly({10, -7, 1}));
  CHECK(char_poly(mat({{0, 1}, {0, 0}})) == poly({0, 0, 1}));
  CHECK(char_poly(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == poly({3, -12, -16, 1}));
  const CoeffField f5 = CoeffField::prime(5);
  CHECK(char_poly(mat({{1, 2}, {3, 4}}, f5)) == poly({-2, -5, 1}, f5));
  const CoeffMatrix h = hecke_matrix(2, BaseField(3), 2, 1, UnramifiedChar::trivial(2, Q)).entries;
  CHECK(divmod(char_poly(h), Polynomial::x_minus(Coeff(Q, 3L))).second.is_zero());
}

TEST_CASE("roots") {
  const auto r = roots_in_field(poly({0, 0, 6, -5, 1}));
  REQUIRE(r.size() == 3);
  CHECK(r[0].value.is_zero());
  CHECK(r[0].multiplicity == 2);
  CHECK(r[1].value == Coeff(Q, 2L));
  CHECK(r[2].value == Coeff(Q, 3L));
  const auto half = roots_in_field(poly({-3, 2}) * poly({1, 0, 1}));
  REQUIRE(half.size() == 1);
  CHECK(half[0].value.to_string() == "3/2");
  CHECK(!splits(poly({1, 0, 1})));
  CHECK(splits(poly({1, 0, 1}, CoeffField::prime(5))));
  CHECK(roots_in_field(poly({-2, 0, 1})).empty());
}

TEST_CASE("minimal polynomial and semisimplicity") {
  CHECK(minimal_poly(mat({{2, 0}, {0, 2}})) == poly({-2, 1}));
  CHECK(minimal_poly(mat({{0, 1}, {0, 0}})) == poly({0, 0, 1}));
  CHECK(is_semisimple(mat({{1, 1}, {0, 2}})));
  CHECK(!is_semisimple(mat({{1, 1}, {0, 1}})));
  CHECK(is_semisimple(mat({{0, -1}, {1, 0}})));
}

TEST_CASE("jordan types") {
  const CoeffMatrix j21 = mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(jordan_type(j21, Coeff::zero(Q)) == std::vector<int>{2, 1});
  CHECK(jordan_type(j21, Coeff::one(Q)).empty());
  CHECK(jordan_type(mat({{3, 1, 0}, {0, 3, 1}, {0, 0, 3}}), Coeff(Q, 3L)) == std::vector<int>{3});
}

TEST_CASE("kernels") {
  const std::vector<CoeffMatrix> nil{mat({{0, 1}, {0, 0}})};
  const CoeffMatrix k = joint_kernel(nil);
  REQUIRE(k.cols() == 1);
  CHECK(k == mat({{1}, {0}}));
  const CoeffField f7 = CoeffField::prime(7);
  const std::vector<CoeffMatrix> nil7{mat({{0, 1}, {0, 0}}, f7)};
  CHECK(joint_generalized_nullspace(nil7, {f7, std::nullopt}).cols() == 2);
  const std::vector<CoeffMatrix> clash{mat({{0, 1}, {0, 0}}), mat({{1, 0}, {0, 2}})};
  CHECK(kind_of([&] { joint_kernel(clash); }) == ErrorKind::NonCommuting);
  const std::vector<CoeffMatrix> rotation{mat({{0, -1}, {1, 0}})};
  CHECK(kind_of([&] { joint_generalized_nullspace(rotation, {Q, 5}); }) ==
        ErrorKind::FieldExtensionRequired);
  const std::vector<CoeffMatrix> diag{mat({{5, 0, 0}, {0, 10, 0}, {0, 0, 3}})};
  CHECK(joint_generalized_nullspace(diag, {Q, 5}).cols() == 2);
}

TEST_CASE("banality") {
  CHECK(banality_check(5, 2, BaseField(3)));
  CHECK(!banality_check(3, 2, BaseField(2)));
  CHECK(!banality_check(2, 2, BaseField(3)));
  CHECK(kind_of([] { banality_check(3, 2, BaseField(3)); }) == ErrorKind::InvalidArgument);
  CHECK(banal_primes(2, BaseField(2), 2) == std::vector<long>{5, 7});
  CHECK(banal_primes(2, BaseField(3), 2) == std::vector<long>{5, 7});
  CHECK(banal_primes(3, BaseField(2), 2) == std::vector<long>{5, 11});
  CHECK(banal_primes(3, BaseField(3), 2) == std::vector<long>{5, 7});
}

TEST_CASE("GL2 structure over Q") {
  const SpectralReport rep =
      spectral_report(2, BaseField(3), 3, chi_of({1, 2}), {Q, std::nullopt});
  CHECK(rep.dim == 4);
  CHECK(rep.dim_F == 1);
  CHECK(!rep.dim_L);
  const OperatorSpectrum& u = rep.operators.front();
  CHECK(u.char_poly == poly({0, 0, 6, -5, 1}));
  CHECK(!u.semisimple);
  REQUIRE(u.eigen.size() == 3);
  CHECK(u.eigen[0].jordan == std::vector<int>{2});
  CHECK(u.eigen[1].eigenvalue == Coeff(Q, 2L));
  CHECK(u.eigen[2].eigenvalue == Coeff(Q, 3L));
  CHECK(u.eigen[1].jordan == std::vector<int>{1});
  CHECK(u.eigen[2].jordan == std::vector<int>{1});
  CHECK(rep.joint_eigenspaces.size() == 3);
}

TEST_CASE("GL2 generalized eigenspace dimensions") {
  for (int r = 2; r <= 5; ++r) {
    const SpectralReport rep =
        spectral_report(2, BaseField(2), r, chi_of({3, -5}), {Q, std::nullopt});
    std::vector<std::size_t> dims;
    for (const auto& e : rep.joint_eigenspaces) dims.push_back(e.dim);
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{1, 1, static_cast<std::size_t>(r - 1)});
    CHECK(rep.operators.front().semisimple == (r == 2));
  }
}

TEST_CASE("one-dimensionality modulo banal primes") {
  const CoeffField f5 = CoeffField::prime(5);
  for (auto values : {std::vector<long>{1, 2, 3}, std::vector<long>{4, 4, 4}}) {
    std::vector<Coeff> c;
    for (long v : values) c.emplace_back(f5, v);
    const SpectralReport rep =
        spectral_report(3, BaseField(2), 3, UnramifiedChar(c), {f5, std::nullopt});
    CHECK(rep.dim == 10);
    CHECK(rep.dim_F == 1);
    REQUIRE(rep.dim_L);
    CHECK(*rep.dim_L == 1);
  }
}

TEST_CASE("kernel contained in generalized nullspace") {
  std::mt19937_64 rng(5);
  for (long p : {2L, 3L}) {
    const BaseField F(p);
    for (int r = 1; r <= 2; ++r) {
      const InvariantBasis b = enumerate_basis(3, F, r);
      const CoeffField f7 = CoeffField::prime(7);
      for (int trial = 0; trial < 3; ++trial) {
        const auto chi = chi_of({static_cast<long>(rng() % 6) + 1,
                                 static_cast<long>(rng() % 6) + 1,
                                 static_cast<long>(rng() % 6) + 1},
                                f7);
        const auto family = hecke_family(b, chi, F);
        CHECK(column_span_contains(joint_generalized_nullspace(family, {f7, std::nullopt}),
                                   joint_kernel(family)));
      }
    }
  }
}

TEST_CASE("stabilization and monotonicity") {
  const SpectralReport rep =
      spectral_report(3, BaseField(2), 4, chi_of({2, 3, 7}), {Q, std::nullopt});
  for (std::size_t i = 1; i < rep.dim_F_by_level.size(); ++i)
    CHECK(rep.dim_F_by_level[i - 1] <= rep.dim_F_by_level[i]);
  CHECK(rep.dim_F_by_level.back() == 1);
  CHECK(rep.stabilization_r <= 3);
}
