#include "doctest.h"
#include "mirahoric/error.hpp"
#include "mirahoric/kirillov.hpp"

using namespace mirahoric;

namespace {

const CoeffField Q;

TupleVector delta(int n, int M, const DominantTuple& m, const CoeffField& f = Q) {
  TupleVector v(n, M, f);
  v.set(m, Coeff::one(f));
  return v;
}

}  // namespace

TEST_CASE("dominance") {
  CHECK(is_dominant({3, 1, 0}));
  CHECK(is_dominant({0}));
  CHECK(!is_dominant({1, 2}));
  CHECK(!is_dominant({-1}));
  CHECK(dominant_tuples(2, 2) == std::vector<DominantTuple>{{0}, {1}, {2}});
  CHECK(dominant_tuples(3, 1) == std::vector<DominantTuple>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(dominant_tuples(4, 4).size() == 35);
}

TEST_CASE("GL2 tuple action") {
  const BaseField F(3);
  CHECK(apply_U_tuple(1, delta(2, 5, {0}), F).is_zero());
  TupleVector expected(2, 5, Q);
  expected.set({0}, Coeff(Q, 3L));
  CHECK(apply_U_tuple(1, delta(2, 5, {1}), F) == expected);
}

TEST_CASE("GL3 tuple action") {
  const BaseField F(2);
  // U^(1) delta_(1,0): I = {1} reads a_{(m1+1, m2)} with weight q^2.
  TupleVector e(3, 4, Q);
  e.set({0, 0}, Coeff(Q, 4L));
  CHECK(apply_U_tuple(1, delta(3, 4, {1, 0}), F) == e);
  // I = {2} from m = (1,0) reaches (1,1) with weight q.
  TupleVector f(3, 4, Q);
  f.set({1, 0}, Coeff(Q, 2L));
  CHECK(apply_U_tuple(1, delta(3, 4, {1, 1}), F) == f);
  // U^(2) uses I = {1,2} only, weight q^2.
  TupleVector g(3, 4, Q);
  g.set({0, 0}, Coeff(Q, 4L));
  CHECK(apply_U_tuple(2, delta(3, 4, {1, 1}), F) == g);
}

TEST_CASE("operator matrices commute") {
  const BaseField F(2);
  const CoeffMatrix a = tuple_operator_matrix(4, 1, F, 4, Q);
  const CoeffMatrix b = tuple_operator_matrix(4, 2, F, 4, Q);
  const CoeffMatrix c = tuple_operator_matrix(4, 3, F, 4, Q);
  CHECK(a * b == b * a);
  CHECK(a * c == c * a);
  CHECK(b * c == c * b);
}

TEST_CASE("joint kernels") {
  struct Case {
    int n, M;
  };
  for (const Case c : {Case{2, 5}, Case{3, 4}, Case{4, 3}})
    for (long p : {2L, 3L}) {
      const auto kernel = joint_kernel_tuples(c.n, BaseField(p), c.M, Q);
      REQUIRE(kernel.size() == 1);
      CHECK(kernel.front() == w_infty(c.n, c.M, Q));
    }
  const CoeffField f7 = CoeffField::prime(7);
  const auto k = joint_kernel_tuples(3, BaseField(2), 5, f7);
  REQUIRE(k.size() == 1);
  CHECK(k.front() == w_infty(3, 5, f7));
  CHECK(joint_kernel_tuples(1, BaseField(2), 3, Q).size() == 1);
}

TEST_CASE("w_infty") {
  CHECK(w_infty(2, 3, Q) == delta(2, 3, {0}));
  CHECK(w_infty(3, 3, Q).entries().size() == 1);
  CHECK(w_infty(3, 3, Q).at({0, 0}).is_one());
}

TEST_CASE("tuple vectors reject bad indices") {
  TupleVector v(3, 2, Q);
  CHECK_THROWS_AS(v.set({0, 1}, Coeff::one(Q)), Error);
  CHECK_THROWS_AS(v.set({3, 0}, Coeff::one(Q)), Error);
  CHECK_THROWS_AS(v.set({1}, Coeff::one(Q)), Error);
  v.set({1, 0}, Coeff::zero(Q));
  CHECK(v.is_zero());
  CHECK(v.at({2, 2}).is_zero());
}
