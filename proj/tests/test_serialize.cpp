#include "doctest.h"
#include "mirahoric/error.hpp"
#include "mirahoric/serialize.hpp"

using namespace mirahoric;

namespace {
const CoeffField Q;
}

TEST_CASE("matrices round-trip through JSON") {
  CoeffMatrix m = coeff_zero(2, 2, Q);
  m(0, 0) = Coeff(Q, make_rational(7, 3));
  m(1, 1) = Coeff(Q, -2L);
  const Json j = matrix_to_json(m);
  CHECK(j.dump() == R"([["7/3","0"],["0","-2"]])");
  CHECK(coeff_matrix_from_json(j, Q) == m);
  CHECK(matrix_to_csv(m) == "7/3,0\n0,-2\n");

  const CoeffField f11 = CoeffField::prime(11);
  const CoeffMatrix r = reduce_to(m, f11);
  CHECK(matrix_to_json(r).dump() == R"([["6 mod 11","0 mod 11"],["0 mod 11","9 mod 11"]])");
  CHECK(coeff_matrix_from_json(matrix_to_json(r), f11) == r);
  CHECK_THROWS_AS(coeff_matrix_from_json(Json::parse(R"([["1"],["2","3"]])"), Q), Error);
  CHECK_THROWS_AS(coeff_matrix_from_json(matrix_to_json(r), CoeffField::prime(7)), Error);
}

TEST_CASE("tuple vectors round-trip") {
  TupleVector v(3, 4, Q);
  v.set({2, 1}, Coeff(Q, make_rational(-1, 2)));
  v.set({0, 0}, Coeff(Q, 3L));
  const Json j = tuple_vector_to_json(v);
  CHECK(j.dump() == R"({"M":4,"entries":[{"c":"3","m":[0,0]},{"c":"-1/2","m":[2,1]}],"n":3})");
  CHECK(tuple_vector_from_json(j, Q) == v);
  CHECK_THROWS_AS(tuple_vector_from_json(Json::parse(R"({"n":3})"), Q), Error);
}

TEST_CASE("coset listing") {
  const BaseField F(2);
  const auto reps = enumerate_mann_reps(2, 1, F);
  const Json j = mann_reps_to_json(2, 1, F, LevelKind::Positive, reps, coset_degree(2, 1, F));
  CHECK(j.at("degree") == "2");
  CHECK(j.at("level_kind") == "positive");
  CHECK(j.at("reps").size() == 2);
  CHECK(j.at("reps")[1].at("matrix").dump() == R"([["2","1"],["0","1"]])");
  CHECK(j.at("reps")[1].at("free_entries").dump() == R"([{"col":2,"row":1,"value":"1"}])");
}

TEST_CASE("spectral report encoding") {
  const std::vector<Coeff> chi{Coeff(Q, 1L), Coeff(Q, 2L)};
  const Json j =
      report_to_json(spectral_report(2, BaseField(3), 3, UnramifiedChar(chi), {Q, std::nullopt}));
  CHECK(j.at("dim") == 4);
  CHECK(j.at("dim_F") == 1);
  CHECK(j.at("dim_L").is_null());
  CHECK(j.contains("dim_L_note"));
  CHECK(j.at("jordan").dump() == R"({"0":[2],"2":[1],"3":[1]})");
  CHECK(j.at("char_polys")[0].at("text") == "x^4 - 5*x^3 + 6*x^2");
  CHECK(j.at("params").at("chi").dump() == R"(["1","2"])");
  // No floating point anywhere in the output.
  CHECK(j.dump().find('.') == std::string::npos);
}

TEST_CASE("error objects") {
  CHECK(error_to_json("not_prime", "got 4").dump() ==
        R"({"error":{"kind":"not_prime","message":"got 4"}})");
  CHECK(to_string(ErrorKind::FieldExtensionRequired) == "requires_field_extension");
}
