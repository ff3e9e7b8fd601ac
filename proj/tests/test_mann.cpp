#include "doctest.h"
#include "mirahoric/error.hpp"
#include "mirahoric/mann.hpp"
#include "mirahoric/oracles.hpp"

using namespace mirahoric;

TEST_CASE("GL2 representatives") {
  for (long p : {2L, 3L, 5L}) {
    const BaseField F(p);
    const auto reps = enumerate_mann_reps(2, 1, F);
    REQUIRE(reps.size() == static_cast<std::size_t>(p));
    for (long z = 0; z < p; ++z)
      CHECK(reps[static_cast<std::size_t>(z)].matrix == local_matrix({{p, z}, {0, 1}}));
    CHECK(coset_degree(2, 1, F).value == p);
  }
}

TEST_CASE("GL3, j = 1") {
  const BaseField F(3);
  const auto reps = enumerate_mann_reps(3, 1, F);
  CHECK(reps.size() == 12);
  int first = 0, second = 0;
  for (const auto& b : reps) {
    if (b.subset == std::vector<int>{1}) {
      ++first;
      CHECK(b.matrix(0, 0) == 3);
      CHECK(b.matrix(1, 1) == 1);
      CHECK(b.free_entries.size() == 2);
    } else {
      CHECK(b.subset == std::vector<int>{2});
      ++second;
      CHECK(b.matrix(1, 1) == 3);
      CHECK(b.matrix(0, 1) == 0);
      CHECK(b.matrix(0, 2) == 0);
    }
  }
  CHECK(first == 9);
  CHECK(second == 3);
  // Colex subsets, last free entry fastest.
  CHECK(reps[1].matrix == local_matrix({{3, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(reps[3].matrix == local_matrix({{3, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("level zero") {
  const BaseField F(3);
  const auto reps = enumerate_mann_reps(2, 1, F, LevelKind::Zero);
  CHECK(reps.size() == 4);
  CHECK(reps.back().matrix == local_matrix({{1, 0}, {0, 3}}));
  CHECK(coset_degree(3, 1, BaseField(2), LevelKind::Zero).value == 7);
  CHECK(coset_degree(4, 2, BaseField(2), LevelKind::Zero).value == 35);
}

TEST_CASE("subset combinatorics") {
  CHECK(subsets_colex(3, 2) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(subset_exponent(4, {1}) == 3);
  CHECK(subset_exponent(4, {2, 3}) == 2);
  CHECK(subset_exponent(3, {1, 2}) == 2);
}

TEST_CASE("degree equals Gaussian binomial at level zero") {
  for (long q : {2L, 3L, 5L, 7L}) {
    const BaseField F(q);
    for (int n = 1; n <= 5; ++n)
      for (int j = 1; j <= n; ++j)
        CHECK(coset_degree(n, j, F, LevelKind::Zero).value == oracle::gaussian_binomial(n, j, q));
  }
}

TEST_CASE("brute-force index") {
  struct Case {
    int n, j;
    long p;
    int r;
    long index;
  };
  for (const Case c : {Case{2, 1, 3, 1, 3}, Case{3, 1, 2, 1, 6}, Case{2, 1, 2, 2, 2},
                       Case{3, 2, 2, 1, 4}, Case{2, 1, 5, 1, 5}}) {
    const auto report = verify_partition(c.n, c.j, BaseField(c.p), c.r);
    CHECK(report.pairwise_distinct);
    CHECK(report.oracle_index == c.index);
    CHECK(report.degree_matches);
  }
}

TEST_CASE("mirahoric membership") {
  const BaseField F(2);
  CHECK(in_mirahoric(local_matrix({{1, 5}, {4, 5}}), F, 2));
  CHECK(!in_mirahoric(local_matrix({{1, 5}, {2, 5}}), F, 2));
  CHECK(!in_mirahoric(local_matrix({{2, 0}, {0, 1}}), F, 1));
}

TEST_CASE("argument checking") {
  const BaseField F(2);
  CHECK_THROWS_AS(enumerate_mann_reps(2, 2, F), Error);
  CHECK_THROWS_AS(enumerate_mann_reps(2, 0, F), Error);
  CHECK_THROWS_AS(verify_partition(3, 1, F, 0), Error);
  try {
    verify_partition(3, 1, BaseField(5), 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("GL_n(F_p) orders") {
  CHECK(oracle::count_gl_n(2, 2) == 6);
  CHECK(oracle::count_gl_n(2, 3) == 48);
  CHECK(oracle::count_gl_n(3, 2) == 168);
}
