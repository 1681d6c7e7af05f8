#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "modlie/cohom.hpp"
#include "modlie/io.hpp"
#include "modlie/util.hpp"
#include "support/build_2a7.hpp"
using namespace modlie;

TEST_CASE("coset enumeration: small groups") {
  // C6 = <a | a^6>
  FinitePresentation C6;
  C6.generator_count = 1;
  C6.relators = {{1, 1, 1, 1, 1, 1}};
  CHECK(coset_enumerate(C6, {}).cosets == 6);

  // S3 = <a, b | a^3, b^2, (ab)^2>
  FinitePresentation S3;
  S3.generator_count = 2;
  S3.relators = {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}};
  CHECK(coset_enumerate(S3, {}).cosets == 6);
  CHECK(coset_enumerate(S3, {{1}}).cosets == 2);

  // Carmichael presentation of Alt(5): t3, t4, t5
  FinitePresentation A5;
  A5.generator_count = 3;
  for (int i = 1; i <= 3; ++i) A5.relators.push_back({i, i, i});
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) A5.relators.push_back({i, j, i, j});
  CHECK(coset_enumerate(A5, {}).cosets == 60);
}

TEST_CASE("alt7 and its double cover have the right orders") {
  CHECK(coset_enumerate(fixtures::alt7_presentation(), {}).cosets == 2520);
  CHECK(coset_enumerate(fixtures::double_alt7_presentation(), {}).cosets == 5040);
}

TEST_CASE("h1: trivial module for a perfect group is zero") {
  // 2.A5 = SL2(5): lifted Carmichael presentation of A5
  FinitePresentation P;
  P.generator_count = 3;
  for (int i = 1; i <= 3; ++i) P.relators.push_back({i, i, i});
  P.relators.push_back({1, 2, 1, 2, 1, 2, 1, 2});
  P.relators.push_back({1, 3, 1, 3, -2, -1, -2, -1});
  P.relators.push_back({2, 3, 2, 3, -2, -1, -2, -1});
  for (int k = 1; k <= 3; ++k) P.relators.push_back({1, 2, 1, 2, k, -2, -1, -2, -1, -k});
  CHECK(coset_enumerate(P, {}).cosets == 120);

  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    auto f = Field::get(p);
    Matrix id = Matrix::identity(f, 1);
    Representation triv = make_rep(f, {id, id, id}, "triv");
    auto c = h1_dimension(P, triv);
    CHECK(c.dimension_H1 == 0);
    CHECK(c.dimension_B1 == 0);
    CHECK(c.fixed_points == 1);
  }
}

TEST_CASE("h1: relator violation is reported") {
  FinitePresentation P;
  P.generator_count = 1;
  P.relators = {{1, 1}};
  auto f = Field::get(3);
  Matrix g(f, 1, 1);
  g.at(0, 0) = 2;  // order 2... 2^2=4=1 mod 3, fine; use order-incompatible instead
  Representation M = make_rep(f, {g}, "");
  CHECK(h1_dimension(P, M).dimension_Z1 >= 0);
  FinitePresentation bad;
  bad.generator_count = 1;
  bad.relators = {{1, 1, 1}};  // g^3 = 2 != 1
  CHECK_THROWS_AS(h1_dimension(bad, M), Error);
}

TEST_CASE("h1 of trivial coefficients equals p-rank of abelianization") {
  // C6 x C2 = <a, b | a^6, b^2, [a,b]>
  FinitePresentation P;
  P.generator_count = 2;
  P.relators = {{1, 1, 1, 1, 1, 1}, {2, 2}, {1, 2, -1, -2}};
  for (uint32_t p : {2u, 3u, 5u}) {
    auto f = Field::get(p);
    Matrix id = Matrix::identity(f, 1);
    Representation triv = make_rep(f, {id, id}, "triv");
    auto c = h1_dimension(P, triv);
    uint32_t expect = p == 2 ? 2 : (p == 3 ? 1 : 0);
    CHECK(c.dimension_H1 == expect);
  }
}

TEST_CASE("complement count contract") {
  CHECK(complement_count_contract(0).annotation.find("one class") != std::string::npos);
  CHECK(complement_count_contract(1).annotation.find("exactly two classes") != std::string::npos);
  CHECK(complement_count_contract(3).annotation.find("manual analysis") != std::string::npos);
}

TEST_CASE("h1 is invariant under relator order and conjugation") {
  FinitePresentation P;
  P.generator_count = 2;
  P.relators = {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}};  // S3
  auto f = Field::get(3);
  // 2-dim: a = rotation of order 3, b = swap
  Matrix A = Matrix::from_ints(f, 2, 2, {0, -1, 1, -1});
  Matrix B = Matrix::from_ints(f, 2, 2, {0, 1, 1, 0});
  Representation M = make_rep(f, {A, B}, "");
  auto base = h1_dimension(P, M);
  FinitePresentation Q = P;
  std::swap(Q.relators[0], Q.relators[2]);
  auto swapped = h1_dimension(Q, M);
  CHECK(base.dimension_Z1 == swapped.dimension_Z1);
  Rng rng(5);
  Matrix g;
  do {
    g = Matrix(f, 2, 2);
    for (auto& v : g.data()) v = Fel(rng.below(3));
  } while (!is_invertible(g));
  auto conj = h1_dimension(P, conjugate_rep(M, g));
  CHECK(base.dimension_Z1 == conj.dimension_Z1);
  CHECK(base.dimension_H1 == conj.dimension_H1);
}
