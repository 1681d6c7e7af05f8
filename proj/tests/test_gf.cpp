#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modlie/field.hpp"
#include "modlie/io.hpp"
#include "modlie/jordan.hpp"
#include "modlie/linalg.hpp"
#include "modlie/matrix.hpp"
#include "modlie/util.hpp"

using namespace modlie;

TEST_CASE("prime field arithmetic is exact") {
  for (uint32_t p : {2u, 3u, 5u, 7u, 31u}) {
    auto F = Field::get(p);
    for (Fel a = 0; a < p; ++a) {
      for (Fel b = 0; b < p; ++b) {
        CHECK(F->add(a, b) == (a + b) % p);
        CHECK(F->mul(a, b) == (a * b) % p);
        CHECK(F->sub(a, b) == (a + p - b) % p);
      }
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
    }
  }
}

TEST_CASE("extension field axioms") {
  for (auto [p, k] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {7u, 2u}, {31u, 2u}}) {
    auto F = Field::get(p, k);
    CHECK(F->q() == uint32_t(std::pow(double(p), double(k)) + 0.5));
    Rng rng(42);
    for (int t = 0; t < 300; ++t) {
      Fel a = Fel(rng.below(F->q())), b = Fel(rng.below(F->q())), c = Fel(rng.below(F->q()));
      CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
      // Frobenius is additive (an automorphism)
      CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
      CHECK(F->frobenius(F->mul(a, b)) == F->mul(F->frobenius(a), F->frobenius(b)));
    }
    // generator has full order
    Fel g = F->generator();
    Fel x = 1;
    uint32_t order = 0;
    do {
      x = F->mul(x, g);
      ++order;
    } while (x != 1);
    CHECK(order == F->q() - 1);
  }
}

TEST_CASE("explicit modulus field") {
  // GF(9) with modulus x^2 + 1 (irreducible over GF(3))
  auto F = Field::get(FieldSpec{3, 2, {1, 0, 1}});
  CHECK(F->q() == 9);
  // x * x = -1 = 2; x is packed as 3
  CHECK(F->mul(3, 3) == 2);
}

TEST_CASE("rank and nullspace") {
  auto F5 = Field::get(5);
  auto I = Matrix::identity(F5, 4);
  auto rn = rank_nullspace(I);
  CHECK(rn.rank == 4);
  CHECK(rn.nullspace.empty());

  auto F2 = Field::get(2);
  Matrix Z(F2, 3, 3);
  auto rn2 = rank_nullspace(Z);
  CHECK(rn2.rank == 0);
  CHECK(rn2.nullspace.size() == 3);
  // canonical basis of the full space is the standard basis
  for (uint32_t i = 0; i < 3; ++i)
    for (uint32_t j = 0; j < 3; ++j) CHECK(rn2.nullspace[i].at(j, 0) == (i == j ? 1u : 0u));
}

TEST_CASE("random 3x4 nullspace against exhaustive check over GF(5)") {
  auto F = Field::get(5);
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix A(F, 3, 4);
    for (auto& v : A.data()) v = Fel(rng.below(5));
    auto rn = rank_nullspace(A);
    CHECK(rn.rank + rn.nullspace.size() == 4);
    // every basis vector is killed by A
    for (const auto& v : rn.nullspace) CHECK(mul(A, v).is_zero());
    // exhaustive count of kernel vectors over all 5^4
    uint32_t count = 0;
    for (uint32_t mask = 0; mask < 625; ++mask) {
      Vec v(F, 4, 1);
      uint32_t m = mask;
      for (int i = 0; i < 4; ++i) {
        v.at(i, 0) = m % 5;
        m /= 5;
      }
      if (mul(A, v).is_zero()) ++count;
    }
    uint32_t expect = 1;
    for (size_t i = 0; i < rn.nullspace.size(); ++i) expect *= 5;
    CHECK(count == expect);
  }
}

TEST_CASE("rank invariants") {
  auto F = Field::get(FieldSpec{3, 2, {}});
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix A(F, 5, 5);
    for (auto& v : A.data()) v = Fel(rng.below(F->q()));
    CHECK(rank(A) == rank(A.transpose()));
    // invertible P, Q leave rank unchanged
    Matrix P, Q;
    do {
      P = Matrix(F, 5, 5);
      for (auto& v : P.data()) v = Fel(rng.below(F->q()));
    } while (!is_invertible(P));
    do {
      Q = Matrix(F, 5, 5);
      for (auto& v : Q.data()) v = Fel(rng.below(F->q()));
    } while (!is_invertible(Q));
    CHECK(rank(mul(P, A, Q)) == rank(A));
  }
}

TEST_CASE("jordan partition basics") {
  auto F = Field::get(7);
  Matrix Z(F, 5, 5);
  CHECK(nilpotent_jordan_partition(Z).str() == "1^5");

  Matrix J4(F, 4, 4);
  for (uint32_t i = 0; i + 1 < 4; ++i) J4.at(i, i + 1) = 1;
  CHECK(nilpotent_jordan_partition(J4).str() == "4");

  Matrix nn = Matrix::identity(F, 3);
  CHECK_THROWS_AS(nilpotent_jordan_partition(nn), Error);
}

TEST_CASE("jordan partition is conjugation invariant (J3+J2 over GF(7))") {
  auto F = Field::get(7);
  Matrix A(F, 5, 5);
  A.at(0, 1) = 1;
  A.at(1, 2) = 1;
  A.at(3, 4) = 1;
  Rng rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    Matrix g;
    do {
      g = Matrix(F, 5, 5);
      for (auto& v : g.data()) v = Fel(rng.below(7));
    } while (!is_invertible(g));
    Matrix C = mul(g, A, *inverse(g));
    auto part = nilpotent_jordan_partition(C);
    CHECK(part.str() == "3,2");
  }
}

TEST_CASE("partition dominance") {
  CHECK(parse_partition("3,2").dominates(parse_partition("2,2,1")));
  CHECK_FALSE(parse_partition("2,2,1").dominates(parse_partition("3,2")));
  CHECK(parse_partition("5^2,3").total() == 13);
}

TEST_CASE("pencil: B = 0 and B = A cases") {
  auto F = Field::get(11);
  Matrix J3(F, 3, 3);
  J3.at(0, 1) = 1;
  J3.at(1, 2) = 1;
  Matrix Z(F, 3, 3);

  auto prof = pencil_profile(J3, Z);
  CHECK(prof.generic.str() == "3");
  CHECK(prof.exceptional.empty());

  // A + xA = (1+x)A: exceptional exactly at x = -1 with partition 1^n
  auto prof2 = pencil_profile(J3, J3);
  CHECK(prof2.generic.str() == "3");
  REQUIRE(prof2.exceptional.size() == 1);
  CHECK(prof2.exceptional[0].first == F->neg(1));
  CHECK(prof2.exceptional[0].second.str() == "1^3");
}

TEST_CASE("gfmat round trip") {
  auto F = Field::get(5, 2);
  Rng rng(9);
  Matrix A(F, 3, 4);
  for (auto& v : A.data()) v = Fel(rng.below(F->q()));
  auto text = write_gfmat(A);
  Matrix B = read_gfmat_string(text);
  CHECK(A == B);
}

TEST_CASE("matrix multiply agrees across thread counts") {
  auto F = Field::get(FieldSpec{5, 2, {}});
  Rng rng(13);
  Matrix A(F, 70, 65), B(F, 65, 80);
  for (auto& v : A.data()) v = Fel(rng.below(F->q()));
  for (auto& v : B.data()) v = Fel(rng.below(F->q()));
  set_thread_count(1);
  Matrix C1 = mul(A, B);
  set_thread_count(4);
  Matrix C4 = mul(A, B);
  set_thread_count(1);
  CHECK(C1 == C4);
}

TEST_CASE("sha256 known vector") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
