#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modlie/rep.hpp"
#include "modlie/util.hpp"

using namespace modlie;

namespace {

// regular representation of the cyclic group C_n
Representation cyclic_regular(FieldPtr f, uint32_t n) {
  Matrix g(f, n, n);
  for (uint32_t i = 0; i < n; ++i) g.at((i + 1) % n, i) = 1;
  return make_rep(f, {g}, "C" + std::to_string(n) + "reg");
}

// Sym(3) = <(123), (12)> on the regular module: columns indexed by the six
// group elements in a fixed order
Representation sym3_regular(FieldPtr f) {
  // elements: e, a, a2, b, ab, a2b with a = (123), b = (12)
  // left multiplication by a: e->a->a2->e, b->ab->a2b->b
  Matrix A(f, 6, 6), B(f, 6, 6);
  auto set_perm = [](Matrix& m, std::initializer_list<uint32_t> img) {
    uint32_t c = 0;
    for (uint32_t r : img) m.at(r, c++) = 1;
  };
  set_perm(A, {1, 2, 0, 4, 5, 3});
  // left multiplication by b: e->b, a->?  b*a = a^2*b so a -> a2b(index 5)
  // b*a2 = ab (4), b*b = e, b*ab = a2 (2)? b*ab = b*a*b = a2*b*b = a2.
  // b*a2b = b*a2*b = a*b*b = a.
  set_perm(B, {3, 5, 4, 0, 2, 1});
  return make_rep(f, {A, B}, "S3reg");
}

Representation alt4_regular(FieldPtr f);

// exhaustive invariant-subspace enumeration (oracle); dims up to max_dim
std::vector<std::vector<Vec>> all_invariant_subspaces(const Representation& M, uint32_t max_dim);

}  // namespace

TEST_CASE("derived modules: dimensions and involution") {
  auto F = Field::get(5);
  auto M = sym3_regular(F);
  auto E = ext2_rep(M);
  auto S = sym2_rep(M);
  CHECK(E.dim == 15);
  CHECK(S.dim == 21);
  auto DD = dual_rep(dual_rep(M));
  for (size_t i = 0; i < M.gens.size(); ++i) CHECK(DD.gens[i] == M.gens[i]);

  // ext2 of a 4-dimensional module has dimension 6
  auto C5 = cyclic_regular(F, 4);
  CHECK(ext2_rep(C5).dim == 6);
}

TEST_CASE("sym2 of dim 56 has dimension 1596") {
  CHECK(sym2_pairs(56).size() == 1596);
  CHECK(ext2_pairs(56).size() == 1540);
}

TEST_CASE("spin: zero seed, irreducible seed, fixed vector of C3 over GF(2)") {
  auto F2 = Field::get(2);
  auto M = cyclic_regular(F2, 3);
  Vec z(F2, 3, 1);
  CHECK(spin(M, {z}).dim() == 0);

  Vec ones = vec_from_ints(F2, {1, 1, 1});
  auto w = spin(M, {ones});
  CHECK(w.dim() == 1);
  // enumerate all 2^3 - 1 lines and find every invariant subspace of dim 1
  uint32_t invariant_lines = 0;
  for (uint32_t mask = 1; mask < 8; ++mask) {
    Vec v(F2, 3, 1);
    for (int i = 0; i < 3; ++i) v.at(i, 0) = (mask >> i) & 1;
    if (spin(M, {v}).dim() == 1) ++invariant_lines;
  }
  CHECK(invariant_lines == 1);
}

TEST_CASE("hom_space: C2 regular over GF(3) equals brute force over all 3^4 matrices") {
  auto F = Field::get(3);
  auto M = cyclic_regular(F, 2);
  auto maps = hom_space(M, M);
  CHECK(maps.size() == 2);

  uint32_t brute = 0;
  for (uint32_t code = 0; code < 81; ++code) {
    Matrix X(F, 2, 2);
    uint32_t c = code;
    for (auto& v : X.data()) {
      v = c % 3;
      c /= 3;
    }
    if (mul(X, M.gens[0]) == mul(M.gens[0], X)) ++brute;
  }
  CHECK(brute == 9);  // 3^dim(hom)
}

TEST_CASE("hom_space canonical basis is deterministic and intertwines") {
  auto F = Field::get(5);
  auto M = sym3_regular(F);
  auto h1 = hom_space(M, M);
  auto h2 = hom_space(M, M);
  REQUIRE(h1.size() == h2.size());
  for (size_t i = 0; i < h1.size(); ++i) CHECK(h1[i] == h2[i]);
}

TEST_CASE("chop: C2 regular over GF(3) gives trivial and sign") {
  auto F = Field::get(3);
  auto M = cyclic_regular(F, 2);
  auto factors = chop(M);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].rep.dim == 1);
  CHECK(factors[1].rep.dim == 1);
  CHECK(factors[0].multiplicity == 1);
  CHECK(factors[1].multiplicity == 1);
}

TEST_CASE("chop: C3 regular over GF(2) handles extension-field endomorphisms") {
  auto F = Field::get(2);
  auto M = cyclic_regular(F, 3);
  auto factors = chop(M);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].rep.dim == 1);
  CHECK(factors[1].rep.dim == 2);  // irreducible with End = GF(4)
}

TEST_CASE("chop: Sym(3) regular over GF(5) has factors 1,1,2 with mult 1,1,2") {
  auto F = Field::get(5);
  auto M = sym3_regular(F);
  auto factors = chop(M);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0].rep.dim == 1);
  CHECK(factors[1].rep.dim == 1);
  CHECK(factors[2].rep.dim == 2);
  CHECK(factors[0].multiplicity + factors[1].multiplicity == 2);
  CHECK(factors[2].multiplicity == 2);
}

TEST_CASE("chop is basis independent") {
  auto F = Field::get(5);
  auto M = sym3_regular(F);
  Rng rng(77);
  Matrix g;
  do {
    g = Matrix(F, 6, 6);
    for (auto& v : g.data()) v = Fel(rng.below(5));
  } while (!is_invertible(g));
  auto factors = chop(conjugate_rep(M, g));
  std::vector<std::pair<uint32_t, uint32_t>> sig;
  for (auto& f : factors) sig.emplace_back(f.rep.dim, f.multiplicity);
  std::sort(sig.begin(), sig.end());
  CHECK(sig == std::vector<std::pair<uint32_t, uint32_t>>{{1, 1}, {1, 1}, {2, 2}});
}

TEST_CASE("invariant forms: W + W* has a 1-dimensional alternating space") {
  auto F = Field::get(7);
  // W = nontrivial character of C3 over GF(7): g acts by 2 (2^3 = 8 = 1)
  Matrix w(F, 1, 1);
  w.at(0, 0) = 2;
  Representation W = make_rep(F, {w}, "W");
  Representation Wd = dual_rep(W);
  auto M = direct_sum(W, Wd);
  auto alt = invariant_forms(M, FormKind::Alternating);
  CHECK(alt.dim() == 1);
  for (const auto& G : alt.basis)
    for (const auto& g : M.gens) CHECK(mul(g.transpose(), G, g) == G);
}

TEST_CASE("form radical") {
  auto F = Field::get(5);
  auto M = cyclic_regular(F, 2);
  // F = 0 has radical everything
  Matrix Z(F, 2, 2);
  CHECK(form_radical(Z, M).dim() == 2);
  // non-degenerate alternating form on a 2-dim space
  Matrix J(F, 2, 2);
  J.at(0, 1) = 1;
  J.at(1, 0) = 4;
  CHECK(form_radical(J, M).dim() == 0);
  // rank r form has radical dim - r
  Matrix R(F, 2, 2);
  R.at(0, 1) = 1;  // rank 1 (not alternating, just a form)
  CHECK(form_radical(R, M).dim() == 1);
}

TEST_CASE("form uniqueness verdict") {
  auto F = Field::get(7);
  Matrix w(F, 1, 1);
  w.at(0, 0) = 2;
  Representation W = make_rep(F, {w}, "W");
  Representation Wd = dual_rep(W);

  // W + W* with W not self-dual: unique
  auto v1 = form_uniqueness_verdict(direct_sum(W, Wd));
  CHECK(v1.verdict == Uniqueness::Unique);

  // W + W* + W: multiplicity 2 of a non-self-dual factor
  auto v2 = form_uniqueness_verdict(direct_sum(direct_sum(W, Wd), W));
  CHECK(v2.verdict == Uniqueness::NotGuaranteed);

  // W2 + W2 with W2 of alternating type: multiplicity 2 violates the rule.
  // take the 2-dim irreducible of Sym(3) over GF(5) (self-dual, alternating
  // space nonzero? it is symmetric type of dim 2 with symmetric form; use a
  // group with an alternating 2-dim module instead: C3 inside SL2(7))
  Matrix a(F, 2, 2);
  // order-7 element? use an order-3 element of SL2(7): trace -1
  a = Matrix::from_ints(F, 2, 2, {0, 6, 1, 6});  // char poly x^2 + x + 1
  Representation W2 = make_rep(F, {a}, "W2");
  REQUIRE(invariant_forms(W2, FormKind::Alternating).dim() == 1);
  auto v3 = form_uniqueness_verdict(direct_sum(W2, W2));
  CHECK(v3.verdict == Uniqueness::NotGuaranteed);
  auto v4 = form_uniqueness_verdict(W2);
  CHECK(v4.verdict == Uniqueness::Unique);
}

TEST_CASE("hom duality invariant: dim Hom(M,N) = dim Hom(N*, M*)") {
  auto F = Field::get(3);
  auto M = sym3_regular(F);
  auto C = cyclic_regular(F, 2);
  // restrict S3 module to the subgroup generated by b only so generator
  // counts match: use single-generator reps
  Representation Mb = make_rep(F, {M.gens[1]}, "Mb");
  auto lhs = hom_space(Mb, C).size();
  auto rhs = hom_space(dual_rep(C), dual_rep(Mb)).size();
  CHECK(lhs == rhs);
}
