#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "modlie/liealg.hpp"
#include "modlie/util.hpp"
using namespace modlie;

static StructureConstants sl2(FieldPtr f) {
  // e=0, h=1, f=2: [e,f]=h, [h,e]=2e, [h,f]=-2f
  auto L = make_structure_constants(f, 3);
  const Field& F = *f;
  L.set(0, 2, 1, 1); L.set(2, 0, 1, F.neg(1));
  L.set(1, 0, 0, 2 % F.p()); L.set(0, 1, 0, F.neg(2 % F.p()));
  L.set(1, 2, 2, F.neg(2 % F.p())); L.set(2, 1, 2, 2 % F.p());
  return L;
}

TEST_CASE("sl2 is a lie algebra with the expected profile") {
  auto F = Field::get(7);
  auto L = sl2(F);
  CHECK(L.antisymmetric());
  auto rep = jacobi_residual(L);
  CHECK(rep.is_lie);
  auto prof = algebra_profile(L);
  CHECK(prof.center_dim == 0);
  CHECK(prof.derived_dim == 3);
  CHECK(prof.killing_rank == 3);
  CHECK_FALSE(prof.is_abelian);
  CHECK_FALSE(prof.solvable);
}

TEST_CASE("perturbed table fails jacobi; zero bracket is abelian lie") {
  auto F = Field::get(5);
  auto L = sl2(F);
  L.set(0, 2, 0, 1); L.set(2, 0, 0, 4);  // [e,f] = h + e: antisymmetric, breaks jacobi
  CHECK(L.antisymmetric());
  CHECK_FALSE(jacobi_residual(L).is_lie);

  auto Z = make_structure_constants(F, 4);
  CHECK(jacobi_residual(Z).is_lie);
  auto prof = algebra_profile(Z);
  CHECK(prof.is_abelian);
  CHECK(prof.center_dim == 4);
  CHECK(prof.killing_rank == 0);
  CHECK(prof.solvable);
  CHECK(prof.nilpotency_class == 1);
}

TEST_CASE("chevalley constants satisfy jacobi for the shipped types") {
  auto F7 = Field::get(7);
  for (auto [t, r] : {std::pair{'A',1u},{'A',2u},{'A',3u},{'C',2u},{'G',2u},{'D',4u},{'B',3u}}) {
    auto L = chevalley_algebra(t, r, F7);
    CHECK(L.antisymmetric());
    CHECK(jacobi_residual(L).is_lie);
  }
  // also in characteristic 2 and 3 the table must remain antisymmetric + jacobi
  for (auto p : {2u, 3u}) {
    auto L = chevalley_algebra('D', 4, Field::get(p));
    CHECK(L.antisymmetric());
    CHECK(jacobi_residual(L).is_lie);
  }
}

TEST_CASE("F4 and E6 chevalley jacobi") {
  auto L = chevalley_algebra('F', 4, Field::get(5));
  CHECK(jacobi_residual(L).is_lie);
  auto E = chevalley_algebra('E', 6, Field::get(7));
  CHECK(jacobi_residual(E).is_lie);
}

TEST_CASE("killing form invariance on random triples") {
  auto F = Field::get(11);
  auto L = chevalley_algebra('G', 2, F);
  Rng rng(3);
  // kappa([x,y],z) = kappa(x,[y,z])
  auto killing = [&](const Vec& x, const Vec& y) {
    return trace(mul(L.ad_vec(x), L.ad_vec(y)));
  };
  for (int t = 0; t < 10; ++t) {
    Vec x(F, 14, 1), y(F, 14, 1), z(F, 14, 1);
    for (uint32_t i = 0; i < 14; ++i) { x.at(i,0)=Fel(rng.below(11)); y.at(i,0)=Fel(rng.below(11)); z.at(i,0)=Fel(rng.below(11)); }
    CHECK(killing(L.bracket(x, y), z) == killing(x, L.bracket(y, z)));
  }
}

TEST_CASE("subalgebra generation: cartan element, sl2 pair, cap") {
  auto F = Field::get(7);
  auto L = sl2(F);
  auto B = bracket_of(L);
  Vec h(F, 3, 1); h.at(1, 0) = 1;
  auto g1 = subalgebra_generate(B, {h}, 3);
  CHECK(g1.dim() == 1);
  CHECK_FALSE(g1.cap_exceeded);

  Vec e(F, 3, 1); e.at(0, 0) = 1;
  Vec f2(F, 3, 1); f2.at(2, 0) = 1;
  auto g2 = subalgebra_generate(B, {e, f2}, 3);
  CHECK(g2.dim() == 3);
  CHECK_FALSE(g2.cap_exceeded);

  auto g3 = subalgebra_generate(B, {e, f2}, 2);
  CHECK(g3.cap_exceeded);
  // re-run with cap = dim agrees
  auto g4 = subalgebra_generate(B, {e, f2}, 3);
  CHECK(g4.dim() == 3);
}

TEST_CASE("abelian subspace checks and heisenberg witness") {
  auto F = Field::get(3);
  // heisenberg: [x,y]=z
  auto H = make_structure_constants(F, 3);
  H.set(0, 1, 2, 1); H.set(1, 0, 2, F->neg(1));
  CHECK(jacobi_residual(H).is_lie);
  auto B = bracket_of(H);
  std::vector<Vec> all;
  for (uint32_t i = 0; i < 3; ++i) { Vec v(F,3,1); v.at(i,0)=1; all.push_back(v); }
  CHECK_FALSE(is_abelian_subspace(B, all));
  auto w = largest_abelian_in(B, all, 1);
  REQUIRE(w.has_value());
  CHECK(w->dim == 2);
  CHECK(is_abelian_subspace(B, w->basis));
  // exhaustive check over all 2-subspaces of GF(3)^3: all abelian 2-subspaces contain z
  // so max abelian dimension is 2
  CHECK_FALSE(largest_abelian_in(B, all, 2).has_value());
}

TEST_CASE("identify simple types") {
  auto F11 = Field::get(11);
  CHECK(identify_simple_type(chevalley_algebra('A', 1, F11)).str() == "A1");
  CHECK(identify_simple_type(chevalley_algebra('A', 2, Field::get(7))).str() == "A2");
  auto g2 = identify_simple_type(chevalley_algebra('G', 2, F11));
  CHECK(g2.str() == "G2");
  auto ab = make_structure_constants(F11, 5);
  auto lab = identify_simple_type(ab);
  CHECK_FALSE(lab.recognized);
}

TEST_CASE("gflie round trip") {
  auto F = Field::get(7);
  auto L = chevalley_algebra('A', 2, F);
  auto text = write_gflie(L);
  auto L2 = read_gflie_string(text);
  CHECK(L2.dim == L.dim);
  CHECK(L2.table == L.table);
}

TEST_CASE("adjoint chevalley generators are automorphisms of the bracket") {
  auto F = Field::get(7);
  auto L = chevalley_algebra('A', 2, F);
  auto gens = chevalley_adjoint_generators('A', 2, F);
  Rng rng(9);
  for (const auto& g : gens) {
    CHECK(is_invertible(g));
    for (int t = 0; t < 4; ++t) {
      Vec x(F, 8, 1), y(F, 8, 1);
      for (uint32_t i = 0; i < 8; ++i) { x.at(i,0)=Fel(rng.below(7)); y.at(i,0)=Fel(rng.below(7)); }
      CHECK(mul(g, L.bracket(x, y)) == L.bracket(mul(g, x), mul(g, y)));
    }
  }
}
