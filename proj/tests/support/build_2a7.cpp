#include "build_2a7.hpp"

#include <algorithm>
#include <numeric>

#include "modlie/util.hpp"

namespace modlie::fixtures {

namespace {

// permutations of {0..6}; compose(a, b) applies b first (matches the
// left-to-right matrix convention of evaluate_word)
using Perm = std::array<uint32_t, 7>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c;
  for (uint32_t i = 0; i < 7; ++i) c[i] = a[b[i]];
  return c;
}

uint32_t perm_order(Perm p) {
  Perm id;
  std::iota(id.begin(), id.end(), 0);
  Perm cur = p;
  uint32_t ord = 1;
  while (cur != id) {
    cur = compose(cur, p);
    ++ord;
  }
  return ord;
}

}  // namespace

FinitePresentation alt7_presentation() {
  FinitePresentation P;
  P.generator_count = 5;
  for (int32_t i = 1; i <= 5; ++i) P.relators.push_back({i, i, i});
  for (int32_t i = 1; i <= 5; ++i)
    for (int32_t j = i + 1; j <= 5; ++j) P.relators.push_back({i, j, i, j});
  return P;
}

FinitePresentation double_alt7_presentation() {
  FinitePresentation P;
  P.generator_count = 5;
  for (int32_t i = 1; i <= 5; ++i) P.relators.push_back({i, i, i});
  // z = (t1 t2)^2; z^2 = 1
  P.relators.push_back({1, 2, 1, 2, 1, 2, 1, 2});
  // all pair squares coincide with z
  for (int32_t i = 1; i <= 5; ++i)
    for (int32_t j = i + 1; j <= 5; ++j) {
      if (i == 1 && j == 2) continue;
      P.relators.push_back({i, j, i, j, -2, -1, -2, -1});
    }
  // z central
  for (int32_t k = 1; k <= 5; ++k) P.relators.push_back({1, 2, 1, 2, k, -2, -1, -2, -1, -k});
  return P;
}

TwoA7Modules build_2a7_modules() {
  FinitePresentation P = double_alt7_presentation();

  // 1. certify the order: 5040 cosets over the trivial subgroup
  CosetTable reg = coset_enumerate(P, {});
  if (reg.cosets != 5040) fail("FixtureError", "presentation order != 5040");
  std::vector<int32_t> zword{1, 2, 1, 2};
  if (coset_word_order(reg, zword) != 2) fail("FixtureError", "z is not an involution");
  // z central: commutes with every generator in the regular action
  for (int32_t g = 1; g <= 5; ++g) {
    auto a = coset_word_perm(reg, {1, 2, 1, 2, g});
    auto b = coset_word_perm(reg, {g, 1, 2, 1, 2});
    if (a != b) fail("FixtureError", "z is not central");
  }
  // perfectness: the relator exponent matrix has full rank mod every prime
  // dividing 5040, so the abelianization is trivial
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    auto f = Field::get(p);
    Matrix E(f, uint32_t(P.relators.size()), 5);
    for (uint32_t r = 0; r < P.relators.size(); ++r)
      for (int32_t s : P.relators[r]) {
        uint32_t g = uint32_t(std::abs(s)) - 1;
        E.at(r, g) = f->add(E.at(r, g), s > 0 ? 1 : f->neg(1));
      }
    if (rank(E) != 5) fail("FixtureError", "abelianization nontrivial mod " + std::to_string(p));
  }

  // 2. find a word whose Alt(7) image has order 7, lift it to an order-7
  // element by taking the 8th power
  std::array<Perm, 5> tperm;
  for (uint32_t i = 0; i < 5; ++i) {
    Perm p;
    std::iota(p.begin(), p.end(), 0);
    // t_i covers the 3-cycle (1, 2, i+3) on points 0,1,i+2
    p[0] = 1;
    p[1] = i + 2;
    p[i + 2] = 0;
    tperm[i] = p;
  }
  std::vector<int32_t> w7;
  {
    // products of all five generators in some order reach a 7-cycle quickly
    std::vector<int32_t> word{1, 2, 3, 4, 5};
    std::sort(word.begin(), word.end());
    do {
      Perm img;
      std::iota(img.begin(), img.end(), 0);
      for (int32_t s : word) img = compose(img, tperm[uint32_t(s) - 1]);
      if (perm_order(img) == 7) {
        w7 = word;
        break;
      }
    } while (std::next_permutation(word.begin(), word.end()));
    if (w7.empty()) fail("FixtureError", "no 7-element word found");
  }
  std::vector<int32_t> u;
  for (int rep = 0; rep < 8; ++rep) u.insert(u.end(), w7.begin(), w7.end());

  // 3. 720-point coset module over GF(25)
  CosetTable T = coset_enumerate(P, {u});
  if (T.cosets != 720) fail("FixtureError", "index of the order-7 subgroup is not 720");
  auto f25 = Field::get(5, 2);
  Representation perm720 = coset_representation(T, f25, "2a7-cosets720");

  // 4. chop and pick out the faithful factors
  ChopOptions opts;
  opts.seed = 424242;
  auto factors = chop(perm720, opts);
  auto z_scalar = [&](const Representation& R) {
    Matrix zm = evaluate_word(R, zword);
    Matrix mi = scale(Matrix::identity(R.field, R.dim), R.F().neg(1));
    return zm == mi;  // true when z acts as -1 (faithful factor)
  };
  std::vector<Representation> fours;
  std::vector<Representation> fourteens;
  for (const auto& fac : factors) {
    if (fac.rep.dim == 4 && z_scalar(fac.rep)) fours.push_back(fac.rep);
    if (fac.rep.dim == 14 && z_scalar(fac.rep)) fourteens.push_back(fac.rep);
  }
  if (fours.size() != 2) fail("FixtureError", "expected a dual pair of faithful 4s, found " +
                                                  std::to_string(fours.size()));
  if (!isomorphic(dual_rep(fours[0]), fours[1])) fail("FixtureError", "the two 4s are not dual");
  if (fourteens.empty()) fail("FixtureError", "no faithful 14 found");

  // pick the self-dual 14 that extends a 4 (the paper's module has 4/14
  // layers, so Ext^1(4, 14) = H^1(H, 14 tensor 4*) must be nonzero)
  const Representation* chosen14 = nullptr;
  for (const auto& f14 : fourteens) {
    if (!isomorphic(f14, dual_rep(f14))) continue;
    auto hom414 = tensor_rep(f14, dual_rep(fours[0]));
    auto h = h1_dimension(P, hom414);
    if (h.dimension_H1 > 0) {
      chosen14 = &f14;
      break;
    }
  }
  if (!chosen14 && fourteens.size() == 1) chosen14 = &fourteens[0];
  if (!chosen14) fail("FixtureError", "no 14 with the required extension behavior");

  // 5. orient the dual pair by the cohomology signature: 4* is the one whose
  // S^2(4* + 14) has 1-dimensional cohomology
  auto h1_of = [&](const Representation& four) {
    auto sum = direct_sum(four, *chosen14);
    auto s2 = sym2_rep(sum);
    return h1_dimension(P, s2).dimension_H1;
  };
  uint32_t h0 = h1_of(fours[0]);
  uint32_t h1v = h1_of(fours[1]);
  if (!((h0 == 1 && h1v == 0) || (h0 == 0 && h1v == 1)))
    fail("FixtureError", "cohomology signature is not {1, 0}: got " + std::to_string(h0) + ", " +
                             std::to_string(h1v));
  TwoA7Modules out;
  out.four_star = h0 == 1 ? fours[0] : fours[1];
  out.four = h0 == 1 ? fours[1] : fours[0];
  out.fourteen = *chosen14;
  out.four.label = "2a7-4";
  out.four_star.label = "2a7-4s";
  out.fourteen.label = "2a7-14";
  return out;
}

}  // namespace modlie::fixtures
