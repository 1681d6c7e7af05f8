#include "modlie/liealg.hpp"

#include <array>
#include <sstream>

#include "modlie/util.hpp"

namespace modlie {

StructureConstants make_structure_constants(FieldPtr f, uint32_t dim) {
  StructureConstants L;
  L.field = std::move(f);
  L.dim = dim;
  L.table.assign(size_t(dim) * dim * dim, 0);
  return L;
}

bool StructureConstants::antisymmetric() const {
  const Field& F = *field;
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t j = 0; j <= i; ++j)
      for (uint32_t m = 0; m < dim; ++m) {
        if (i == j && c(i, i, m)) return false;
        if (i != j && c(i, j, m) != F.neg(c(j, i, m))) return false;
      }
  return true;
}

Vec StructureConstants::bracket(const Vec& x, const Vec& y) const {
  const Field& F = *field;
  Vec out(field, dim, 1);
  for (uint32_t i = 0; i < dim; ++i) {
    Fel xi = x.at(i, 0);
    if (!xi) continue;
    for (uint32_t j = 0; j < dim; ++j) {
      Fel yj = y.at(j, 0);
      if (!yj) continue;
      Fel s = F.mul(xi, yj);
      const Fel* row = &table[(size_t(i) * dim + j) * dim];
      for (uint32_t m = 0; m < dim; ++m)
        if (row[m]) out.at(m, 0) = F.add(out.at(m, 0), F.mul(s, row[m]));
    }
  }
  return out;
}

Matrix StructureConstants::ad(uint32_t i) const {
  Matrix A(field, dim, dim);
  for (uint32_t j = 0; j < dim; ++j)
    for (uint32_t m = 0; m < dim; ++m) A.at(m, j) = c(i, j, m);
  return A;
}

Matrix StructureConstants::ad_vec(const Vec& x) const {
  const Field& F = *field;
  Matrix A(field, dim, dim);
  for (uint32_t i = 0; i < dim; ++i) {
    Fel xi = x.at(i, 0);
    if (!xi) continue;
    for (uint32_t j = 0; j < dim; ++j) {
      const Fel* row = &table[(size_t(i) * dim + j) * dim];
      for (uint32_t m = 0; m < dim; ++m)
        if (row[m]) A.at(m, j) = F.add(A.at(m, j), F.mul(xi, row[m]));
    }
  }
  return A;
}

std::string write_gflie(const StructureConstants& L) {
  const Field& F = *L.field;
  std::ostringstream out;
  out << "GFLIE v1\n";
  out << "field " << F.p() << " " << F.k();
  if (F.k() > 1)
    for (uint32_t c : F.modulus()) out << " " << c;
  out << "\n";
  out << "dim " << L.dim << "\n";
  for (uint32_t i = 0; i < L.dim; ++i)
    for (uint32_t j = 0; j < L.dim; ++j)
      for (uint32_t m = 0; m < L.dim; ++m)
        if (L.c(i, j, m)) out << i << " " << j << " " << m << " " << L.c(i, j, m) << "\n";
  return out.str();
}

StructureConstants read_gflie_string(const std::string& text) {
  std::istringstream in(text);
  std::string magic, ver, kw;
  if (!(in >> magic >> ver) || magic != "GFLIE" || ver != "v1") fail("ParseError", "bad GFLIE header");
  uint32_t p, k;
  if (!(in >> kw >> p >> k) || kw != "field") fail("ParseError", "bad GFLIE field line");
  FieldSpec spec{p, k, {}};
  if (k > 1) {
    spec.modulus.resize(k + 1);
    for (auto& c : spec.modulus)
      if (!(in >> c)) fail("ParseError", "bad GFLIE modulus");
  }
  auto f = Field::get(spec);
  uint32_t dim;
  if (!(in >> kw >> dim) || kw != "dim") fail("ParseError", "bad GFLIE dim line");
  auto L = make_structure_constants(f, dim);
  uint32_t i, j, m;
  uint64_t v;
  while (in >> i >> j >> m >> v) {
    if (i >= dim || j >= dim || m >= dim || v >= f->q()) fail("ParseError", "GFLIE entry out of range");
    L.set(i, j, m, Fel(v));
  }
  return L;
}

StructureConstants read_gflie_file(const std::string& path) { return read_gflie_string(read_file(path)); }

JacobiReport jacobi_residual(const StructureConstants& L, size_t max_violations) {
  JacobiReport rep;
  rep.is_lie = true;
  const Field& F = *L.field;
  uint32_t n = L.dim;
  // cache ad matrices for the triple loop
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (uint32_t i = 0; i < n; ++i) ads.push_back(L.ad(i));
  for (uint32_t i = 0; i < n && rep.violations.size() < max_violations; ++i)
    for (uint32_t j = i + 1; j < n && rep.violations.size() < max_violations; ++j) {
      // bij = [e_i, e_j]
      std::vector<Fel> bij(&L.table[(size_t(i) * n + j) * n], &L.table[(size_t(i) * n + j) * n] + n);
      for (uint32_t k = j + 1; k < n; ++k) {
        // [[e_i,e_j],e_k] = -ad(e_k) bij ; plus cyclic terms
        bool bad = false;
        for (uint32_t m = 0; m < n && !bad; ++m) {
          Fel acc = 0;
          // [[e_i,e_j],e_k]_m = sum_t bij_t c(t,k,m)
          for (uint32_t t = 0; t < n; ++t) {
            if (bij[t]) acc = F.add(acc, F.mul(bij[t], L.c(t, k, m)));
            Fel cjk = L.c(j, k, t);
            if (cjk) acc = F.add(acc, F.mul(cjk, L.c(t, i, m)));
            Fel cki = L.c(k, i, t);
            if (cki) acc = F.add(acc, F.mul(cki, L.c(t, j, m)));
          }
          bad = acc != 0;
        }
        if (bad) {
          rep.is_lie = false;
          rep.violations.push_back({i, j, k});
          if (rep.violations.size() >= max_violations) break;
        }
      }
    }
  return rep;
}

namespace {

std::vector<Vec> span_closure_brackets(const StructureConstants& L, const std::vector<Vec>& gens) {
  Span span(L.field, L.dim);
  std::vector<Vec> queue;
  for (const auto& v : gens)
    if (span.insert(v)) queue.push_back(v);
  return span.canonical_basis();
}

// span of [X, Y] for X in xs, Y in ys
std::vector<Vec> bracket_span(const StructureConstants& L, const std::vector<Vec>& xs,
                              const std::vector<Vec>& ys) {
  Span span(L.field, L.dim);
  for (const auto& x : xs)
    for (const auto& y : ys) span.insert(L.bracket(x, y));
  return span.canonical_basis();
}

std::vector<Vec> full_basis(const StructureConstants& L) {
  std::vector<Vec> b;
  for (uint32_t i = 0; i < L.dim; ++i) {
    Vec e(L.field, L.dim, 1);
    e.at(i, 0) = 1;
    b.push_back(std::move(e));
  }
  return b;
}

}  // namespace

AlgebraProfile algebra_profile(const StructureConstants& L) {
  AlgebraProfile prof;
  prof.dim = L.dim;
  const uint32_t n = L.dim;
  if (n == 0) {
    prof.is_abelian = true;
    prof.solvable = true;
    prof.nilpotency_class = 0;
    return prof;
  }
  // center: stack the maps x -> [x, e_j]
  Matrix Sys(L.field, n * n, n);
  for (uint32_t j = 0; j < n; ++j)
    for (uint32_t m = 0; m < n; ++m)
      for (uint32_t i = 0; i < n; ++i) Sys.at(j * n + m, i) = L.c(i, j, m);
  prof.center_dim = uint32_t(rank_nullspace(Sys).nullspace.size());

  auto everything = full_basis(L);
  auto derived = bracket_span(L, everything, everything);
  prof.derived_dim = uint32_t(derived.size());
  prof.is_abelian = prof.derived_dim == 0;

  // Killing rank: K_ij = tr(ad_i ad_j) = sum_{a,b} c(i,a,b) c(j,b,a)
  Matrix K(L.field, n, n);
  const Field& F = *L.field;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i; j < n; ++j) {
      Fel acc = 0;
      for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
          Fel x = L.c(i, a, b);
          if (x) acc = F.add(acc, F.mul(x, L.c(j, b, a)));
        }
      K.at(i, j) = acc;
      K.at(j, i) = acc;
    }
  prof.killing_rank = rank(K);

  // derived series for solvability
  auto series = derived;
  for (uint32_t step = 0; step <= n; ++step) {
    if (series.empty()) {
      prof.solvable = true;
      break;
    }
    auto next = bracket_span(L, series, series);
    if (next.size() == series.size()) break;  // stabilized nonzero
    series = std::move(next);
  }
  // lower central series for nilpotency class
  auto lcs = derived;
  uint32_t cls = 1;
  bool nilpotent = lcs.empty();
  for (uint32_t step = 0; step <= n && !lcs.empty(); ++step) {
    auto next = bracket_span(L, everything, lcs);
    if (next.empty()) {
      nilpotent = true;
      ++cls;
      break;
    }
    if (next.size() == lcs.size()) break;
    lcs = std::move(next);
    ++cls;
  }
  if (L.dim > 0 && prof.is_abelian) {
    prof.nilpotency_class = 1;
    prof.solvable = true;
  } else if (nilpotent) {
    prof.nilpotency_class = cls;
    prof.solvable = true;
  }
  return prof;
}

BracketOp bracket_of(const StructureConstants& L) {
  BracketOp B;
  B.field = L.field;
  B.dim = L.dim;
  B.apply = [L](const Vec& x, const Vec& y) { return L.bracket(x, y); };
  return B;
}

GeneratedSubalgebra subalgebra_generate(const BracketOp& B, const std::vector<Vec>& seeds, uint32_t cap) {
  GeneratedSubalgebra out;
  Span span(B.field, B.dim);
  std::vector<Vec> queue;
  for (const auto& s : seeds)
    if (span.insert(s)) queue.push_back(s);
  for (size_t a = 0; a < queue.size(); ++a) {
    for (size_t b = 0; b < queue.size(); ++b) {
      if (a == b) continue;
      Vec w = B.apply(queue[a], queue[b]);
      if (span.insert(w)) {
        queue.push_back(std::move(w));
        if (span.dim() > cap) {
          out.cap_exceeded = true;
          out.basis = span.canonical_basis();
          return out;
        }
      }
    }
  }
  out.basis = span.canonical_basis();
  return out;
}

bool is_abelian_subspace(const BracketOp& B, const std::vector<Vec>& basis) {
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b)
      if (!B.apply(basis[a], basis[b]).is_zero()) return false;
  // the diagonal matters in characteristic 2
  for (const auto& v : basis)
    if (!B.apply(v, v).is_zero()) return false;
  return true;
}

StructureConstants restrict_bracket(const BracketOp& B, const std::vector<Vec>& basis) {
  uint32_t d = uint32_t(basis.size());
  auto L = make_structure_constants(B.field, d);
  if (d == 0) return L;
  Matrix W = cols_to_matrix(basis, B.field, B.dim);
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j) {
      if (i == j) continue;
      Vec w = B.apply(basis[i], basis[j]);
      auto x = solve(W, w);
      if (!x) fail("NotClosed", "basis is not closed under the bracket");
      for (uint32_t m = 0; m < d; ++m) L.set(i, j, m, x->at(m, 0));
    }
  return L;
}

std::optional<AbelianWitness> largest_abelian_in(const BracketOp& B, const std::vector<Vec>& basis,
                                                 uint32_t bound) {
  if (basis.empty()) return std::nullopt;
  StructureConstants S = restrict_bracket(B, basis);
  uint32_t d = S.dim;
  const Field& F = *B.field;

  // candidate abelian subspaces, in restricted coordinates
  std::vector<std::vector<Vec>> candidates;

  // (a) the center
  {
    Matrix Sys(S.field, d * d, d);
    for (uint32_t j = 0; j < d; ++j)
      for (uint32_t m = 0; m < d; ++m)
        for (uint32_t i = 0; i < d; ++i) Sys.at(j * d + m, i) = S.c(i, j, m);
    candidates.push_back(rank_nullspace(Sys).nullspace);
  }
  // (b) final nonzero term of the derived series (an abelian ideal)
  {
    auto everything = full_basis(S);
    auto cur = bracket_span(S, everything, everything);
    std::vector<Vec> prev;
    for (uint32_t step = 0; step <= d && !cur.empty(); ++step) {
      auto next = bracket_span(S, cur, cur);
      if (next.empty()) break;
      if (next.size() == cur.size()) break;
      cur = std::move(next);
    }
    if (!cur.empty() && is_abelian_subspace(bracket_of(S), cur)) candidates.push_back(cur);
  }
  // (c) greedy extension of the center by centralizing elements
  {
    auto grow = [&](std::vector<Vec> a) {
      Span sp(S.field, d);
      for (const auto& v : a) sp.insert(v);
      bool changed = true;
      while (changed) {
        changed = false;
        // centralizer of span(a) in S
        std::vector<std::vector<Fel>> rows;
        for (const auto& v : a)
          for (uint32_t m = 0; m < d; ++m) {
            std::vector<Fel> row(d, 0);
            for (uint32_t i = 0; i < d; ++i) {
              Fel acc = 0;
              for (uint32_t j = 0; j < d; ++j)
                if (v.at(j, 0)) acc = F.add(acc, F.mul(v.at(j, 0), S.c(i, j, m)));
              row[i] = acc;
            }
            rows.push_back(std::move(row));
          }
        std::vector<Vec> cz;
        if (rows.empty()) {
          cz = full_basis(S);
        } else {
          Matrix Sys(S.field, uint32_t(rows.size()), d);
          for (uint32_t r = 0; r < rows.size(); ++r)
            for (uint32_t c2 = 0; c2 < d; ++c2) Sys.at(r, c2) = rows[r][c2];
          cz = rank_nullspace(Sys).nullspace;
        }
        for (const auto& z : cz) {
          // adding a centralizing element keeps the subspace abelian as long
          // as the element brackets to zero with itself (automatic) and with
          // the other new elements; grow one at a time
          if (!sp.contains(z) && B.apply.operator bool()) {
            bool ok = S.bracket(z, z).is_zero();
            for (const auto& v : a) ok = ok && S.bracket(z, v).is_zero();
            if (ok) {
              sp.insert(z);
              a.push_back(z);
              changed = true;
              break;
            }
          }
        }
      }
      return a;
    };
    candidates.push_back(grow(candidates[0]));
  }

  std::optional<AbelianWitness> best;
  for (auto& cand : candidates) {
    if (cand.size() <= bound) continue;
    if (!is_abelian_subspace(bracket_of(S), cand)) continue;
    if (!best || cand.size() > best->dim) {
      // convert back to ambient coordinates
      Matrix W = cols_to_matrix(basis, B.field, B.dim);
      AbelianWitness wit;
      wit.dim = uint32_t(cand.size());
      for (const auto& v : cand) wit.basis.push_back(mul(W, v));
      best = std::move(wit);
    }
  }
  return best;
}

std::string TypeLabel::str() const {
  if (!recognized) return "Unrecognized(" + reason + ")";
  return std::string(1, type) + std::to_string(rank);
}

namespace {

// sample <= 64 elements, minimal centralizer dimension (over-approximates the
// rank from above in good cases; mismatches yield Unrecognized, never a wrong
// label)
uint32_t generic_centralizer_rank(const StructureConstants& L, uint64_t seed) {
  const Field& F = *L.field;
  Rng rng(seed);
  uint32_t best = L.dim;
  for (int t = 0; t < 64; ++t) {
    Vec x(L.field, L.dim, 1);
    for (uint32_t i = 0; i < L.dim; ++i) x.at(i, 0) = Fel(rng.below(F.q()));
    Matrix ad = L.ad_vec(x);
    uint32_t cz = L.dim - rank(ad);
    best = std::min(best, cz);
    if (best == 0) break;
  }
  return best;
}

}  // namespace

TypeLabel identify_simple_type(const StructureConstants& L) {
  TypeLabel out;
  auto prof = algebra_profile(L);
  if (prof.center_dim != 0) {
    out.reason = "center is nonzero (dim " + std::to_string(prof.center_dim) + ")";
    return out;
  }
  if (prof.derived_dim != L.dim) {
    out.reason = "derived algebra is proper (dim " + std::to_string(prof.derived_dim) + ")";
    return out;
  }
  // candidate types by dimension
  std::vector<std::pair<char, uint32_t>> candidates;
  uint32_t n = L.dim;
  for (uint32_t r = 1; r * r + 2 * r <= n; ++r)
    if (r * r + 2 * r == n) candidates.push_back({'A', r});
  for (uint32_t r = 2; 2 * r * r + r <= n; ++r)
    if (2 * r * r + r == n) {
      if (r >= 3) candidates.push_back({'B', r});
      candidates.push_back({'C', r});
    }
  for (uint32_t r = 4; 2 * r * r - r <= n; ++r)
    if (2 * r * r - r == n) candidates.push_back({'D', r});
  if (n == 14) candidates.push_back({'G', 2});
  if (n == 52) candidates.push_back({'F', 4});
  if (n == 78) candidates.push_back({'E', 6});
  if (n == 133) candidates.push_back({'E', 7});
  if (n == 248) candidates.push_back({'E', 8});
  if (candidates.empty()) {
    out.reason = "dimension " + std::to_string(n) + " matches no simple type";
    return out;
  }
  uint32_t my_cz = generic_centralizer_rank(L, 1234);
  std::vector<std::pair<char, uint32_t>> matches;
  for (auto [t, r] : candidates) {
    if (n > 150) {
      out.reason = "dimension beyond the reference construction cap";
      return out;
    }
    StructureConstants ref = chevalley_algebra(t, r, L.field);
    auto ref_prof = algebra_profile(ref);
    uint32_t ref_cz = generic_centralizer_rank(ref, 1234);
    // the reference may itself have a center in special characteristic; an
    // exact match then fails the profile gate above anyway
    if (ref_prof.center_dim == 0 && ref_prof.derived_dim == ref.dim &&
        ref_prof.killing_rank == prof.killing_rank && ref_cz == my_cz)
      matches.push_back({t, r});
  }
  // A3 = D3 and B2 = C2 coincide; collapse duplicates by invariants already
  if (matches.size() == 1) {
    out.recognized = true;
    out.type = matches[0].first;
    out.rank = matches[0].second;
    return out;
  }
  if (matches.empty())
    out.reason = "no candidate type matches (killing rank " + std::to_string(prof.killing_rank) +
                 ", generic centralizer " + std::to_string(my_cz) + ")";
  else
    out.reason = "invariants collide between candidate types";
  return out;
}

}  // namespace modlie
