#include "modlie/presentation.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "modlie/util.hpp"

namespace modlie {

std::string write_gfpres(const FinitePresentation& P) {
  std::ostringstream out;
  out << "GFPRES v1\n";
  out << "gens " << P.generator_count << "\n";
  for (const auto& r : P.relators) {
    for (size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
    out << "\n";
  }
  return out.str();
}

FinitePresentation read_gfpres_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || split_ws(line) != std::vector<std::string>{"GFPRES", "v1"})
    fail("ParseError", "bad GFPRES header");
  FinitePresentation P;
  if (!std::getline(in, line)) fail("ParseError", "missing gens line");
  auto toks = split_ws(line);
  if (toks.size() != 2 || toks[0] != "gens") fail("ParseError", "bad gens line");
  P.generator_count = uint32_t(std::stoul(toks[1]));
  while (std::getline(in, line)) {
    auto w = split_ws(line);
    if (w.empty()) continue;
    std::vector<int32_t> rel;
    for (const auto& t : w) {
      int32_t s = int32_t(std::stol(t));
      if (s == 0 || uint32_t(std::abs(s)) > P.generator_count)
        fail("ParseError", "relator letter out of range");
      rel.push_back(s);
    }
    P.relators.push_back(std::move(rel));
  }
  return P;
}

FinitePresentation read_gfpres_file(const std::string& path) {
  return read_gfpres_string(read_file(path));
}

int32_t first_relator_violation(const FinitePresentation& P, const Representation& M) {
  if (P.generator_count != M.gens.size())
    fail("GeneratorCountMismatch", "presentation has " + std::to_string(P.generator_count) +
                                       " generators, module has " + std::to_string(M.gens.size()));
  for (size_t r = 0; r < P.relators.size(); ++r)
    if (!evaluate_word(M, P.relators[r]).is_identity()) return int32_t(r);
  return -1;
}

namespace {

// classic HLT enumeration with coincidence processing
class Enumerator {
public:
  Enumerator(const FinitePresentation& P, const std::vector<std::vector<int32_t>>& subgen,
             uint32_t max_cosets)
      : P_(P), max_(max_cosets), ngens_(P.generator_count) {
    table_.assign(2 * ngens_, {});
    define_coset();  // coset 0 = subgroup
    for (const auto& w : subgen) scan_and_fill(0, w);
    for (uint32_t c = 0; c < live_count_or_cap(); ++c) {
      if (!alive(c)) continue;
      for (const auto& r : P_.relators) {
        scan_and_fill(c, r);
        if (!alive(c)) break;
      }
      // ensure the table row is complete so every coset gets processed
      for (uint32_t g = 0; g < 2 * ngens_ && alive(c); ++g)
        if (entry(c, g) == kNone) {
          uint32_t d = define_coset();
          set(c, g, d);
        }
      process_coincidences();
    }
    compress();
  }

  CosetTable result() const {
    CosetTable T;
    T.cosets = uint32_t(index_of_.size());
    T.action.assign(ngens_, std::vector<uint32_t>(T.cosets));
    for (uint32_t g = 0; g < ngens_; ++g)
      for (uint32_t c = 0; c < T.cosets; ++c) {
        uint32_t raw = entry(live_[c], 2 * g);
        T.action[g][c] = index_of_.at(raw);
      }
    return T;
  }

private:
  static constexpr uint32_t kNone = 0xffffffff;

  uint32_t live_count_or_cap() const { return uint32_t(table_[0].size()); }

  uint32_t define_coset() {
    uint32_t c = uint32_t(table_[0].size());
    if (c >= max_) fail("EnumerationOverflow", "coset limit reached");
    for (auto& col : table_) col.push_back(kNone);
    parent_.push_back(c);
    return c;
  }

  uint32_t find(uint32_t c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }
  bool alive(uint32_t c) { return find(c) == c; }

  static uint32_t col(int32_t signed_gen) {
    return signed_gen > 0 ? 2 * uint32_t(signed_gen - 1) : 2 * uint32_t(-signed_gen - 1) + 1;
  }
  static uint32_t inv_col(uint32_t cc) { return cc ^ 1u; }

  uint32_t entry(uint32_t c, uint32_t cc) const { return table_[cc][c]; }

  void set(uint32_t c, uint32_t cc, uint32_t d) {
    table_[cc][c] = d;
    table_[inv_col(cc)][d] = c;
  }

  void merge(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void process_coincidences() {
    while (!queue_.empty()) {
      uint32_t dead = queue_.back();
      queue_.pop_back();
      uint32_t live = find(dead);
      for (uint32_t cc = 0; cc < 2 * ngens_; ++cc) {
        uint32_t d = table_[cc][dead];
        if (d == kNone) continue;
        table_[cc][dead] = kNone;
        d = find(d);
        uint32_t e = table_[cc][live];
        if (e == kNone) {
          set(live, cc, d);
        } else {
          merge(find(e), d);
        }
      }
    }
  }

  void scan_and_fill(uint32_t start, const std::vector<int32_t>& word) {
    while (true) {
      start = find(start);
      // forward scan
      uint32_t f = start;
      size_t fi = 0;
      while (fi < word.size()) {
        uint32_t nxt = entry(f, col(word[fi]));
        if (nxt == kNone) break;
        f = find(nxt);
        ++fi;
      }
      if (fi == word.size()) {
        merge(f, start);
        process_coincidences();
        return;
      }
      // backward scan
      uint32_t b = start;
      size_t bi = word.size();
      while (bi > fi) {
        uint32_t prv = entry(b, inv_col(col(word[bi - 1])));
        if (prv == kNone) break;
        b = find(prv);
        --bi;
      }
      if (bi == fi) {
        merge(f, b);
        process_coincidences();
        return;
      }
      if (bi == fi + 1) {
        // deduce the single missing entry
        set(f, col(word[fi]), b);
        process_coincidences();
        return;
      }
      // fill one entry and rescan
      uint32_t d = define_coset();
      set(f, col(word[fi]), d);
    }
  }

  void compress() {
    for (uint32_t c = 0; c < table_[0].size(); ++c)
      if (alive(c)) {
        index_of_[c] = uint32_t(live_.size());
        live_.push_back(c);
      }
    // follow unions in entries
    for (auto& colv : table_)
      for (auto& e : colv)
        if (e != kNone) e = find(e);
    for (uint32_t ci : live_)
      for (uint32_t cc = 0; cc < 2 * ngens_; ++cc)
        if (table_[cc][ci] == kNone) fail("InternalError", "incomplete coset table after enumeration");
  }

  const FinitePresentation& P_;
  uint32_t max_, ngens_;
  std::vector<std::vector<uint32_t>> table_;  // 2*gens columns
  std::vector<uint32_t> parent_;
  std::vector<uint32_t> queue_;
  std::vector<uint32_t> live_;
  std::map<uint32_t, uint32_t> index_of_;

  friend class EnumFriend;
};

}  // namespace

CosetTable coset_enumerate(const FinitePresentation& P,
                           const std::vector<std::vector<int32_t>>& subgroup_words,
                           uint32_t max_cosets) {
  Enumerator e(P, subgroup_words, max_cosets);
  return e.result();
}

Representation coset_representation(const CosetTable& T, FieldPtr f, const std::string& label) {
  std::vector<Matrix> gens;
  for (const auto& act : T.action) {
    Matrix g(f, T.cosets, T.cosets);
    for (uint32_t c = 0; c < T.cosets; ++c) g.at(act[c], c) = 1;
    gens.push_back(std::move(g));
  }
  return make_rep(f, std::move(gens), label);
}

std::vector<uint32_t> coset_word_perm(const CosetTable& T, const std::vector<int32_t>& word) {
  std::vector<uint32_t> perm(T.cosets);
  std::iota(perm.begin(), perm.end(), 0);
  for (int32_t s : word) {
    const auto& act = T.action[uint32_t(std::abs(s)) - 1];
    std::vector<uint32_t> nxt(T.cosets);
    if (s > 0) {
      for (uint32_t c = 0; c < T.cosets; ++c) nxt[c] = act[perm[c]];
    } else {
      std::vector<uint32_t> inv(T.cosets);
      for (uint32_t c = 0; c < T.cosets; ++c) inv[act[c]] = c;
      for (uint32_t c = 0; c < T.cosets; ++c) nxt[c] = inv[perm[c]];
    }
    perm = std::move(nxt);
  }
  return perm;
}

uint64_t coset_word_order(const CosetTable& T, const std::vector<int32_t>& word) {
  auto p = coset_word_perm(T, word);
  // lcm of cycle lengths
  std::vector<bool> seen(p.size(), false);
  uint64_t ord = 1;
  for (uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

}  // namespace modlie
