#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modlie/rep.hpp"

namespace modlie {

/// Finite presentation: relators as reduced words of signed 1-based
/// generator indices (negative = inverse).
struct FinitePresentation {
  uint32_t generator_count = 0;
  std::vector<std::vector<int32_t>> relators;
};

/// GFPRES v1 text format:
///   GFPRES v1
///   gens m
///   <one relator per line, signed integers>
std::string write_gfpres(const FinitePresentation& P);
FinitePresentation read_gfpres_string(const std::string& text);
FinitePresentation read_gfpres_file(const std::string& path);

/// check each relator acts as the identity on M; returns the index of the
/// first violated relator, or -1
int32_t first_relator_violation(const FinitePresentation& P, const Representation& M);

/// Todd-Coxeter coset enumeration over the subgroup generated by the given
/// words. Returns the coset action of each generator (permutations of
/// 0..n-1, coset 0 = subgroup) or fails with EnumerationOverflow.
struct CosetTable {
  uint32_t cosets = 0;
  std::vector<std::vector<uint32_t>> action;  // per generator, image of each coset
};

CosetTable coset_enumerate(const FinitePresentation& P,
                           const std::vector<std::vector<int32_t>>& subgroup_words,
                           uint32_t max_cosets = 1u << 20);

/// permutation representation of the coset action over a field
Representation coset_representation(const CosetTable& T, FieldPtr f, const std::string& label = "");

/// order of the permutation word in the coset action (for validation)
uint64_t coset_word_order(const CosetTable& T, const std::vector<int32_t>& word);

/// image of a word as a permutation of cosets
std::vector<uint32_t> coset_word_perm(const CosetTable& T, const std::vector<int32_t>& word);

}  // namespace modlie
