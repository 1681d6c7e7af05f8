#pragma once

#include <iosfwd>
#include <string>

#include "modlie/matrix.hpp"

namespace modlie {

// Text formats shared across all tools. Elements of GF(p^k) are written as k
// base-p digits packed into one integer, little-endian in the polynomial
// basis.
//
//   GFMAT v1 p k rows cols
//   [modulus c0 c1 ... ck]
//   <rows lines of cols integers>
//
//   GFREP v1
//   field p k [c0 ... ck]
//   dim d gens m
//   [label <text>]
//   <m matrix bodies, each rows lines of cols integers>
//
//   GFLIE v1
//   field p k [c0 ... ck]
//   dim n
//   <lines "i j m c" for the nonzero c_{ij}^m, 0-based>

std::string write_gfmat(const Matrix& A);
Matrix read_gfmat(std::istream& in);
Matrix read_gfmat_string(const std::string& text);
Matrix read_gfmat_file(const std::string& path);
void write_gfmat_file(const std::string& path, const Matrix& A);

}  // namespace modlie

#include "modlie/rep.hpp"

namespace modlie {

std::string write_gfrep(const Representation& M);
Representation read_gfrep_string(const std::string& text);
Representation read_gfrep_file(const std::string& path);
void write_gfrep_file(const std::string& path, const Representation& M);

}  // namespace modlie
