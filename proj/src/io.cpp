#include "modlie/io.hpp"

#include <sstream>

#include "modlie/util.hpp"

namespace modlie {

std::string write_gfmat(const Matrix& A) {
  const Field& F = *A.field();
  std::ostringstream out;
  out << "GFMAT v1 " << F.p() << " " << F.k() << " " << A.rows() << " " << A.cols() << "\n";
  if (F.k() > 1 || F.modulus() != default_modulus(F.p(), F.k())) {
    out << "modulus";
    for (uint32_t c : F.modulus()) out << " " << c;
    out << "\n";
  }
  for (uint32_t i = 0; i < A.rows(); ++i) {
    for (uint32_t j = 0; j < A.cols(); ++j) out << (j ? " " : "") << A.at(i, j);
    out << "\n";
  }
  return out.str();
}

Matrix read_gfmat(std::istream& in) {
  std::string magic, ver;
  uint32_t p, k, rows, cols;
  if (!(in >> magic >> ver >> p >> k >> rows >> cols) || magic != "GFMAT" || ver != "v1")
    fail("ParseError", "bad GFMAT header");
  FieldSpec spec{p, k, {}};
  // optional modulus line
  std::streampos pos = in.tellg();
  std::string word;
  if (in >> word) {
    if (word == "modulus") {
      spec.modulus.resize(k + 1);
      for (auto& c : spec.modulus)
        if (!(in >> c)) fail("ParseError", "bad modulus line");
    } else {
      in.seekg(pos);
    }
  }
  auto f = Field::get(spec);
  Matrix A(f, rows, cols);
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t j = 0; j < cols; ++j) {
      uint64_t v;
      if (!(in >> v)) fail("ParseError", "GFMAT body truncated");
      if (v >= f->q()) fail("ParseError", "entry out of field range");
      A.at(i, j) = Fel(v);
    }
  return A;
}

Matrix read_gfmat_string(const std::string& text) {
  std::istringstream in(text);
  return read_gfmat(in);
}

Matrix read_gfmat_file(const std::string& path) {
  std::istringstream in(read_file(path));
  try {
    return read_gfmat(in);
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

void write_gfmat_file(const std::string& path, const Matrix& A) { write_file(path, write_gfmat(A)); }

std::string write_gfrep(const Representation& M) {
  const Field& F = M.F();
  std::ostringstream out;
  out << "GFREP v1\n";
  out << "field " << F.p() << " " << F.k();
  if (F.k() > 1)
    for (uint32_t c : F.modulus()) out << " " << c;
  out << "\n";
  out << "dim " << M.dim << " gens " << M.gens.size() << "\n";
  if (!M.label.empty()) out << "label " << M.label << "\n";
  for (const auto& g : M.gens)
    for (uint32_t i = 0; i < M.dim; ++i) {
      for (uint32_t j = 0; j < M.dim; ++j) out << (j ? " " : "") << g.at(i, j);
      out << "\n";
    }
  return out.str();
}

Representation read_gfrep_string(const std::string& text) {
  std::istringstream in(text);
  std::string magic, ver, kw;
  if (!(in >> magic >> ver) || magic != "GFREP" || ver != "v1") fail("ParseError", "bad GFREP header");
  uint32_t p, k;
  if (!(in >> kw >> p >> k) || kw != "field") fail("ParseError", "bad GFREP field line");
  FieldSpec spec{p, k, {}};
  if (k > 1) {
    spec.modulus.resize(k + 1);
    for (auto& c : spec.modulus)
      if (!(in >> c)) fail("ParseError", "bad GFREP modulus");
  }
  auto f = Field::get(spec);
  uint32_t dim, gens;
  std::string kw2;
  if (!(in >> kw >> dim >> kw2 >> gens) || kw != "dim" || kw2 != "gens")
    fail("ParseError", "bad GFREP dim line");
  std::string label;
  std::streampos pos = in.tellg();
  std::string word;
  if (in >> word && word == "label") {
    std::getline(in, label);
    while (!label.empty() && label.front() == ' ') label.erase(label.begin());
  } else {
    in.clear();
    in.seekg(pos);
  }
  std::vector<Matrix> mats;
  for (uint32_t t = 0; t < gens; ++t) {
    Matrix g(f, dim, dim);
    for (uint32_t i = 0; i < dim; ++i)
      for (uint32_t j = 0; j < dim; ++j) {
        uint64_t v;
        if (!(in >> v)) fail("ParseError", "GFREP body truncated");
        if (v >= f->q()) fail("ParseError", "entry out of field range");
        g.at(i, j) = Fel(v);
      }
    mats.push_back(std::move(g));
  }
  return make_rep(f, std::move(mats), label);
}

Representation read_gfrep_file(const std::string& path) {
  try {
    return read_gfrep_string(read_file(path));
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

void write_gfrep_file(const std::string& path, const Representation& M) {
  write_file(path, write_gfrep(M));
}

}  // namespace modlie
