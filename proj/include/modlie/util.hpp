#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modlie {

/// Typed error with a stable machine-readable code (FieldMismatch, NotNilpotent, ...).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

/// Deterministic splitmix64 stream; every randomized search in the toolkit
/// draws from one of these with a fixed seed so runs are reproducible.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

private:
  uint64_t state_;
};

/// SHA-256 of a byte string, hex-encoded. Used for report input digests.
std::string sha256_hex(const std::string& data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

std::vector<std::string> split_ws(const std::string& line);

}  // namespace modlie
