#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primediv {

// Failure kinds surfaced by the library. Each names the violated hypothesis
// or the degenerate case; the CLI maps kinds to exit codes.
enum class Errc {
  NotMonic,
  NotSeparable,
  ZeroAtZero,
  ZeroAtOne,
  BadPrime,
  NotPrime,
  NoEmbedding,
  BadOrder,
  NotCoprime,
  NoRootsOfUnity,
  NoNonUnits,
  OnlyRootsOfUnity,
  OnlyTrivial,
  CertificateMissing,
  NotCyclotomicCase,
  LimitExceeded,
  InvalidArgument,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotMonic: return "NotMonic";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::ZeroAtZero: return "ZeroAtZero";
    case Errc::ZeroAtOne: return "ZeroAtOne";
    case Errc::BadPrime: return "BadPrime";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NoEmbedding: return "NoEmbedding";
    case Errc::BadOrder: return "BadOrder";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NoRootsOfUnity: return "NoRootsOfUnity";
    case Errc::NoNonUnits: return "NoNonUnits";
    case Errc::OnlyRootsOfUnity: return "OnlyRootsOfUnity";
    case Errc::OnlyTrivial: return "OnlyTrivial";
    case Errc::CertificateMissing: return "CertificateMissing";
    case Errc::NotCyclotomicCase: return "NotCyclotomicCase";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Syntax error in a polynomial expression; keeps the byte offset and what was
// expected there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : std::runtime_error("parse error at offset " + std::to_string(offset) +
                           ": expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace primediv
