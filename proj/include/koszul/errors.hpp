#ifndef KOSZUL_ERRORS_HPP
#define KOSZUL_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace koszul {

// Base class for all engine errors. Subclasses map onto CLI exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input-side failures: bad files, bad syntax, bad presentations. Exit code 1.
struct InputError : Error {
  using Error::Error;
};

struct ParseError : InputError {
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : InputError("parse error at " + std::to_string(line) + ":" +
                   std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  std::size_t line, col;
};

struct NonQuadraticRelation : InputError {
  NonQuadraticRelation(const std::string& term, std::size_t line)
      : InputError("relation term '" + term + "' on line " +
                   std::to_string(line) + " does not have total degree 2"),
        term(term),
        line(line) {}
  std::string term;
  std::size_t line;
};

struct UnknownGenerator : InputError {
  UnknownGenerator(const std::string& name, std::size_t line)
      : InputError("unknown generator '" + name + "' on line " +
                   std::to_string(line)),
        name(name),
        line(line) {}
  std::string name;
  std::size_t line;
};

// A computation was asked for data beyond the configured degree cap. Exit 3.
struct DegreeCapExceeded : Error {
  DegreeCapExceeded(std::uint32_t wanted, std::uint32_t cap)
      : Error("degree " + std::to_string(wanted) +
              " exceeds the configured cap D = " + std::to_string(cap)),
        wanted(wanted),
        cap(cap) {}
  std::uint32_t wanted, cap;
};

// d^n grew past the per-degree basis size cap. Exit 3.
struct SizeCapExceeded : Error {
  SizeCapExceeded(std::uint32_t d, std::uint32_t n, std::uint64_t cap)
      : Error("word basis at degree " + std::to_string(n) + " has " +
              std::to_string(d) + "^" + std::to_string(n) +
              " elements, past the size cap " + std::to_string(cap)) {}
};

// Koszulness was required (resolve without override) but certification failed.
// Exit 2.
struct NotKoszul : Error {
  using Error::Error;
};

// An internal identity that must hold failed: formula vs oracle mismatch,
// a differential not composing to zero, a solve that had to succeed failing.
// Exit 4.
struct InvariantViolation : Error {
  using Error::Error;
};

struct SignRuleViolation : InvariantViolation {
  SignRuleViolation(std::uint32_t n, std::uint32_t q)
      : InvariantViolation("total differential does not square to zero at "
                           "homological degree " +
                           std::to_string(n) + ", strand " + std::to_string(q)),
        n(n),
        q(q) {}
  std::uint32_t n, q;
};

}  // namespace koszul

#endif  // KOSZUL_ERRORS_HPP
