#ifndef KOSZUL_OUTPUT_HPP
#define KOSZUL_OUTPUT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszul/lcomplex.hpp"
#include "koszul/presentation.hpp"

namespace koszul {

// Field-independent documents emitted by the commands; each has a JSON form
// (validating against the schemas under docs/schemas/) and an aligned-text
// form. JSON rendering is deterministic: fixed key order, no timestamps.

struct DualDoc {
  std::string algebra_hash;
  std::string field;
  std::vector<std::string> generators;
  QuadraticPresentation dual;  // starred generators; relations = echelon span of Q-perp
};

struct KoszulDoc {
  std::string algebra_hash;
  std::uint32_t max_degree = 0;
  bool koszul = false;
  std::optional<KoszulWitness> witness;
};

struct BettiEntry {
  std::uint32_t n, j;
  std::int64_t beta;
};

struct BettiDoc {
  std::string algebra_hash;
  std::uint32_t power = 1;
  std::uint32_t n_max = 0;
  std::vector<BettiEntry> entries;   // beta from the closed formula
  std::vector<std::int64_t> oracle;  // kernel-rank oracle, same n range
  bool oracle_agrees = true;
  bool linear = true;
  bool zero_power = false;
};

struct ResolveDoc {
  std::string algebra_hash;
  ResolveReport report;
};

struct VerifySection {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyDoc {
  std::string algebra_hash;
  std::uint32_t max_degree = 0, power = 1, n_max = 0;
  std::vector<VerifySection> sections;
  bool all_passed = false;
};

std::string to_json(const DualDoc&);
std::string to_json(const KoszulDoc&);
std::string to_json(const BettiDoc&);
std::string to_json(const ResolveDoc&);
std::string to_json(const VerifyDoc&);

std::string to_text(const DualDoc&);
std::string to_text(const KoszulDoc&);
std::string to_text(const BettiDoc&);
std::string to_text(const ResolveDoc&);
std::string to_text(const VerifyDoc&);

}  // namespace koszul

#endif  // KOSZUL_OUTPUT_HPP
