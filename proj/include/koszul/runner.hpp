#ifndef KOSZUL_RUNNER_HPP
#define KOSZUL_RUNNER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "koszul/fields.hpp"

namespace koszul {

// Exit codes shared by every command:
//   0 success, 1 input error, 2 Koszulness required but certification failed,
//   3 degree/size cap insufficient, 4 invariant violation.
enum class Command { dual, koszul_check, betti, resolve, verify };

struct RunConfig {
  std::string file;
  std::uint32_t max_degree = 8;
  std::uint32_t power = 1;
  std::uint32_t n_max = 5;
  std::optional<FieldSpec> field_override;
  bool json = false;
  int parallel = 0;  // 0 = library default
  bool allow_non_koszul = false;
};

FieldSpec parse_field_spec(const std::string& text);

int run_command(Command cmd, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace koszul

#endif  // KOSZUL_RUNNER_HPP
