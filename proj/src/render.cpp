#include <iomanip>
#include <sstream>

#include "koszul/output.hpp"

namespace koszul {

namespace {

std::string pass_str(bool b) { return b ? "pass" : "FAIL"; }

}  // namespace

std::string to_text(const DualDoc& d) {
  std::ostringstream os;
  os << "quadratic dual over " << d.field << "  [" << d.algebra_hash << "]\n";
  os << "dual generators:";
  for (const auto& g : d.dual.generators) os << " " << g;
  os << "\nQ-perp (echelon spanning set):\n";
  for (const auto& r : d.dual.relations) os << "  " << d.dual.render_poly(r, " ") << "\n";
  return os.str();
}

std::string to_text(const KoszulDoc& d) {
  std::ostringstream os;
  os << "koszul-check up to degree " << d.max_degree << "  [" << d.algebra_hash << "]\n";
  if (d.koszul) {
    os << "verdict: koszul_up_to(" << d.max_degree << ")\n";
  } else {
    os << "verdict: failed\n";
    if (d.witness)
      os << "witness: homological degree " << d.witness->i << ", strand " << d.witness->q
         << ", homology dimension " << d.witness->homology << "\n";
  }
  return os.str();
}

std::string to_text(const BettiDoc& d) {
  std::ostringstream os;
  os << "graded betti numbers of m^" << d.power << "  [" << d.algebra_hash << "]\n";
  if (d.zero_power) os << "note: m^" << d.power << " = 0\n";
  os << std::setw(4) << "n" << std::setw(6) << "j" << std::setw(12) << "formula"
     << std::setw(12) << "oracle" << "\n";
  for (std::size_t t = 0; t < d.entries.size(); ++t) {
    const auto& e = d.entries[t];
    os << std::setw(4) << e.n << std::setw(6) << e.j << std::setw(12) << e.beta
       << std::setw(12) << d.oracle[t];
    if (e.beta != d.oracle[t]) os << "   <- disagree";
    os << "\n";
  }
  os << (d.oracle_agrees ? "formula and oracle agree" : "FORMULA/ORACLE DISAGREEMENT") << "\n";
  return os.str();
}

std::string to_text(const ResolveDoc& d) {
  std::ostringstream os;
  const auto& r = d.report;
  os << "minimal resolution of m^" << r.power << " up to homological degree " << r.n_max
     << " (cap " << r.D << ")  [" << d.algebra_hash << "]\n";
  if (r.zero_power) os << "note: m^" << r.power << " = 0; the zero complex resolves it\n";
  if (!r.koszul_required)
    os << "koszul certification " << (r.koszul_ok ? "passed" : "FAILED (diagnostic run)") << "\n";
  os << "ranks:";
  for (auto v : r.ranks) os << " " << v;
  os << "\nchecks:\n";
  for (const auto& c : r.checks) {
    os << "  " << std::left << std::setw(30) << c.name << std::right << pass_str(c.pass);
    if (!c.pass) os << "   at n=" << c.n << " q=" << c.q << " got=" << c.got << " want=" << c.want;
    os << "\n";
  }
  os << (r.all_passed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return os.str();
}

std::string to_text(const VerifyDoc& d) {
  std::ostringstream os;
  os << "verification of [" << d.algebra_hash << "] with D=" << d.max_degree
     << " a<=" << d.power << " n<=" << d.n_max << "\n";
  for (const auto& s : d.sections) {
    os << "  " << std::left << std::setw(34) << s.name << std::right << pass_str(s.pass);
    if (!s.detail.empty()) os << "   " << s.detail;
    os << "\n";
  }
  os << (d.all_passed ? "all sections passed" : "SOME SECTIONS FAILED") << "\n";
  return os.str();
}

}  // namespace koszul
