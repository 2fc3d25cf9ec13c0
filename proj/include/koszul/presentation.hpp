#ifndef KOSZUL_PRESENTATION_HPP
#define KOSZUL_PRESENTATION_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/fields.hpp"
#include "koszul/words.hpp"

namespace koszul {

// A presentation A = T(V)/Q of a standard graded quadratic algebra:
// generators of V and a list of degree-2 relations spanning Q_2.
// `commutative` is sugar only: when set, the commutators x_j x_i - x_i x_j
// (j > i) are appended to the relation list seen by the algebra builder.
struct QuadraticPresentation {
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::string> generators;
  std::vector<NCPoly> relations;  // as given, degree 2, deduplicated
  bool commutative = false;

  std::uint32_t d() const { return static_cast<std::uint32_t>(generators.size()); }

  // Exact-duplicate relations are dropped; linear dependence among the rest is
  // handled by rank computations downstream.
  void normalize() {
    std::vector<NCPoly> kept;
    for (auto& r : relations) {
      if (r.is_zero()) continue;
      if (r.degree != 2) throw InvariantViolation("presentation relation of degree != 2");
      if (std::find(kept.begin(), kept.end(), r) == kept.end())
        kept.push_back(std::move(r));
    }
    relations = std::move(kept);
  }

  // Relations including the commutators implied by the commutative flag.
  std::vector<NCPoly> expanded_relations() const {
    std::vector<NCPoly> out = relations;
    if (commutative) {
      for (std::uint8_t i = 0; i < d(); ++i)
        for (std::uint8_t j = i + 1; j < d(); ++j) {
          NCPoly c = NCPoly::monomial(Word{j, i}, 1);
          c.add_term(Word{i, j}, -1);
          if (!c.is_zero()) out.push_back(std::move(c));
        }
    }
    return out;
  }

  std::string render_poly(const NCPoly& p, const char* sep = "*") const {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : p.terms) {
      long long a = c;
      if (first) {
        if (a < 0) {
          s += "-";
          a = -a;
        }
      } else {
        s += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      first = false;
      if (a != 1 || w.empty()) s += std::to_string(a);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 || a != 1) s += sep;
        s += generators[w[i]];
      }
    }
    return s;
  }

  // Deterministic rendering; also the hashing key for certificates.
  std::string canonical_string() const {
    std::string s = "field " + field.str() + "\n";
    s += "generators";
    for (const auto& g : generators) s += " " + g;
    s += "\n";
    if (commutative) s += "commutative true\n";
    std::vector<std::string> rels;
    rels.reserve(relations.size());
    for (const auto& r : relations) rels.push_back(render_poly(r));
    std::sort(rels.begin(), rels.end());
    for (const auto& r : rels) s += "relation " + r + "\n";
    return s;
  }

  bool operator==(const QuadraticPresentation& o) const {
    return field == o.field && generators == o.generators &&
           commutative == o.commutative && relations == o.relations;
  }
};

// FNV-1a over the canonical rendering; stable across runs and platforms.
inline std::string presentation_hash(const QuadraticPresentation& p) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : p.canonical_string()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace koszul

#endif  // KOSZUL_PRESENTATION_HPP
