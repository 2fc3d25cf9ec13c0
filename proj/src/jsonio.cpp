#include <json.hpp>

#include "koszul/output.hpp"

namespace koszul {

using json = nlohmann::ordered_json;

namespace {

json relation_terms(const QuadraticPresentation& p, const NCPoly& rel) {
  json terms = json::array();
  for (const auto& [w, c] : rel.terms) {
    json word = json::array();
    for (auto letter : w) word.push_back(p.generators[letter]);
    terms.push_back({{"coeff", c}, {"word", word}});
  }
  return terms;
}

json witness_json(const std::optional<KoszulWitness>& w) {
  if (!w) return nullptr;
  return {{"i", w->i}, {"q", w->q}, {"homology", w->homology}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const DualDoc& d) {
  json j;
  j["command"] = "dual";
  j["algebra_hash"] = d.algebra_hash;
  j["field"] = d.field;
  j["generators"] = d.generators;
  j["dual_generators"] = d.dual.generators;
  json rels = json::array();
  for (const auto& r : d.dual.relations)
    rels.push_back({{"rendered", d.dual.render_poly(r, " ")}, {"terms", relation_terms(d.dual, r)}});
  j["qperp"] = rels;
  return dump(j);
}

std::string to_json(const KoszulDoc& d) {
  json j;
  j["command"] = "koszul-check";
  j["algebra_hash"] = d.algebra_hash;
  j["max_degree"] = d.max_degree;
  j["verdict"] = d.koszul ? "koszul_up_to" : "failed";
  j["up_to"] = d.koszul ? json(d.max_degree) : json(nullptr);
  j["witness"] = witness_json(d.witness);
  return dump(j);
}

std::string to_json(const BettiDoc& d) {
  json j;
  j["command"] = "betti";
  j["algebra_hash"] = d.algebra_hash;
  j["power"] = d.power;
  json entries = json::array();
  for (const auto& e : d.entries)
    entries.push_back({{"n", e.n}, {"j", e.j}, {"beta", e.beta}});
  j["entries"] = entries;
  j["oracle"] = d.oracle;
  j["oracle_agrees"] = d.oracle_agrees;
  j["linear"] = d.linear;
  j["zero_power"] = d.zero_power;
  return dump(j);
}

namespace {

json report_json(const ResolveReport& r) {
  json j;
  j["power"] = r.power;
  j["n_max"] = r.n_max;
  j["max_degree"] = r.D;
  j["zero_power"] = r.zero_power;
  j["koszul_required"] = r.koszul_required;
  j["koszul_ok"] = r.koszul_ok;
  j["koszul_witness"] = witness_json(r.koszul_witness);
  j["ranks"] = r.ranks;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    if (!c.pass) {
      item["n"] = c.n;
      item["q"] = c.q;
      item["got"] = c.got;
      item["want"] = c.want;
    }
    checks.push_back(item);
  }
  j["checks"] = checks;
  j["all_passed"] = r.all_passed();
  return j;
}

}  // namespace

std::string to_json(const ResolveDoc& d) {
  json j;
  j["command"] = "resolve";
  j["algebra_hash"] = d.algebra_hash;
  j["report"] = report_json(d.report);
  return dump(j);
}

std::string to_json(const VerifyDoc& d) {
  json j;
  j["command"] = "verify";
  j["algebra_hash"] = d.algebra_hash;
  j["max_degree"] = d.max_degree;
  j["power"] = d.power;
  j["n_max"] = d.n_max;
  json sections = json::array();
  for (const auto& s : d.sections)
    sections.push_back({{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
  j["sections"] = sections;
  j["all_passed"] = d.all_passed;
  return dump(j);
}

}  // namespace koszul
