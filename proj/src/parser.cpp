#include "koszul/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

struct LineLexer {
  const std::string& s;
  std::size_t line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  std::size_t col() const { return pos + 1; }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
  bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !is_ident_start(s[pos]))
      throw ParseError(line, col(), "expected identifier");
    std::size_t start = pos;
    while (pos < s.size() && is_ident(s[pos])) ++pos;
    return s.substr(start, pos - start);
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(line, col(), "expected integer");
    return std::stoll(s.substr(start, pos - start));
  }
};

// term := factor ('*' factor)*, factor := integer | generator
// Returns (coefficient, word); degree enforcement happens at the caller so
// the error can name the whole term.
struct Term {
  long long coeff;
  Word word;
  std::string text;
};

Term parse_term(LineLexer& lx, const std::unordered_map<std::string, std::uint8_t>& gens) {
  Term t{1, {}, {}};
  std::size_t start = lx.pos;
  for (;;) {
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff *= lx.integer();
    } else if (lx.is_ident_start(c)) {
      std::size_t at = lx.col();
      std::string name = lx.ident();
      auto it = gens.find(name);
      if (it == gens.end()) throw UnknownGenerator(name, lx.line);
      (void)at;
      t.word.push_back(it->second);
    } else {
      throw ParseError(lx.line, lx.col(), "expected generator or integer");
    }
    if (lx.peek() == '*') {
      lx.take();
      continue;
    }
    break;
  }
  std::size_t end = lx.pos;
  t.text = lx.s.substr(start, end - start);
  // trim copied whitespace
  while (!t.text.empty() && (t.text.front() == ' ' || t.text.front() == '\t')) t.text.erase(t.text.begin());
  while (!t.text.empty() && (t.text.back() == ' ' || t.text.back() == '\t')) t.text.pop_back();
  return t;
}

NCPoly parse_poly(LineLexer& lx, const std::unordered_map<std::string, std::uint8_t>& gens) {
  NCPoly p;
  p.degree = 2;
  long long sign = 1;
  if (lx.peek() == '-') {
    lx.take();
    sign = -1;
  } else if (lx.peek() == '+') {
    lx.take();
  }
  for (;;) {
    Term t = parse_term(lx, gens);
    if (t.word.size() != 2) throw NonQuadraticRelation(t.text, lx.line);
    p.add_term(std::move(t.word), sign * t.coeff);
    if (lx.done()) break;
    char c = lx.take();
    if (c == '+')
      sign = 1;
    else if (c == '-')
      sign = -1;
    else
      throw ParseError(lx.line, lx.pos, "expected '+' or '-'");
  }
  return p;
}

FieldSpec parse_field(LineLexer& lx) {
  std::string kind = lx.ident();
  if (kind == "QQ") {
    if (!lx.done()) throw ParseError(lx.line, lx.col(), "trailing input after field");
    return FieldSpec::rationals();
  }
  if (kind == "GF") {
    long long p = lx.integer();
    if (!lx.done()) throw ParseError(lx.line, lx.col(), "trailing input after field");
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
      throw ParseError(lx.line, 1, "GF order must be a prime");
    return FieldSpec::prime(static_cast<std::uint64_t>(p));
  }
  throw ParseError(lx.line, 1, "field must be QQ or GF <p>");
}

}  // namespace

QuadraticPresentation parse_presentation(const std::string& text) {
  QuadraticPresentation pres;
  std::unordered_map<std::string, std::uint8_t> gens;
  bool saw_generators = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  struct RelLine {
    std::size_t line;
    std::string text;
    std::size_t pos;
  };
  std::vector<RelLine> relation_lines;

  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    LineLexer lx{raw, lineno};
    if (lx.done()) continue;
    std::string key = lx.ident();
    if (key == "field") {
      pres.field = parse_field(lx);
    } else if (key == "generators") {
      if (saw_generators) throw ParseError(lineno, 1, "duplicate generators line");
      saw_generators = true;
      while (!lx.done()) {
        std::string name = lx.ident();
        if (gens.count(name)) throw ParseError(lineno, lx.col(), "duplicate generator '" + name + "'");
        if (gens.size() >= 255) throw ParseError(lineno, lx.col(), "too many generators");
        gens[name] = static_cast<std::uint8_t>(pres.generators.size());
        pres.generators.push_back(name);
      }
      if (pres.generators.empty()) throw ParseError(lineno, 1, "generators line is empty");
    } else if (key == "commutative") {
      std::string v = lx.ident();
      if (v == "true")
        pres.commutative = true;
      else if (v == "false")
        pres.commutative = false;
      else
        throw ParseError(lineno, lx.col(), "commutative must be true or false");
      if (!lx.done()) throw ParseError(lineno, lx.col(), "trailing input");
    } else if (key == "relation") {
      // parsed after the generator table is complete
      relation_lines.push_back({lineno, raw, lx.pos});
    } else {
      throw ParseError(lineno, 1, "unknown key '" + key + "'");
    }
  }
  if (!saw_generators) throw ParseError(lineno, 1, "missing generators line");

  for (auto& rl : relation_lines) {
    LineLexer lx{rl.text, rl.line};
    lx.pos = rl.pos;
    if (lx.done()) throw ParseError(rl.line, lx.col(), "empty relation");
    pres.relations.push_back(parse_poly(lx, gens));
  }
  pres.normalize();
  return pres;
}

QuadraticPresentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string render_presentation(const QuadraticPresentation& p) {
  std::string s = "field " + p.field.str() + "\n";
  s += "generators";
  for (const auto& g : p.generators) s += " " + g;
  s += "\n";
  if (p.commutative) s += "commutative true\n";
  for (const auto& r : p.relations) s += "relation " + p.render_poly(r) + "\n";
  return s;
}

}  // namespace koszul
