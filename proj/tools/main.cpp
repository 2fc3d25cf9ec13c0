#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "koszul/runner.hpp"

namespace {

struct Cli {
  koszul::RunConfig cfg;
  std::string field;
  std::string format = "table";
  std::string out_path;
};

void add_common(CLI::App* sub, Cli& c) {
  sub->add_option("file", c.cfg.file, "presentation file")->required();
  sub->add_option("--max-degree", c.cfg.max_degree, "degree cap D (default 8)");
  sub->add_option("--power", c.cfg.power, "power a of the maximal ideal (default 1)");
  sub->add_option("--nmax", c.cfg.n_max, "largest homological degree (default 5)");
  sub->add_option("--field", c.field, "coefficient field override: QQ or GF <p>");
  sub->add_option("--format", c.format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--parallel", c.cfg.parallel, "worker cap for strand computations");
  sub->add_option("--out", c.out_path, "write the document to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "koszul: exact computations with standard graded quadratic algebras --\n"
      "quadratic duals, Koszulness certificates, and minimal resolutions of\n"
      "powers of the homogeneous maximal ideal"};
  app.require_subcommand(1);

  Cli c;
  auto* dual = app.add_subcommand("dual", "print the quadratic dual presentation");
  auto* kc = app.add_subcommand("koszul-check", "certify Koszulness up to the degree cap");
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of m^a, formula and oracle");
  auto* res = app.add_subcommand("resolve", "build and verify the minimal resolution of m^a");
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  for (auto* sub : {dual, kc, betti, res, verify}) add_common(sub, c);
  for (auto* sub : {res, verify})
    sub->add_flag("--allow-non-koszul", c.cfg.allow_non_koszul,
                  "downgrade a failed Koszul certificate to diagnostics");

  CLI11_PARSE(app, argc, argv);

  koszul::Command cmd;
  if (dual->parsed()) cmd = koszul::Command::dual;
  else if (kc->parsed()) cmd = koszul::Command::koszul_check;
  else if (betti->parsed()) cmd = koszul::Command::betti;
  else if (res->parsed()) cmd = koszul::Command::resolve;
  else cmd = koszul::Command::verify;

  c.cfg.json = (c.format == "json");
  if (!c.field.empty()) {
    try {
      c.cfg.field_override = koszul::parse_field_spec(c.field);
    } catch (const koszul::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  if (!c.out_path.empty()) {
    std::ofstream out(c.out_path);
    if (!out) {
      std::cerr << "error: cannot open output file " << c.out_path << "\n";
      return 1;
    }
    return koszul::run_command(cmd, c.cfg, out, std::cerr);
  }
  return koszul::run_command(cmd, c.cfg, std::cout, std::cerr);
}
