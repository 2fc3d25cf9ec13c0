#include "koszul/runner.hpp"

#include <cctype>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "koszul/lcomplex.hpp"
#include "koszul/output.hpp"
#include "koszul/parser.hpp"

namespace koszul {

FieldSpec parse_field_spec(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "QQ") return FieldSpec::rationals();
  if (s.rfind("GF", 0) == 0) {
    std::string num;
    for (char c : s.substr(2))
      if (std::isdigit(static_cast<unsigned char>(c))) num += c;
    if (!num.empty()) {
      std::uint64_t p = std::stoull(num);
      if (!is_prime_u64(p)) throw InputError("field order " + num + " is not prime");
      return FieldSpec::prime(p);
    }
  }
  throw InputError("unrecognized field '" + text + "' (use QQ or GF <p>)");
}

namespace {

template <class F>
struct Built {
  GradedAlgebra<F> A;
  DualAlgebra<F> dual;
  Built(const QuadraticPresentation& pres, std::uint32_t D, const F& field)
      : A(pres, D, field), dual(dual_presentation(pres, field), D, field) {}
};

template <class F>
BettiDoc betti_doc(const Built<F>& b, const std::string& hash, std::uint32_t a,
                   std::uint32_t n_max, std::uint32_t D) {
  BettiDoc doc;
  doc.algebra_hash = hash;
  doc.power = a;
  doc.n_max = n_max;
  if (a > D) throw DegreeCapExceeded(a, D);
  doc.zero_power = (b.A.dim(a) == 0);
  if (!doc.zero_power && a + n_max + 1 > D) throw DegreeCapExceeded(a + n_max + 1, D);
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    std::int64_t beta = doc.zero_power ? 0 : betti_formula(b.A, b.dual, n, a);
    std::int64_t oracle = static_cast<std::int64_t>(betti_oracle(b.A, b.dual, n, a));
    doc.entries.push_back({n, n + a, beta});
    doc.oracle.push_back(oracle);
    if (beta != oracle) doc.oracle_agrees = false;
  }
  return doc;
}

template <class F>
int run_typed(Command cmd, QuadraticPresentation pres, const RunConfig& cfg, const F& field,
              std::ostream& out) {
  const std::string hash = presentation_hash(pres);
  const std::uint32_t D = cfg.max_degree;

  switch (cmd) {
    case Command::dual: {
      DualDoc doc{hash, field.spec().str(), pres.generators, dual_presentation(pres, field)};
      out << (cfg.json ? to_json(doc) : to_text(doc));
      return 0;
    }

    case Command::koszul_check: {
      Built<F> b(pres, D, field);
      auto cert = koszul_check(b.A, b.dual, D);
      KoszulDoc doc{hash, D, cert.koszul, cert.witness};
      out << (cfg.json ? to_json(doc) : to_text(doc));
      return cert.koszul ? 0 : 2;
    }

    case Command::betti: {
      Built<F> b(pres, D, field);
      BettiDoc doc = betti_doc(b, hash, cfg.power, cfg.n_max, D);
      out << (cfg.json ? to_json(doc) : to_text(doc));
      return doc.oracle_agrees ? 0 : 4;
    }

    case Command::resolve: {
      Built<F> b(pres, D, field);
      auto R = resolve(b.A, b.dual, cfg.power, cfg.n_max, cfg.allow_non_koszul);
      ResolveDoc doc{hash, R.report};
      out << (cfg.json ? to_json(doc) : to_text(doc));
      return doc.report.all_passed() ? 0 : 4;
    }

    case Command::verify: {
      Built<F> b(pres, D, field);
      VerifyDoc doc;
      doc.algebra_hash = hash;
      doc.max_degree = D;
      doc.power = cfg.power;
      doc.n_max = cfg.n_max;

      auto cert = koszul_check(b.A, b.dual, D);
      doc.sections.push_back({"koszul_certificate", cert.koszul,
                              cert.koszul ? "koszul_up_to(" + std::to_string(D) + ")"
                                          : "failed"});
      doc.sections.push_back({"double_dual", double_dual_check(pres, field), ""});

      bool koszul_gate = cert.koszul || cfg.allow_non_koszul;
      for (std::uint32_t a = 1; a <= cfg.power; ++a) {
        const std::string suffix = " (a = " + std::to_string(a) + ")";
        bool zero_power = a <= D && b.A.dim(a) == 0;
        BettiDoc bd = betti_doc(b, hash, a, cfg.n_max, D);
        doc.sections.push_back({"betti_formula_vs_oracle" + suffix, bd.oracle_agrees, ""});

        bool poincare_ok = true;
        if (!zero_power) {
          auto S = poincare_coeffs(b.A, b.dual, a, cfg.n_max);
          for (std::uint32_t n = 0; n <= cfg.n_max; ++n)
            if (S.betti[n] != bd.entries[n].beta) poincare_ok = false;
        }
        doc.sections.push_back(
            {"poincare_matches_betti" + suffix, poincare_ok, zero_power ? "m^a = 0" : ""});

        if (koszul_gate) {
          auto R = resolve(b.A, b.dual, a, cfg.n_max, cfg.allow_non_koszul,
                           kStandardConvention, &cert);
          doc.sections.push_back({"resolution_report" + suffix, R.report.all_passed(), ""});
        }
      }

      doc.all_passed = true;
      for (const auto& s : doc.sections) doc.all_passed &= s.pass;
      out << (cfg.json ? to_json(doc) : to_text(doc));
      if (!cert.koszul && !cfg.allow_non_koszul) return 2;
      return doc.all_passed ? 0 : 4;
    }
  }
  return 1;
}

}  // namespace

int run_command(Command cmd, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
#ifdef _OPENMP
    if (cfg.parallel > 0) omp_set_num_threads(cfg.parallel);
#endif
    QuadraticPresentation pres = parse_presentation_file(cfg.file);
    if (cfg.field_override) pres.field = *cfg.field_override;
    if (pres.field.kind == FieldSpec::Kind::rationals)
      return run_typed(cmd, std::move(pres), cfg, Rationals{}, out);
    return run_typed(cmd, std::move(pres), cfg, PrimeField(pres.field.p), out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotKoszul& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace koszul
