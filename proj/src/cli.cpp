#include "excalc/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "excalc/dolbeault.hpp"
#include "excalc/homotopy.hpp"
#include "excalc/parser.hpp"
#include "excalc/printer.hpp"
#include "excalc/selftest.hpp"

namespace excalc {

namespace {

struct GlobalOptions {
  std::string mode = "real";
  int dim = 2;
  std::string base;
  std::string output = "text";
  std::uint64_t seed = 42;
};

SessionConfig make_session(const GlobalOptions& g) {
  SessionConfig cfg;
  cfg.mode = g.mode == "complex" ? Mode::Complex : Mode::Real;
  if (g.dim < 1) throw DomainError("dimension must be at least 1");
  cfg.dim = g.dim;
  if (!g.base.empty()) cfg.base = parse_point(g.base, cfg.mode, cfg.dim);
  cfg.output = g.output == "json" ? SessionConfig::Output::Json : SessionConfig::Output::Text;
  return cfg;
}

std::string read_expr(const std::string& positional, std::istream& in) {
  if (positional != "-") return positional;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit_form(const Form& f, const SessionConfig& cfg, std::ostream& out) {
  if (cfg.output == SessionConfig::Output::Json) {
    out << to_json(f).dump(2) << "\n";
  } else {
    out << to_text(f) << "\n";
  }
}

void emit_decompose(const DecompResult& d, const SessionConfig& cfg, std::ostream& out) {
  if (cfg.output == SessionConfig::Output::Json) {
    nlohmann::json j{{"exact", to_json(d.exact)},
                     {"antiexact", to_json(d.antiexact)},
                     {"constant", to_json(d.constant)}};
    out << j.dump(2) << "\n";
  } else {
    out << "exact: " << d.exact << "\n";
    out << "antiexact: " << d.antiexact << "\n";
    out << "constant: " << d.constant << "\n";
  }
}

void emit_verdict(const OscillatorVerdict& v, const SessionConfig& cfg, std::ostream& out) {
  const char* kind = v.kind == OscillatorVerdict::Kind::Zero ? "zero"
                     : v.kind == OscillatorVerdict::Kind::Eigenvector ? "eigenvector"
                                                                      : "not_eigenvector";
  if (cfg.output == SessionConfig::Output::Json) {
    nlohmann::json j{{"kind", kind}};
    if (v.kind == OscillatorVerdict::Kind::Eigenvector) j["lambda"] = v.lambda;
    if (v.witness) {
      j["best_lambda"] = v.lambda;
      j["residual"] = to_json(*v.witness);
    }
    out << j.dump(2) << "\n";
    return;
  }
  switch (v.kind) {
    case OscillatorVerdict::Kind::Zero: out << "zero\n"; break;
    case OscillatorVerdict::Kind::Eigenvector:
      out << "eigenvector(lambda=" << (v.lambda > 0 ? "+1" : "-1") << ")\n";
      break;
    case OscillatorVerdict::Kind::NotEigenvector:
      out << "not_eigenvector\n";
      out << "residual(lambda=" << (v.lambda > 0 ? "+1" : "-1") << "): " << *v.witness << "\n";
      break;
  }
}

void emit_invariance(const InvarianceResult& r, const SessionConfig& cfg, std::ostream& out) {
  if (cfg.output == SessionConfig::Output::Json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [name, f] : r.terms) terms.push_back({{"label", name}, {"form", to_json(f)}});
    nlohmann::json j{{"terms", std::move(terms)},
                     {"sum", to_json(r.sum)},
                     {"identity_holds", r.holds}};
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [name, f] : r.terms) out << name << ": " << f << "\n";
  out << "sum: " << r.sum << "\n";
  out << "identity: " << (r.holds ? "ok" : "VIOLATED") << "\n";
}

int emit_selftest(const std::vector<CheckResult>& rows, const SelftestOptions& opt,
                  const SessionConfig& cfg, std::ostream& out) {
  int passed = 0;
  for (const auto& r : rows) passed += r.passed ? 1 : 0;
  if (cfg.output == SessionConfig::Output::Json) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row{{"name", r.name}, {"cases", r.cases}, {"passed", r.passed}};
      if (!r.detail.empty()) row["detail"] = r.detail;
      checks.push_back(std::move(row));
    }
    nlohmann::json j{{"seed", opt.seed},
                     {"count", opt.count},
                     {"numeric", opt.numeric},
                     {"checks", std::move(checks)},
                     {"passed", passed},
                     {"total", rows.size()}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      out << (r.passed ? "PASS  " : "FAIL  ") << std::setw(32) << std::left << r.name
          << std::setw(6) << std::right << r.cases << " cases";
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n";
    }
    out << "verify: " << passed << "/" << rows.size() << " identities passed (seed=" << opt.seed
        << ", count=" << opt.count << (opt.numeric ? ", numeric" : "") << ")\n";
  }
  return passed == static_cast<int>(rows.size()) ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact exterior calculus: derivative, homotopy operator, decompositions"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--mode", g.mode, "coordinate mode")->check(CLI::IsMember({"real", "complex"}));
  app.add_option("--dim", g.dim, "ambient dimension (complex: number of z coordinates)");
  app.add_option("--base", g.base, "base point, comma separated (complex entries like 1+2i)");
  app.add_option("--output", g.output, "output flavor")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized suites");

  struct SubSpec {
    std::string name;
    std::string help;
    bool needs_expr;
  };
  const std::vector<SubSpec> specs = {
      {"d", "exterior derivative", true},
      {"h", "homotopy operator", true},
      {"decompose", "exact / antiexact / constant split", true},
      {"classify", "oscillator eigen-classification", true},
      {"potential", "primitive of a closed form", true},
      {"del", "Dolbeault derivative (complex mode)", true},
      {"delbar", "conjugate Dolbeault derivative (complex mode)", true},
      {"hplus", "holomorphic half of the homotopy operator", true},
      {"hminus", "antiholomorphic half of the homotopy operator", true},
      {"invariance", "the eight invariance terms and their sum", true},
      {"eval", "evaluate the form at a point", true},
      {"verify", "run the randomized identity suite", false},
  };
  std::string expr;
  std::string at_point;
  SelftestOptions self;
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->fallthrough();
    if (spec.needs_expr)
      sub->add_option("expr", expr, "form expression ('-' reads stdin)")->required();
    if (spec.name == "eval") sub->add_option("--at", at_point, "evaluation point")->required();
    if (spec.name == "verify") {
      sub->add_flag("--numeric", self.numeric, "include quadrature / finite-difference oracles");
      sub->add_option("--count", self.count, "cases per identity");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "verify") {
      SessionConfig cfg;
      cfg.output = g.output == "json" ? SessionConfig::Output::Json : SessionConfig::Output::Text;
      self.seed = g.seed;
      return emit_selftest(run_selftest(self), self, cfg, out);
    }

    SessionConfig cfg = make_session(g);
    const Form w = parse_form(read_expr(expr, in), cfg);

    if (name == "d") {
      emit_form(ext_d(w), cfg, out);
    } else if (name == "h") {
      emit_form(homotopy_H(w), cfg, out);
    } else if (name == "decompose") {
      emit_decompose(decompose(w), cfg, out);
    } else if (name == "classify") {
      emit_verdict(oscillator_classify(w), cfg, out);
    } else if (name == "potential") {
      emit_form(potential(w), cfg, out);
    } else if (name == "del") {
      emit_form(del(w), cfg, out);
    } else if (name == "delbar") {
      emit_form(delbar(w), cfg, out);
    } else if (name == "hplus") {
      emit_form(h_plus(w), cfg, out);
    } else if (name == "hminus") {
      emit_form(h_minus(w), cfg, out);
    } else if (name == "invariance") {
      emit_invariance(invariance_terms(w), cfg, out);
    } else if (name == "eval") {
      const auto point = parse_point(at_point, cfg.mode, cfg.dim);
      emit_form(evaluate_form(w, point), cfg, out);
    }
    return 0;
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << "\n";
    return 1;
  } catch (const NotClosedError& e) {
    err << "precondition error: " << e.what() << ": d(form) = " << e.residual << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace excalc
