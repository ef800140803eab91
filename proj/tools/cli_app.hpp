#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superweyl/superweyl.hpp"

namespace superweyl::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

/// Parsed command line; parameter strings stay raw until the command runs.
struct RunConfig {
  std::string alpha = "formal";
  std::string h = "formal";
  std::string a;
  std::string b;
  std::string lambda = "formal";
  std::string sigma = "formal";
  int tau_cutoff = Symbol::kDefaultCutoff;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "text";
  std::string map = "gamma";
  int limit = 1;
  int contract = 0;
  std::vector<std::string> pair;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Scalar parse_parameter(const std::string& text, Param formal) {
  if (text == "formal") return Scalar::param(formal);
  try {
    Scalar v = parse_scalar(text);
    if (!v.is_constant()) throw UsageError("parameter value '" + text + "' must be a number or 'formal'");
    return v;
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

inline GammaParams parse_sigma(const std::string& text) {
  if (text == "formal") return GammaParams::formal();
  std::vector<Scalar> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(parse_parameter(item, Param::sigma1));
  if (parts.size() != 3) throw UsageError("--sigma takes three comma-separated numbers, e.g. 2,-3,1");
  return {parts[0], parts[1], parts[2]};
}

inline std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("SUPERWEYL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("SUPERWEYL_SEED must be a nonnegative integer, got '") + env + "'");
    }
  }
  return 1;
}

inline std::string report_text(const Report& r) {
  std::string out = "theorem " + r.theorem + ": " + r.status() + " (" + std::to_string(r.pairs_checked) + " checks";
  if (!r.cutoffs.empty()) {
    out += ", cutoffs";
    for (int c : r.cutoffs) out += " " + std::to_string(c);
  }
  out += ")\n";
  for (const auto& e : r.errata) out += "erratum: " + e + "\n";
  for (const auto& f : r.failures) out += "failure: " + f + "\n";
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  return out;
}

inline Report run_verify(const std::string& which, const RunConfig& cfg) {
  if (which == "prop21") return verify_prop21(parse_parameter(cfg.alpha, Param::alpha));
  if (which == "thm31") {
    const Scalar alpha = parse_parameter(cfg.alpha, Param::alpha);
    Report r = verify_thm31_symbols(alpha);
    r.merge(verify_thm31_matrices(alpha));
    return r;
  }
  if (which == "thm42") {
    if (cfg.tau_cutoff > -6) throw UsageError("--tau-cutoff must be at most -6");
    const std::vector<int> cutoffs{cfg.tau_cutoff, cfg.tau_cutoff - 4};
    if (cfg.a.empty() != cfg.b.empty()) throw UsageError("give both --a and --b, or neither");
    if (cfg.a.empty()) return verify_thm42_seeded(resolve_seed(cfg), 5, cutoffs);
    const Scalar a = parse_parameter(cfg.a, Param::a);
    const Scalar b = parse_parameter(cfg.b, Param::b);
    if (!a.is_constant() || !b.is_constant()) throw UsageError("verify thm42 needs numeric --a and --b");
    return verify_thm42(a, b, cutoffs);
  }
  if (which == "thm44") {
    const Scalar lambda = parse_parameter(cfg.lambda, Param::lambda);
    const Scalar a = parse_parameter(cfg.a.empty() ? "formal" : cfg.a, Param::a);
    const Scalar b = parse_parameter(cfg.b.empty() ? "formal" : cfg.b, Param::b);
    check_theta_parameters(lambda, a, b);
    return verify_thm44(lambda, a, b, resolve_seed(cfg));
  }
  if (which == "cocycle") return verify_cocycle();
  if (which == "jacobi") return verify_jacobi(parse_sigma(cfg.sigma));
  if (which == "contraction") return verify_contraction();
  throw UsageError("unknown verification '" + which + "'");
}

/// Bracket of two named generators, written in the generator basis.
inline std::string run_bracket(const RunConfig& cfg) {
  if (cfg.pair.size() != 2) throw UsageError("bracket takes exactly two generator names");
  const auto index = [](const SuperLieAlgebra& L, const std::string& name) { return L.index_of(name); };
  if (cfg.map == "rho_alpha" || cfg.map == "rho_alpha_h") {
    const bool deformed = cfg.map == "rho_alpha_h";
    const Scalar alpha = parse_parameter(cfg.alpha, Param::alpha);
    const SuperLieAlgebra G = build_gamma(GammaParams::for_alpha(alpha));
    const int x = index(G, cfg.pair[0]);
    const int y = index(G, cfg.pair[1]);
    const auto images = deformed ? rho_alpha_h_images(G, DOrdering::eta_first, alpha) : rho_alpha_images(G, alpha);
    const SuperSymbol value = deformed ? super_bracket_h(images[x], images[y]) : super_poisson(images[x], images[y]);
    const auto coords = express_in_images(images, value);
    if (!coords) return value.to_string();
    LieVector v = *coords;
    if (deformed && cfg.h != "formal") {
      const Scalar h = parse_parameter(cfg.h, Param::h);
      LieVector special;
      for (const auto& [k, c] : v.terms()) special.add(k, c.substitute(Param::h, h.constant_value()));
      v = special;
    }
    return G.format(v);
  }
  if (cfg.map == "gamma" || cfg.map == "pslhat" || cfg.map == "contraction") {
    SuperLieAlgebra L = build_psl22_hat();
    if (cfg.map == "gamma") L = cfg.sigma == "formal" ? build_gamma(GammaParams::for_alpha(parse_parameter(cfg.alpha, Param::alpha)))
                                                    : build_gamma(parse_sigma(cfg.sigma));
    if (cfg.map == "contraction") {
      if (cfg.limit != 1 && cfg.limit != -1) throw UsageError("--limit must be 1 or -1");
      L = contract_gamma(cfg.limit == 1 ? ContractionDirection::to_plus_one : ContractionDirection::to_minus_one);
    }
    return L.format(L.bracket(index(L, cfg.pair[0]), index(L, cfg.pair[1])));
  }
  throw UsageError("unknown --map '" + cfg.map + "'; expected rho_alpha, rho_alpha_h, gamma, pslhat or contraction");
}

inline SuperLieAlgebra export_target(const std::string& target, const RunConfig& cfg) {
  if (target == "pslhat") return build_psl22_hat();
  if (cfg.contract != 0) {
    if (cfg.contract != 1 && cfg.contract != -1) throw UsageError("--contract must be 1 or -1");
    return contract_gamma(cfg.contract == 1 ? ContractionDirection::to_plus_one : ContractionDirection::to_minus_one);
  }
  if (cfg.sigma != "formal") return build_gamma(parse_sigma(cfg.sigma));
  return build_gamma(GammaParams::for_alpha(parse_parameter(cfg.alpha, Param::alpha)));
}

inline void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("cannot write to '" + cfg.out + "'");
  file << text;
}

/// Runs one command; output goes to `out` (or --out), diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for the superconformal family Gamma(sigma1, sigma2, sigma3) and its realizations", "superweyl"};
  app.require_subcommand(1);
  // -h is the deformation parameter, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  RunConfig cfg;

  const auto add_output = [&cfg](CLI::App* cmd) {
    cmd->add_option("--out", cfg.out, "Write output to this file");
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--seed", cfg.seed, "Seed for sampled points (falls back to SUPERWEYL_SEED, then 1)");
  };

  CLI::App* verify = app.add_subcommand("verify", "Run a verification");
  verify->require_subcommand(1);
  std::string which;
  const auto add_verify = [&](const std::string& name, const std::string& help) {
    CLI::App* cmd = verify->add_subcommand(name, help);
    add_output(cmd);
    cmd->callback([&which, name] { which = name; });
    return cmd;
  };
  add_verify("prop21", "Embedding into super-symbols under the Poisson bracket")->add_option("--alpha", cfg.alpha, "alpha or 'formal'");
  add_verify("thm31", "Deformed embedding, h -> 0 limit and the matrix realization")
      ->add_option("--alpha", cfg.alpha, "alpha or 'formal'");
  CLI::App* thm42 = add_verify("thm42", "Pseudodifferential realization of the contracted algebra");
  thm42->add_option("--a", cfg.a, "a (default: five seeded points)");
  thm42->add_option("--b", cfg.b, "b");
  thm42->add_option("--tau-cutoff", cfg.tau_cutoff, "Lowest tau degree kept; also rerun four lower");
  CLI::App* thm44 = add_verify("thm44", "Irreducible (2|2) representation of the central extension");
  thm44->add_option("--lambda", cfg.lambda, "lambda or 'formal'");
  thm44->add_option("--a", cfg.a, "a or 'formal'");
  thm44->add_option("--b", cfg.b, "b or 'formal'");
  add_verify("cocycle", "Cocycle on psl(2|2) and its central extension");
  add_verify("jacobi", "Jacobi identity for Gamma(sigma)")->add_option("--sigma", cfg.sigma, "sigma1,sigma2,sigma3 or 'formal'");
  add_verify("contraction", "Contractions at alpha -> 1 and alpha -> -1");

  CLI::App* bracket = app.add_subcommand("bracket", "Bracket of two generators");
  add_output(bracket);
  bracket->add_option("--map", cfg.map, "rho_alpha, rho_alpha_h, gamma, pslhat or contraction");
  bracket->add_option("--alpha", cfg.alpha, "alpha or 'formal'");
  bracket->add_option("--h", cfg.h, "h or 'formal' (rho_alpha_h)");
  bracket->add_option("--sigma", cfg.sigma, "sigma1,sigma2,sigma3 (gamma)");
  bracket->add_option("--limit", cfg.limit, "Contraction limit, 1 or -1");
  bracket->add_option("generators", cfg.pair, "Two generator names")->expected(2);

  CLI::App* export_gamma = app.add_subcommand("export-gamma", "Structure constants of Gamma as JSON");
  add_output(export_gamma);
  export_gamma->add_option("--alpha", cfg.alpha, "alpha or 'formal'");
  export_gamma->add_option("--sigma", cfg.sigma, "sigma1,sigma2,sigma3");
  export_gamma->add_option("--contract", cfg.contract, "Export the contraction at alpha -> 1 or -1 instead");
  CLI::App* export_psl = app.add_subcommand("export-pslhat", "Structure constants of the central extension of psl(2|2) as JSON");
  add_output(export_psl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (!which.empty()) {
      const Report r = run_verify(which, cfg);
      emit(cfg.format == "json" ? to_json(r).dump(2) + "\n" : report_text(r), cfg, out);
      return r.passed() ? kPass : kFail;
    }
    if (bracket->parsed()) {
      const std::string value = run_bracket(cfg);
      if (cfg.format == "json") {
        Json doc{{"map", cfg.map}, {"x", cfg.pair[0]}, {"y", cfg.pair[1]}, {"value", value}};
        emit(doc.dump(2) + "\n", cfg, out);
      } else {
        emit(value + "\n", cfg, out);
      }
      return kPass;
    }
    const std::string target = export_psl->parsed() ? "pslhat" : "gamma";
    emit(to_json(export_target(target, cfg)).dump(2) + "\n", cfg, out);
    return kPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterConstraintViolated& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownGenerator& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace superweyl::cli
